//! Cospectral-class surveys of `K_n \ H` over all deleted-edge patterns `H`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::edges::generate_by_edges;
use crate::canon::canonical_form;
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::{profile, InvariantProfile};
use crate::named::kn_minus;
use crate::spectra::{char_poly, CharPoly, GeneralizedSpectralKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Adjacency spectrum.
    Plain,
    /// Spectrum of the graph together with that of its complement.
    Generalized,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Plain => "plain",
            Mode::Generalized => "generalized",
        })
    }
}

/// Exact grouping key of a survey.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpectralKey {
    Plain(CharPoly),
    Generalized(GeneralizedSpectralKey),
}

impl SpectralKey {
    pub fn of(g: &Graph, mode: Mode) -> SpectralKey {
        match mode {
            Mode::Plain => SpectralKey::Plain(char_poly(g)),
            Mode::Generalized => SpectralKey::Generalized(GeneralizedSpectralKey::of(g)),
        }
    }

    /// First 16 hex digits of the SHA-256 of the text form.
    pub fn short_hash(&self) -> String {
        let digest = Sha256::digest(self.to_string().as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for SpectralKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralKey::Plain(p) => write!(f, "{p}"),
            SpectralKey::Generalized(k) => write!(f, "{k}"),
        }
    }
}

/// Pairwise nonisomorphic graphs sharing one key, sorted by canonical form.
#[derive(Clone, Debug)]
pub struct CospectralClass {
    pub key: SpectralKey,
    pub members: Vec<Graph>,
}

impl CospectralClass {
    pub fn is_nontrivial(&self) -> bool {
        self.members.len() > 1
    }
}

#[derive(Clone, Debug)]
pub struct SurveyReport {
    pub n: usize,
    pub deleted: usize,
    pub mode: Mode,
    /// Patterns produced for this edge count.
    pub patterns: usize,
    /// Patterns needing more than `n` vertices.
    pub skipped: usize,
    pub classes: Vec<CospectralClass>,
}

impl SurveyReport {
    pub fn total_graphs(&self) -> usize {
        self.classes.iter().map(|c| c.members.len()).sum()
    }

    pub fn singleton_classes(&self) -> usize {
        self.classes.iter().filter(|c| !c.is_nontrivial()).count()
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &CospectralClass> {
        self.classes.iter().filter(|c| c.is_nontrivial())
    }

    pub fn nontrivial_classes(&self) -> usize {
        self.nontrivial().count()
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "survey n={} deleted={} mode={}\npatterns: {} ({} skipped: more than {} vertices)\n\
             graphs: {}  classes: {}  singleton: {}  nontrivial: {}\n",
            self.n,
            self.deleted,
            self.mode,
            self.patterns,
            self.skipped,
            self.n,
            self.total_graphs(),
            self.classes.len(),
            self.singleton_classes(),
            self.nontrivial_classes()
        );
        for (i, c) in self.nontrivial().enumerate() {
            s.push_str(&format!(
                "class {} [{}] key: {}\n",
                i + 1,
                c.key.short_hash(),
                c.key
            ));
            for g in &c.members {
                s.push_str(&format!(
                    "  {}  H = {}\n",
                    to_graph6(g),
                    to_graph6(&deleted_pattern(g))
                ));
            }
        }
        s
    }

    /// `key_hash,size,members` with members as space-separated graph6.
    pub fn csv(&self) -> String {
        let mut s = String::from("key_hash,size,members\n");
        for c in &self.classes {
            let members: Vec<String> = c.members.iter().map(to_graph6).collect();
            s.push_str(&format!(
                "{},{},{}\n",
                c.key.short_hash(),
                c.members.len(),
                members.join(" ")
            ));
        }
        s
    }

    /// One graph6 list per nontrivial class.
    pub fn class_files(&self) -> Vec<(String, String)> {
        self.nontrivial()
            .enumerate()
            .map(|(i, c)| {
                let name = format!("class_{:03}_{}.g6", i + 1, c.key.short_hash());
                let mut body = format!("# key: {}\n", c.key);
                for g in &c.members {
                    body.push_str(&to_graph6(g));
                    body.push('\n');
                }
                (name, body)
            })
            .collect()
    }
}

/// The deleted edges of a near-complete graph: its complement without
/// isolated vertices.
pub fn deleted_pattern(g: &Graph) -> Graph {
    g.complement().without_isolated()
}

/// Groups graphs by exact key after a profile pre-filter. Input graphs must be
/// pairwise nonisomorphic.
pub fn group_by_key(graphs: Vec<Graph>, mode: Mode) -> Vec<CospectralClass> {
    let mut by_profile: BTreeMap<InvariantProfile, Vec<Graph>> = BTreeMap::new();
    for g in graphs {
        by_profile.entry(profile(&g)).or_default().push(g);
    }
    let mut classes: BTreeMap<SpectralKey, Vec<Graph>> = BTreeMap::new();
    for (prof, group) in by_profile {
        let mut local: BTreeMap<SpectralKey, Vec<Graph>> = BTreeMap::new();
        for g in group {
            local.entry(SpectralKey::of(&g, mode)).or_default().push(g);
        }
        for (key, members) in local {
            debug_assert!(!classes.contains_key(&key), "profile {prof:?} split a key class");
            classes.insert(key, members);
        }
    }
    classes
        .into_iter()
        .map(|(key, mut members)| {
            members.sort_by_cached_key(canonical_form);
            CospectralClass { key, members }
        })
        .collect()
}

pub fn survey_kn_minus(n: usize, deleted: usize, mode: Mode) -> Result<SurveyReport> {
    let patterns = generate_by_edges(deleted)?;
    let total = patterns.len();
    let mut graphs = Vec::new();
    let mut skipped = 0;
    for h in &patterns {
        if h.order() > n {
            skipped += 1;
            continue;
        }
        graphs.push(kn_minus(n, h)?);
    }
    Ok(SurveyReport {
        n,
        deleted,
        mode,
        patterns: total,
        skipped,
        classes: group_by_key(graphs, mode),
    })
}
