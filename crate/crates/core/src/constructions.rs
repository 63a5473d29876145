//! Builders for cospectral and R-cospectral pairs. Every constructor checks
//! its own claim through [`crate::spectra`] before returning.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::canon::{are_isomorphic, canonical_labeling};
use crate::error::{Error, Result};
use crate::graph::{low_mask, Bits, Graph};
use crate::graph6::{from_graph6, to_graph6};
use crate::named::{cycle, kn_minus, path, spider222, y_graph};
use crate::spectra::{is_cospectral, is_r_cospectral};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    ClaimedCospectral,
    ClaimedRCospectral,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::ClaimedCospectral => "cospectral",
            PairKind::ClaimedRCospectral => "r-cospectral",
        })
    }
}

/// Two graphs of equal order whose claimed relation has been verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CospectralPair {
    left: Graph,
    right: Graph,
    kind: PairKind,
}

impl CospectralPair {
    /// Verifies the claim and wraps the pair.
    pub fn new(left: Graph, right: Graph, kind: PairKind) -> Result<CospectralPair> {
        if left.order() != right.order() {
            return Err(Error::ContractViolation(format!(
                "pair orders differ: {} vs {}",
                left.order(),
                right.order()
            )));
        }
        let holds = match kind {
            PairKind::ClaimedCospectral => is_cospectral(&left, &right),
            PairKind::ClaimedRCospectral => is_r_cospectral(&left, &right),
        };
        if !holds {
            return Err(Error::ContractViolation(format!(
                "{left} and {right} are not {kind}"
            )));
        }
        Ok(CospectralPair { left, right, kind })
    }

    pub fn left(&self) -> &Graph {
        &self.left
    }

    pub fn right(&self) -> &Graph {
        &self.right
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn is_isomorphic(&self) -> bool {
        are_isomorphic(&self.left, &self.right)
    }

    fn require_r(&self, what: &str) -> Result<()> {
        if self.kind == PairKind::ClaimedRCospectral {
            Ok(())
        } else {
            Err(Error::ContractViolation(format!(
                "{what} needs an R-cospectral pair, got {}",
                self.kind
            )))
        }
    }
}

impl fmt::Display for CospectralPair {
    /// `<graph6> <graph6> <kind>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            to_graph6(&self.left),
            to_graph6(&self.right),
            self.kind
        )
    }
}

impl FromStr for CospectralPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<CospectralPair> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        let [l, r, k] = parts[..] else {
            return Err(Error::Argument(format!("expected '<g6> <g6> <kind>', got '{s}'")));
        };
        let kind = match k {
            "cospectral" => PairKind::ClaimedCospectral,
            "r-cospectral" => PairKind::ClaimedRCospectral,
            other => return Err(Error::Argument(format!("unknown pair kind '{other}'"))),
        };
        CospectralPair::new(from_graph6(l)?, from_graph6(r)?, kind)
    }
}

/// `(G1 ∨ H1, G2 ∨ H2)` from two R-cospectral pairs.
pub fn join_pair(gs: &CospectralPair, hs: &CospectralPair) -> Result<CospectralPair> {
    gs.require_r("join_pair")?;
    hs.require_r("join_pair")?;
    CospectralPair::new(
        gs.left.join(&hs.left)?,
        gs.right.join(&hs.right)?,
        PairKind::ClaimedRCospectral,
    )
}

/// `(G1 + H1, G2 + H2)` from two R-cospectral pairs.
pub fn union_pair(gs: &CospectralPair, hs: &CospectralPair) -> Result<CospectralPair> {
    gs.require_r("union_pair")?;
    hs.require_r("union_pair")?;
    CospectralPair::new(
        gs.left.disjoint_union(&hs.left)?,
        gs.right.disjoint_union(&hs.right)?,
        PairKind::ClaimedRCospectral,
    )
}

/// `(K_n \ G1, K_n \ G2)` from an R-cospectral pair.
pub fn kn_minus_pair(n: usize, gs: &CospectralPair) -> Result<CospectralPair> {
    gs.require_r("kn_minus_pair")?;
    CospectralPair::new(
        kn_minus(n, &gs.left)?,
        kn_minus(n, &gs.right)?,
        PairKind::ClaimedRCospectral,
    )
}

/// Checks that `c` is a Godsil–McKay switching set of `g` and returns it as
/// a mask.
pub fn check_switching_set(g: &Graph, c: &[usize]) -> Result<u64> {
    let n = g.order();
    let mut mask = 0u64;
    for &v in c {
        if v >= n {
            return Err(Error::SwitchingSet {
                vertex: v,
                reason: format!("is out of range for {n} vertices"),
            });
        }
        if mask >> v & 1 == 1 {
            return Err(Error::SwitchingSet {
                vertex: v,
                reason: "is listed twice".into(),
            });
        }
        mask |= 1 << v;
    }
    let Some(&first) = c.first() else {
        return Err(Error::Argument("switching set is empty".into()));
    };
    let size = c.len() as u32;
    let inner = (g.neighbors(first) & mask).count_ones();
    for &v in c {
        if (g.neighbors(v) & mask).count_ones() != inner {
            return Err(Error::SwitchingSet {
                vertex: v,
                reason: format!(
                    "has {} neighbours inside the set, but vertex {first} has {inner} (induced subgraph not regular)",
                    (g.neighbors(v) & mask).count_ones()
                ),
            });
        }
    }
    for v in Bits(low_mask(n) & !mask) {
        let k = (g.neighbors(v) & mask).count_ones();
        if k != 0 && k != size && 2 * k != size {
            return Err(Error::SwitchingSet {
                vertex: v,
                reason: format!("has {k} neighbours in a set of size {size}"),
            });
        }
    }
    Ok(mask)
}

/// Godsil–McKay switching: every outside vertex with exactly half of its
/// possible neighbours in `c` has its adjacency to `c` complemented.
pub fn gm_switch(g: &Graph, c: &[usize]) -> Result<Graph> {
    let mask = check_switching_set(g, c)?;
    let size = mask.count_ones();
    let mut h = g.clone();
    for v in Bits(low_mask(g.order()) & !mask) {
        if 2 * (g.neighbors(v) & mask).count_ones() == size {
            for u in Bits(mask) {
                if g.has_edge(u, v) {
                    h.remove_edge(u, v);
                } else {
                    h.add_edge(u, v);
                }
            }
        }
    }
    Ok(h)
}

/// Every vertex subset of `g` that is a valid switching set with at least one
/// vertex to switch.
pub fn switching_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n < 32, "exhaustive subset scan is for small graphs");
    let mut out = Vec::new();
    for mask in 1u64..1 << n {
        let size = mask.count_ones();
        if size % 2 == 1 {
            continue;
        }
        let c: Vec<usize> = Bits(mask).collect();
        if check_switching_set(g, &c).is_err() {
            continue;
        }
        let switches = Bits(low_mask(n) & !mask).any(|v| 2 * (g.neighbors(v) & mask).count_ones() == size);
        if switches {
            out.push(c);
        }
    }
    out
}

/// `C_6 + K_1` and the spider `S(2,2,2)`.
pub fn figure1_graphs() -> (Graph, Graph) {
    (cycle(6).expect("C_6").pad(1).expect("fits"), spider222())
}

fn least_degree_two(g: &Graph) -> usize {
    let lab = canonical_labeling(g);
    (0..g.order())
        .filter(|&v| g.degree(v) == 2)
        .min_by_key(|&v| lab.position[v])
        .expect("graph has a degree-2 vertex")
}

/// Attaches one endpoint of a new path on `l` vertices to vertex `at`.
fn attach_path(g: &Graph, at: usize, l: usize) -> Result<Graph> {
    if l == 0 {
        return Ok(g.clone());
    }
    let base = g.order();
    let mut h = g.disjoint_union(&path(l)?)?;
    h.add_edge(at, base);
    Ok(h)
}

/// The `C_6 + K_1` / `S(2,2,2)` pair with a path `P_l` hung from a degree-2
/// vertex of each graph; `l = 0` gives the bare pair.
pub fn figure1_family(l: usize) -> Result<CospectralPair> {
    let (a, b) = figure1_graphs();
    let left = attach_path(&a, least_degree_two(&a), l)?;
    let right = attach_path(&b, least_degree_two(&b), l)?;
    CospectralPair::new(left, right, PairKind::ClaimedRCospectral)
}

/// `P_{2m+1} + K_1` and `P_m + Y_{m+2}`: cospectral, but with complements
/// that are not, and nonisomorphic.
pub fn path_mates(m: usize) -> Result<CospectralPair> {
    if m < 2 {
        return Err(Error::Argument(format!("path_mates needs m >= 2, got {m}")));
    }
    let left = path(2 * m + 1)?.pad(1)?;
    let right = path(m)?.disjoint_union(&y_graph(m)?)?;
    let pair = CospectralPair::new(left, right, PairKind::ClaimedCospectral)?;
    if is_r_cospectral(&pair.left, &pair.right) {
        return Err(Error::ContractViolation(format!(
            "path mates for m = {m} unexpectedly have cospectral complements"
        )));
    }
    if pair.is_isomorphic() {
        return Err(Error::ContractViolation(format!(
            "path mates for m = {m} are isomorphic"
        )));
    }
    Ok(pair)
}
