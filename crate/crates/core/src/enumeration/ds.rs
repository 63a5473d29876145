//! Exhaustive "determined by spectrum" checks against every graph of the
//! same order.

use std::collections::HashMap;

use super::generate::for_each_partition;
use super::survey::{Mode, SpectralKey};
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::four_walks;

/// Largest order for exhaustive DS verification.
pub const MAX_DS_ORDER: usize = 9;

struct Target {
    w4: u64,
    key: SpectralKey,
    form: CanonicalForm,
}

/// All graphs of the same order, nonisomorphic to `g`, sharing its key.
/// Empty exactly when `g` is determined by its (generalized) spectrum.
pub fn ds_verify(g: &Graph, mode: Mode) -> Result<Vec<Graph>> {
    Ok(ds_verify_many(std::slice::from_ref(g), mode, 1)?
        .pop()
        .expect("one target"))
}

/// [`ds_verify`] for many targets, one generation pass per order.
pub fn ds_verify_many(targets: &[Graph], mode: Mode, jobs: usize) -> Result<Vec<Vec<Graph>>> {
    if let Some(g) = targets.iter().find(|g| g.order() > MAX_DS_ORDER) {
        return Err(Error::capacity("DS verification", g.order(), MAX_DS_ORDER));
    }
    let mut results = vec![Vec::new(); targets.len()];
    let mut orders: Vec<usize> = targets.iter().map(Graph::order).collect();
    orders.sort_unstable();
    orders.dedup();
    for n in orders {
        // (edges, triangles) -> target indices
        let mut index: HashMap<(usize, u64), Vec<usize>> = HashMap::new();
        let mut info = HashMap::new();
        for (i, g) in targets.iter().enumerate().filter(|(_, g)| g.order() == n) {
            index.entry((g.size(), g.triangles())).or_default().push(i);
            info.insert(
                i,
                Target {
                    w4: four_walks(g),
                    key: SpectralKey::of(g, mode),
                    form: canonical_form(g),
                },
            );
        }
        let hits = for_each_partition(n, jobs, |h| {
            let candidates = index.get(&(h.size(), h.triangles()))?;
            let w4 = four_walks(h);
            let mut key = None;
            let mut form = None;
            let mut found = Vec::new();
            for &i in candidates {
                let t = &info[&i];
                if t.w4 != w4 {
                    continue;
                }
                if *key.get_or_insert_with(|| SpectralKey::of(h, mode)) != t.key {
                    continue;
                }
                if *form.get_or_insert_with(|| canonical_form(h)) != t.form {
                    found.push(i);
                }
            }
            (!found.is_empty()).then(|| (found, h.clone()))
        })?;
        for (idx, h) in hits {
            for i in idx {
                results[i].push(h.clone());
            }
        }
    }
    for r in &mut results {
        r.sort_by_cached_key(canonical_form);
    }
    Ok(results)
}
