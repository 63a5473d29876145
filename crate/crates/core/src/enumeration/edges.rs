//! Graphs with a given number of edges and no isolated vertices, built one
//! edge at a time.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Largest edge count accepted by [`generate_by_edges`].
pub const MAX_PATTERN_EDGES: usize = 8;

/// Every way to add one edge to `h` while keeping minimum degree at least one:
/// between two nonadjacent vertices, from a vertex to a new vertex, or as a
/// new `K_2` component.
fn augment(h: &Graph) -> Vec<Graph> {
    let k = h.order();
    let mut out = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            if !h.has_edge(u, v) {
                let mut g = h.clone();
                g.add_edge(u, v);
                out.push(g);
            }
        }
    }
    if k < MAX_VERTICES {
        for u in 0..k {
            out.push(h.with_vertex(1 << u));
        }
    }
    if k + 2 <= MAX_VERTICES {
        let mut g = h.pad(2).expect("capacity checked");
        g.add_edge(k, k + 1);
        out.push(g);
    }
    out
}

/// One representative per isomorphism class of graphs with exactly `m`
/// edges and no isolated vertices, ordered by canonical form.
pub fn generate_by_edges(m: usize) -> Result<Vec<Graph>> {
    if m > MAX_PATTERN_EDGES {
        return Err(Error::capacity("edge-pattern generation", m, MAX_PATTERN_EDGES));
    }
    let mut level: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let empty = Graph::empty(0)?;
    level.insert(canonical_form(&empty), empty);
    for _ in 0..m {
        let mut next = BTreeMap::new();
        for h in level.values() {
            for g in augment(h) {
                let form = canonical_form(&g);
                next.entry(form).or_insert_with_key(|f| f.to_graph());
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}
