//! Isomorph-free generation by canonical augmentation.
//!
//! A graph on `n` vertices is produced from a representative of its
//! canonical parent, the graph left after deleting a canonically chosen
//! vertex. Children of one parent are formed by adding a vertex joined to a
//! neighbourhood `S`, taking one `S` per orbit of the parent's automorphism
//! group; a child is kept iff the new vertex lies in the orbit of the
//! canonical deletion vertex. Every class then appears exactly once without a
//! global set of seen graphs.

use rayon::prelude::*;

use crate::canon::{canonical_labeling, orbits};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Largest order accepted by [`generate_graphs`].
pub const MAX_GENERATED_ORDER: usize = 10;

/// Ordering of vertices used to shortlist the canonical deletion vertex:
/// degree, then the sum of neighbour degrees.
fn vertex_keys(g: &Graph) -> Vec<(u32, u32)> {
    let deg: Vec<u32> = g.rows().iter().map(|r| r.count_ones()).collect();
    g.rows()
        .iter()
        .enumerate()
        .map(|(v, &r)| (deg[v], Bits(r).map(|u| deg[u]).sum()))
        .collect()
}

/// Is the last vertex of `g` in the orbit of its canonical deletion vertex?
pub(crate) fn is_canonical_extension(g: &Graph) -> bool {
    let n = g.order();
    let v = n - 1;
    let keys = vertex_keys(g);
    let top = *keys.iter().max().expect("nonempty graph");
    if keys[v] != top {
        return false;
    }
    let shortlist: Vec<usize> = (0..n).filter(|&x| keys[x] == top).collect();
    if shortlist.len() == 1 {
        return true;
    }
    let lab = canonical_labeling(g);
    let w = *shortlist
        .iter()
        .max_by_key(|&&x| lab.position[x])
        .expect("shortlist is nonempty");
    if w == v {
        return true;
    }
    let orb = orbits(n, &lab.generators);
    orb[v] == orb[w]
}

/// Canonical children of `parent` with one extra vertex, in a fixed order.
pub fn children(parent: &Graph) -> Vec<Graph> {
    let k = parent.order();
    let lab = canonical_labeling(parent);
    let total = 1usize << k;
    let mut seen = vec![false; total];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..total {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        if !lab.generators.is_empty() {
            stack.push(s as u64);
            while let Some(x) = stack.pop() {
                for gen in &lab.generators {
                    let y = Bits(x).fold(0u64, |acc, v| acc | 1 << gen[v]) as usize;
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y as u64);
                    }
                }
            }
        }
        let child = parent.with_vertex(s as u64);
        if is_canonical_extension(&child) {
            out.push(child);
        }
    }
    out
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_GENERATED_ORDER {
        Err(Error::capacity("graph generation", n, MAX_GENERATED_ORDER))
    } else {
        Ok(())
    }
}

/// All graphs on `n` vertices, one per isomorphism class, materialized.
/// Use [`for_each_partition`] or [`GraphStream`] for the largest orders.
pub fn generate_graphs(n: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    Ok(level(n, 1))
}

/// Materializes one level, expanding parents on `jobs` threads.
pub(crate) fn level(n: usize, jobs: usize) -> Vec<Graph> {
    let mut current = vec![Graph::empty(0).expect("order 0")];
    for _ in 0..n {
        current = expand(&current, jobs);
    }
    current
}

fn expand(parents: &[Graph], jobs: usize) -> Vec<Graph> {
    if jobs <= 1 {
        return parents.iter().flat_map(children).collect();
    }
    with_pool(jobs, || {
        parents
            .par_iter()
            .map(children)
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    })
}

pub(crate) fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Lazily yields the graphs of one order, parent by parent.
pub struct GraphStream {
    parents: Vec<Graph>,
    next_parent: usize,
    buffer: std::vec::IntoIter<Graph>,
    stride: usize,
}

impl GraphStream {
    pub fn new(n: usize) -> Result<GraphStream> {
        GraphStream::partition(n, 0, 1)
    }

    /// The slice of order-`n` graphs whose parent index is `index` mod `count`.
    pub fn partition(n: usize, index: usize, count: usize) -> Result<GraphStream> {
        check_order(n)?;
        if count == 0 || index >= count {
            return Err(Error::Argument(format!("partition {index} of {count}")));
        }
        if n == 0 {
            let only = if index == 0 {
                vec![Graph::empty(0)?]
            } else {
                Vec::new()
            };
            return Ok(GraphStream {
                parents: Vec::new(),
                next_parent: 0,
                buffer: only.into_iter(),
                stride: count,
            });
        }
        Ok(GraphStream {
            parents: level(n - 1, 1),
            next_parent: index,
            buffer: Vec::new().into_iter(),
            stride: count,
        })
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if let Some(g) = self.buffer.next() {
                return Some(g);
            }
            let p = self.parents.get(self.next_parent)?;
            self.buffer = children(p).into_iter();
            self.next_parent += self.stride;
        }
    }
}

/// Runs `visit` over every order-`n` graph on `jobs` threads and returns the
/// collected outputs in generation order, independent of `jobs`.
pub fn for_each_partition<T, F>(n: usize, jobs: usize, visit: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&Graph) -> Option<T> + Sync,
{
    check_order(n)?;
    if n == 0 {
        return Ok(visit(&Graph::empty(0)?).into_iter().collect());
    }
    let parents = level(n - 1, jobs);
    let work = |p: &Graph| -> Vec<T> { children(p).iter().filter_map(&visit).collect() };
    if jobs <= 1 {
        return Ok(parents.iter().flat_map(work).collect());
    }
    Ok(with_pool(jobs, || {
        parents
            .par_iter()
            .map(work)
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }))
}
