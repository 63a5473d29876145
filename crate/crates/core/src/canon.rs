//! Canonical labeling by equitable-partition refinement and backtracking.
//!
//! The search tree individualizes a vertex of the first non-singleton cell at
//! every node. Leaves are compared by the adjacency rows of the relabelled
//! graph and the least one is canonical. Two prunings keep the tree small:
//! a leaf equivalent to the first (or best) leaf yields an automorphism and a
//! jump back to where the paths diverged, and children lying in the orbit of
//! an explored sibling (under the automorphisms found so far that fix the
//! node's path) are skipped. The automorphisms recorded on the way generate
//! the full automorphism group.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::graph::{low_mask, Bits, Graph};

/// Complete isomorphism certificate: the adjacency rows of the canonically
/// relabelled graph. Equal forms exactly when the graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.rows.clone())
    }

    /// Upper-triangle bits in graph6 column order, `(0,1), (0,2), (1,2), ...`.
    pub fn upper_triangle_bits(&self) -> Vec<bool> {
        let mut out = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for j in 1..self.n {
            for i in 0..j {
                out.push(self.rows[i] >> j & 1 == 1);
            }
        }
        out
    }
}

/// Result of a canonical labeling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `position[v]` is the canonical label of vertex `v`.
    pub position: Vec<usize>,
    /// Automorphisms found during the search; they generate the group.
    pub generators: Vec<Vec<usize>>,
    pub form: CanonicalForm,
}

impl Labeling {
    /// Orbit representative (least member) of every vertex.
    pub fn orbits(&self) -> Vec<usize> {
        orbits(self.position.len(), &self.generators)
    }

    /// Vertex carrying canonical label `p`.
    pub fn vertex_at(&self, p: usize) -> usize {
        self.position
            .iter()
            .position(|&q| q == p)
            .expect("label in range")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h)
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    let mut cells = if n == 0 { Vec::new() } else { vec![low_mask(n)] };
    let mut queue: VecDeque<u64> = cells.iter().copied().collect();
    refine(g, &mut cells, &mut queue);
    let mut s = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut path = Vec::with_capacity(n);
    s.search(cells, &mut path);
    let best = s.best.expect("search visits at least one leaf");
    Labeling {
        position: best.position,
        generators: s.autos,
        form: CanonicalForm { n, rows: best.cert },
    }
}

/// Union-find orbits of the group generated by `generators`.
pub fn orbits(n: usize, generators: &[Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for gen in generators {
        for (v, &w) in gen.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// Refines an ordered partition until it is equitable. Cells split by the
/// number of neighbours in each splitter, new cells ordered by that count.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>, queue: &mut VecDeque<u64>) {
    let n = g.order();
    let mut buckets = [0u64; 65];
    while let Some(w) = queue.pop_front() {
        if cells.len() == n {
            break;
        }
        let mut i = 0;
        while i < cells.len() {
            let c = cells[i];
            if c & c.wrapping_sub(1) == 0 {
                i += 1;
                continue;
            }
            let mut lo = 64usize;
            let mut hi = 0usize;
            for v in Bits(c) {
                let k = (g.neighbors(v) & w).count_ones() as usize;
                buckets[k] |= 1 << v;
                lo = lo.min(k);
                hi = hi.max(k);
            }
            if lo == hi {
                buckets[lo] = 0;
                i += 1;
                continue;
            }
            let mut pieces = Vec::new();
            for b in &mut buckets[lo..=hi] {
                if *b != 0 {
                    pieces.push(*b);
                    *b = 0;
                }
            }
            let added = pieces.len();
            queue.extend(pieces.iter().copied());
            cells.splice(i..=i, pieces);
            i += added;
        }
    }
}

struct Leaf {
    cert: Vec<u64>,
    position: Vec<usize>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` to unwind to the node at depth `level`.
    fn search(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let depth = path.len();
        let Some(ti) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, path);
        };
        let target = cells[ti];
        let mut explored = 0u64;
        for x in Bits(target) {
            if explored != 0 && self.in_explored_orbit(x, explored, path) {
                continue;
            }
            explored |= 1 << x;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << x);
            child.push(target & !(1 << x));
            child.extend_from_slice(&cells[ti + 1..]);
            let mut queue = VecDeque::from([1u64 << x]);
            refine(self.g, &mut child, &mut queue);
            path.push(x);
            let jump = self.search(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn in_explored_orbit(&self, x: usize, explored: u64, path: &[usize]) -> bool {
        let fixing: Vec<Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| path.iter().all(|&v| a[v] == v))
            .cloned()
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let orb = orbits(self.g.order(), &fixing);
        Bits(explored).any(|y| orb[y] == orb[x])
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut position = vec![0usize; n];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let cert: Vec<u64> = order
            .iter()
            .map(|&v| Bits(self.g.neighbors(v)).fold(0u64, |acc, u| acc | 1 << position[u]))
            .collect();
        let leaf = Leaf {
            cert,
            position,
            order,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                cert: leaf.cert.clone(),
                position: leaf.position.clone(),
                order: leaf.order.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if leaf.cert == first.cert {
            let auto = map_between(first, &leaf);
            let level = common_prefix(&first.path, path);
            self.autos.push(auto);
            return Some(level);
        }
        let best = self.best.as_ref().expect("set with first");
        match leaf.cert.cmp(&best.cert) {
            Ordering::Equal => {
                let auto = map_between(best, &leaf);
                let level = common_prefix(&best.path, path);
                self.autos.push(auto);
                Some(level)
            }
            Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            Ordering::Greater => None,
        }
    }
}

/// The automorphism sending leaf `a`'s ordering onto leaf `b`'s.
fn map_between(a: &Leaf, b: &Leaf) -> Vec<usize> {
    a.position.iter().map(|&p| b.order[p]).collect()
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
