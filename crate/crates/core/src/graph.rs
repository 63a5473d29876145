//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitrow per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; a neighbour set is a single `u64`.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph.
///
/// Row `i` of `adj` is the neighbour set of vertex `i`. Rows are symmetric,
/// loop-free and carry no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::capacity("graph", n, MAX_VERTICES));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Argument(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Argument(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, checking symmetry, loops and stray bits.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::capacity("graph", n, MAX_VERTICES));
        }
        let mask = low_mask(n);
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                return Err(Error::Argument(format!("row {i} has bits beyond n = {n}")));
            }
            if r >> i & 1 == 1 {
                return Err(Error::Argument(format!("loop at vertex {i}")));
            }
            for j in Bits(r) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::Argument(format!("asymmetric pair ({i}, {j})")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Trusted constructor for rows already known to be valid.
    #[inline]
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v})");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge ({u}, {v})");
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Edges as `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    /// Number of triangles.
    pub fn triangles(&self) -> u64 {
        let mut t = 0u64;
        for u in 0..self.n {
            let above_u = self.adj[u] & !low_mask(u + 1);
            for v in Bits(above_u) {
                let above_v = !low_mask(v + 1);
                t += (self.adj[u] & self.adj[v] & above_v).count_ones() as u64;
            }
        }
        t
    }

    /// Bitmask of vertices with degree zero.
    pub fn isolated_mask(&self) -> u64 {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, &r)| r == 0)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let rows = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &r)| !r & mask & !(1u64 << i))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// `self + other`: vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::capacity("disjoint union", n, MAX_VERTICES));
        }
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// `self ∨ other`: the disjoint union plus every edge between the parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = low_mask(self.n);
        let right = low_mask(g.n) & !left;
        for (i, row) in g.adj.iter_mut().enumerate() {
            *row |= if i < self.n { right } else { left };
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (i, &r) in self.adj.iter().enumerate() {
            rows[perm[i]] = Bits(r).fold(0, |acc, j| acc | 1 << perm[j]);
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut rows = vec![0u64; vertices.len()];
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[a] |= 1 << b;
                }
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Drops isolated vertices, keeping the relative order of the rest.
    pub fn without_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.adj[v] != 0).collect();
        self.induced(&keep)
    }

    /// Adds `extra` isolated vertices at the end.
    pub fn pad(&self, extra: usize) -> Result<Graph> {
        self.disjoint_union(&Graph::empty(extra)?)
    }

    /// Adds a vertex adjacent to `nbrs` (a mask over existing vertices).
    pub(crate) fn with_vertex(&self, nbrs: u64) -> Graph {
        debug_assert!(self.n < MAX_VERTICES && nbrs & !low_mask(self.n) == 0);
        let v = self.n;
        let mut rows = Vec::with_capacity(self.n + 1);
        rows.extend(
            self.adj
                .iter()
                .enumerate()
                .map(|(i, &r)| r | (nbrs >> i & 1) << v),
        );
        rows.push(nbrs);
        Graph::from_rows_unchecked(rows)
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| (self.adj[i] >> j & 1) as i64).collect())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {})", self.n, crate::graph6::to_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::to_graph6(self))
    }
}
