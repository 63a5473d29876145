//! Small-subgraph counts, the closed forms for triangles and 4-walks in the
//! complement, and the spectrum-determined profile used to pre-filter
//! cospectral searches.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra;

/// Counts of (not necessarily induced) subgraphs, each occurrence being an
/// edge subset: `m1` paths `P_3`, `m2` copies of `2K_2`, `m3` paths `P_4`,
/// `m4` four-cycles and `t` triangles.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubgraphCounts {
    pub m: u64,
    pub m1: u64,
    pub m2: u64,
    pub m3: u64,
    pub m4: u64,
    pub t: u64,
}

/// Spectrum-determined invariants; cospectral graphs share them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub n: usize,
    pub m: u64,
    pub t: u64,
    pub w4: u64,
    pub mult_minus1: usize,
}

impl InvariantProfile {
    pub const CSV_HEADER: &'static str = "n,m,t,w4,mult_minus1";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.n, self.m, self.t, self.w4, self.mult_minus1
        )
    }
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn choose3(x: u64) -> u64 {
    x * x.saturating_sub(1) * x.saturating_sub(2) / 6
}

/// `tr A^4` as the sum of squared codegrees.
pub fn four_walks(g: &Graph) -> u64 {
    let n = g.order();
    let mut w = 0u64;
    for i in 0..n {
        for j in 0..n {
            let c = (g.neighbors(i) & g.neighbors(j)).count_ones() as u64;
            w += c * c;
        }
    }
    w
}

pub fn subgraph_counts(g: &Graph) -> SubgraphCounts {
    let deg: Vec<u64> = g.degrees().into_iter().map(|d| d as u64).collect();
    let m = deg.iter().sum::<u64>() / 2;
    let t = g.triangles();
    let m1: u64 = deg.iter().map(|&d| choose2(d)).sum();
    let m2 = choose2(m) - m1;
    let paths3: u64 = g.edges().map(|(u, v)| (deg[u] - 1) * (deg[v] - 1)).sum();
    let m3 = paths3 - 3 * t;
    let w4 = four_walks(g);
    let rest = w4 - 2 * m - 4 * m1;
    debug_assert_eq!(rest % 8, 0);
    SubgraphCounts {
        m,
        m1,
        m2,
        m3,
        m4: rest / 8,
        t,
    }
}

/// Order limit for [`brute_force_counts`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 12;

/// The same counts by explicit enumeration of vertex tuples and edge pairs.
pub fn brute_force_counts(g: &Graph) -> Result<SubgraphCounts> {
    let n = g.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::capacity(
            "brute-force subgraph count",
            n,
            BRUTE_FORCE_MAX_ORDER,
        ));
    }
    let e = |a: usize, b: usize| g.has_edge(a, b);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut c = SubgraphCounts {
        m: edges.len() as u64,
        ..Default::default()
    };
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(x, y) in &edges[i + 1..] {
            if a == x || a == y || b == x || b == y {
                c.m1 += 1;
            } else {
                c.m2 += 1;
            }
        }
    }
    let mut ordered_p4 = 0u64;
    let mut ordered_c4 = 0u64;
    for a in 0..n {
        for b in 0..n {
            if b == a || !e(a, b) {
                continue;
            }
            for cc in 0..n {
                if cc == a || cc == b || !e(b, cc) {
                    continue;
                }
                if a < b && b < cc && e(a, cc) {
                    c.t += 1;
                }
                for d in 0..n {
                    if d == a || d == b || d == cc || !e(cc, d) {
                        continue;
                    }
                    ordered_p4 += 1;
                    if e(d, a) {
                        ordered_c4 += 1;
                    }
                }
            }
        }
    }
    // each P_4 is traversed in 2 directions, each C_4 from 4 starts in 2 directions
    c.m3 = ordered_p4 / 2;
    c.m4 = ordered_c4 / 8;
    Ok(c)
}

/// Triangles in the complement: `C(n,3) - (n-1)m + (1/2) sum d_i^2 - t`.
pub fn complement_triangles(g: &Graph) -> u64 {
    let n = g.order() as i128;
    let deg = g.degrees();
    let m = g.size() as i128;
    let sum_sq: i128 = deg.iter().map(|&d| (d * d) as i128).sum();
    let t = g.triangles() as i128;
    let value = choose3(n as u64) as i128 - (n - 1) * m + sum_sq / 2 - t;
    u64::try_from(value).expect("triangle count is nonnegative")
}

/// Closed 4-walks in `K_n`: `(n-1)^4 + n - 1`.
pub fn complete_four_walks(n: usize) -> u64 {
    let n = n as u64;
    if n == 0 {
        return 0;
    }
    (n - 1).pow(4) + n - 1
}

/// Closed 4-walks in the complement:
/// `W_n - (8n^2 - 32n + 34)m + (8n - 20)m1 + 16m2 - 8m3 + 8m4`.
pub fn complement_4walks(g: &Graph) -> u64 {
    let n = g.order() as i128;
    let c = subgraph_counts(g);
    let value = complete_four_walks(g.order()) as i128 - (8 * n * n - 32 * n + 34) * c.m as i128
        + (8 * n - 20) * c.m1 as i128
        + 16 * c.m2 as i128
        - 8 * c.m3 as i128
        + 8 * c.m4 as i128;
    u64::try_from(value).expect("walk count is nonnegative")
}

pub fn profile(g: &Graph) -> InvariantProfile {
    InvariantProfile {
        n: g.order(),
        m: g.size() as u64,
        t: g.triangles(),
        w4: four_walks(g),
        mult_minus1: spectra::integer_eigenvalue_multiplicity(g, -1),
    }
}

/// Closed 4-walks `v0 v1 v2 v3 v0` in `K_n` whose edge set contains every
/// edge of `required`, by direct enumeration.
pub fn complete_four_walks_containing(n: usize, required: &[(usize, usize)]) -> u64 {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    let req: Vec<(usize, usize)> = required.iter().map(|&(a, b)| key(a, b)).collect();
    let mut count = 0u64;
    for v0 in 0..n {
        for v1 in (0..n).filter(|&x| x != v0) {
            for v2 in (0..n).filter(|&x| x != v1) {
                for v3 in (0..n).filter(|&x| x != v2 && x != v0) {
                    let walk = [key(v0, v1), key(v1, v2), key(v2, v3), key(v3, v0)];
                    if req.iter().all(|e| walk.contains(e)) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}
