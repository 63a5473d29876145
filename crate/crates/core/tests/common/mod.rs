//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's counting, canonical-form or spectral code.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use spectral_ds::Graph;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}

pub fn matrix(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|i| (0..n).map(|j| g.has_edge(i, j) as i64).collect())
        .collect()
}

/// Labeled graph on `n` vertices whose edge `k` (in the order (0,1),(0,2),
/// (1,2),(0,3),...) is present iff bit `k` of `code` is set.
pub fn labeled(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least edge code over all relabelings: a complete invariant by exhaustion.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if g.has_edge(p[i], p[j]) {
                        code |= 1 << k;
                    }
                    k += 1;
                }
            }
            code
        })
        .min()
        .unwrap()
}

/// Isomorphism classes of all labeled graphs on `n` vertices, by brute force.
pub fn brute_classes(n: usize) -> BTreeSet<u64> {
    let perms = permutations(n);
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs)
        .map(|c| brute_canonical(&labeled(n, c), &perms))
        .collect()
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

/// `tr A^k` by repeated dense multiplication.
pub fn trace_power(g: &Graph, k: usize) -> i64 {
    let a = matrix(g);
    let n = a.len();
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    for _ in 0..k {
        m = mat_mul(&m, &a);
    }
    (0..n).map(|i| m[i][i]).sum()
}

pub fn triangles(g: &Graph) -> u64 {
    let n = g.order();
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    t += 1;
                }
            }
        }
    }
    t
}

pub fn edge_count(g: &Graph) -> usize {
    let n = g.order();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| g.has_edge(i, j))
        .count()
}

/// Rank of `A - lambda I` over the rationals by plain Gaussian elimination.
pub fn rational_rank(g: &Graph, lambda: i64) -> usize {
    let n = g.order();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = g.has_edge(i, j) as i64 - if i == j { lambda } else { 0 };
                    BigRational::from_integer(BigInt::from(v))
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..n {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[rank][col];
                for c in col..n {
                    let d = &f * &m[rank][c];
                    m[r][c] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Integer polynomial product, coefficients low-to-high.
pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn poly_product(factors: &[&[i64]]) -> Vec<i64> {
    factors.iter().fold(vec![1], |acc, f| poly_mul(&acc, f))
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// det(xI - A) by cofactor-free evaluation at `n + 1` integer points and
/// Lagrange interpolation over the rationals.
pub fn char_poly_by_interpolation(g: &Graph) -> Vec<BigInt> {
    let n = g.order();
    let a = matrix(g);
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|&x| {
            let m: Vec<Vec<BigRational>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let v = if i == j { x } else { 0 } - a[i][j];
                            BigRational::from_integer(BigInt::from(v))
                        })
                        .collect()
                })
                .collect();
            det(m)
        })
        .collect();
    // Newton divided differences
    let mut coef = ys.clone();
    for j in 1..=n {
        for i in (j..=n).rev() {
            let num = &coef[i] - &coef[i - 1];
            coef[i] = num / BigRational::from_integer(BigInt::from(xs[i] - xs[i - j]));
        }
    }
    let mut poly = vec![BigRational::zero(); n + 1];
    for k in (0..=n).rev() {
        // poly = poly * (x - xs[k]) + coef[k]
        let mut next = vec![BigRational::zero(); n + 1];
        for (d, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d < n {
                next[d + 1] += c;
            }
            next[d] -= c * BigRational::from_integer(BigInt::from(xs[k]));
        }
        next[0] += &coef[k];
        poly = next;
    }
    poly.into_iter()
        .map(|c| {
            assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            d = -d;
        }
        d *= &m[col][col];
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                for c in col..n {
                    let x = &f * &m[col][c];
                    m[r][c] -= x;
                }
            }
        }
    }
    d
}

/// Closed 4-walks in `K_n` that use every edge of `required` at least once,
/// by walking the complete graph directly.
pub fn kn_walks_through(n: usize, required: &[(usize, usize)]) -> u64 {
    let norm = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    let req: Vec<(usize, usize)> = required.iter().map(|&(a, b)| norm(a, b)).collect();
    let mut count = 0;
    for v0 in 0..n {
        for v1 in (0..n).filter(|&v| v != v0) {
            for v2 in (0..n).filter(|&v| v != v1) {
                for v3 in (0..n).filter(|&v| v != v2 && v != v0) {
                    let used = [norm(v0, v1), norm(v1, v2), norm(v2, v3), norm(v3, v0)];
                    if req.iter().all(|e| used.contains(e)) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}
