//! Exact adjacency spectra: characteristic polynomials over the integers,
//! closed-walk counts, integer eigenvalue multiplicities, root counting and
//! the cospectrality predicates.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};
use crate::poly::QPoly;
use crate::sturm;

/// Monic characteristic polynomial `det(xI - A)`, coefficients low-to-high.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Wraps coefficients `c_0..=c_n`; the leading one must be 1.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<CharPoly> {
        if !coeffs.last().is_some_and(|c| c.is_one()) {
            return Err(Error::Argument("characteristic polynomial must be monic".into()));
        }
        Ok(CharPoly { coeffs })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::from_ints(&self.coeffs)
    }

    /// Multiplicity of the integer root `lambda`, by repeated synthetic division.
    pub fn root_multiplicity(&self, lambda: &BigInt) -> usize {
        let mut p = self.coeffs.clone();
        let mut k = 0;
        while p.len() > 1 {
            // divide by (x - lambda), high to low
            let d = p.len() - 1;
            let mut q = vec![BigInt::zero(); d];
            let mut carry = BigInt::zero();
            for i in (0..=d).rev() {
                carry = &p[i] + &carry * lambda;
                if i > 0 {
                    q[i - 1] = carry.clone();
                }
            }
            if !carry.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    /// Real roots strictly greater than `q`, with multiplicity.
    pub fn count_roots_greater_than(&self, q: &BigRational) -> usize {
        sturm::count_roots_above(&self.to_qpoly(), q)
    }

    /// Approximate eigenvalues with multiplicities, for display only.
    pub fn approximate_roots(&self) -> Vec<(f64, usize)> {
        sturm::approximate_roots(&self.to_qpoly(), 1e-9)
    }

    /// Power sums `tr(A^k)` for `k = 0..=kmax` via Newton's identities.
    pub fn power_sums(&self, kmax: usize) -> Vec<BigInt> {
        let n = self.degree();
        // x^n + a_1 x^{n-1} + ... + a_n
        let a = |i: usize| -> BigInt {
            if i <= n {
                self.coeffs[n - i].clone()
            } else {
                BigInt::zero()
            }
        };
        let mut p = vec![BigInt::from(n)];
        for k in 1..=kmax {
            let mut s = BigInt::zero();
            for i in 1..k.min(n + 1) {
                s += a(i) * &p[k - i];
            }
            if k <= n {
                s += a(k) * BigInt::from(k);
            }
            p.push(-s);
        }
        p
    }
}

impl fmt::Display for CharPoly {
    /// Coefficients low-to-high, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for CharPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<CharPoly> {
        let coeffs = s
            .split_whitespace()
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| Error::Argument(format!("bad coefficient '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        CharPoly::from_coeffs(coeffs)
    }
}

/// Characteristic polynomials of a graph and of its complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneralizedSpectralKey {
    pub self_poly: CharPoly,
    pub co_poly: CharPoly,
}

impl GeneralizedSpectralKey {
    pub fn of(g: &Graph) -> GeneralizedSpectralKey {
        GeneralizedSpectralKey {
            self_poly: char_poly(g),
            co_poly: char_poly(&g.complement()),
        }
    }
}

impl fmt::Display for GeneralizedSpectralKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.self_poly, self.co_poly)
    }
}

/// Exact characteristic polynomial by Faddeev–LeVerrier.
///
/// Runs in checked `i128` and restarts with big integers on overflow.
pub fn char_poly(g: &Graph) -> CharPoly {
    let coeffs = match faddeev_leverrier_i128(g) {
        Some(c) => c.into_iter().map(BigInt::from).collect(),
        None => faddeev_leverrier_big(g),
    };
    CharPoly { coeffs }
}

// M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
fn faddeev_leverrier_i128(g: &Graph) -> Option<Vec<i128>> {
    let n = g.order();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![0i128; n * n];
    let mut next = vec![0i128; n * n];
    for k in 1..=n {
        // next = A * m
        for i in 0..n {
            let row = &mut next[i * n..(i + 1) * n];
            row.fill(0);
            for l in Bits(g.neighbors(i)) {
                for (dst, &src) in row.iter_mut().zip(&m[l * n..(l + 1) * n]) {
                    *dst = dst.checked_add(src)?;
                }
            }
        }
        for i in 0..n {
            next[i * n + i] = next[i * n + i].checked_add(c[n - k + 1])?;
        }
        std::mem::swap(&mut m, &mut next);
        let mut tr = 0i128;
        for i in 0..n {
            for l in Bits(g.neighbors(i)) {
                tr = tr.checked_add(m[l * n + i])?;
            }
        }
        debug_assert_eq!(tr % k as i128, 0);
        c[n - k] = -(tr / k as i128);
    }
    Some(c)
}

fn faddeev_leverrier_big(g: &Graph) -> Vec<BigInt> {
    let n = g.order();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in Bits(g.neighbors(i)) {
                for j in 0..n {
                    next[i * n + j] += &m[l * n + j];
                }
            }
            next[i * n + i] += &c[n - k + 1];
        }
        m = next;
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in Bits(g.neighbors(i)) {
                tr += &m[l * n + i];
            }
        }
        debug_assert!((&tr % BigInt::from(k)).is_zero());
        c[n - k] = -(tr / BigInt::from(k));
    }
    c
}

/// Largest supported walk length for [`closed_walks`].
pub const MAX_WALK_LENGTH: usize = 8;

/// Number of closed walks of length `k` (`tr A^k`), from the characteristic
/// polynomial by Newton's identities.
pub fn closed_walks(g: &Graph, k: usize) -> Result<u64> {
    if k > MAX_WALK_LENGTH {
        return Err(Error::Argument(format!(
            "walk length {k} outside 0..={MAX_WALK_LENGTH}"
        )));
    }
    let p = char_poly(g).power_sums(k);
    Ok(p[k].to_u64().expect("walk counts are nonnegative and fit in u64"))
}

/// `tr A^k` by integer matrix powering; independent of [`char_poly`].
pub fn closed_walks_by_matrix_power(g: &Graph, k: usize) -> Result<u64> {
    if k > MAX_WALK_LENGTH {
        return Err(Error::Argument(format!(
            "walk length {k} outside 0..={MAX_WALK_LENGTH}"
        )));
    }
    let n = g.order();
    let a = g.adjacency_matrix();
    let mut p: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as u64).collect())
        .collect();
    for _ in 0..k {
        let mut q = vec![vec![0u64; n]; n];
        for i in 0..n {
            for l in 0..n {
                if p[i][l] == 0 {
                    continue;
                }
                for j in 0..n {
                    q[i][j] += p[i][l] * a[l][j] as u64;
                }
            }
        }
        p = q;
    }
    Ok((0..n).map(|i| p[i][i]).sum())
}

/// Multiplicity of the integer eigenvalue `lambda`.
pub fn integer_eigenvalue_multiplicity(g: &Graph, lambda: i64) -> usize {
    char_poly(g).root_multiplicity(&BigInt::from(lambda))
}

/// Rank over the rationals of `A - lambda I`, by fraction-free elimination.
pub fn shifted_rank(g: &Graph, lambda: i64) -> usize {
    let n = g.order();
    let mut m: Vec<Vec<BigInt>> = g
        .adjacency_matrix()
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, x)| BigInt::from(x - if i == j { lambda } else { 0 }))
                .collect()
        })
        .collect();
    bareiss_rank(&mut m, n)
}

fn bareiss_rank(m: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Number of eigenvalues strictly greater than `q`.
pub fn count_roots_greater_than(p: &CharPoly, q: &BigRational) -> usize {
    p.count_roots_greater_than(q)
}

/// Equal characteristic polynomials. Graphs of different orders are never cospectral.
pub fn is_cospectral(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && char_poly(g) == char_poly(h)
}

/// Cospectral with cospectral complements, equivalently cospectral for every
/// `A + aJ`.
pub fn is_r_cospectral(g: &Graph, h: &Graph) -> bool {
    is_cospectral(g, h) && char_poly(&g.complement()) == char_poly(&h.complement())
}

/// Is `g` a complete multipartite graph plus isolated vertices?
///
/// Holds iff any two nonadjacent non-isolated vertices have equal
/// neighbourhoods.
pub fn structure_check_one_positive(g: &Graph) -> bool {
    let live = !g.isolated_mask() & crate::graph::low_mask(g.order());
    Bits(live).all(|u| {
        let non_nbrs = live & !g.neighbors(u) & !(1u64 << u);
        Bits(non_nbrs).all(|v| g.neighbors(v) == g.neighbors(u))
    })
}

/// Number of positive eigenvalues.
pub fn positive_eigenvalues(g: &Graph) -> usize {
    char_poly(g).count_roots_greater_than(&BigRational::zero())
}

/// True iff the largest eigenvalue is strictly below `bound`.
pub fn spectral_radius_below(p: &CharPoly, bound: &BigRational) -> bool {
    let at_bound = if bound.is_integer() {
        p.root_multiplicity(&bound.to_integer())
    } else {
        0
    };
    p.count_roots_greater_than(bound) == 0 && at_bound == 0
}

/// Roots summary for reports: integer eigenvalues with multiplicity and the
/// count of the remaining (irrational or non-integer) ones.
pub fn integer_roots(p: &CharPoly) -> Vec<(i64, usize)> {
    let n = p.degree() as i64;
    (-n..=n)
        .filter_map(|l| {
            let k = p.root_multiplicity(&BigInt::from(l));
            (k > 0).then_some((l, k))
        })
        .collect()
}
