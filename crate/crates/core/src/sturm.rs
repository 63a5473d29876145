//! Sturm sequences over exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::QPoly;

/// Sturm chain of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain(Vec<QPoly>);

impl SturmChain {
    pub fn new(p: &QPoly) -> SturmChain {
        let mut chain = vec![p.clone()];
        if p.degree().unwrap_or(0) == 0 {
            return SturmChain(chain);
        }
        chain.push(p.derivative());
        loop {
            let k = chain.len();
            let r = chain[k - 2].rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        SturmChain(chain)
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.0.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.0.iter().map(|p| p.sign_at_pos_inf()))
    }

    /// Distinct roots in `(a, +inf)`.
    pub fn roots_above(&self, a: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at_pos_inf()
    }

    /// Distinct roots in `(a, b]`, `a < b`.
    pub fn roots_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Real roots of `p` strictly greater than `q`, counted with multiplicity.
pub fn count_roots_above(p: &QPoly, q: &BigRational) -> usize {
    p.square_free()
        .iter()
        .map(|(f, mult)| SturmChain::new(f).roots_above(q) * mult)
        .sum()
}

/// Cauchy bound: every root has absolute value below it.
fn root_bound(p: &QPoly) -> BigRational {
    let lc = p.leading().expect("nonzero polynomial").abs();
    let max =
        p.0.iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(BigRational::zero);
    max + BigRational::one()
}

/// Approximate real roots with multiplicity, ascending, each located by
/// Sturm-guided bisection to within `tol`. Display only.
pub fn approximate_roots(p: &QPoly, tol: f64) -> Vec<(f64, usize)> {
    let tol = BigRational::new(
        BigInt::from((tol * 1e12).max(1.0) as i64),
        BigInt::from(1_000_000_000_000i64),
    );
    let mut out = Vec::new();
    for (f, mult) in p.square_free() {
        let chain = SturmChain::new(&f);
        let b = root_bound(&f);
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let k = chain.roots_in(&lo, &hi);
            if k == 0 {
                continue;
            }
            if k == 1 {
                out.push((to_f64(&bisect(&f, lo, hi, &tol)), mult));
                continue;
            }
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

/// Narrows `(lo, hi]` holding exactly one simple root of `f`.
fn bisect(f: &QPoly, mut lo: BigRational, mut hi: BigRational, tol: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    if f.sign_at(&hi) == 0 {
        return hi;
    }
    let s_hi = f.sign_at(&hi);
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        let s = f.sign_at(&mid);
        if s == 0 {
            return mid;
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo + hi) / two
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `a`, `-a`, `a/b` or a decimal such as `1.999999` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int.starts_with('-');
        let whole: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().ok()?
        };
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let f: BigInt = frac.parse().ok()?;
        let signed_frac = if neg { -f } else { f };
        return Some(BigRational::new(whole * &denom + signed_frac, denom));
    }
    t.parse::<BigInt>().ok().map(BigRational::from_integer)
}
