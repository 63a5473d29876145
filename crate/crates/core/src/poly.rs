//! Dense univariate polynomials over the rationals, stored low-to-high.
//!
//! Only what root counting needs: remainder, exact division, gcd, derivative,
//! evaluation and square-free decomposition.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly(pub Vec<BigRational>);

impl QPoly {
    pub fn from_ints(coeffs: &[BigInt]) -> QPoly {
        let mut p = QPoly(coeffs.iter().cloned().map(BigRational::from_integer).collect());
        p.trim();
        p
    }

    pub fn one() -> QPoly {
        QPoly(vec![BigRational::one()])
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.0.last()
    }

    pub fn monic(mut self) -> QPoly {
        if let Some(lc) = self.0.last().cloned() {
            for c in &mut self.0 {
                *c /= &lc;
            }
        }
        self
    }

    pub fn derivative(&self) -> QPoly {
        let mut p = QPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        );
        p.trim();
        p
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let len = self.0.len().max(other.0.len());
        let z = BigRational::zero();
        let mut p = QPoly(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z))
                .collect(),
        );
        p.trim();
        p
    }

    pub fn neg(&self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.0[dd].clone();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (QPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    rem[k + j] -= &c * dj;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        let mut q = QPoly(quot);
        let mut r = QPoly(rem);
        q.trim();
        r.trim();
        (q, r)
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    /// Exact quotient; debug-asserts a zero remainder.
    pub fn div_exact(&self, d: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)` as `-1`, `0` or `1`.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign(&self.eval(x))
    }

    /// Sign as `x -> +inf`.
    pub fn sign_at_pos_inf(&self) -> i8 {
        self.leading().map_or(0, sign)
    }

    /// Yun's square-free decomposition: `(factor, multiplicity)` pairs whose
    /// product (with multiplicities) is the monic associate of `self`.
    pub fn square_free(&self) -> Vec<(QPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.clone().monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0);
        let c = df.div_exact(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let b_next = b.div_exact(&a);
            let c_next = d.div_exact(&a);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            d = c_next.sub(&b_next.derivative());
            b = b_next;
            i += 1;
        }
        out
    }
}

pub(crate) fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
