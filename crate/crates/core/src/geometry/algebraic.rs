//! Exact sign of a rational combination of square roots of rationals.
//!
//! Square roots of square-free integers are linearly independent over the
//! rationals, so a sum vanishes exactly when, after grouping radicands whose
//! ratio is a rational square, every group coefficient vanishes. Non-zero
//! sums are then signed by interval refinement, which terminates.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

use crate::scalar::{exact_sqrt, sqrt_ceil, sqrt_floor};

/// `sum(coef_i * sqrt(rad_i))` with non-negative radicands.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SqrtSum {
    terms: Vec<(BigRational, BigRational)>,
}

impl SqrtSum {
    pub fn zero() -> Self {
        SqrtSum::default()
    }

    pub fn term(coef: BigRational, radicand: BigRational) -> Self {
        let mut s = SqrtSum::zero();
        s.push(coef, radicand);
        s
    }

    pub fn push(&mut self, coef: BigRational, radicand: BigRational) {
        assert!(!radicand.is_negative(), "negative radicand");
        if coef.is_zero() || radicand.is_zero() {
            return;
        }
        // fold into an existing group when the ratio is a rational square
        for (c, r) in &mut self.terms {
            if let Some(f) = exact_sqrt(&(&radicand / &*r)) {
                *c += coef * f;
                return;
            }
        }
        self.terms.push((coef, radicand));
    }

    pub fn add(&mut self, other: &SqrtSum) {
        for (c, r) in &other.terms {
            self.push(c.clone(), r.clone());
        }
    }

    pub fn scaled(&self, k: &BigRational) -> SqrtSum {
        let mut s = SqrtSum::zero();
        for (c, r) in &self.terms {
            s.push(c * k, r.clone());
        }
        s
    }

    pub fn neg(&self) -> SqrtSum {
        self.scaled(&BigRational::from_integer((-1).into()))
    }

    pub fn minus(&self, other: &SqrtSum) -> SqrtSum {
        let mut s = self.clone();
        s.add(&other.neg());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(c, _)| c.is_zero())
    }

    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let mut bits = 32;
        loop {
            let (lo, hi) = self.bounds(bits);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }

    /// Enclosing interval with square roots resolved to `bits` fractional bits.
    pub fn bounds(&self, bits: u32) -> (BigRational, BigRational) {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (c, r) in &self.terms {
            let down = sqrt_floor(r, bits);
            let up = sqrt_ceil(r, bits);
            if c.is_positive() {
                lo += c * &down;
                hi += c * &up;
            } else {
                lo += c * &up;
                hi += c * &down;
            }
        }
        (lo, hi)
    }

    pub fn approx(&self) -> f64 {
        let (lo, hi) = self.bounds(53);
        use crate::scalar::Scalar;
        ((lo + hi) / BigRational::from_integer(2.into())).approx()
    }
}

pub fn cmp_sums(a: &SqrtSum, b: &SqrtSum) -> Ordering {
    a.minus(b).signum()
}
