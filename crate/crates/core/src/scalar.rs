//! The exact field every geometric routine in this crate is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// An ordered field with exact arithmetic.
///
/// Predicates are evaluated by sign, so the implementation must never round.
/// Floating-point types deliberately do not implement this trait.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + Signed + FromPrimitive + Send + Sync + 'static
{
    /// Lossless conversion into an arbitrary-precision rational.
    fn to_rational(&self) -> BigRational;

    /// Conversion back from an arbitrary-precision rational; `None` when the
    /// value is not representable.
    fn from_rational(r: &BigRational) -> Option<Self>;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every exact field represents small integers")
    }

    fn from_frac(numer: i64, denom: i64) -> Self {
        Self::from_int(numer) / Self::from_int(denom)
    }

    /// Nearest `f64`, for reporting only.
    fn approx(&self) -> f64 {
        let r = self.to_rational();
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        if n.is_finite() && d.is_finite() {
            n / d
        } else {
            // numerator or denominator beyond f64 range: rescale first
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(900) as usize;
            let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

impl Scalar for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        Some(r.clone())
    }
}

impl Scalar for Ratio<i64> {
    fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        Some(Ratio::new(r.numer().to_i64()?, r.denom().to_i64()?))
    }
}

/// Largest rational of the form `m / 2^bits` not exceeding `sqrt(r)`.
///
/// `r` must be non-negative.
pub fn sqrt_floor(r: &BigRational, bits: u32) -> BigRational {
    assert!(!r.is_negative(), "square root of a negative rational");
    if r.is_zero() {
        return BigRational::zero();
    }
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits to keep `bits` fractional bits.
    let scaled = (r.numer() * r.denom()) << (2 * bits as usize);
    let root = scaled.sqrt();
    BigRational::new(root, r.denom() << bits as usize)
}

/// Smallest rational of the form `m / 2^bits` not below `sqrt(r)`.
pub fn sqrt_ceil(r: &BigRational, bits: u32) -> BigRational {
    let lo = sqrt_floor(r, bits);
    if &(&lo * &lo) == r {
        lo
    } else {
        let step = BigRational::new(BigInt::one(), r.denom() << bits as usize);
        lo + step
    }
}

/// Exact square root when `r` is the square of a rational.
pub fn exact_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sqrt_brackets() {
        for (n, d) in [(2, 1), (1, 3), (49, 4), (10, 7)] {
            let r = q(n, d);
            let lo = sqrt_floor(&r, 20);
            let hi = sqrt_ceil(&r, 20);
            assert!(&lo * &lo <= r);
            assert!(&hi * &hi >= r);
            assert!(&hi - &lo <= q(1, 1 << 20));
        }
        assert_eq!(exact_sqrt(&q(49, 4)), Some(q(7, 2)));
        assert_eq!(exact_sqrt(&q(2, 1)), None);
    }

    #[test]
    fn small_rationals_round_trip() {
        let a = Ratio::<i64>::new(-3, 7);
        assert_eq!(Ratio::<i64>::from_rational(&a.to_rational()), Some(a));
        assert!((a.approx() + 3.0 / 7.0).abs() < 1e-15);
    }
}
