//! Ackermann hierarchy `A_1(n) = 2n`, `A_k(1) = 2`,
//! `A_k(n) = A_{k-1}(A_k(n-1))`, its diagonal and inverse.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AckValue {
    Exact(BigUint),
    /// The value is larger than the cap it was evaluated against.
    ExceedsBound,
}

impl AckValue {
    pub fn as_u64(&self) -> Option<u64> {
        match self {
            AckValue::Exact(v) => v.to_u64(),
            AckValue::ExceedsBound => None,
        }
    }
}

pub fn default_cap() -> BigUint {
    BigUint::one() << 64u32
}

fn ack(k: u32, n: &BigUint, cap: &BigUint) -> Option<BigUint> {
    if k <= 1 {
        let v = n << 1u32;
        return (v <= *cap).then_some(v);
    }
    let mut v = BigUint::from(2u32);
    let mut m = BigUint::one();
    while m < *n {
        v = ack(k - 1, &v, cap)?;
        m += 1u32;
    }
    (v <= *cap).then_some(v)
}

/// `A_k(n)` for `k, n >= 1`, or `ExceedsBound` once it passes `cap`.
pub fn ackermann(k: u32, n: u64, cap: &BigUint) -> AckValue {
    assert!(k >= 1 && n >= 1, "ackermann is defined for k, n >= 1");
    match ack(k, &BigUint::from(n), cap) {
        Some(v) => AckValue::Exact(v),
        None => AckValue::ExceedsBound,
    }
}

/// The diagonal `A(n) = A_n(n)`.
pub fn ackermann_diag(n: u32, cap: &BigUint) -> AckValue {
    ackermann(n, n as u64, cap)
}

/// Least `t` with `A(t) >= n`. A value that exceeds the cap is treated as
/// at least `n`; with the default cap this only happens from `t = 4`, whose
/// value is a tower of 65536 twos.
pub fn inverse_ackermann(n: &BigUint) -> u32 {
    let cap = default_cap().max(n.clone());
    let mut t = 1;
    loop {
        match ackermann_diag(t, &cap) {
            AckValue::Exact(v) if v < *n => t += 1,
            _ => return t,
        }
    }
}

pub fn alpha(n: u64) -> u32 {
    inverse_ackermann(&BigUint::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let cap = default_cap();
        assert_eq!(ackermann(1, 5, &cap).as_u64(), Some(10));
        assert_eq!(ackermann(2, 5, &cap).as_u64(), Some(32));
        assert_eq!(ackermann(3, 3, &cap).as_u64(), Some(16));
        assert_eq!(ackermann(3, 4, &cap).as_u64(), Some(65536));
        assert_eq!(ackermann_diag(1, &cap).as_u64(), Some(2));
        assert_eq!(ackermann_diag(2, &cap).as_u64(), Some(4));
        assert_eq!(ackermann_diag(3, &cap).as_u64(), Some(16));
        assert_eq!(ackermann_diag(4, &cap), AckValue::ExceedsBound);
        assert_eq!(ackermann(2, 65, &cap), AckValue::ExceedsBound);
    }

    #[test]
    fn inverse() {
        assert_eq!(alpha(1), 1);
        assert_eq!(alpha(2), 1);
        assert_eq!(alpha(3), 2);
        assert_eq!(alpha(4), 2);
        assert_eq!(alpha(5), 3);
        assert_eq!(alpha(16), 3);
        assert_eq!(alpha(17), 4);
        assert_eq!(alpha(u64::MAX), 4);
    }
}
