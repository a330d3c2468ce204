use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::ArithError;

/// Ground-truth number type. `BigRational` keeps itself in lowest terms with
/// a positive denominator, and zero is `0/1`.
pub type ExactRational = BigRational;

/// A p-adic valuation, with a dedicated case for the valuation of zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_at_least(self, k: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= k,
            Valuation::Infinite => true,
        }
    }

    /// Clamps to `cap`, turning `Infinite` into `Finite(cap)` as well.
    pub fn capped(self, cap: i64) -> Valuation {
        match self {
            Valuation::Finite(v) if v < cap => Valuation::Finite(v),
            _ => Valuation::Finite(cap),
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Exponent of `p` in a nonzero integer; `None` for zero.
pub fn int_valuation(n: &BigInt, p: u64) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigUint::from(p);
    let mut m = n.magnitude().clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        m = q;
        v += 1;
    }
}

pub fn valuation(x: &ExactRational, p: u64) -> Valuation {
    match int_valuation(x.numer(), p) {
        None => Valuation::Infinite,
        Some(vn) => {
            let vd = int_valuation(x.denom(), p).unwrap_or(0);
            Valuation::Finite(vn as i64 - vd as i64)
        }
    }
}

/// The unique `r` in `[0, p^k)` with `x ≡ r (mod p^k)`.
pub fn reduce_mod(x: &ExactRational, p: u64, k: u32) -> Result<BigUint, ArithError> {
    if let Valuation::Finite(v) = valuation(x, p) {
        if v < 0 {
            return Err(ArithError::NegativeValuation { p, valuation: v });
        }
    }
    if k == 0 {
        return Ok(BigUint::zero());
    }
    let m = BigInt::from(p).pow(k);
    let num = x.numer().mod_floor(&m);
    let den = x.denom().mod_floor(&m);
    // lowest terms and v >= 0 mean p does not divide the denominator
    let inv = den
        .modinv(&m)
        .expect("denominator of a p-integral rational is a unit");
    let r = (num * inv).mod_floor(&m);
    Ok(r.magnitude().clone())
}

/// `a ≡ b (mod p^k)` in the sense `v_p(a - b) >= k`.
pub fn congruent(a: &ExactRational, b: &ExactRational, p: u64, k: u32) -> bool {
    valuation(&(a - b), p).is_at_least(k as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&q(125, 12), 5), Valuation::Finite(3));
        assert_eq!(valuation(&q(7, 32), 2), Valuation::Finite(-5));
        assert_eq!(valuation(&q(0, 1), 7), Valuation::Infinite);
        assert_eq!(valuation(&q(-18, 1), 3), Valuation::Finite(2));
    }

    #[test]
    fn reduce_mod_examples() {
        assert_eq!(reduce_mod(&q(126, 1), 5, 3).unwrap(), BigUint::one());
        assert_eq!(reduce_mod(&q(1, 2), 3, 2).unwrap(), BigUint::from(5u32));
        assert_eq!(reduce_mod(&q(22, 9), 5, 1).unwrap(), BigUint::from(3u32));
        assert_eq!(reduce_mod(&q(-1, 1), 5, 2).unwrap(), BigUint::from(24u32));
    }

    #[test]
    fn reduce_mod_rejects_negative_valuation() {
        assert_eq!(
            reduce_mod(&q(1, 10), 5, 2),
            Err(ArithError::NegativeValuation { p: 5, valuation: -1 })
        );
    }

    #[test]
    fn congruent_examples() {
        assert!(congruent(&q(126, 1), &q(1, 1), 5, 3));
        assert!(!congruent(&q(126, 1), &q(1, 1), 5, 4));
        // H_4 = 25/12
        assert!(congruent(&q(25, 12), &q(0, 1), 5, 2));
        assert!(congruent(&q(7, 32), &q(7, 32), 3, 4));
    }

    #[test]
    fn valuation_ordering_puts_infinity_last() {
        assert!(Valuation::Finite(1_000_000) < Valuation::Infinite);
        assert!(Valuation::Finite(-3) < Valuation::Finite(0));
        assert_eq!(Valuation::Infinite.capped(8), Valuation::Finite(8));
        assert_eq!(Valuation::Finite(2).capped(8), Valuation::Finite(2));
    }
}
