use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::exact::{ExactRational, Valuation};
use super::modular::{add_mod, checked_prime_power, inv_mod, mul_mod, pow_mod, split_prime};
use super::ArithError;

/// A p-adic number known to finite precision, stored as `p^v * u` where the
/// unit `u` is known modulo `p^prec`.
///
/// The value is therefore known modulo `p^(v + prec)`, its absolute
/// precision. Exact zero is a separate state with infinite absolute
/// precision; a nonzero value never carries a unit divisible by `p`.
///
/// Multiplication and division add or subtract valuations and keep the
/// smaller unit precision. Addition aligns both operands at the smaller
/// valuation and keeps the smaller absolute precision, so cancellation eats
/// unit digits; when nothing is left the operation fails with
/// [`ArithError::PrecisionExhausted`] and the caller has to fall back to exact
/// arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactoredResidue {
    Zero,
    NonZero(Digits),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Digits {
    p: u64,
    v: i64,
    unit: u128,
    prec: u32,
    modulus: u128,
}

impl FactoredResidue {
    pub fn zero() -> Self {
        FactoredResidue::Zero
    }

    /// Builds `p^v * unit` with `unit` read modulo `p^prec`. Factors of `p`
    /// inside `unit` are moved into the valuation, consuming unit precision.
    pub fn new(p: u64, v: i64, unit: u128, prec: u32) -> Result<Self, ArithError> {
        let modulus = checked_prime_power(p, prec)?;
        let unit = unit % modulus;
        if unit == 0 {
            return Err(ArithError::PrecisionExhausted {
                p,
                needed: v + prec as i64 + 1,
                known: v + prec as i64,
            });
        }
        let (t, u) = split_prime(unit, p);
        Self::from_unit(p, v + t as i64, u, prec - t)
    }

    /// `unit` must already be coprime to `p`.
    fn from_unit(p: u64, v: i64, unit: u128, prec: u32) -> Result<Self, ArithError> {
        let modulus = checked_prime_power(p, prec)?;
        Ok(FactoredResidue::NonZero(Digits {
            p,
            v,
            unit: unit % modulus,
            prec,
            modulus,
        }))
    }

    pub fn from_int(n: i64, p: u64, prec: u32) -> Result<Self, ArithError> {
        if n == 0 {
            return Ok(FactoredResidue::Zero);
        }
        let (t, u) = split_prime(n.unsigned_abs() as u128, p);
        let modulus = checked_prime_power(p, prec)?;
        let u = u % modulus;
        let u = if n < 0 { (modulus - u) % modulus } else { u };
        Self::from_unit(p, t as i64, u, prec)
    }

    pub fn from_bigint(n: &BigInt, p: u64, prec: u32) -> Result<Self, ArithError> {
        if n.is_zero() {
            return Ok(FactoredResidue::Zero);
        }
        let pb = BigInt::from(p);
        let mut m = n.abs();
        let mut t = 0i64;
        loop {
            let (q, r) = m.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            m = q;
            t += 1;
        }
        let modulus = checked_prime_power(p, prec)?;
        let mb = BigInt::from(modulus);
        let mut u = m.mod_floor(&mb);
        if n.is_negative() {
            u = (&mb - u).mod_floor(&mb);
        }
        Self::from_unit(p, t, u.to_u128().expect("reduced below modulus"), prec)
    }

    pub fn from_ratio(num: i64, den: i64, p: u64, prec: u32) -> Result<Self, ArithError> {
        Self::from_int(num, p, prec)?.try_div(&Self::from_int(den, p, prec)?)
    }

    pub fn from_rational(x: &ExactRational, p: u64, prec: u32) -> Result<Self, ArithError> {
        Self::from_bigint(x.numer(), p, prec)?.try_div(&Self::from_bigint(x.denom(), p, prec)?)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, FactoredResidue::Zero)
    }

    pub fn valuation(&self) -> Valuation {
        match self {
            FactoredResidue::Zero => Valuation::Infinite,
            FactoredResidue::NonZero(d) => Valuation::Finite(d.v),
        }
    }

    pub fn unit(&self) -> Option<u128> {
        match self {
            FactoredResidue::Zero => None,
            FactoredResidue::NonZero(d) => Some(d.unit),
        }
    }

    pub fn unit_precision(&self) -> Option<u32> {
        match self {
            FactoredResidue::Zero => None,
            FactoredResidue::NonZero(d) => Some(d.prec),
        }
    }

    /// The value is known modulo `p^abs_precision`.
    pub fn abs_precision(&self) -> Valuation {
        match self {
            FactoredResidue::Zero => Valuation::Infinite,
            FactoredResidue::NonZero(d) => Valuation::Finite(d.v + d.prec as i64),
        }
    }

    fn same_prime(a: &Digits, b: &Digits) -> Result<(), ArithError> {
        if a.p != b.p {
            return Err(ArithError::PrimeMismatch(a.p, b.p));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        let (a, b) = match (self, other) {
            (FactoredResidue::NonZero(a), FactoredResidue::NonZero(b)) => (a, b),
            _ => return Ok(FactoredResidue::Zero),
        };
        Self::same_prime(a, b)?;
        let (prec, m) = if a.prec <= b.prec { (a.prec, a.modulus) } else { (b.prec, b.modulus) };
        Ok(FactoredResidue::NonZero(Digits {
            p: a.p,
            v: a.v + b.v,
            unit: mul_mod(a.unit, b.unit, m),
            prec,
            modulus: m,
        }))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ArithError> {
        let b = match other {
            FactoredResidue::Zero => return Err(ArithError::DivisionByZero),
            FactoredResidue::NonZero(b) => b,
        };
        let a = match self {
            FactoredResidue::Zero => return Ok(FactoredResidue::Zero),
            FactoredResidue::NonZero(a) => a,
        };
        Self::same_prime(a, b)?;
        let (prec, m) = if a.prec <= b.prec { (a.prec, a.modulus) } else { (b.prec, b.modulus) };
        let inv = inv_mod(b.unit % m, m).expect("units are invertible");
        Ok(FactoredResidue::NonZero(Digits {
            p: a.p,
            v: a.v - b.v,
            unit: mul_mod(a.unit, inv, m),
            prec,
            modulus: m,
        }))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        let (a, b) = match (self, other) {
            (FactoredResidue::Zero, x) | (x, FactoredResidue::Zero) => return Ok(*x),
            (FactoredResidue::NonZero(a), FactoredResidue::NonZero(b)) => (a, b),
        };
        Self::same_prime(a, b)?;
        let p = a.p;
        let (lo, hi) = if a.v <= b.v { (a, b) } else { (b, a) };
        let v = lo.v;
        let abs = (lo.v + lo.prec as i64).min(hi.v + hi.prec as i64);
        let digits = (abs - v) as u32;
        let m = checked_prime_power(p, digits)?;
        let shift = (hi.v - v) as u32;
        let hi_part = if shift >= digits {
            0
        } else {
            mul_mod(hi.unit, checked_prime_power(p, shift)?, m)
        };
        let s = add_mod(lo.unit, hi_part, m);
        if s == 0 {
            return Err(ArithError::PrecisionExhausted { p, needed: abs + 1, known: abs });
        }
        let (t, u) = split_prime(s, p);
        Self::from_unit(p, v + t as i64, u, digits - t)
    }

    pub fn neg(&self) -> Self {
        match self {
            FactoredResidue::Zero => FactoredResidue::Zero,
            FactoredResidue::NonZero(d) => FactoredResidue::NonZero(Digits {
                unit: (d.modulus - d.unit) % d.modulus,
                ..*d
            }),
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_add(&other.neg())
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        match self {
            FactoredResidue::Zero if e > 0 => Ok(FactoredResidue::Zero),
            // 0^0 has no prime to build a unit from
            FactoredResidue::Zero => Err(ArithError::DivisionByZero),
            FactoredResidue::NonZero(d) => {
                let base = if e < 0 {
                    inv_mod(d.unit, d.modulus).expect("units are invertible")
                } else {
                    d.unit
                };
                Ok(FactoredResidue::NonZero(Digits {
                    v: d.v * e,
                    unit: pow_mod(base, e.unsigned_abs(), d.modulus),
                    ..*d
                }))
            }
        }
    }

    /// Multiplies by `p^e`.
    pub fn shift(&self, e: i64) -> Self {
        match self {
            FactoredResidue::Zero => FactoredResidue::Zero,
            FactoredResidue::NonZero(d) => FactoredResidue::NonZero(Digits { v: d.v + e, ..*d }),
        }
    }

    /// The value reduced modulo `p^k`, as a least nonnegative residue.
    pub fn residue(&self, k: u32) -> Result<u128, ArithError> {
        let d = match self {
            FactoredResidue::Zero => return Ok(0),
            FactoredResidue::NonZero(d) => d,
        };
        if d.v < 0 {
            return Err(ArithError::NegativeValuation { p: d.p, valuation: d.v });
        }
        let abs = d.v + d.prec as i64;
        if abs < k as i64 {
            return Err(ArithError::PrecisionExhausted { p: d.p, needed: k as i64, known: abs });
        }
        if d.v >= k as i64 {
            return Ok(0);
        }
        let m = checked_prime_power(d.p, k)?;
        let pv = checked_prime_power(d.p, d.v as u32)?;
        Ok(mul_mod(d.unit, pv, m))
    }
}

impl fmt::Display for FactoredResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactoredResidue::Zero => f.write_str("0"),
            FactoredResidue::NonZero(d) => {
                write!(f, "{}^{} * {} (mod {}^{})", d.p, d.v, d.unit, d.p, d.v + d.prec as i64)
            }
        }
    }
}
