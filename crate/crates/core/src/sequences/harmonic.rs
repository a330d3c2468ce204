use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::ExactRational;

/// `H_n` and `H_n^(2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicPair {
    pub h1: ExactRational,
    pub h2: ExactRational,
}

pub fn harmonic(n: u64) -> HarmonicPair {
    harmonic_table(n).pop().expect("table is never empty")
}

/// `[(H_0, H_0^(2)), ..., (H_n, H_n^(2))]`.
pub fn harmonic_table(n: u64) -> Vec<HarmonicPair> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut h1 = ExactRational::zero();
    let mut h2 = ExactRational::zero();
    out.push(HarmonicPair { h1: h1.clone(), h2: h2.clone() });
    for j in 1..=n {
        let j = BigInt::from(j);
        h1 += ExactRational::new(1.into(), j.clone());
        h2 += ExactRational::new(1.into(), &j * &j);
        out.push(HarmonicPair { h1: h1.clone(), h2: h2.clone() });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{congruent, valuation, Valuation};
    use crate::sequences::is_prime;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    #[test]
    fn examples() {
        assert_eq!(harmonic(0), HarmonicPair { h1: q(0, 1), h2: q(0, 1) });
        assert_eq!(harmonic(4).h1, q(25, 12));
        assert_eq!(harmonic(2).h2, q(5, 4));
    }

    #[test]
    fn consecutive_differences() {
        let t = harmonic_table(50);
        for n in 1..=50usize {
            assert_eq!(&t[n].h1 - &t[n - 1].h1, q(1, n as i64));
            assert_eq!(&t[n].h2 - &t[n - 1].h2, q(1, (n * n) as i64));
        }
    }

    #[test]
    fn reflection_mod_p() {
        for p in (3..120u64).filter(|&p| is_prime(p)) {
            let t = harmonic_table(p - 1);
            for k in 0..p as usize {
                assert!(congruent(&t[p as usize - 1 - k].h1, &t[k].h1, p, 1), "p={p} k={k}");
            }
        }
    }

    #[test]
    fn wolstenholme_valuations() {
        for p in (5..200u64).filter(|&p| is_prime(p)) {
            let h = harmonic(p - 1);
            assert!(valuation(&h.h1, p) >= Valuation::Finite(2), "p={p}");
            assert!(valuation(&h.h2, p) >= Valuation::Finite(1), "p={p}");
        }
    }
}
