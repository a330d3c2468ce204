use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::primes_up_to;
use crate::arith::ExactRational;

/// Binomial coefficient for signed arguments.
///
/// Zero when `k < 0` or `0 <= n < k`; a negative upper index is defined by
/// the reflection `C(n, k) = (-1)^k C(k - n - 1, k)`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        if k > n {
            return BigInt::zero();
        }
        return BigInt::from(binomial_nonneg(n as u64, k as u64));
    }
    let b = BigInt::from(binomial_nonneg((k - n - 1) as u64, k as u64));
    if k % 2 == 0 {
        b
    } else {
        -b
    }
}

fn binomial_nonneg(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    if k < 48 {
        let mut acc = BigUint::one();
        for i in 0..k {
            acc *= n - i;
            acc /= i + 1;
        }
        return acc;
    }
    // Legendre: exponent of q in C(n, k) is sum_i floor(n/q^i) - floor(k/q^i) - floor((n-k)/q^i)
    let mut words: Vec<BigUint> = Vec::new();
    let mut word: u64 = 1;
    for q in primes_up_to(n) {
        let mut e = 0;
        let mut qi = q;
        loop {
            e += n / qi - k / qi - (n - k) / qi;
            match qi.checked_mul(q) {
                Some(next) if next <= n => qi = next,
                _ => break,
            }
        }
        for _ in 0..e {
            match word.checked_mul(q) {
                Some(w) => word = w,
                None => {
                    words.push(BigUint::from(word));
                    word = q;
                }
            }
        }
    }
    words.push(BigUint::from(word));
    product_tree(words)
}

fn product_tree(mut v: Vec<BigUint>) -> BigUint {
    while v.len() > 1 {
        let mut next = Vec::with_capacity(v.len().div_ceil(2));
        let mut it = v.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a * b),
                None => next.push(a),
            }
        }
        v = next;
    }
    v.pop().unwrap_or_else(BigUint::one)
}

/// `(4n)! / (n!)^4`, built as `C(4n, n) C(3n, n) C(2n, n)`.
pub fn multinomial4(n: u64) -> BigInt {
    let n = n as i64;
    binomial(4 * n, n) * binomial(3 * n, n) * binomial(2 * n, n)
}

/// Raising factorial `a (a+1) ... (a+n-1)`; `(a)_0 = 1`.
pub fn pochhammer(a: &ExactRational, n: u64) -> ExactRational {
    let mut acc = ExactRational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += ExactRational::one();
    }
    acc
}

/// `(2^(p-1) - 1) / p` for an odd prime `p`.
pub fn fermat_quotient(p: u64) -> BigInt {
    assert!(p % 2 == 1, "Fermat quotient base 2 needs an odd prime");
    let pow = BigInt::one() << (p - 1) as usize;
    (pow - 1u32) / p
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-5, 2), BigInt::from(15));
        assert_eq!(binomial(-5, 3), BigInt::from(-35));
        assert_eq!(binomial(7, -1), BigInt::zero());
        assert_eq!(binomial(-3, -2), BigInt::zero());
        assert_eq!(binomial(-1, 4), BigInt::one());
    }

    #[test]
    fn large_binomials_match_pascal() {
        // Pascal's rule across the switch to the factored route
        for n in [96i64, 100, 150, 301] {
            for k in [47i64, 48, 49, n / 2] {
                assert_eq!(binomial(n + 1, k + 1), binomial(n, k) + binomial(n, k + 1), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial4(0), BigInt::one());
        assert_eq!(multinomial4(1), BigInt::from(24));
        assert_eq!(multinomial4(2), BigInt::from(2520));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&q(7, 3), 0), q(1, 1));
        assert_eq!(pochhammer(&q(1, 2), 2), q(3, 4));
        assert_eq!(pochhammer(&q(1, 2), 3) / q(6, 1), q(5, 16));
        assert_eq!(q(5, 16), q(20, 64));
    }

    #[test]
    fn fermat_quotients() {
        assert_eq!(fermat_quotient(3), BigInt::from(1));
        assert_eq!(fermat_quotient(5), BigInt::from(3));
        assert_eq!(fermat_quotient(7), BigInt::from(9));
    }

    #[test]
    fn half_pochhammer_is_central_binomial_over_four_power() {
        let mut fact = BigInt::one();
        for k in 0..80u64 {
            if k > 0 {
                fact *= k;
            }
            let lhs = pochhammer(&q(1, 2), k) / ExactRational::from_integer(fact.clone());
            let rhs = ExactRational::new(binomial(2 * k as i64, k as i64), BigInt::from(4).pow(k as u32));
            assert_eq!(lhs, rhs, "k={k}");
        }
    }

    proptest! {
        #[test]
        fn multinomial_splits_through_central_binomials(n in 0u64..120) {
            let n_ = n as i64;
            let c = binomial(2 * n_, n_);
            prop_assert_eq!(multinomial4(n), binomial(4 * n_, 2 * n_) * &c * &c);
        }

        #[test]
        fn reflection_matches_falling_factorial(n in -60i64..60, k in 0i64..40) {
            // C(n, k) = n (n-1) ... (n-k+1) / k!
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for i in 0..k {
                num *= n - i;
                den *= i + 1;
            }
            prop_assert_eq!(binomial(n, k), num / den);
        }
    }
}
