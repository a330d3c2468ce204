//! Word-level arithmetic modulo `m < 2^127`.

use super::ArithError;

/// `p^e`, or `None` when it would not stay below `2^127`.
pub(crate) fn prime_power(p: u64, e: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p as u128)?;
        if acc >= 1 << 127 {
            return None;
        }
    }
    Some(acc)
}

pub(crate) fn checked_prime_power(p: u64, e: u32) -> Result<u128, ArithError> {
    prime_power(p, e).ok_or(ArithError::ModulusOverflow { p, exponent: e })
}

#[inline]
pub(crate) fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return (a % m) * (b % m) % m;
    }
    // m < 2^127, so doubling and adding never overflow
    let (mut a, mut b) = (a % m, b % m);
    let mut r = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            r += a;
            if r >= m {
                r -= m;
            }
        }
        a <<= 1;
        if a >= m {
            a -= m;
        }
        b >>= 1;
    }
    r
}

#[inline]
pub(crate) fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    let (a, b) = (a % m, b % m);
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

pub(crate) fn pow_mod(mut base: u128, mut exp: u64, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub(crate) fn inv_mod(a: u128, m: u128) -> Option<u128> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u128)
}

/// Splits `n` as `p^t * u` with `p ∤ u`; `n` must be nonzero.
#[inline]
pub(crate) fn split_prime(mut n: u128, p: u64) -> (u32, u128) {
    debug_assert!(n != 0);
    let p = p as u128;
    let mut t = 0;
    while n % p == 0 {
        n /= p;
        t += 1;
    }
    (t, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_mul_mod_matches_narrow() {
        let m = 1u128 << 100 | 12345;
        let a = (1u128 << 99) + 77;
        let b = (1u128 << 98) + 3;
        // a*b = 3a + 2^98 a, built from additions only
        let lhs = mul_mod(a, b, m);
        let mut expect = 0u128;
        for _ in 0..3 {
            expect = add_mod(expect, a, m);
        }
        let mut shifted = a % m;
        for _ in 0..98 {
            shifted = add_mod(shifted, shifted, m);
        }
        expect = add_mod(expect, shifted, m);
        assert_eq!(lhs, expect);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = 5u128.pow(6);
        for a in [1u128, 2, 3, 24, 152, 15624] {
            let inv = inv_mod(a, m).unwrap();
            assert_eq!(mul_mod(a, inv, m), 1);
        }
        assert_eq!(inv_mod(10, m), None);
    }

    #[test]
    fn prime_power_limits() {
        assert_eq!(prime_power(5, 4), Some(625));
        assert_eq!(prime_power(2, 126), Some(1 << 126));
        assert_eq!(prime_power(2, 127), None);
    }
}
