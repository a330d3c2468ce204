use crate::arith::modular::{checked_prime_power, inv_mod, mul_mod, split_prime};
use crate::arith::{ArithError, FactoredResidue};

/// `n!` as `p^v * u` with `v = sum_i floor(n / p^i)` and `u` modulo `p^prec`,
/// by direct product.
pub fn factored_factorial(n: u64, p: u64, prec: u32) -> Result<FactoredResidue, ArithError> {
    let m = checked_prime_power(p, prec)?;
    let mut v = 0i64;
    let mut unit = 1 % m;
    for i in 2..=n {
        let (t, u) = split_prime(i as u128, p);
        v += t as i64;
        unit = mul_mod(unit, u, m);
    }
    FactoredResidue::new(p, v, unit, prec)
}

/// `C(n, k)` for `0 <= k <= n` from three factored factorials.
pub fn factored_binomial(n: u64, k: u64, p: u64, prec: u32) -> Result<FactoredResidue, ArithError> {
    assert!(k <= n, "factored_binomial needs 0 <= k <= n");
    let num = factored_factorial(n, p, prec)?;
    let den = factored_factorial(k, p, prec)?.try_mul(&factored_factorial(n - k, p, prec)?)?;
    num.try_div(&den)
}

/// Prefix table of `m!` for `m <= limit`, split as `p^v * unit`, with unit
/// inverses so a binomial costs two multiplications.
#[derive(Clone, Debug)]
pub struct FactorialTable {
    p: u64,
    prec: u32,
    modulus: u128,
    val: Vec<i64>,
    unit: Vec<u128>,
    inv_unit: Vec<u128>,
}

impl FactorialTable {
    pub fn new(p: u64, prec: u32, limit: u64) -> Result<Self, ArithError> {
        let modulus = checked_prime_power(p, prec)?;
        let len = limit as usize + 1;
        let mut val = Vec::with_capacity(len);
        let mut unit = Vec::with_capacity(len);
        let mut parts = Vec::with_capacity(len);
        val.push(0);
        unit.push(1 % modulus);
        parts.push(1);
        for i in 1..len {
            let (t, u) = split_prime(i as u128, p);
            val.push(val[i - 1] + t as i64);
            unit.push(mul_mod(unit[i - 1], u, modulus));
            parts.push(u);
        }
        let mut inv_unit = vec![0; len];
        inv_unit[len - 1] = inv_mod(unit[len - 1], modulus).expect("factorial units are invertible");
        for i in (1..len).rev() {
            inv_unit[i - 1] = mul_mod(inv_unit[i], parts[i], modulus);
        }
        Ok(FactorialTable { p, prec, modulus, val, unit, inv_unit })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn limit(&self) -> u64 {
        self.val.len() as u64 - 1
    }

    pub fn factorial(&self, n: u64) -> FactoredResidue {
        let n = self.index(n);
        self.build(self.val[n], self.unit[n])
    }

    /// `C(n, k)` with the same conventions as [`super::binomial`]: zero out of
    /// range, reflection for a negative upper index.
    pub fn binomial(&self, n: i64, k: i64) -> FactoredResidue {
        if k < 0 {
            return FactoredResidue::Zero;
        }
        if n < 0 {
            let b = self.binomial(k - n - 1, k);
            return if k % 2 == 0 { b } else { b.neg() };
        }
        if k > n {
            return FactoredResidue::Zero;
        }
        let (n, k) = (self.index(n as u64), self.index(k as u64));
        let v = self.val[n] - self.val[k] - self.val[n - k];
        let u = mul_mod(
            self.unit[n],
            mul_mod(self.inv_unit[k], self.inv_unit[n - k], self.modulus),
            self.modulus,
        );
        self.build(v, u)
    }

    fn index(&self, n: u64) -> usize {
        assert!(n <= self.limit(), "factorial table for p={} stops at {}, asked {n}", self.p, self.limit());
        n as usize
    }

    fn build(&self, v: i64, unit: u128) -> FactoredResidue {
        FactoredResidue::new(self.p, v, unit, self.prec).expect("table units are nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{reduce_mod, ExactRational, Valuation};
    use crate::sequences::{binomial, is_prime};
    use num_bigint::BigUint;

    #[test]
    fn factorial_examples() {
        let f5 = factored_factorial(5, 5, 4).unwrap();
        assert_eq!((f5.valuation(), f5.unit()), (Valuation::Finite(1), Some(24)));
        let f4 = factored_factorial(4, 5, 4).unwrap();
        assert_eq!((f4.valuation(), f4.unit()), (Valuation::Finite(0), Some(24)));
        let f10 = factored_factorial(10, 5, 4).unwrap();
        assert_eq!((f10.valuation(), f10.unit()), (Valuation::Finite(2), Some(152)));
    }

    #[test]
    fn binomial_examples() {
        let b = factored_binomial(9, 4, 5, 4).unwrap();
        assert_eq!((b.valuation(), b.unit()), (Valuation::Finite(0), Some(126)));
        // C(10,5) = 252 ≡ 2 (mod 125), the Jacobsthal ratio C(10,5)/C(2,1) at p = 5
        let b = factored_binomial(10, 5, 5, 3).unwrap();
        assert_eq!(b.residue(3).unwrap(), 2);
        assert_eq!(252 % 125, 2);
        let b = factored_binomial(17, 0, 7, 4).unwrap();
        assert_eq!((b.valuation(), b.unit()), (Valuation::Finite(0), Some(1)));
    }

    #[test]
    fn table_matches_direct_factorials() {
        let t = FactorialTable::new(7, 5, 60).unwrap();
        for n in 0..=60 {
            assert_eq!(t.factorial(n), factored_factorial(n, 7, 5).unwrap(), "n={n}");
        }
    }

    #[test]
    fn table_binomials_match_pascal_triangle() {
        let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::from(1u32)]];
        for n in 1..=300usize {
            let prev = &rows[n - 1];
            let mut row = vec![BigUint::from(1u32)];
            row.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
            row.push(BigUint::from(1u32));
            rows.push(row);
        }
        for p in (2..50u64).filter(|&p| is_prime(p)) {
            let prec = 4;
            let m = BigUint::from(p).pow(prec);
            let t = FactorialTable::new(p, prec, 300).unwrap();
            for (n, row) in rows.iter().enumerate() {
                for (k, c) in row.iter().enumerate() {
                    let got = t.binomial(n as i64, k as i64).residue(prec).unwrap();
                    assert_eq!(BigUint::from(got), c % &m, "p={p} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn table_reflection_for_negative_upper_index() {
        let p = 11;
        let t = FactorialTable::new(p, 4, 200).unwrap();
        for n in -60i64..0 {
            for k in -2i64..40 {
                let exact = ExactRational::from_integer(binomial(n, k));
                let expect = reduce_mod(&exact, p, 4).unwrap();
                assert_eq!(BigUint::from(t.binomial(n, k).residue(4).unwrap()), expect, "n={n} k={k}");
            }
        }
    }
}
