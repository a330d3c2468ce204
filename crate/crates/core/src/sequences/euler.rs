use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Euler numbers `E_0 ..= E_nmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerTable {
    values: Vec<BigInt>,
}

impl EulerTable {
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.values.get(n)
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Runs `E_0 = 1`, `E_n = -sum_{k=1}^{n/2} C(n, 2k) E_{n-2k}`.
pub fn euler_numbers(n_max: usize) -> EulerTable {
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(BigInt::one());
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for n in 1..=n_max {
        row = next_pascal_row(&row);
        let mut e = BigInt::zero();
        if n % 2 == 0 {
            for k in 1..=n / 2 {
                e -= BigInt::from(row[2 * k].clone()) * &values[n - 2 * k];
            }
        }
        values.push(e);
    }
    EulerTable { values }
}

fn next_pascal_row(row: &[BigUint]) -> Vec<BigUint> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(BigUint::one());
    for w in row.windows(2) {
        next.push(&w[0] + &w[1]);
    }
    next.push(BigUint::one());
    next
}

/// `E_n mod p`, with the same recurrence run over residues.
pub fn euler_mod(n: usize, p: u64) -> u64 {
    let mut values: Vec<u64> = Vec::with_capacity(n + 1);
    values.push(1 % p);
    let mut row: Vec<u64> = vec![1 % p];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(1 % p);
        for w in row.windows(2) {
            next.push((w[0] + w[1]) % p);
        }
        next.push(1 % p);
        row = next;
        let mut acc: u128 = 0;
        if m % 2 == 0 {
            for k in 1..=m / 2 {
                acc += row[2 * k] as u128 * values[m - 2 * k] as u128;
            }
        }
        let acc = (acc % p as u128) as u64;
        values.push((p - acc) % p);
    }
    values[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn small_euler_numbers() {
        let t = euler_numbers(10);
        let expect = [1i64, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(t.get(n).unwrap(), &BigInt::from(*e), "E_{n}");
        }
    }

    #[test]
    fn parity_and_signs() {
        let t = euler_numbers(60);
        for (n, e) in t.values().iter().enumerate() {
            if n % 2 == 1 {
                assert!(e.is_zero());
            } else {
                let negative = e < &BigInt::zero();
                assert_eq!(negative, n % 4 == 2, "E_{n}");
            }
        }
    }

    #[test]
    fn euler_mod_examples() {
        assert_eq!(euler_mod(2, 5), 4);
        assert_eq!(euler_mod(0, 7), 1);
        assert_eq!(euler_mod(1, 11), 0);
    }

    #[test]
    fn euler_mod_matches_exact_table() {
        let t = euler_numbers(60);
        for p in [2u64, 3, 5, 7, 11, 13, 31, 61, 97] {
            for n in 0..=60 {
                assert_eq!(euler_mod(n, p), bigint_mod(t.get(n).unwrap(), p), "n={n} p={p}");
            }
        }
    }

    fn bigint_mod(x: &BigInt, p: u64) -> u64 {
        let m = BigInt::from(p);
        let r = ((x % &m) + &m) % &m;
        r.to_u64().expect("residue below p")
    }
}
