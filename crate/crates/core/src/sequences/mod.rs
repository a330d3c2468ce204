//! Combinatorial and number-theoretic sequences, exact and modulo prime
//! powers.

mod combinatorics;
mod euler;
mod factored;
mod harmonic;

pub use combinatorics::{binomial, fermat_quotient, multinomial4, pochhammer};
pub use euler::{euler_mod, euler_numbers, EulerTable};
pub use factored::{factored_binomial, factored_factorial, FactorialTable};
pub use harmonic::{harmonic, harmonic_table, HarmonicPair};

/// Deterministic trial-division primality test; the prime ranges used here
/// stay far below where this matters.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Sieve of Eratosthenes up to and including `n`.
pub(crate) fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}
