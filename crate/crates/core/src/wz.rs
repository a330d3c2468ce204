//! The two WZ pairs and their structural identities.
//!
//! Both pairs satisfy `F(n, k-1) - F(n, k) = G(n+1, k) - G(n, k)` for
//! `n >= 0, k >= 1`, and vanish for `n < k`. Summing over `0 <= n < p` and
//! `1 <= k < p` gives the boundary identity
//!
//! ```text
//! sum_{n<p} F(n, 0) = F(p-1, p-1) + sum_{k=1}^{p-1} G(p, k)
//! ```
//!
//! which is where the two theorems start.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{ArithError, ExactRational, FactoredResidue};
use crate::sequences::{binomial, FactorialTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WzPair {
    /// `F(n,0) = (6n+1) C(2n,n)^3 / 256^n`.
    Pair256,
    /// `F(n,0) = (20n+3) (4n)!/n!^4 / (-1024)^n`.
    Pair1024,
}

impl WzPair {
    pub const ALL: [WzPair; 2] = [WzPair::Pair256, WzPair::Pair1024];
}

impl fmt::Display for WzPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WzPair::Pair256 => "pair256",
            WzPair::Pair1024 => "pair1024",
        })
    }
}

fn c(n: i64, k: i64) -> BigInt {
    binomial(n, k)
}

/// `2^e` as a rational, `e` of either sign.
fn two_pow(e: i64) -> ExactRational {
    let p = BigInt::one() << e.unsigned_abs() as usize;
    if e >= 0 {
        ExactRational::from_integer(p)
    } else {
        ExactRational::new(BigInt::one(), p)
    }
}

fn sign(e: i64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn eval_f(pair: WzPair, n: u64, k: u64) -> ExactRational {
    if n < k {
        return ExactRational::zero();
    }
    let (n, k) = (n as i64, k as i64);
    match pair {
        WzPair::Pair256 => {
            let num = BigInt::from(6 * n - 2 * k + 1)
                * c(2 * n, n)
                * c(2 * n + 2 * k, n + k)
                * c(2 * n - 2 * k, n - k)
                * c(n + k, n);
            ExactRational::new(num, c(2 * k, k)) * two_pow(-(8 * n - 2 * k))
        }
        WzPair::Pair1024 => {
            let num = BigInt::from(sign(n + k) * (20 * n - 2 * k + 3))
                * c(2 * n, n)
                * c(4 * n + 2 * k, 2 * n + k)
                * c(2 * n - k, n)
                * c(2 * n + k, 2 * k);
            ExactRational::new(num, c(2 * k, k)) * two_pow(-2 * (5 * n - k))
        }
    }
}

pub fn eval_g(pair: WzPair, n: u64, k: u64) -> ExactRational {
    if n < k || n == 0 {
        return ExactRational::zero();
    }
    let (n, k) = (n as i64, k as i64);
    match pair {
        WzPair::Pair256 => {
            let num = BigInt::from(n * n)
                * c(2 * n, n)
                * c(2 * n + 2 * k, n + k)
                * c(2 * n - 2 * k, n - k)
                * c(n + k, n);
            let den = BigInt::from(2 * n + 2 * k - 1) * c(2 * k, k);
            ExactRational::new(num, den) * two_pow(-(8 * n - 2 * k - 4))
        }
        WzPair::Pair1024 => {
            let num = BigInt::from(sign(n + k) * n)
                * c(2 * n - 1, n - 1)
                * c(4 * n + 2 * k - 2, 2 * n + k - 1)
                * c(2 * n - k - 1, n - 1)
                * c(2 * n + k - 1, 2 * k);
            ExactRational::new(num, c(2 * k, k)) * two_pow(-2 * (5 * n - k - 4))
        }
    }
}

/// Exact check of `F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k)`; needs `k >= 1`.
pub fn check_telescoping(pair: WzPair, n: u64, k: u64) -> bool {
    assert!(k >= 1, "telescoping relation is stated for k >= 1");
    eval_f(pair, n, k - 1) - eval_f(pair, n, k) == eval_g(pair, n + 1, k) - eval_g(pair, n, k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCheck {
    pub holds: bool,
    /// `sum_{n<p} F(n, 0)`
    pub lhs: ExactRational,
    /// `F(p-1, p-1) + sum_{k=1}^{p-1} G(p, k)`
    pub rhs: ExactRational,
}

/// The boundary identity at any integer `p >= 1`, in exact arithmetic.
pub fn boundary_identity(pair: WzPair, p: u64) -> BoundaryCheck {
    assert!(p >= 1, "boundary identity needs p >= 1");
    let lhs: ExactRational = (0..p).map(|n| eval_f(pair, n, 0)).sum();
    let rhs = eval_f(pair, p - 1, p - 1) + (1..p).map(|k| eval_g(pair, p, k)).sum::<ExactRational>();
    BoundaryCheck { holds: lhs == rhs, lhs, rhs }
}

/// One row `n` of the telescoping grid: every `1 <= k <= k_max` checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TelescopeRow {
    pub n: u64,
    pub failures: Vec<u64>,
    /// `sum_k (F(n,k-1) - F(n,k)) = F(n,0) - F(n,k_max)`
    pub lhs_sum: ExactRational,
    /// `sum_k (G(n+1,k) - G(n,k))`
    pub rhs_sum: ExactRational,
}

impl TelescopeRow {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn telescope_row(pair: WzPair, n: u64, k_max: u64) -> TelescopeRow {
    let column = |m: u64| -> Vec<ExactRational> { (0..=k_max).map(|k| eval_g(pair, m, k)).collect() };
    compare_row(pair, n, k_max, &column(n), &column(n + 1))
}

fn compare_row(
    pair: WzPair,
    n: u64,
    k_max: u64,
    g_here: &[ExactRational],
    g_next: &[ExactRational],
) -> TelescopeRow {
    let f: Vec<ExactRational> = (0..=k_max).map(|k| eval_f(pair, n, k)).collect();
    let mut failures = Vec::new();
    let mut rhs_sum = ExactRational::zero();
    for k in 1..=k_max as usize {
        let right = &g_next[k] - &g_here[k];
        if &f[k - 1] - &f[k] != right {
            failures.push(k as u64);
        }
        rhs_sum += right;
    }
    TelescopeRow {
        n,
        failures,
        lhs_sum: &f[0] - &f[k_max as usize],
        rhs_sum,
    }
}

/// All rows `0 <= n <= n_max`, each over `1 <= k <= k_max`, in parallel.
pub fn telescope_grid(pair: WzPair, n_max: u64, k_max: u64) -> Vec<TelescopeRow> {
    // each G row is needed by two F rows; compute the columns once
    let g: Vec<Vec<ExactRational>> = (0..=n_max + 1)
        .into_par_iter()
        .map(|n| (0..=k_max).map(|k| eval_g(pair, n, k)).collect())
        .collect();
    (0..=n_max)
        .into_par_iter()
        .map(|n| compare_row(pair, n, k_max, &g[n as usize], &g[n as usize + 1]))
        .collect()
}

/// Fast-path evaluation of the pair terms as factored residues.
///
/// Every factor of the closed forms is taken separately, including the
/// `(2n+2k-1)` and `C(2k,k)` denominators, so valuations are tracked factor
/// by factor. The table must reach [`table_limit`] of the largest `(n, k)`
/// evaluated.
pub struct FastTerms<'a> {
    table: &'a FactorialTable,
}

impl<'a> FastTerms<'a> {
    pub fn new(table: &'a FactorialTable) -> Self {
        FastTerms { table }
    }

    fn int(&self, n: i64) -> Result<FactoredResidue, ArithError> {
        FactoredResidue::from_int(n, self.table.p(), self.table.precision())
    }

    fn c(&self, n: i64, k: i64) -> FactoredResidue {
        self.table.binomial(n, k)
    }

    fn product(&self, factors: &[FactoredResidue]) -> Result<FactoredResidue, ArithError> {
        let mut acc = self.int(1)?;
        for f in factors {
            acc = acc.try_mul(f)?;
        }
        Ok(acc)
    }

    pub fn eval_f(&self, pair: WzPair, n: u64, k: u64) -> Result<FactoredResidue, ArithError> {
        if n < k {
            return Ok(FactoredResidue::Zero);
        }
        let (n, k) = (n as i64, k as i64);
        let two = self.int(2)?;
        match pair {
            WzPair::Pair256 => {
                let num = self.product(&[
                    self.int(6 * n - 2 * k + 1)?,
                    self.c(2 * n, n),
                    self.c(2 * n + 2 * k, n + k),
                    self.c(2 * n - 2 * k, n - k),
                    self.c(n + k, n),
                    two.pow(-(8 * n - 2 * k))?,
                ])?;
                num.try_div(&self.c(2 * k, k))
            }
            WzPair::Pair1024 => {
                let num = self.product(&[
                    self.int(sign(n + k) * (20 * n - 2 * k + 3))?,
                    self.c(2 * n, n),
                    self.c(4 * n + 2 * k, 2 * n + k),
                    self.c(2 * n - k, n),
                    self.c(2 * n + k, 2 * k),
                    two.pow(-2 * (5 * n - k))?,
                ])?;
                num.try_div(&self.c(2 * k, k))
            }
        }
    }

    pub fn eval_g(&self, pair: WzPair, n: u64, k: u64) -> Result<FactoredResidue, ArithError> {
        if n < k || n == 0 {
            return Ok(FactoredResidue::Zero);
        }
        let (n, k) = (n as i64, k as i64);
        let two = self.int(2)?;
        match pair {
            WzPair::Pair256 => {
                let num = self.product(&[
                    self.int(n * n)?,
                    self.c(2 * n, n),
                    self.c(2 * n + 2 * k, n + k),
                    self.c(2 * n - 2 * k, n - k),
                    self.c(n + k, n),
                    two.pow(-(8 * n - 2 * k - 4))?,
                ])?;
                num.try_div(&self.int(2 * n + 2 * k - 1)?)?.try_div(&self.c(2 * k, k))
            }
            WzPair::Pair1024 => {
                let num = self.product(&[
                    self.int(sign(n + k) * n)?,
                    self.c(2 * n - 1, n - 1),
                    self.c(4 * n + 2 * k - 2, 2 * n + k - 1),
                    self.c(2 * n - k - 1, n - 1),
                    self.c(2 * n + k - 1, 2 * k),
                    two.pow(-2 * (5 * n - k - 4))?,
                ])?;
                num.try_div(&self.c(2 * k, k))
            }
        }
    }
}

/// One-off fast evaluation of `F(n, k)` at prime `p`.
pub fn eval_f_fast(pair: WzPair, n: u64, k: u64, p: u64, prec: u32) -> Result<FactoredResidue, ArithError> {
    let table = FactorialTable::new(p, prec, table_limit(n, k))?;
    FastTerms::new(&table).eval_f(pair, n, k)
}

/// One-off fast evaluation of `G(n, k)` at prime `p`.
pub fn eval_g_fast(pair: WzPair, n: u64, k: u64, p: u64, prec: u32) -> Result<FactoredResidue, ArithError> {
    let table = FactorialTable::new(p, prec, table_limit(n, k))?;
    FastTerms::new(&table).eval_g(pair, n, k)
}

/// Largest factorial argument either pair needs at `(n, k)`.
pub fn table_limit(n: u64, k: u64) -> u64 {
    4 * n + 2 * k + 2
}
