use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::{ArithError, ExactRational, FactoredResidue};
use crate::sequences::{
    euler_mod, euler_numbers, fermat_quotient, harmonic_table, is_prime, EulerTable, FactorialTable,
    HarmonicPair,
};

/// Unit precision of the shared fast-path factorial table. Two digits above
/// the largest modulus exponent leaves room for the cancellations in the
/// lemma sums.
pub const FAST_PRECISION: u32 = 6;

/// Up to this prime `E_{p-3}` is carried as an exact integer; above it only
/// its residue mod `p` is used.
pub const EXACT_EULER_LIMIT: u64 = 613;

/// `E_{p-3}` either exactly or as the least residue mod `p`. A lifted residue
/// is enough whenever the coefficient in front of it has valuation
/// `>= K - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EulerValue {
    Exact(BigInt),
    Lifted(u64),
}

impl EulerValue {
    pub fn value(&self) -> BigInt {
        match self {
            EulerValue::Exact(e) => e.clone(),
            EulerValue::Lifted(r) => BigInt::from(*r),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, EulerValue::Exact(_))
    }
}

/// Per-prime data shared by every claim evaluated at `p`. Lazily built
/// tables live in `OnceCell`s; a context belongs to one worker.
pub struct PrimeContext {
    p: u64,
    sign: i64,
    q: BigInt,
    euler: EulerValue,
    harmonics: OnceCell<Vec<HarmonicPair>>,
    table: OnceCell<Result<FactorialTable, ArithError>>,
    fast_harmonics: OnceCell<Result<Vec<(FactoredResidue, FactoredResidue)>, ArithError>>,
    jacobsthal: OnceCell<Result<BTreeMap<u64, FactoredResidue>, ArithError>>,
}

impl PrimeContext {
    /// `euler` may hold precomputed Euler numbers; when it does not reach
    /// `p - 3` the value is computed here.
    pub fn new(p: u64, euler: Option<&EulerTable>) -> Self {
        assert!(p > 2 && is_prime(p), "prime contexts need an odd prime, got {p}");
        let idx = (p - 3) as usize;
        let euler = match euler.and_then(|t| t.get(idx)) {
            Some(e) => EulerValue::Exact(e.clone()),
            None if p <= EXACT_EULER_LIMIT => {
                EulerValue::Exact(euler_numbers(idx).get(idx).cloned().expect("table reaches idx"))
            }
            None => EulerValue::Lifted(euler_mod(idx, p)),
        };
        PrimeContext {
            p,
            sign: if p % 4 == 1 { 1 } else { -1 },
            q: fermat_quotient(p),
            euler,
            harmonics: OnceCell::new(),
            table: OnceCell::new(),
            fast_harmonics: OnceCell::new(),
            jacobsthal: OnceCell::new(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `(-1)^((p-1)/2)`
    pub fn sign(&self) -> i64 {
        self.sign
    }

    /// Fermat quotient `q_p(2)`.
    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn euler(&self) -> &EulerValue {
        &self.euler
    }

    /// `(p-1)/2`
    pub fn half(&self) -> u64 {
        (self.p - 1) / 2
    }

    /// Exact `H_j, H_j^(2)` for `j <= p - 1`.
    pub fn harmonics(&self) -> &[HarmonicPair] {
        self.harmonics.get_or_init(|| harmonic_table(self.p - 1))
    }

    pub fn harmonic(&self, j: u64) -> &ExactRational {
        &self.harmonics()[j as usize].h1
    }

    pub fn harmonic2(&self, j: u64) -> &ExactRational {
        &self.harmonics()[j as usize].h2
    }

    /// Factorials up to `6p + 8`, enough for every pair term `F(n, k)`,
    /// `G(n, k)` with `n, k <= p`.
    pub fn table(&self) -> Result<&FactorialTable, ArithError> {
        self.table
            .get_or_init(|| FactorialTable::new(self.p, FAST_PRECISION, 6 * self.p + 8))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Running `(H_j, H_j^(2))` as factored residues for `j <= p - 1`.
    pub fn fast_harmonics(&self) -> Result<&[(FactoredResidue, FactoredResidue)], ArithError> {
        self.fast_harmonics
            .get_or_init(|| {
                let (p, prec) = (self.p, FAST_PRECISION);
                let mut out = Vec::with_capacity(self.p as usize);
                let mut h1 = FactoredResidue::Zero;
                let mut h2 = FactoredResidue::Zero;
                out.push((h1, h2));
                for j in 1..p as i64 {
                    h1 = h1.try_add(&FactoredResidue::from_ratio(1, j, p, prec)?)?;
                    h2 = h2.try_add(&FactoredResidue::from_ratio(1, j * j, p, prec)?)?;
                    out.push((h1, h2));
                }
                Ok(out)
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Factored `m!` for every `m` a Jacobsthal instance at `p` needs.
    pub(crate) fn jacobsthal_factorials(&self) -> Result<&BTreeMap<u64, FactoredResidue>, ArithError> {
        self.jacobsthal
            .get_or_init(|| super::eval_fast::jacobsthal_factorials(self.p))
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// One concrete statement of a parametrised claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Instance {
    K(u64),
    Jacobsthal { a: u64, b: u64, r: u32, s: u32 },
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::K(k) => write!(f, "k={k}"),
            Instance::Jacobsthal { a, b, r, s } => write!(f, "a={a},b={b},r={r},s={s}"),
        }
    }
}

impl Instance {
    /// Modulus exponent of this instance when it differs from the claim's.
    pub fn modulus_exponent(&self) -> Option<u32> {
        match self {
            Instance::K(_) => None,
            Instance::Jacobsthal { r, s, .. } => Some(r + s + r.min(s)),
        }
    }
}

/// `1 <= b < a <= 6`, `r, s in {1, 2}`, keeping only instances whose
/// denominator `C(a p^(r-1), b p^(s-1))` is nonzero. A zero denominator means
/// the numerator vanishes too, so the ratio is undefined rather than false.
pub fn jacobsthal_instances(p: u64) -> Vec<Instance> {
    let mut out = Vec::new();
    for a in 2..=6u64 {
        for b in 1..a {
            for r in 1..=2u32 {
                for s in 1..=2u32 {
                    if b * p.pow(s - 1) <= a * p.pow(r - 1) {
                        out.push(Instance::Jacobsthal { a, b, r, s });
                    }
                }
            }
        }
    }
    out
}
