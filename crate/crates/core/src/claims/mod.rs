//! The claim registry and evaluation of a claim at one prime (or one `n`).

mod context;
mod eval_exact;
mod eval_fast;
mod registry;
mod rhs;

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

pub use context::{jacobsthal_instances, EulerValue, Instance, PrimeContext, EXACT_EULER_LIMIT, FAST_PRECISION};
pub use registry::{find_claim, registry, Claim, ClaimKind, PrimeDomain};

use crate::arith::{reduce_mod, valuation, ArithError, ExactRational, FactoredResidue, Valuation};
use crate::sequences::HarmonicPair;
use crate::wz::{boundary_identity, telescope_row, WzPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("claim {claim} is not stated for {p}")]
    Domain { claim: &'static str, p: u64 },
    #[error("claim {claim} at {p}: {source}")]
    Arith {
        claim: &'static str,
        p: u64,
        #[source]
        source: ArithError,
    },
    #[error("exact and fast paths disagree on {claim} at p={p}{instance}: exact {exact}, fast {fast}")]
    InternalMismatch { claim: &'static str, p: u64, instance: String, exact: String, fast: String },
    #[error("claim {0} is an identity in n and has no prime-indexed form")]
    NotScalar(&'static str),
}

impl ClaimError {
    pub fn is_mismatch(&self) -> bool {
        matches!(self, ClaimError::InternalMismatch { .. })
    }
}

/// Requested (or, in an outcome, actually used) evaluation route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EvalPath {
    Exact,
    Fast,
    Both,
}

impl fmt::Display for EvalPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalPath::Exact => "exact",
            EvalPath::Fast => "fast",
            EvalPath::Both => "both",
        })
    }
}

/// A reported side of a claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    /// Least nonnegative residue modulo the claim's modulus.
    Residue(BigUint),
    /// Exact value, for identities.
    Exact(ExactRational),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Residue(r) => write!(f, "{r}"),
            Value::Exact(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modulus {
    PrimePower { p: u64, k: u32 },
    Exact,
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::PrimePower { p, k } => write!(f, "{}", BigUint::from(*p).pow(*k)),
            Modulus::Exact => f.write_str("exact"),
        }
    }
}

/// Result of checking one claim at one prime and instance. For identities
/// `p` holds the index `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub claim: &'static str,
    pub p: u64,
    pub instance: Option<Instance>,
    pub holds: bool,
    pub lhs: Value,
    pub rhs: Value,
    pub modulus: Modulus,
    /// `v_p(lhs - rhs)`, capped at `K + 4` and at whatever precision the
    /// path actually carries. Identities report `inf` when both sides agree
    /// and `0` otherwise.
    pub diff_valuation: Valuation,
    pub path: EvalPath,
}

fn wrap(claim: &Claim, p: u64) -> impl Fn(ArithError) -> ClaimError + '_ {
    move |source| ClaimError::Arith { claim: claim.id, p, source }
}

fn is_exhausted(e: &ClaimError) -> bool {
    matches!(e, ClaimError::Arith { source: ArithError::PrecisionExhausted { .. }, .. })
}

/// Instances of `claim` at `p`; `[None]` for unparametrised claims.
pub fn instances(claim: &Claim, p: u64) -> Vec<Option<Instance>> {
    match claim.kind {
        ClaimKind::SunKBinom => (1..p).map(|k| Some(Instance::K(k))).collect(),
        ClaimKind::Jacobsthal => jacobsthal_instances(p).into_iter().map(Some).collect(),
        _ => vec![None],
    }
}

/// Exact right-hand side at `p`, with `E_{p-3}` as carried by the context.
pub fn rhs_value(claim: &Claim, ctx: &PrimeContext, instance: Option<Instance>) -> Result<ExactRational, ClaimError> {
    if claim.is_identity() {
        return Err(ClaimError::NotScalar(claim.id));
    }
    Ok(rhs::rhs(claim.kind, ctx, instance))
}

/// Exact left-hand side at `p`.
pub fn lhs_exact(claim: &Claim, ctx: &PrimeContext, instance: Option<Instance>) -> Result<ExactRational, ClaimError> {
    if claim.is_identity() {
        return Err(ClaimError::NotScalar(claim.id));
    }
    Ok(eval_exact::lhs(claim.kind, ctx, instance))
}

/// Fast left-hand side at `p`.
pub fn lhs_fast(claim: &Claim, ctx: &PrimeContext, instance: Option<Instance>) -> Result<FactoredResidue, ClaimError> {
    if claim.is_identity() {
        return Err(ClaimError::NotScalar(claim.id));
    }
    eval_fast::lhs(claim.kind, ctx, instance).map_err(wrap(claim, ctx.p()))
}

struct Setup {
    k: u32,
    cap: i64,
    rhs: ExactRational,
}

fn setup(claim: &Claim, ctx: &PrimeContext, inst: Option<Instance>) -> Setup {
    let k = inst.and_then(|i| i.modulus_exponent()).unwrap_or(claim.modulus_exponent);
    let mut cap = k as i64 + 4;
    if let (Some(w), false) = (claim.euler_weight, ctx.euler().is_exact()) {
        cap = cap.min(w as i64 + 1);
    }
    Setup { k, cap, rhs: rhs::rhs(claim.kind, ctx, inst) }
}

fn exact_outcome(claim: &Claim, ctx: &PrimeContext, inst: Option<Instance>, s: &Setup) -> Result<VerificationOutcome, ClaimError> {
    let p = ctx.p();
    let lhs = eval_exact::lhs(claim.kind, ctx, inst);
    let diff = valuation(&(&lhs - &s.rhs), p);
    let err = wrap(claim, p);
    Ok(VerificationOutcome {
        claim: claim.id,
        p,
        instance: inst,
        holds: diff.is_at_least(s.k as i64),
        lhs: Value::Residue(reduce_mod(&lhs, p, s.k).map_err(&err)?),
        rhs: Value::Residue(reduce_mod(&s.rhs, p, s.k).map_err(&err)?),
        modulus: Modulus::PrimePower { p, k: s.k },
        diff_valuation: diff.capped(s.cap),
        path: EvalPath::Exact,
    })
}

fn fast_outcome(claim: &Claim, ctx: &PrimeContext, inst: Option<Instance>, s: &Setup) -> Result<VerificationOutcome, ClaimError> {
    let p = ctx.p();
    let err = wrap(claim, p);
    let lhs = eval_fast::lhs(claim.kind, ctx, inst).map_err(&err)?;
    let known = match lhs.abs_precision() {
        Valuation::Finite(a) => a.min(s.cap),
        Valuation::Infinite => s.cap,
    };
    if known < s.k as i64 {
        return Err(err(ArithError::PrecisionExhausted { p, needed: s.k as i64, known }));
    }
    // stay inside the 127-bit residue range
    let mut a = known as u32;
    while crate::arith::modular::checked_prime_power(p, a).is_err() {
        a -= 1;
    }
    let l = BigUint::from(lhs.residue(a).map_err(&err)?);
    let r = reduce_mod(&s.rhs, p, a).map_err(&err)?;
    let m = BigUint::from(p).pow(a);
    let d = (&l + &m - &r) % &m;
    let diff = if d.is_zero() {
        Valuation::Finite(a as i64)
    } else {
        valuation(&ExactRational::from_integer(d.into()), p)
    };
    let mk = BigUint::from(p).pow(s.k);
    Ok(VerificationOutcome {
        claim: claim.id,
        p,
        instance: inst,
        holds: diff.is_at_least(s.k as i64),
        lhs: Value::Residue(&l % &mk),
        rhs: Value::Residue(&r % &mk),
        modulus: Modulus::PrimePower { p, k: s.k },
        diff_valuation: diff,
        path: EvalPath::Fast,
    })
}

fn agree(a: &VerificationOutcome, b: &VerificationOutcome) -> bool {
    a.holds == b.holds && a.lhs == b.lhs && a.rhs == b.rhs
}

/// Checks a prime-indexed claim at `ctx.p()` for every instance.
///
/// `Exact` uses the rational oracle only. `Fast` uses factored residues and
/// falls back to the oracle for any instance that runs out of precision.
/// `Both` runs the two and fails with [`ClaimError::InternalMismatch`] if
/// their residues or verdicts differ; the exact outcome is reported.
pub fn evaluate(claim: &Claim, ctx: &PrimeContext, path: EvalPath) -> Result<Vec<VerificationOutcome>, ClaimError> {
    let p = ctx.p();
    if claim.is_identity() {
        return Err(ClaimError::NotScalar(claim.id));
    }
    if !claim.domain.admits_prime(p) {
        return Err(ClaimError::Domain { claim: claim.id, p });
    }
    let mut out = Vec::new();
    for inst in instances(claim, p) {
        let s = setup(claim, ctx, inst);
        let outcome = match path {
            EvalPath::Exact => exact_outcome(claim, ctx, inst, &s)?,
            EvalPath::Fast => match fast_outcome(claim, ctx, inst, &s) {
                Err(e) if is_exhausted(&e) => exact_outcome(claim, ctx, inst, &s)?,
                r => r?,
            },
            EvalPath::Both => {
                let exact = exact_outcome(claim, ctx, inst, &s)?;
                match fast_outcome(claim, ctx, inst, &s) {
                    Err(e) if is_exhausted(&e) => exact,
                    Err(e) => return Err(e),
                    Ok(fast) if agree(&exact, &fast) => VerificationOutcome { path: EvalPath::Both, ..exact },
                    Ok(fast) => {
                        return Err(ClaimError::InternalMismatch {
                            claim: claim.id,
                            p,
                            instance: inst.map(|i| format!(" ({i})")).unwrap_or_default(),
                            exact: format!("lhs {} rhs {} holds {}", exact.lhs, exact.rhs, exact.holds),
                            fast: format!("lhs {} rhs {} holds {}", fast.lhs, fast.rhs, fast.holds),
                        })
                    }
                }
            }
        };
        out.push(outcome);
    }
    Ok(out)
}

/// Shared data for the claims indexed by `n` rather than by a prime.
pub struct IndexContext {
    harmonics: Vec<HarmonicPair>,
    grid: u64,
}

impl IndexContext {
    /// Covers identities up to `n_max` and telescoping rows of width `grid`.
    pub fn new(n_max: u64, grid: u64) -> Self {
        IndexContext { harmonics: crate::sequences::harmonic_table(2 * n_max), grid }
    }

    pub fn n_max(&self) -> u64 {
        (self.harmonics.len() as u64 - 1) / 2
    }

    pub fn grid(&self) -> u64 {
        self.grid
    }
}

fn identity_outcome(claim: &Claim, n: u64, lhs: ExactRational, rhs: ExactRational) -> VerificationOutcome {
    let holds = lhs == rhs;
    VerificationOutcome {
        claim: claim.id,
        p: n,
        instance: None,
        holds,
        lhs: Value::Exact(lhs),
        rhs: Value::Exact(rhs),
        modulus: Modulus::Exact,
        diff_valuation: if holds { Valuation::Infinite } else { Valuation::Finite(0) },
        path: EvalPath::Exact,
    }
}

/// Checks an `n`-indexed claim at one `n`, exactly. Telescoping claims check
/// row `n` of the grid; boundary claims check the summed relation up to `n`.
pub fn evaluate_index(claim: &Claim, n: u64, ctx: &IndexContext) -> Result<VerificationOutcome, ClaimError> {
    if !claim.is_identity() {
        return Err(ClaimError::Domain { claim: claim.id, p: n });
    }
    match claim.kind {
        ClaimKind::HuMaoH | ClaimKind::HuMaoH2k => {
            if n == 0 || n > ctx.n_max() {
                return Err(ClaimError::Domain { claim: claim.id, p: n });
            }
            let (l, r) = eval_exact::identity_sides(claim.kind, n, &ctx.harmonics);
            Ok(identity_outcome(claim, n, l, r))
        }
        ClaimKind::Telescope(pair) => {
            let row = telescope_row(pair, n, ctx.grid);
            let mut out = identity_outcome(claim, n, row.lhs_sum.clone(), row.rhs_sum.clone());
            out.holds = row.holds();
            if !out.holds {
                out.diff_valuation = Valuation::Finite(0);
            }
            Ok(out)
        }
        ClaimKind::Boundary(pair) => {
            if n == 0 {
                return Err(ClaimError::Domain { claim: claim.id, p: n });
            }
            let b = boundary_identity(pair, n);
            Ok(identity_outcome(claim, n, b.lhs, b.rhs))
        }
        _ => unreachable!("identity claims are exactly the n-indexed kinds"),
    }
}

/// Recombination of the lemma pieces into a main result at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCheck {
    pub pair: WzPair,
    pub p: u64,
    /// The series equals `F(p-1,p-1)` plus the three `G(p, k)` blocks exactly.
    pub lhs_recombines: bool,
    /// The lemma right-hand sides add up to the main right-hand side mod `p^4`.
    pub rhs_recombines: bool,
}

impl DecompositionCheck {
    pub fn holds(&self) -> bool {
        self.lhs_recombines && self.rhs_recombines
    }
}

/// Both halves of the decomposition for `pair` at a prime `p > 3`.
pub fn decomposition_check(pair: WzPair, ctx: &PrimeContext) -> DecompositionCheck {
    use ClaimKind::*;
    let (main, parts) = match pair {
        WzPair::Pair256 => (Thm256, [Diag256, HalfG256, MidG256, UpperG256]),
        WzPair::Pair1024 => (Thm1024, [Diag1024, HalfG1024, MidG1024, UpperG1024]),
    };
    let total = |f: &dyn Fn(ClaimKind) -> ExactRational| {
        parts.iter().fold(ExactRational::zero(), |acc, &k| acc + f(k))
    };
    let lhs_parts = total(&|k| eval_exact::lhs(k, ctx, None));
    let rhs_parts = total(&|k| rhs::rhs(k, ctx, None));
    DecompositionCheck {
        pair,
        p: ctx.p(),
        lhs_recombines: lhs_parts == eval_exact::lhs(main, ctx, None),
        rhs_recombines: valuation(&(rhs_parts - rhs::rhs(main, ctx, None)), ctx.p()).is_at_least(4),
    }
}

#[cfg(test)]
mod tests;
