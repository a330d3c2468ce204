//! Parallel verification runs over prime ranges and index ranges.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::claims::{
    decomposition_check, evaluate, evaluate_index, registry, Claim, ClaimError, ClaimKind, DecompositionCheck,
    EvalPath, IndexContext, PrimeContext, VerificationOutcome, EXACT_EULER_LIMIT,
};
use crate::sequences::{euler_numbers, primes_up_to, EulerTable};
use crate::wz::WzPair;

/// Primes in `lo..=hi`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    primes_up_to(hi).into_iter().filter(|&p| p >= lo).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// Claim ids to run; empty means every registered claim.
    pub claims: Vec<String>,
    pub p_min: u64,
    pub p_max: u64,
    /// Primes up to this bound run both paths and must agree.
    pub oracle_max: u64,
    /// Forces one path for every prime instead of the oracle-bound policy.
    pub path: Option<EvalPath>,
    /// Binomial-transform identities run for `1 <= n <= identity_n_max`.
    pub identity_n_max: u64,
    /// Telescoping rows `0 <= n <= grid`, each with `1 <= k <= grid`.
    pub telescope_grid: u64,
    /// Boundary identities run for `1 <= n <= boundary_n_max`.
    pub boundary_n_max: u64,
    /// Decomposition checks run at primes `5 <= p <= decomposition_max` of
    /// the range, for each pair whose main claim or lemma parts are selected.
    pub decomposition_max: u64,
    /// Worker threads; 0 picks the rayon default.
    pub worker_count: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            claims: Vec::new(),
            p_min: 5,
            p_max: 199,
            oracle_max: 97,
            path: None,
            identity_n_max: 300,
            telescope_grid: 120,
            boundary_n_max: 97,
            decomposition_max: 199,
            worker_count: 0,
        }
    }
}

impl RunConfig {
    pub fn with_claims<S: AsRef<str>>(ids: &[S]) -> Self {
        RunConfig { claims: ids.iter().map(|s| s.as_ref().to_string()).collect(), ..Default::default() }
    }

    fn path_for(&self, p: u64) -> EvalPath {
        self.path.unwrap_or(if p <= self.oracle_max { EvalPath::Both } else { EvalPath::Fast })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("empty prime range {0}..={1}")]
    EmptyRange(u64, u64),
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimSummary {
    pub claim: &'static str,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
    /// Summed evaluation time across workers.
    pub seconds: f64,
}

#[derive(Debug)]
pub struct Report {
    pub config: RunConfig,
    /// Sorted by registry order, then `p`, then instance.
    pub outcomes: Vec<VerificationOutcome>,
    pub decompositions: Vec<DecompositionCheck>,
    pub summary: Vec<ClaimSummary>,
    pub errors: Vec<ClaimError>,
    pub elapsed: Duration,
}

impl Report {
    pub fn counterexamples(&self) -> impl Iterator<Item = &VerificationOutcome> {
        self.outcomes.iter().filter(|o| !o.holds)
    }

    pub fn has_mismatch(&self) -> bool {
        self.errors.iter().any(ClaimError::is_mismatch)
    }

    pub fn all_hold(&self) -> bool {
        self.errors.is_empty()
            && self.outcomes.iter().all(|o| o.holds)
            && self.decompositions.iter().all(DecompositionCheck::holds)
    }
}

enum Work<'a> {
    Prime { p: u64, claims: Vec<&'a Claim> },
    Index { claim: &'a Claim, n: u64 },
}

#[derive(Default)]
struct Done {
    outcomes: Vec<VerificationOutcome>,
    decompositions: Vec<DecompositionCheck>,
    errors: Vec<ClaimError>,
    timings: Vec<(&'static str, Duration)>,
}

fn selected(config: &RunConfig) -> Result<Vec<Claim>, ConfigError> {
    let all = registry();
    if config.claims.is_empty() {
        return Ok(all);
    }
    for id in &config.claims {
        if !all.iter().any(|c| c.id == id) {
            return Err(ConfigError::UnknownClaim(id.clone()));
        }
    }
    Ok(all.into_iter().filter(|c| config.claims.iter().any(|id| id == c.id)).collect())
}

fn index_range(claim: &Claim, config: &RunConfig) -> std::ops::RangeInclusive<u64> {
    match claim.kind {
        ClaimKind::Telescope(_) => 0..=config.telescope_grid,
        ClaimKind::Boundary(_) => 1..=config.boundary_n_max,
        _ => 1..=config.identity_n_max,
    }
}

/// Pairs whose decomposition is relevant to the selection: the main claim
/// or one of its four lemma parts was asked for.
fn decomposed_pairs(claims: &[Claim]) -> Vec<WzPair> {
    use ClaimKind::*;
    WzPair::ALL
        .into_iter()
        .filter(|&pair| {
            claims.iter().any(|c| match pair {
                WzPair::Pair256 => matches!(c.kind, Thm256 | Diag256 | HalfG256 | MidG256 | UpperG256),
                WzPair::Pair1024 => matches!(c.kind, Thm1024 | Diag1024 | HalfG1024 | MidG1024 | UpperG1024),
            })
        })
        .collect()
}

fn run_prime(p: u64, claims: &[&Claim], pairs: &[WzPair], config: &RunConfig, euler: &EulerTable) -> Done {
    let ctx = PrimeContext::new(p, Some(euler));
    let path = config.path_for(p);
    let mut done = Done::default();
    for c in claims {
        let t = Instant::now();
        match evaluate(c, &ctx, path) {
            Ok(v) => done.outcomes.extend(v),
            Err(e) => done.errors.push(e),
        }
        done.timings.push((c.id, t.elapsed()));
    }
    if p >= 5 && p <= config.decomposition_max {
        done.decompositions.extend(pairs.iter().map(|&pair| decomposition_check(pair, &ctx)));
    }
    done
}

/// Runs every selected claim over the configured ranges on a dedicated
/// thread pool. Results do not depend on the number of workers.
pub fn run_suite(config: &RunConfig) -> Result<Report, ConfigError> {
    let start = Instant::now();
    let claims = selected(config)?;
    let (prime_claims, index_claims): (Vec<&Claim>, Vec<&Claim>) = claims.iter().partition(|c| !c.is_identity());
    let pairs = decomposed_pairs(&claims);
    let primes = primes_in(config.p_min.max(3), config.p_max);
    if !prime_claims.is_empty() && primes.is_empty() {
        return Err(ConfigError::EmptyRange(config.p_min, config.p_max));
    }

    let mut work = Vec::new();
    for &p in &primes {
        let here: Vec<&Claim> = prime_claims.iter().copied().filter(|c| c.domain.admits_prime(p)).collect();
        if !here.is_empty() || (p >= 5 && !pairs.is_empty()) {
            work.push(Work::Prime { p, claims: here });
        }
    }
    for &c in &index_claims {
        work.extend(index_range(c, config).map(|n| Work::Index { claim: c, n }));
    }
    // big primes first so the tail of the run is made of small items
    work.sort_by_key(|w| match w {
        Work::Prime { p, .. } => std::cmp::Reverse(*p),
        Work::Index { n, .. } => std::cmp::Reverse(*n),
    });

    let euler_top = config.p_max.min(EXACT_EULER_LIMIT).saturating_sub(3) as usize;
    let needs_euler = !prime_claims.is_empty();
    let needs_index = !index_claims.is_empty();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.worker_count)
        .build()
        .map_err(|e| ConfigError::ThreadPool(e.to_string()))?;

    let done: Vec<Done> = pool.install(|| {
        let (euler, index_ctx) = rayon::join(
            || if needs_euler { euler_numbers(euler_top) } else { euler_numbers(0) },
            || needs_index.then(|| IndexContext::new(config.identity_n_max, config.telescope_grid)),
        );
        work.par_iter()
            .map(|w| match w {
                Work::Prime { p, claims } => run_prime(*p, claims, &pairs, config, &euler),
                Work::Index { claim, n } => {
                    let ctx = index_ctx.as_ref().expect("index context built when index claims run");
                    let t = Instant::now();
                    let mut d = Done::default();
                    match evaluate_index(claim, *n, ctx) {
                        Ok(o) => d.outcomes.push(o),
                        Err(e) => d.errors.push(e),
                    }
                    d.timings.push((claim.id, t.elapsed()));
                    d
                }
            })
            .collect()
    });

    let order: HashMap<&str, usize> = claims.iter().enumerate().map(|(i, c)| (c.id, i)).collect();
    let mut outcomes = Vec::new();
    let mut decompositions = Vec::new();
    let mut errors = Vec::new();
    let mut timing: HashMap<&str, Duration> = HashMap::new();
    for d in done {
        outcomes.extend(d.outcomes);
        decompositions.extend(d.decompositions);
        errors.extend(d.errors);
        for (id, t) in d.timings {
            *timing.entry(id).or_default() += t;
        }
    }
    outcomes.sort_by(|a, b| (order[a.claim], a.p, a.instance).cmp(&(order[b.claim], b.p, b.instance)));
    decompositions.sort_by_key(|d| (d.p, d.pair == WzPair::Pair1024));
    errors.sort_by_key(|e| e.to_string());

    let summary = claims
        .iter()
        .map(|c| {
            let mine = outcomes.iter().filter(|o| o.claim == c.id);
            let (pass, fail) = mine.fold((0, 0), |(p, f), o| if o.holds { (p + 1, f) } else { (p, f + 1) });
            ClaimSummary {
                claim: c.id,
                pass,
                fail,
                error: errors.iter().filter(|e| error_claim(e) == Some(c.id)).count(),
                seconds: timing.get(c.id).map_or(0.0, Duration::as_secs_f64),
            }
        })
        .collect();

    Ok(Report { config: config.clone(), outcomes, decompositions, summary, errors, elapsed: start.elapsed() })
}

fn error_claim(e: &ClaimError) -> Option<&'static str> {
    match e {
        ClaimError::Domain { claim, .. }
        | ClaimError::Arith { claim, .. }
        | ClaimError::InternalMismatch { claim, .. } => Some(claim),
        ClaimError::NotScalar(claim) => Some(claim),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(ids: &[&str], workers: usize) -> RunConfig {
        RunConfig {
            p_max: 61,
            oracle_max: 23,
            identity_n_max: 30,
            telescope_grid: 12,
            boundary_n_max: 20,
            worker_count: workers,
            ..RunConfig::with_claims(ids)
        }
    }

    #[test]
    fn primes_in_range() {
        assert_eq!(primes_in(5, 30), vec![5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_in(3, 3), vec![3]);
        assert!(primes_in(24, 28).is_empty());
    }

    #[test]
    fn unknown_claims_are_rejected() {
        let err = run_suite(&RunConfig::with_claims(&["thm1", "nope"])).unwrap_err();
        assert_eq!(err, ConfigError::UnknownClaim("nope".into()));
    }

    #[test]
    fn results_do_not_depend_on_worker_count() {
        let ids = ["thm1", "thm2", "jacobsthal", "sun-kbinom", "lemma26a", "wz256-telescope", "wz1024-boundary"];
        let one = run_suite(&small(&ids, 1)).unwrap();
        let four = run_suite(&small(&ids, 4)).unwrap();
        assert_eq!(one.outcomes, four.outcomes);
        assert!(one.all_hold());
        let order: Vec<_> = one.outcomes.iter().map(|o| o.claim).collect();
        let first_thm2 = order.iter().position(|&c| c == "thm2").unwrap();
        assert!(order[..first_thm2].iter().all(|&c| c == "thm1"));
    }

    #[test]
    fn workload_grows_with_the_range() {
        let mut last = 0;
        for p_max in [11, 31, 61] {
            let report = run_suite(&RunConfig { p_max, ..small(&["thm1", "sun-kbinom"], 2) }).unwrap();
            assert!(report.outcomes.len() > last);
            last = report.outcomes.len();
        }
    }

    #[test]
    fn path_policy_follows_the_oracle_bound() {
        let report = run_suite(&small(&["lemma27-morley"], 2)).unwrap();
        for o in &report.outcomes {
            let expect = if o.p <= 23 { EvalPath::Both } else { EvalPath::Fast };
            assert_eq!(o.path, expect, "p={}", o.p);
        }
        let summary = &report.summary[0];
        assert_eq!((summary.claim, summary.pass, summary.fail, summary.error), ("lemma27-morley", 16, 0, 0));
    }

    #[test]
    fn full_registry_runs_decompositions() {
        let cfg = RunConfig {
            claims: Vec::new(),
            p_max: 13,
            decomposition_max: 13,
            ..small(&[], 0)
        };
        let report = run_suite(&cfg).unwrap();
        assert!(report.all_hold(), "{:?}", report.errors);
        assert_eq!(report.decompositions.len(), 2 * 4);
        let one_pair = run_suite(&RunConfig { p_max: 13, ..small(&["lemma33-Gmid"], 0) }).unwrap();
        assert!(one_pair.decompositions.iter().all(|d| d.pair == WzPair::Pair1024 && d.holds()));
        assert_eq!(one_pair.decompositions.len(), 4);
        let none = run_suite(&RunConfig { p_max: 13, ..small(&["jacobsthal"], 0) }).unwrap();
        assert!(none.decompositions.is_empty());
    }
}
