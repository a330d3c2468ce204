//! Exact and modular verification of the two WZ-pair supercongruences
//!
//! ```text
//! sum_{n<p} (6n+1) C(2n,n)^3 / 256^n          = p(-1)^((p-1)/2) -  p^3 E_{p-3}  (mod p^4)
//! sum_{n<p} (20n+3) (4n)!/n!^4 / (-1024)^n     = 3p(-1)^((p-1)/2) + 3p^3 E_{p-3} (mod p^4)
//! ```
//!
//! together with the WZ telescoping and boundary identities behind them and
//! every lemma and cited congruence used along the way.
//!
//! Every claim can be evaluated along two independent routes: an exact
//! rational oracle ([`arith::ExactRational`]) and a fast path that works with
//! valuation-tracked residues modulo prime powers
//! ([`arith::FactoredResidue`]). The [`engine`] runs both below a configurable
//! bound and insists they agree.

pub mod arith;
pub mod claims;
pub mod engine;
pub mod output;
pub mod sequences;
pub mod wz;

pub use arith::{ArithError, ExactRational, FactoredResidue, Valuation};
pub use claims::{registry, Claim, ClaimError, EvalPath, VerificationOutcome};
pub use engine::{primes_in, run_suite, Report, RunConfig};
pub use wz::WzPair;



