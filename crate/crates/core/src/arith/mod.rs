//! Arithmetic substrate: exact rationals with p-adic valuations, and
//! valuation-tracked residues modulo prime powers.

mod exact;
pub(crate) mod modular;
mod residue;

pub use exact::{congruent, int_valuation, reduce_mod, valuation, ExactRational, Valuation};
pub use residue::{Digits, FactoredResidue};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("value has negative {p}-adic valuation {valuation}")]
    NegativeValuation { p: u64, valuation: i64 },
    /// The result is only known to be 0 modulo `p^known`, or a residue was
    /// requested beyond the absolute precision carried by the value.
    #[error("precision exhausted: need {p}^{needed}, only {p}^{known} known")]
    PrecisionExhausted { p: u64, needed: i64, known: i64 },
    #[error("operands carry different primes ({0} and {1})")]
    PrimeMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{p}^{exponent} does not fit the 127-bit residue range")]
    ModulusOverflow { p: u64, exponent: u32 },
}
