//! Error type shared by the whole crate.

use thiserror::Error;

use crate::number::Rat;
use crate::poly::Var;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("variable mismatch: {0} vs {1}")]
    VarMismatch(Var, Var),

    #[error("division by zero polynomial")]
    DivisionByZeroPoly,

    #[error("polynomial division left a remainder ({0})")]
    NotDivisible(String),

    #[error("series live on incompatible exponent ladders (bases {0} and {1})")]
    LadderMismatch(Rat, Rat),

    #[error("function is not {1}-reflective: {0}")]
    NotReflective(String, i64),

    #[error("input does not have the required shape: {0}")]
    BadShape(String),

    #[error("recurrence pivot w - k vanishes at k = {k}; use the symbolic route or special values")]
    PivotZero { k: usize },

    #[error("zero factor in recurrence step: {0}")]
    ZeroFactor(String),

    #[error("prefactor (1-w)...(k-w) vanishes at w = {w}; determinant D = {determinant}")]
    PrefactorZero { w: Rat, determinant: Rat },

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("search instance too large: exceeded {cap} nodes")]
    InstanceTooLarge { cap: u64 },

    #[error("window [{lo}, {hi}] is too small: {reason}")]
    WindowTooSmall { lo: i64, hi: i64, reason: String },

    #[error("alpha = -1 has no power-sum series")]
    HarmonicAlpha,

    #[error("working precision of {bits} bits is insufficient: {detail}")]
    PrecisionExhausted { bits: u32, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
