use num_bigint::BigUint;
use thiserror::Error;

use crate::sequences::SequenceId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("formulae need at least one variable")]
    NoVariables,

    #[error("full enumeration is limited to n <= {max} variables (asked for {n})")]
    TooManyVariables { n: usize, max: usize },

    #[error("valuation has {got} bits but the formula has {expected} variables")]
    ValuationLength { expected: usize, got: usize },

    #[error("a single variable has no top-level split")]
    LeafHasNoSplit,

    #[error(
        "census for n = {n} would evaluate {rows} rows, above the cap n <= {cap}; \
         raise the cap (at most {hard_cap}) to proceed"
    )]
    CensusCap {
        n: usize,
        cap: usize,
        hard_cap: usize,
        rows: BigUint,
    },

    #[error("merged tables are printed for n <= {max} only (asked for {n}); use the census counts instead")]
    TableTooWide { n: usize, max: usize },

    #[error("power series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("division by a power series with zero constant term")]
    ZeroConstantTerm,

    #[error("square root needs a positive rational square constant term, got {0}")]
    IrrationalSquareRoot(String),

    #[error("generating function for {id} has nonzero constant term {value}")]
    NonzeroConstantTerm { id: SequenceId, value: String },

    #[error("truncation order must be at least {min} (got {got})")]
    OrderTooSmall { got: usize, min: usize },

    #[error("{id} has only been computed to n = {max} (asked for n = {n})")]
    BeyondTable {
        id: SequenceId,
        n: usize,
        max: usize,
    },

    #[error("radicands differ: sqrt({left}) and sqrt({right})")]
    RadicandMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("unknown sequence id `{0}`")]
    UnknownSequence(String),

    #[error("unknown connective `{0}` (expected imp, mimp1, mimp2 or mimp3)")]
    UnknownConnective(String),
}
