//! Exact enumeration and counting of truth-table rows for bracketed formulae
//! `p1 ∘ p2 ∘ … ∘ pn` over a single binary connective: ordinary implication
//! and the three modified implications `ψ → ¬φ`, `¬ψ → φ` and `¬ψ → ¬φ`.
//!
//! Every row count is reachable by three independent routes:
//!
//! * [`census`]: brute force over every bracketing and every valuation,
//! * [`sequences`]: convolution recurrences over big integers,
//! * [`series`]: Taylor coefficients of the algebraic generating functions,
//!   computed with exact rational power series.
//!
//! [`analysis`] checks the limiting proportions of each case against their
//! exact values in `Q(√2)`, `Q(√3)` and `Q(√10)`, and checks that every case
//! sequence is odd exactly at powers of two.

pub mod analysis;
pub mod census;
pub mod decimal;
mod error;
pub mod formula;
pub mod published;
pub mod sequences;
pub mod series;
pub mod surd;

pub use census::{Census, RowCase};
pub use error::{Error, Result};
pub use formula::{Connective, Formula, Valuation};
pub use sequences::{SequenceId, SequenceTable, SequenceTables};
pub use series::PowerSeries;
pub use surd::Surd;
