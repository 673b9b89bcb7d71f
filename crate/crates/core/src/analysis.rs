//! Limiting proportions, convergence and parity of the case sequences.
//!
//! Every limit is held exactly as a [`Surd`]; comparisons between a finite
//! ratio `value(n) / g_n` and its limit are exact as well, so no floating
//! point enters any verdict.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::census::RowCase;
use crate::decimal::render_rational;
use crate::formula::Connective;
use crate::sequences::{SequenceId, SequenceTables};
use crate::surd::Surd;
use crate::{Error, Result};

/// Digits carried by [`LimitConstant::decimal`].
pub const CONSTANT_DIGITS: usize = 30;

/// What a limit is the limit of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LimitId {
    /// `value(n) / g_n`
    OverTotal(SequenceId),
    /// `numerator(n) / denominator(n)`
    Pair(SequenceId, SequenceId),
}

impl LimitId {
    /// Finite-`n` value of the ratio.
    pub fn value_at(&self, tables: &SequenceTables, n: usize) -> Result<BigRational> {
        let (num, den) = match *self {
            LimitId::OverTotal(id) => (id, SequenceId::G),
            LimitId::Pair(num, den) => (num, den),
        };
        let den_value = tables.get(den, n)?;
        if den_value.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(
            tables.get(num, n)?.clone().into(),
            den_value.clone().into(),
        ))
    }
}

impl fmt::Display for LimitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitId::OverTotal(id) => write!(f, "{id}/g"),
            LimitId::Pair(a, b) => write!(f, "{a}/{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitConstant {
    pub id: LimitId,
    pub exact: Surd,
    /// [`CONSTANT_DIGITS`] decimal places, rounded half-to-even.
    pub decimal: String,
}

impl LimitConstant {
    fn new(id: LimitId, exact: Surd) -> Self {
        let decimal = exact.to_decimal(CONSTANT_DIGITS);
        LimitConstant { id, exact, decimal }
    }
}

/// `lim value(n) / g_n`.
///
/// For type-1 the false-row constant is `(10 - 2√10)/10` and the case-1
/// constant `(30 - 9√10)/10`: these are the values for which the four
/// proportions add up to one.
pub fn limit_over_total(id: SequenceId) -> Surd {
    use SequenceId::*;
    let s = Surd::from_parts;
    match id {
        G => Surd::one(),
        Cat | H => Surd::zero(),
        F | T2 => s(1, 2, -1, 6, 3),     // (3 - √3)/6
        T3 => s(-1, 2, 1, 3, 3),         // (2√3 - 3)/6
        T1 => s(1, 2, 0, 1, 1),          // 1/2
        Y => s(1, 1, -1, 5, 10),         // (10 - 2√10)/10
        D1 => s(3, 1, -9, 10, 10),       // (30 - 9√10)/10
        D2 | D3 => s(-3, 2, 11, 20, 10), // (11√10 - 30)/20
        K1 => s(0, 1, 1, 2, 2),          // √2/2
        K2 | K3 => s(1, 2, -1, 4, 2),    // (2 - √2)/4
    }
}

/// Limits of ratios between case sequences, written exactly as derived by
/// hand; they must agree with the quotients of [`limit_over_total`].
pub fn stated_pair_limits() -> Vec<(SequenceId, SequenceId, Surd)> {
    use SequenceId::*;
    let s = Surd::from_parts;
    vec![
        (T3, T2, s(-1, 2, 1, 2, 3)),      // (√3 - 1)/2
        (T2, T3, s(1, 1, 1, 1, 3)),       // 1 + √3
        (T3, T1, s(-1, 1, 2, 3, 3)),      // (2√3 - 3)/3
        (T1, T3, s(3, 1, 2, 1, 3)),       // 3 + 2√3
        (T2, T1, s(1, 1, -1, 3, 3)),      // (3 - √3)/3
        (T1, T2, s(3, 2, 1, 2, 3)),       // (3 + √3)/2
        (D1, D3, s(-18, 31, 12, 31, 10)), // (12√10 - 18)/31
        (D3, D1, s(1, 2, 1, 3, 10)),      // (2√10 + 3)/6
        (D1, Y, s(2, 1, -1, 2, 10)),      // (4 - √10)/2
        (Y, D1, s(4, 3, 1, 3, 10)),       // (4 + √10)/3
        (Y, D3, s(16, 31, 10, 31, 10)),   // (16 + 10√10)/31
        (D3, Y, s(-2, 3, 5, 12, 10)),     // (5√10 - 8)/12
        (K2, K1, s(-1, 2, 1, 2, 2)),      // (√2 - 1)/2
        (K1, K2, s(2, 1, 2, 1, 2)),       // 2√2 + 2
    ]
}

/// The thirteen `value/g` limits followed by the fourteen pairwise limits.
pub fn limit_constants() -> Vec<LimitConstant> {
    SequenceId::WITH_GENERATING_FUNCTION
        .iter()
        .map(|&id| LimitConstant::new(LimitId::OverTotal(id), limit_over_total(id)))
        .chain(
            stated_pair_limits()
                .into_iter()
                .map(|(a, b, exact)| LimitConstant::new(LimitId::Pair(a, b), exact)),
        )
        .collect()
}

/// Limit for any [`LimitId`]; pairs not in [`stated_pair_limits`] are
/// derived as quotients.
pub fn limit_for(id: LimitId) -> Result<LimitConstant> {
    let exact = match id {
        LimitId::OverTotal(seq) => limit_over_total(seq),
        LimitId::Pair(a, b) => match stated_pair_limits()
            .into_iter()
            .find(|(x, y, _)| (*x, *y) == (a, b))
        {
            Some((_, _, exact)) => exact,
            None => limit_over_total(a).checked_div(&limit_over_total(b))?,
        },
    };
    Ok(LimitConstant::new(id, exact))
}

/// Case limits of `c` in case order; they sum to one.
pub fn connective_limits(c: Connective) -> [Surd; 4] {
    RowCase::ALL.map(|case| limit_over_total(SequenceId::for_case(c, case)))
}

/// `value(n) / g_n` as an exact rational.
pub fn exact_ratio(tables: &SequenceTables, id: SequenceId, n: usize) -> Result<BigRational> {
    LimitId::OverTotal(id).value_at(tables, n)
}

/// `value(n) / g_n` to `digits` decimal places, rounded half-to-even.
pub fn ratio(tables: &SequenceTables, id: SequenceId, n: usize, digits: usize) -> Result<String> {
    Ok(render_rational(&exact_ratio(tables, id, n)?, digits))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeError {
    pub n: usize,
    pub ratio: BigRational,
    /// `|ratio - limit|`, exact.
    pub error: Surd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceReport {
    pub limit: LimitConstant,
    pub probes: Vec<ProbeError>,
    /// Errors strictly decrease along the probes.
    pub decreasing: bool,
    /// Every error is below `5/n`.
    pub within_envelope: bool,
}

impl ConvergenceReport {
    pub fn passed(&self) -> bool {
        self.decreasing && self.within_envelope
    }
}

/// Exact errors `|ratio(n) - limit|` at each probe, with the monotonicity and
/// `5/n` envelope verdicts.
pub fn convergence_check(
    tables: &SequenceTables,
    limit: &LimitConstant,
    probes: &[usize],
) -> Result<ConvergenceReport> {
    let probes = probes
        .iter()
        .map(|&n| {
            let ratio = limit.id.value_at(tables, n)?;
            let error = Surd::rational(ratio.clone())
                .checked_sub(&limit.exact)?
                .abs();
            Ok(ProbeError { n, ratio, error })
        })
        .collect::<Result<Vec<_>>>()?;
    let decreasing = probes
        .windows(2)
        .all(|w| w[1].error.cmp_exact(&w[0].error) == Ok(Ordering::Less));
    let within_envelope = probes.iter().all(|p| {
        let envelope = Surd::rational(BigRational::new(5.into(), BigInt::from(p.n)));
        p.error.cmp_exact(&envelope) == Ok(Ordering::Less)
    });
    Ok(ConvergenceReport {
        limit: limit.clone(),
        probes,
        decreasing,
        within_envelope,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityReport {
    pub id: SequenceId,
    pub n_max: usize,
    pub passed: bool,
    pub counterexample: Option<usize>,
}

/// Checks that `id` is odd exactly at powers of two, from its first
/// nonzero index up to `n_max`.
pub fn parity_check(tables: &SequenceTables, id: SequenceId, n_max: usize) -> Result<ParityReport> {
    let mut counterexample = None;
    for n in id.first_index()..=n_max {
        let odd = tables.get(id, n)?.bit(0);
        if odd != n.is_power_of_two() {
            counterexample = Some(n);
            break;
        }
    }
    Ok(ParityReport {
        id,
        n_max,
        passed: counterexample.is_none(),
        counterexample,
    })
}

/// First `n` in `lo..=hi` violating `t1 > t2 = f > t3`, if any.
pub fn ordering_check(tables: &SequenceTables, lo: usize, hi: usize) -> Result<Option<usize>> {
    use SequenceId::*;
    for n in lo..=hi {
        let (t1, t2, t3, f) = (
            tables.get(T1, n)?,
            tables.get(T2, n)?,
            tables.get(T3, n)?,
            tables.get(F, n)?,
        );
        if !(t1 > t2 && t2 == f && f > t3) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Sum of the four case limits of `c`; one for every connective.
pub fn limit_sum(c: Connective) -> Surd {
    connective_limits(c)
        .iter()
        .try_fold(Surd::zero(), |acc, s| acc.checked_add(s))
        .expect("one radicand per connective")
}
