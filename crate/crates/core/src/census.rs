//! Brute-force row counts: every bracketing, every valuation.
//!
//! Rows are evaluated bit-parallel, 64 valuations per machine word, but each
//! row is still decided individually from the truth values of its two
//! top-level subformulae. Nothing here uses a recurrence, which is what makes
//! the census usable as the oracle for [`crate::sequences`] and
//! [`crate::series`].

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::formula::{enumerate_bracketings, render, Connective, Formula, Node, Valuation};
use crate::sequences::{total_rows, SequenceId, SequenceTables};
use crate::{Error, Result};

/// Default largest `n` a census will run without an explicit cap.
pub const DEFAULT_CAP: usize = 10;
/// Largest cap that may be requested (`g_12 = 240_787_456` rows).
pub const HARD_CAP: usize = 12;
/// Largest `n` rendered by [`render_table`].
pub const MAX_TABLE_VARIABLES: usize = 5;
const MAX_SINGLE_FORMULA_VARIABLES: usize = 24;

/// Classification of a row with `n >= 2` by the values of `(ψ, φ)`.
/// `Case4` is always the false row; the other three are true rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowCase {
    Case1,
    Case2,
    Case3,
    Case4,
}

impl RowCase {
    pub const ALL: [RowCase; 4] = [
        RowCase::Case1,
        RowCase::Case2,
        RowCase::Case3,
        RowCase::Case4,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    /// 1-based case number.
    pub const fn number(self) -> usize {
        self as usize + 1
    }

    pub const fn is_true_row(self) -> bool {
        !matches!(self, RowCase::Case4)
    }
}

impl fmt::Display for RowCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case{}", self.number())
    }
}

/// Exact row counts for a fixed `(n, connective)`.
///
/// Single-variable tables have no top-level split, so their two rows are
/// kept apart as `uncased_true` / `uncased_false`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub connective: Connective,
    pub case_counts: [BigUint; 4],
    pub uncased_true: BigUint,
    pub uncased_false: BigUint,
    pub total: BigUint,
}

impl Census {
    fn from_raw(n: usize, connective: Connective, cases: [u64; 4], uncased: [u64; 2]) -> Self {
        let total = cases
            .iter()
            .chain(uncased.iter())
            .map(|&c| BigUint::from(c))
            .sum();
        Census {
            n,
            connective,
            case_counts: cases.map(BigUint::from),
            uncased_true: BigUint::from(uncased[0]),
            uncased_false: BigUint::from(uncased[1]),
            total,
        }
    }

    pub fn case(&self, case: RowCase) -> &BigUint {
        &self.case_counts[case.index()]
    }

    pub fn true_rows(&self) -> BigUint {
        RowCase::ALL
            .iter()
            .filter(|c| c.is_true_row())
            .map(|&c| self.case(c))
            .sum::<BigUint>()
            + &self.uncased_true
    }

    pub fn false_rows(&self) -> BigUint {
        self.case(RowCase::Case4) + &self.uncased_false
    }

    /// Sum of two censuses over the same `(n, connective)`.
    pub fn merge(&self, other: &Census) -> Census {
        assert_eq!((self.n, self.connective), (other.n, other.connective));
        let mut out = self.clone();
        for (mine, theirs) in out.case_counts.iter_mut().zip(&other.case_counts) {
            *mine += theirs;
        }
        out.uncased_true += &other.uncased_true;
        out.uncased_false += &other.uncased_false;
        out.total += &other.total;
        out
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(
                f,
                "uncased_true={} uncased_false={} total={}",
                self.uncased_true, self.uncased_false, self.total
            )
        } else {
            let [c1, c2, c3, c4] = &self.case_counts;
            write!(
                f,
                "case1={c1} case2={c2} case3={c3} case4={c4} total={}",
                self.total
            )
        }
    }
}

/// Truth table of one formula: bit `r` of the table is the value under
/// [`Valuation::from_row`]`(n, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct TruthTable {
    words: Vec<u64>,
}

/// Per-variable tables for `n` variables, shared by every formula.
struct VariableTables {
    rows: u64,
    vars: Vec<TruthTable>,
    last_word_mask: u64,
}

impl VariableTables {
    fn new(n: usize) -> Self {
        let rows = 1u64 << n;
        let word_count = rows.div_ceil(64) as usize;
        let vars = (1..=n)
            .map(|var| {
                let mut words = vec![0u64; word_count];
                for row in 0..rows {
                    if (row >> (n - var)) & 1 == 1 {
                        words[(row / 64) as usize] |= 1 << (row % 64);
                    }
                }
                TruthTable { words }
            })
            .collect();
        let last_word_mask = if rows >= 64 {
            u64::MAX
        } else {
            (1 << rows) - 1
        };
        VariableTables {
            rows,
            vars,
            last_word_mask,
        }
    }

    fn table(&self, f: &Formula, c: Connective) -> TruthTable {
        match f.as_node() {
            Node::Leaf(var) => self.vars[var - 1].clone(),
            Node::Branch(l, r) => {
                let mut out = self.table(l, c);
                let right = self.table(r, c);
                for (a, b) in out.words.iter_mut().zip(&right.words) {
                    *a = combine(c, *a, *b);
                }
                if let Some(last) = out.words.last_mut() {
                    *last &= self.last_word_mask;
                }
                out
            }
        }
    }

    /// Counts indexed by `RowCase::index`, then `[uncased_true, uncased_false]`.
    fn tally(&self, f: &Formula, c: Connective) -> ([u64; 4], [u64; 2]) {
        let mut cases = [0u64; 4];
        match f.split() {
            None => {
                let ones = popcount(&self.table(f, c).words);
                ([0; 4], [ones, self.rows - ones])
            }
            Some((l, r)) => {
                let lt = self.table(l, c);
                let rt = self.table(r, c);
                let last = lt.words.len() - 1;
                for (left, right) in [(false, false), (false, true), (true, false), (true, true)] {
                    let count: u64 = lt
                        .words
                        .iter()
                        .zip(&rt.words)
                        .enumerate()
                        .map(|(i, (&a, &b))| {
                            let a = if left { a } else { !a };
                            let b = if right { b } else { !b };
                            let mask = if i == last {
                                self.last_word_mask
                            } else {
                                u64::MAX
                            };
                            u64::from((a & b & mask).count_ones())
                        })
                        .sum();
                    cases[c.classify(left, right).index()] += count;
                }
                (cases, [0, 0])
            }
        }
    }
}

fn combine(c: Connective, a: u64, b: u64) -> u64 {
    match c {
        Connective::Imp => !a | b,
        Connective::MImp1 => !(a & b),
        Connective::MImp2 => a | b,
        Connective::MImp3 => a | !b,
    }
}

fn popcount(words: &[u64]) -> u64 {
    words.iter().map(|w| u64::from(w.count_ones())).sum()
}

/// Census with the default cap of [`DEFAULT_CAP`] variables.
pub fn run_census(n: usize, c: Connective) -> Result<Census> {
    run_census_capped(n, c, DEFAULT_CAP)
}

/// Census allowing up to `cap` variables; `cap` itself may not exceed
/// [`HARD_CAP`].
pub fn run_census_capped(n: usize, c: Connective, cap: usize) -> Result<Census> {
    if n == 0 {
        return Err(Error::NoVariables);
    }
    let cap = cap.min(HARD_CAP);
    if n > cap {
        return Err(Error::CensusCap {
            n,
            cap,
            hard_cap: HARD_CAP,
            rows: total_rows(n),
        });
    }
    let formulas = enumerate_bracketings(n)?;
    let tables = VariableTables::new(n);
    let (cases, uncased) = formulas.par_iter().map(|f| tables.tally(f, c)).reduce(
        || ([0; 4], [0; 2]),
        |(a, ua), (b, ub)| {
            (
                [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]],
                [ua[0] + ub[0], ua[1] + ub[1]],
            )
        },
    );
    Ok(Census::from_raw(n, c, cases, uncased))
}

/// Census of a single bracketing.
pub fn per_formula_census(f: &Formula, c: Connective) -> Result<Census> {
    let n = f.leaf_count();
    if n > MAX_SINGLE_FORMULA_VARIABLES {
        return Err(Error::TooManyVariables {
            n,
            max: MAX_SINGLE_FORMULA_VARIABLES,
        });
    }
    let (cases, uncased) = VariableTables::new(n).tally(f, c);
    Ok(Census::from_raw(n, c, cases, uncased))
}

/// The count in `census` that sequence `id` predicts at `census.n`, or
/// `None` when the connective does not produce `id`.
///
/// `g` is every connective's total and `cat` is type-2's false rows. At
/// `n = 1` the false-row sequences take the uncased false row.
pub fn census_value(census: &Census, id: SequenceId) -> Option<BigUint> {
    match id {
        SequenceId::G => Some(census.total.clone()),
        SequenceId::Cat => (census.connective == Connective::MImp2).then(|| census.false_rows()),
        _ => {
            let case = RowCase::ALL
                .into_iter()
                .find(|&case| SequenceId::for_case(census.connective, case) == id)?;
            Some(if case == RowCase::Case4 {
                census.false_rows()
            } else {
                census.case(case).clone()
            })
        }
    }
}

/// A census count that disagrees with the recurrence tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleMismatch {
    pub n: usize,
    pub connective: Connective,
    pub id: SequenceId,
    pub census: BigUint,
    pub recurrence: BigUint,
}

/// Runs the census for every connective and `1 <= n <= n_max` and compares
/// each count with `tables`, stopping at the first disagreement.
///
/// `ids` restricts the comparison; sequences no connective produces are
/// skipped.
pub fn oracle_mismatch(
    tables: &SequenceTables,
    ids: &[SequenceId],
    n_max: usize,
    cap: usize,
) -> Result<Option<OracleMismatch>> {
    for n in 1..=n_max {
        for c in Connective::ALL {
            let census = run_census_capped(n, c, cap)?;
            for &id in ids {
                let Some(count) = census_value(&census, id) else {
                    continue;
                };
                let expected = tables.get(id, n)?;
                if &count != expected {
                    return Ok(Some(OracleMismatch {
                        n,
                        connective: c,
                        id,
                        census: count,
                        recurrence: expected.clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Merged truth tables of every bracketing of `n` variables.
///
/// One row per valuation in descending binary order, one column per
/// bracketing. Each cell is the truth value followed by its case, e.g.
/// `1:c3`; single-variable cells carry no case.
pub fn render_table(n: usize, c: Connective) -> Result<String> {
    if n == 0 {
        return Err(Error::NoVariables);
    }
    if n > MAX_TABLE_VARIABLES {
        return Err(Error::TableTooWide {
            n,
            max: MAX_TABLE_VARIABLES,
        });
    }
    let formulas = enumerate_bracketings(n)?;
    let headers: Vec<String> = formulas.iter().map(|f| render(f, c)).collect();
    let widths: Vec<usize> = headers.iter().map(|h| h.chars().count().max(4)).collect();

    let mut out = String::new();
    let mut push_line = |line: String| {
        out.push_str(line.trim_end());
        out.push('\n');
    };
    let vars: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
    let mut header = vars.join(" ");
    for (h, w) in headers.iter().zip(&widths) {
        header.push_str(&format!(" | {h:<w$}"));
    }
    push_line(header);

    for v in Valuation::all_descending(n) {
        let cells: Vec<String> = v
            .bits()
            .iter()
            .zip(&vars)
            .map(|(&b, name)| format!("{:>w$}", u8::from(b), w = name.len()))
            .collect();
        let mut line = cells.join(" ");
        for (f, w) in formulas.iter().zip(&widths) {
            let value = crate::formula::evaluate(f, c, &v)?;
            let cell = match crate::formula::top_split_case(f, c, &v) {
                Ok(case) => format!("{}:c{}", u8::from(value), case.number()),
                Err(Error::LeafHasNoSplit) => u8::from(value).to_string(),
                Err(e) => return Err(e),
            };
            line.push_str(&format!(" | {cell:<w$}"));
        }
        push_line(line);
    }
    Ok(out)
}
