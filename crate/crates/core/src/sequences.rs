//! Row counts by convolution recurrence.
//!
//! Each connective splits the `g_n` rows into a false sequence and a true
//! sequence (`t = g - f`, `d = g - y`, `k = g - h`). Every case sequence is
//! then a convolution `Σ_{i=1}^{n-1} a_i b_{n-i}` of those two, picking the
//! false or true part on each side according to the case.
//!
//! Tables are 1-based: `values[0]` is the `n = 1` entry. Case sequences that
//! only start at `n = 2` carry an explicit `0` at `n = 1`.
//!
//! Connective `MImp3` has no ids of its own: its false count obeys the same
//! recurrence as `F`, so its four cases are served by `T1`, `T2`, `T3` and `F`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::census::RowCase;
use crate::formula::Connective;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    /// All rows, `2^n C_n`.
    G,
    /// Catalan numbers `C_n = binom(2n-2, n-1) / n`.
    Cat,
    /// Implication, false rows.
    F,
    T1,
    T2,
    T3,
    /// Type-1 m-implication, false rows.
    Y,
    D1,
    D2,
    D3,
    /// Type-2 m-implication, false rows (the Catalan numbers again).
    H,
    K1,
    K2,
    K3,
}

/// Which half of a family's rows a convolution factor draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    False,
    True,
}

/// Connective family whose false/true split feeds a case sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Implication,
    Type1,
    Type2,
}

impl SequenceId {
    pub const ALL: [SequenceId; 14] = [
        SequenceId::G,
        SequenceId::Cat,
        SequenceId::F,
        SequenceId::T1,
        SequenceId::T2,
        SequenceId::T3,
        SequenceId::Y,
        SequenceId::D1,
        SequenceId::D2,
        SequenceId::D3,
        SequenceId::H,
        SequenceId::K1,
        SequenceId::K2,
        SequenceId::K3,
    ];

    /// The thirteen ids with their own generating function (`Cat` shares `H`'s).
    pub const WITH_GENERATING_FUNCTION: [SequenceId; 13] = [
        SequenceId::G,
        SequenceId::F,
        SequenceId::T1,
        SequenceId::T2,
        SequenceId::T3,
        SequenceId::Y,
        SequenceId::D1,
        SequenceId::D2,
        SequenceId::D3,
        SequenceId::H,
        SequenceId::K1,
        SequenceId::K2,
        SequenceId::K3,
    ];

    /// The twelve per-case sequences.
    pub const CASES: [SequenceId; 12] = [
        SequenceId::F,
        SequenceId::T1,
        SequenceId::T2,
        SequenceId::T3,
        SequenceId::Y,
        SequenceId::D1,
        SequenceId::D2,
        SequenceId::D3,
        SequenceId::H,
        SequenceId::K1,
        SequenceId::K2,
        SequenceId::K3,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            SequenceId::G => "g",
            SequenceId::Cat => "cat",
            SequenceId::F => "f",
            SequenceId::T1 => "t1",
            SequenceId::T2 => "t2",
            SequenceId::T3 => "t3",
            SequenceId::Y => "y",
            SequenceId::D1 => "d1",
            SequenceId::D2 => "d2",
            SequenceId::D3 => "d3",
            SequenceId::H => "h",
            SequenceId::K1 => "k1",
            SequenceId::K2 => "k2",
            SequenceId::K3 => "k3",
        }
    }

    /// Family and convolution factors `(left, right)` of a case sequence.
    fn definition(self) -> Option<(Family, Part, Part)> {
        use Family::*;
        use Part::*;
        Some(match self {
            SequenceId::G | SequenceId::Cat => return None,
            SequenceId::F => (Implication, True, False),
            SequenceId::T1 => (Implication, True, True),
            SequenceId::T2 => (Implication, False, True),
            SequenceId::T3 => (Implication, False, False),
            SequenceId::Y => (Type1, True, True),
            SequenceId::D1 => (Type1, False, False),
            SequenceId::D2 => (Type1, False, True),
            SequenceId::D3 => (Type1, True, False),
            SequenceId::H => (Type2, False, False),
            SequenceId::K1 => (Type2, True, True),
            SequenceId::K2 => (Type2, True, False),
            SequenceId::K3 => (Type2, False, True),
        })
    }

    /// Sequence counting the rows of `case` under `c`.
    pub const fn for_case(c: Connective, case: RowCase) -> SequenceId {
        use RowCase::*;
        match (c, case) {
            (Connective::Imp | Connective::MImp3, Case1) => SequenceId::T1,
            (Connective::Imp | Connective::MImp3, Case2) => SequenceId::T2,
            (Connective::Imp | Connective::MImp3, Case3) => SequenceId::T3,
            (Connective::Imp | Connective::MImp3, Case4) => SequenceId::F,
            (Connective::MImp1, Case1) => SequenceId::D1,
            (Connective::MImp1, Case2) => SequenceId::D2,
            (Connective::MImp1, Case3) => SequenceId::D3,
            (Connective::MImp1, Case4) => SequenceId::Y,
            (Connective::MImp2, Case1) => SequenceId::K1,
            (Connective::MImp2, Case2) => SequenceId::K2,
            (Connective::MImp2, Case3) => SequenceId::K3,
            (Connective::MImp2, Case4) => SequenceId::H,
        }
    }

    /// First `n` with a nonzero value.
    pub const fn first_index(self) -> usize {
        match self {
            SequenceId::T1
            | SequenceId::T2
            | SequenceId::T3
            | SequenceId::D1
            | SequenceId::D2
            | SequenceId::D3
            | SequenceId::K1
            | SequenceId::K2
            | SequenceId::K3 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

/// Values of one sequence for `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub id: SequenceId,
    pub values: Vec<BigUint>,
}

impl SequenceTable {
    pub fn n_max(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }
}

/// `C_n = binom(2n-2, n-1) / n`, with `C_0 = 0`.
pub fn catalan(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let m = BigUint::from(n - 1);
    binomial(&m + &m, m) / BigUint::from(n)
}

/// `C_0..=C_n_max` from `C_{n+1} = C_n · 2(2n - 1) / (n + 1)`.
pub fn catalans(n_max: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); n_max + 1];
    if n_max >= 1 {
        c[1] = BigUint::one();
    }
    for n in 1..n_max {
        c[n + 1] = &c[n] * (2 * (2 * n - 1)) / (n + 1);
    }
    c
}

/// `g_n = 2^n C_n`, with `g_0 = 0`.
pub fn total_rows(n: usize) -> BigUint {
    catalan(n) << n
}

fn totals(n_max: usize) -> Vec<BigUint> {
    catalans(n_max)
        .into_iter()
        .enumerate()
        .map(|(n, c)| c << n)
        .collect()
}

/// `g_1..=g_n_max` from `g_n = Σ g_i g_{n-i}`, `g_1 = 2`; index 0 holds `g_0 = 0`.
pub fn total_rows_by_recurrence(n_max: usize) -> Vec<BigUint> {
    let mut g = vec![BigUint::zero(); n_max + 1];
    if n_max >= 1 {
        g[1] = BigUint::from(2u32);
    }
    for n in 2..=n_max {
        g[n] = convolve(&g, &g, n);
    }
    g
}

/// `Σ_{i=1}^{n-1} a_i b_{n-i}` over 0-based-by-n slices.
fn convolve(a: &[BigUint], b: &[BigUint], n: usize) -> BigUint {
    (1..n).map(|i| &a[i] * &b[n - i]).sum()
}

/// False rows `[0, 1, …]` of a family up to `n_max`, index = `n`.
fn false_rows(family: Family, g: &[BigUint]) -> Vec<BigUint> {
    let n_max = g.len() - 1;
    if family == Family::Type2 {
        return catalans(n_max);
    }
    let mut fals = vec![BigUint::zero(); n_max + 1];
    let mut tru = vec![BigUint::zero(); n_max + 1];
    for n in 1..=n_max {
        fals[n] = if n == 1 {
            BigUint::one()
        } else {
            match family {
                // f_n = Σ t_i f_{n-i}
                Family::Implication => convolve(&tru, &fals, n),
                // y_n = Σ d_i d_{n-i}
                Family::Type1 => convolve(&tru, &tru, n),
                Family::Type2 => unreachable!(),
            }
        };
        tru[n] = &g[n] - &fals[n];
    }
    fals
}

fn true_rows(g: &[BigUint], fals: &[BigUint]) -> Vec<BigUint> {
    g.iter().zip(fals).map(|(a, b)| a - b).collect()
}

fn case_sequence(left: &[BigUint], right: &[BigUint]) -> Vec<BigUint> {
    (0..left.len())
        .map(|n| convolve(left, right, n.max(1)))
        .collect()
}

/// Exact values of `id` for `n = 1..=n_max`.
pub fn compute(id: SequenceId, n_max: usize) -> SequenceTable {
    let g = totals(n_max);
    let values = match id.definition() {
        None if id == SequenceId::G => g,
        None => catalans(n_max),
        Some((family, left, right)) => {
            let fals = false_rows(family, &g);
            if (left, right) == false_recurrence(family) {
                fals
            } else {
                let tru = true_rows(&g, &fals);
                let pick = |p: Part| if p == Part::False { &fals } else { &tru };
                case_sequence(pick(left), pick(right))
            }
        }
    };
    SequenceTable {
        id,
        values: values.into_iter().skip(1).collect(),
    }
}

fn false_recurrence(family: Family) -> (Part, Part) {
    match family {
        Family::Implication => (Part::True, Part::False),
        Family::Type1 => (Part::True, Part::True),
        Family::Type2 => (Part::False, Part::False),
    }
}

/// Every sequence up to a common `n_max`, sharing one pass over the
/// false/true prefixes.
#[derive(Clone, Debug)]
pub struct SequenceTables {
    n_max: usize,
    // index = n, entry 0 is n = 0
    values: Vec<Vec<BigUint>>,
}

impl SequenceTables {
    pub fn compute(n_max: usize) -> Self {
        let g = totals(n_max);
        let families = [Family::Implication, Family::Type1, Family::Type2];
        let splits: Vec<(Vec<BigUint>, Vec<BigUint>)> = families
            .par_iter()
            .map(|&family| {
                let fals = false_rows(family, &g);
                let tru = true_rows(&g, &fals);
                (fals, tru)
            })
            .collect();

        let values = SequenceId::ALL
            .par_iter()
            .map(|&id| match id.definition() {
                None if id == SequenceId::G => g.clone(),
                None => splits[2].0.clone(),
                Some((family, left, right)) => {
                    let (fals, tru) = &splits[family as usize];
                    if (left, right) == false_recurrence(family) {
                        fals.clone()
                    } else {
                        let pick = |p: Part| if p == Part::False { fals } else { tru };
                        case_sequence(pick(left), pick(right))
                    }
                }
            })
            .collect();
        SequenceTables { n_max, values }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, id: SequenceId, n: usize) -> Result<&BigUint> {
        if n == 0 || n > self.n_max {
            return Err(Error::BeyondTable {
                id,
                n,
                max: self.n_max,
            });
        }
        Ok(&self.values[id as usize][n])
    }

    pub fn table(&self, id: SequenceId) -> SequenceTable {
        SequenceTable {
            id,
            values: self.values[id as usize][1..].to_vec(),
        }
    }
}

/// A failed identity and the first `n` where it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: &'static str,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub n_max: usize,
    pub checked: Vec<&'static str>,
    pub failure: Option<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks the inter-sequence identities for `2 <= n <= n_max`.
pub fn verify_identities(n_max: usize) -> IdentityReport {
    verify_identities_in(&SequenceTables::compute(n_max))
}

pub fn verify_identities_in(tables: &SequenceTables) -> IdentityReport {
    use SequenceId::*;
    let v = |id: SequenceId, n: usize| &tables.values[id as usize][n];
    let sum = |ids: [SequenceId; 4], n: usize| ids.iter().map(|&id| v(id, n)).sum::<BigUint>();
    type Check<'a> = Box<dyn Fn(usize) -> bool + 'a>;
    let checks: Vec<(&'static str, Check)> = vec![
        ("t2 = f", Box::new(|n| v(T2, n) == v(F, n))),
        ("d2 = d3", Box::new(|n| v(D2, n) == v(D3, n))),
        ("k2 = k3", Box::new(|n| v(K2, n) == v(K3, n))),
        (
            "f + t1 + t2 + t3 = g",
            Box::new(|n| &sum([F, T1, T2, T3], n) == v(G, n)),
        ),
        (
            "y + d1 + d2 + d3 = g",
            Box::new(|n| &sum([Y, D1, D2, D3], n) == v(G, n)),
        ),
        (
            "h + k1 + k2 + k3 = g",
            Box::new(|n| &sum([H, K1, K2, K3], n) == v(G, n)),
        ),
        (
            "h = sum h_i h_(n-i)",
            Box::new(|n| {
                *v(H, n) == convolve(&tables.values[H as usize], &tables.values[H as usize], n)
            }),
        ),
    ];
    let failure = (2..=tables.n_max).find_map(|n| {
        checks
            .iter()
            .find(|(_, check)| !check(n))
            .map(|(identity, _)| IdentityFailure { identity, n })
    });
    IdentityReport {
        n_max: tables.n_max,
        checked: checks.iter().map(|(name, _)| *name).collect(),
        failure,
    }
}
