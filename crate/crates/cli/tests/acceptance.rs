//! Acceptance checks, one line per criterion.
//!
//! Runs as a plain binary so the verdicts are printed even when every check
//! passes.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use truthrows::analysis::{
    limit_over_total, limit_sum, ordering_check, parity_check, ratio, stated_pair_limits,
};
use truthrows::census::{oracle_mismatch, DEFAULT_CAP};
use truthrows::published::{KNOWN_DISCREPANCIES, LISTS};
use truthrows::sequences::{catalan, total_rows_by_recurrence};
use truthrows::series::{generating_functions, gf_coefficients};
use truthrows::{Connective, PowerSeries, SequenceId, SequenceTables, Surd};

type Check = Result<String, String>;

/// Name, time limit in seconds, check.
type Criterion = (&'static str, Option<u64>, fn() -> Check);

fn oracle_equivalence() -> Check {
    let tables = SequenceTables::compute(8);
    // n = 1 included: its rows are uncased but still counted
    match oracle_mismatch(&tables, &SequenceId::ALL, 8, DEFAULT_CAP).map_err(|e| e.to_string())? {
        None => Ok(format!(
            "census = recurrences for {} connectives, n <= 8, all sequence ids",
            Connective::ALL.len()
        )),
        Some(m) => Err(format!(
            "{} at n = {} under {}: census {} recurrence {}",
            m.id, m.n, m.connective, m.census, m.recurrence
        )),
    }
}

fn closed_form_total() -> Check {
    let by_recurrence = total_rows_by_recurrence(300);
    let tables = SequenceTables::compute(300);
    for (n, recurrence) in by_recurrence.iter().enumerate().skip(1) {
        let closed = catalan(n) << n;
        if &closed != recurrence || &closed != tables.get(SequenceId::G, n).unwrap() {
            return Err(format!("disagreement at n = {n}"));
        }
    }
    Ok("2^n C_n = sum g_i g_(n-i) for n <= 300".into())
}

/// Runs `truthrows seq <id> <n> --format csv`, returning values by `n` and stderr.
fn cli_seq(id: SequenceId, n: usize) -> Result<(BTreeMap<usize, String>, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_truthrows"))
        .args(["seq", id.name(), &n.to_string(), "--format", "csv"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("seq {id} {n} exited with {}", out.status));
    }
    let stdout = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let values = stdout
        .lines()
        .skip(1)
        .filter_map(|line| {
            let (n, v) = line.split_once(',')?;
            Some((n.parse().ok()?, v.to_owned()))
        })
        .collect();
    Ok((values, String::from_utf8_lossy(&out.stderr).into_owned()))
}

fn printed_tables() -> Check {
    let mut matched = 0;
    let mut warned = 0;
    for list in LISTS {
        let (values, stderr) = cli_seq(list.id, list.last_n())?;
        for (n, printed) in list.indexed() {
            let known = KNOWN_DISCREPANCIES.contains(&(list.id, list.location, n));
            if known {
                let notice = format!(
                    "published {} prints {printed} for {} at n = {n}",
                    list.location, list.id
                );
                if !stderr.contains(&notice) {
                    return Err(format!(
                        "no warning for {} n = {n} in {}",
                        list.id, list.location
                    ));
                }
                if values.get(&n).map(String::as_str) == Some(printed) {
                    return Err(format!("misprint reproduced for {} n = {n}", list.id));
                }
                warned += 1;
            } else if values.get(&n).map(String::as_str) != Some(printed) {
                return Err(format!(
                    "{} at n = {n} in {}: printed {printed}, seq gave {:?}",
                    list.id,
                    list.location,
                    values.get(&n)
                ));
            } else {
                matched += 1;
            }
        }
    }
    if warned != KNOWN_DISCREPANCIES.len() {
        return Err(format!(
            "{warned} warnings for {} known misprints",
            KNOWN_DISCREPANCIES.len()
        ));
    }
    Ok(format!(
        "{matched} printed values reproduced across {} lists; {warned} misprints warned",
        LISTS.len()
    ))
}

fn generating_function_route() -> Check {
    let tables = SequenceTables::compute(64);
    for id in SequenceId::WITH_GENERATING_FUNCTION {
        let coeffs = gf_coefficients(id, 65).map_err(|e| e.to_string())?;
        for (i, q) in coeffs.iter().enumerate() {
            if !q.is_integer() {
                return Err(format!("{id} coefficient of x^{} is {q}", i + 1));
            }
            if q.to_integer() != BigInt::from(tables.get(id, i + 1).unwrap().clone()) {
                return Err(format!("{id} differs at n = {}", i + 1));
            }
        }
    }
    Ok(format!(
        "{} generating functions match to x^64, all coefficients integral",
        SequenceId::WITH_GENERATING_FUNCTION.len()
    ))
}

fn series_identities() -> Check {
    use SequenceId::*;
    let order = 65;
    let s = generating_functions(&[G, F, T1, T2, T3, Y, D1, D2, D3, H, K1, K2, K3], order)
        .map_err(|e| e.to_string())?;
    let [g, f, t1, t2, t3, y, d1, d2, d3, h, k1, k2, k3] =
        <[PowerSeries; 13]>::try_from(s).map_err(|_| "wrong count")?;
    let x = PowerSeries::x(order);
    let sum =
        |a: &PowerSeries, b: &PowerSeries, c: &PowerSeries, d: &PowerSeries| &(&(a + b) + c) + d;
    let gh = &g - &h;
    // the true row at n = 1 is uncased, so each partition misses exactly x
    let cased = &g - &x;
    let checks = [
        ("F+T1+T2+T3 = G-x", sum(&f, &t1, &t2, &t3) == cased),
        ("Y+D1+D2+D3 = G-x", sum(&y, &d1, &d2, &d3) == cased),
        ("H+K1+K2+K3 = G-x", sum(&h, &k1, &k2, &k3) == cased),
        ("T2 = F-x", t2 == &f - &x),
        ("K1 = (G-H)^2", k1 == &gh * &gh),
        ("D1 = Y^2", d1 == &y * &y),
    ];
    match checks.iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Err(format!("{name} fails")),
        None => Ok(
            "partitions (exact up to the uncased n = 1 true row), T2 = F-x, K1 = (G-H)^2, D1 = Y^2 to x^64"
                .into(),
        ),
    }
}

fn convergence_decimals() -> Check {
    let tables = SequenceTables::compute(100);
    let expected = [
        (SequenceId::T2, 9, "0.212290865"),
        (SequenceId::T1, 9, "0.497093847"),
        (SequenceId::T3, 10, "0.0783244229"),
    ];
    for (id, digits, printed) in expected {
        let got = ratio(&tables, id, 100, digits).map_err(|e| e.to_string())?;
        if got != printed {
            return Err(format!("{id}/g at n = 100: {got}, printed {printed}"));
        }
    }
    Ok("t#2/g, t#1/g, t#3/g at n = 100 reproduce all printed digits".into())
}

fn constant_consistency() -> Check {
    for c in Connective::ALL {
        let sum = limit_sum(c);
        if sum != Surd::one() {
            return Err(format!("{c} limits sum to {sum}"));
        }
    }
    let pairs = stated_pair_limits();
    for (a, b, stated) in &pairs {
        let q = limit_over_total(*a)
            .checked_div(&limit_over_total(*b))
            .map_err(|e| e.to_string())?;
        if &q != stated {
            return Err(format!("{a}/{b}: stated {stated}, quotient {q}"));
        }
    }
    Ok(format!(
        "limits sum to 1 for all 4 connectives; {} pair limits equal quotients exactly",
        pairs.len()
    ))
}

fn parity() -> Check {
    let tables = SequenceTables::compute(1024);
    let ids: Vec<SequenceId> = SequenceId::CASES
        .into_iter()
        .chain([SequenceId::Cat])
        .collect();
    for &id in &ids {
        let report = parity_check(&tables, id, 1024).map_err(|e| e.to_string())?;
        if let Some(n) = report.counterexample {
            return Err(format!("{id} breaks the parity law at n = {n}"));
        }
    }
    Ok(format!(
        "{} ids odd exactly at powers of two for n <= 1024",
        ids.len()
    ))
}

fn ordering() -> Check {
    let tables = SequenceTables::compute(200);
    match ordering_check(&tables, 3, 200).map_err(|e| e.to_string())? {
        None => Ok("t#1 > t#2 = f > t#3 for 3 <= n <= 200".into()),
        Some(n) => Err(format!("fails at n = {n}")),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("oracle equivalence", Some(60), oracle_equivalence),
        ("closed-form total", Some(5), closed_form_total),
        ("printed-table reproduction", None, printed_tables),
        (
            "generating-function route",
            Some(30),
            generating_function_route,
        ),
        ("series identities", None, series_identities),
        ("convergence decimals", Some(10), convergence_decimals),
        ("constant consistency", None, constant_consistency),
        ("parity law", Some(120), parity),
        ("ordering", None, ordering),
    ];
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(secs)) if elapsed > Duration::from_secs(secs) => {
                Err(format!("took {elapsed:.1?}, limit {secs} s"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS {name} ({detail}) [{elapsed:.2?}]",
                i + 1
            ),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL {name} ({why}) [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
