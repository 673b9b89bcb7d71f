use std::error::Error;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};
use truthrows::analysis::{self, LimitId, CONSTANT_DIGITS};
use truthrows::census::{self, DEFAULT_CAP, HARD_CAP};
use truthrows::decimal::{render_auto, render_rational, trim_zeros};
use truthrows::formula::{enumerate_bracketings, render_with, GlyphStyle};
use truthrows::{published, sequences, series};
use truthrows::{Census, Connective, SequenceId, SequenceTables, Surd};

use crate::report::{Format, Report};

pub type Outcome = Result<Report, Box<dyn Error>>;

const CENSUS_HEADER: [&str; 8] = [
    "n",
    "case1",
    "case2",
    "case3",
    "case4",
    "uncased_true",
    "uncased_false",
    "total",
];

pub fn enumerate(n: usize, c: Connective, unicode: bool) -> Outcome {
    let style = if unicode {
        GlyphStyle::Unicode
    } else {
        GlyphStyle::Ascii
    };
    let formulas: Vec<String> = enumerate_bracketings(n)?
        .iter()
        .map(|f| render_with(f, c, style))
        .collect();

    let mut r = Report::new("enumerate", json!({ "n": n, "connective": c.name() }));
    r.csv_header = vec!["index", "formula"];
    r.csv_rows = formulas
        .iter()
        .enumerate()
        .map(|(i, f)| vec![(i + 1).to_string(), f.clone()])
        .collect();
    r.results = json!(formulas);
    r.text = formulas;
    Ok(r)
}

pub fn census(
    n: usize,
    c: Connective,
    per_formula: bool,
    table: bool,
    cap: Option<usize>,
    format: Format,
) -> Outcome {
    let cap = cap.unwrap_or(DEFAULT_CAP);
    let mut r = Report::new(
        "census",
        json!({ "n": n, "connective": c.name(), "per_formula": per_formula, "cap": cap }),
    );
    if table {
        if format != Format::Text {
            return Err("--table is only available in text format".into());
        }
        r.text = census::render_table(n, c)?
            .lines()
            .map(str::to_owned)
            .collect();
        return Ok(r);
    }

    let totals = census::run_census_capped(n, c, cap)?;
    r.warnings = census_warnings(&totals)?;
    if per_formula {
        r.csv_header = std::iter::once("formula").chain(CENSUS_HEADER).collect();
        let mut results = Vec::new();
        for f in enumerate_bracketings(n)? {
            let name = render_with(&f, c, GlyphStyle::Ascii);
            let one = census::per_formula_census(&f, c)?;
            r.text.push(format!("{name}: {one}"));
            r.csv_rows.push(
                std::iter::once(name.clone())
                    .chain(census_row(&one))
                    .collect(),
            );
            let mut counts = census_json(&one);
            counts["formula"] = json!(name);
            results.push(counts);
        }
        r.results = json!(results);
    } else {
        r.text.push(totals.to_string());
        r.csv_header = CENSUS_HEADER.to_vec();
        r.csv_rows.push(census_row(&totals));
        r.results = census_json(&totals);
    }
    Ok(r)
}

fn census_row(c: &Census) -> Vec<String> {
    std::iter::once(c.n.to_string())
        .chain(c.case_counts.iter().map(|v| v.to_string()))
        .chain([
            c.uncased_true.to_string(),
            c.uncased_false.to_string(),
            c.total.to_string(),
        ])
        .collect()
}

fn census_json(c: &Census) -> Value {
    let row = census_row(c);
    let mut map = serde_json::Map::new();
    map.insert("n".into(), json!(c.n));
    for (key, value) in CENSUS_HEADER.iter().zip(row).skip(1) {
        map.insert((*key).into(), json!(value));
    }
    Value::Object(map)
}

fn census_warnings(c: &Census) -> Result<Vec<String>, Box<dyn Error>> {
    let tables = SequenceTables::compute(c.n);
    Ok(SequenceId::ALL
        .into_iter()
        .filter(|&id| census::census_value(c, id).is_some())
        .flat_map(|id| typo_warnings(&tables, id, c.n, c.n))
        .collect())
}

/// Notices for every printed value of `id` in `lo..=hi` that the computed
/// value contradicts.
fn typo_warnings(tables: &SequenceTables, id: SequenceId, lo: usize, hi: usize) -> Vec<String> {
    published::discrepancies_for(tables, id, hi)
        .into_iter()
        .filter(|d| d.n >= lo)
        .map(|d| format!("{d} (misprint in the published list)"))
        .collect()
}

pub fn seq(
    id: SequenceId,
    n_max: usize,
    check_identities: bool,
    oracle: Option<usize>,
    cap: Option<usize>,
) -> Outcome {
    if n_max == 0 {
        return Err("n_max must be at least 1".into());
    }
    let tables = SequenceTables::compute(n_max.max(oracle.unwrap_or(0)));
    let mut r = Report::new(
        "seq",
        json!({
            "id": id.name(),
            "n_max": n_max,
            "check_identities": check_identities,
            "oracle": oracle,
        }),
    );
    let values = (1..=n_max)
        .map(|n| Ok((n, tables.get(id, n)?.to_string())))
        .collect::<truthrows::Result<Vec<_>>>()?;

    r.text.push(
        values
            .iter()
            .map(|(_, v)| v.as_str())
            .collect::<Vec<_>>()
            .join(" "),
    );
    r.csv_header = vec!["n", "value"];
    r.csv_rows = values
        .iter()
        .map(|(n, v)| vec![n.to_string(), v.clone()])
        .collect();
    r.results = json!({
        "values": values
            .iter()
            .map(|(n, v)| json!({ "n": n, "value": v }))
            .collect::<Vec<_>>(),
    });
    r.warnings = typo_warnings(&tables, id, 1, n_max);

    if check_identities {
        let report = sequences::verify_identities_in(&tables);
        match report.failure {
            None => r.status(
                true,
                format!(
                    "identities: pass ({} identities, n <= {})",
                    report.checked.len(),
                    report.n_max
                ),
            ),
            Some(f) => r.status(
                false,
                format!("identities: fail ({} at n = {})", f.identity, f.n),
            ),
        }
    }
    if let Some(k) = oracle {
        let cap = cap.unwrap_or(DEFAULT_CAP).min(HARD_CAP);
        match census::oracle_mismatch(&tables, &[id], k, cap)? {
            None => r.status(true, format!("oracle: census agrees for n <= {k}")),
            Some(m) => r.status(
                false,
                format!(
                    "oracle: mismatch at n = {} under {}: census {} recurrence {}",
                    m.n, m.connective, m.census, m.recurrence
                ),
            ),
        }
    }
    Ok(r)
}

pub fn gf(id: SequenceId, order: usize, diff_recurrence: bool) -> Outcome {
    let coeffs = series::gf_coefficients(id, order)?;
    let rendered: Vec<String> = coeffs.iter().map(|q| q.to_string()).collect();
    let mut r = Report::new(
        "gf",
        json!({ "id": id.name(), "order": order, "diff_recurrence": diff_recurrence }),
    );
    r.text.push(rendered.join(" "));
    r.csv_header = vec!["n", "value"];
    r.csv_rows = rendered
        .iter()
        .enumerate()
        .map(|(i, v)| vec![(i + 1).to_string(), v.clone()])
        .collect();
    r.results = json!({ "coefficients": rendered });

    let tables = SequenceTables::compute(order - 1);
    r.warnings = typo_warnings(&tables, id, 1, order - 1);
    if diff_recurrence {
        let mismatch = coeffs.iter().enumerate().find_map(|(i, q)| {
            let n = i + 1;
            let expected = BigRational::from_integer(BigInt::from(tables.get(id, n).ok()?.clone()));
            (q != &expected).then_some((n, q, expected))
        });
        match mismatch {
            None => r.status(true, "MATCH".into()),
            Some((n, q, expected)) => r.status(
                false,
                format!("MISMATCH at n = {n}: series {q} recurrence {expected}"),
            ),
        }
    }
    Ok(r)
}

fn parse_target(target: &str) -> Result<LimitId, Box<dyn Error>> {
    Ok(match target.split_once('/') {
        None => LimitId::OverTotal(target.parse()?),
        Some((a, b)) => {
            let (a, b): (SequenceId, SequenceId) = (a.parse()?, b.parse()?);
            if b == SequenceId::G {
                LimitId::OverTotal(a)
            } else {
                LimitId::Pair(a, b)
            }
        }
    })
}

fn render_limit(s: &Surd, digits: Option<usize>) -> String {
    match digits {
        None if s.is_rational() => render_auto(s.rational_part(), CONSTANT_DIGITS),
        _ => trim_zeros(&s.to_decimal(digits.unwrap_or(CONSTANT_DIGITS))).to_owned(),
    }
}

pub fn asymp(target: &str, probes: &[usize], digits: Option<usize>, check: bool) -> Outcome {
    let id = parse_target(target)?;
    if probes.is_empty() || probes.contains(&0) {
        return Err("probes must be positive".into());
    }
    let limit = analysis::limit_for(id)?;
    let tables = SequenceTables::compute(*probes.iter().max().unwrap());
    let shown = render_limit(&limit.exact, digits);
    let mut r = Report::new(
        "asymp",
        json!({ "target": id.to_string(), "probes": probes, "digits": digits, "check": check }),
    );
    r.csv_header = vec!["n", "ratio", "limit"];
    let mut rows = Vec::new();
    for &n in probes {
        let q = id.value_at(&tables, n)?;
        let value = match digits {
            Some(d) => render_rational(&q, d),
            None => render_auto(&q, CONSTANT_DIGITS),
        };
        r.text.push(if probes.len() == 1 {
            format!("{value} (limit {shown})")
        } else {
            format!("n={n} {value} (limit {shown})")
        });
        r.csv_rows
            .push(vec![n.to_string(), value.clone(), shown.clone()]);
        rows.push(json!({ "n": n, "ratio": value, "exact": q.to_string() }));
    }
    r.results = json!({
        "limit": { "exact": limit.exact.to_string(), "decimal": shown },
        "probes": rows,
    });
    if check {
        let report = analysis::convergence_check(&tables, &limit, probes)?;
        let line = match (report.decreasing, report.within_envelope) {
            (true, true) => "convergence: pass (errors decrease and stay below 5/n)",
            (false, _) => "convergence: fail (errors do not decrease)",
            (true, false) => "convergence: fail (an error exceeds 5/n)",
        };
        r.status(report.passed(), line.into());
    }
    Ok(r)
}

pub fn parity(id: SequenceId, n_max: usize) -> Outcome {
    if n_max == 0 {
        return Err("n_max must be at least 1".into());
    }
    let tables = SequenceTables::compute(n_max);
    let report = analysis::parity_check(&tables, id, n_max)?;
    let mut r = Report::new("parity", json!({ "id": id.name(), "n_max": n_max }));
    r.csv_header = vec!["id", "n_max", "passed", "counterexample"];
    r.csv_rows.push(vec![
        id.name().into(),
        n_max.to_string(),
        report.passed.to_string(),
        report
            .counterexample
            .map(|n| n.to_string())
            .unwrap_or_default(),
    ]);
    r.results = json!({ "passed": report.passed, "counterexample": report.counterexample });
    match report.counterexample {
        None => r.status(true, "pass: odd exactly at powers of two".into()),
        Some(n) => {
            let parity = if tables.get(id, n)?.bit(0) {
                "odd"
            } else {
                "even"
            };
            r.status(false, format!("fail: {id} at n = {n} is {parity}"))
        }
    }
    Ok(r)
}
