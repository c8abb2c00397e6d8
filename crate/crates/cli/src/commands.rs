use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use korder::binet::BinetEvaluator;
use korder::families::{Family, FamilySpec};
use korder::ring::format_gaussian;
use korder::sequences::{seq_table, seq_value, SequenceParams};
use korder::verify::{sort_rows, verify_cell, ReportRow, Value as CellValue, VerifyConfig};
use korder::Gaussian;

use crate::output::{Format, Table};
use crate::CliError;

fn spec(family: &str, k: usize, n: usize, lambda: u64, i: Option<usize>) -> Result<FamilySpec, CliError> {
    let family: Family = family.parse()?;
    Ok(FamilySpec { family, k, n, lambda, border: i })
}

fn spec_params(s: &FamilySpec) -> Value {
    json!({
        "family": s.family.to_string(),
        "k": s.k,
        "n": s.n,
        "lambda": s.lambda,
        "i": s.border,
    })
}

pub fn seq(k: usize, lambda: u64, i: Option<usize>, n_max: i64, format: Format) -> Result<String, CliError> {
    let params = SequenceParams::new(k, lambda)?;
    let indices: Vec<usize> = i.map(|i| vec![i]).unwrap_or_default();
    let table = seq_table(params, &indices, n_max)?;
    let indices = table.indices();

    let out = match format {
        Format::Csv => {
            let mut s = String::from("n");
            for i in &indices {
                s.push_str(&format!(",a{i}"));
            }
            s.push('\n');
            for (n, row) in table.rows() {
                s.push_str(&n.to_string());
                for v in row {
                    s.push(',');
                    s.push_str(&v.to_string());
                }
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .rows()
                .map(|(n, row)| json!({ "n": n, "values": row.iter().map(|v| v.to_string()).collect::<Vec<_>>() }))
                .collect();
            let doc = json!({
                "params": { "k": k, "lambda": lambda, "i": indices, "n_max": n_max },
                "rows": rows,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json renders"))
        }
    };
    Ok(out)
}

fn entry_json(z: &Gaussian, gaussian: bool) -> Value {
    if gaussian {
        json!({ "re": z.re.to_string(), "im": z.im.to_string() })
    } else {
        json!({ "re": z.re.to_string() })
    }
}

pub fn matrix(family: &str, k: usize, n: usize, lambda: u64, i: Option<usize>, format: Format) -> Result<String, CliError> {
    let spec = spec(family, k, n, lambda, i)?;
    let dense = spec.build()?.to_gaussian().to_dense();
    let gaussian = spec.family.is_gaussian();
    Ok(match format {
        Format::Json => {
            let rows: Vec<Value> = dense
                .rows()
                .map(|row| Value::Array(row.iter().map(|z| entry_json(z, gaussian)).collect()))
                .collect();
            let doc = json!({ "params": spec_params(&spec), "rows": rows });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json renders"))
        }
        Format::Csv => {
            let mut s = (1..=dense.dim()).map(|c| format!("c{c}")).collect::<Vec<_>>().join(",");
            s.push('\n');
            for row in dense.rows() {
                s.push_str(&row.iter().map(format_gaussian).collect::<Vec<_>>().join(","));
                s.push('\n');
            }
            s
        }
    })
}

#[derive(Debug, Clone, Copy)]
pub enum Op {
    Det,
    Perm,
}

pub fn evaluate(
    op: Op,
    family: &str,
    k: usize,
    n: usize,
    lambda: u64,
    i: Option<usize>,
    format: Format,
) -> Result<String, CliError> {
    let spec = spec(family, k, n, lambda, i)?;
    let m = spec.build()?;
    let value = match op {
        Op::Det => m.det(),
        Op::Perm => m.perm(),
    };
    // the term the family's own operation reproduces
    let params = SequenceParams::new(k, lambda)?;
    let target = match i {
        Some(i) => seq_value(params, i, n as i64)?,
        None => seq_value(params, k, n as i64 + 1)?,
    };
    let natural = matches!((op, spec.family.uses_determinant()), (Op::Det, true) | (Op::Perm, false));

    let mut table = Table::new(
        spec_params(&spec),
        vec!["op", "re", "im", "sequence_term", "matches"],
    );
    let matches = natural.then(|| value.im == BigInt::from(0) && value.re == target);
    table.push(vec![
        json!(match op {
            Op::Det => "det",
            Op::Perm => "per",
        }),
        json!(value.re.to_string()),
        json!(value.im.to_string()),
        json!(target.to_string()),
        matches.map(Value::Bool).unwrap_or(Value::Null),
    ]);
    Ok(table.render(format))
}

pub fn binet(k: usize, lambda: u64, i: Option<usize>, n: i64, format: Format) -> Result<String, CliError> {
    let params = SequenceParams::new(k, lambda)?;
    let i = i.unwrap_or(k);
    let ev = BinetEvaluator::<f64>::new(k, lambda)?;
    let estimate = if i == k { ev.kth(n - 1)? } else { ev.ith(i, n)? };
    let exact = seq_value(params, i, n)?;
    let exact_f = exact.to_string().parse::<f64>().unwrap_or(f64::INFINITY);
    let rel_err = (estimate - exact_f).abs() / exact_f.abs();

    let mut table = Table::new(
        json!({ "k": k, "lambda": lambda, "i": i, "n": n }),
        vec!["i", "n", "estimate", "exact", "rel_err"],
    );
    table.push(vec![json!(i), json!(n), json!(estimate), json!(exact.to_string()), json!(rel_err)]);
    Ok(table.render(format))
}

fn row_cells(r: &ReportRow) -> Vec<Value> {
    let value = match &r.value {
        CellValue::Approx(v) => json!(v),
        other => json!(other.to_string()),
    };
    vec![
        json!(r.k),
        json!(r.lambda),
        json!(r.i),
        json!(r.n),
        json!(r.method.to_string()),
        r.dim.map(|d| json!(d)).unwrap_or(Value::Null),
        json!(r.expected.to_string()),
        value,
        r.rel_err.map(|e| json!(e)).unwrap_or(Value::Null),
        json!(if r.ok { "ok" } else { "FAIL" }),
    ]
}

pub fn verify(config: VerifyConfig, format: Format) -> Result<String, CliError> {
    if config.k_max < 2 {
        return Err(CliError::Usage(format!("--k-max must be >= 2, got {}", config.k_max)));
    }
    if config.n_max < 1 {
        return Err(CliError::Usage("--n-max must be >= 1".into()));
    }
    if config.lambdas.is_empty() || config.lambdas.contains(&0) {
        return Err(CliError::Usage("--lambda needs one or more positive integers".into()));
    }
    if !(config.tolerance >= 0.0) {
        return Err(CliError::Usage("--tolerance must be a non-negative number".into()));
    }

    let cells: Vec<(usize, u64)> = (2..=config.k_max)
        .flat_map(|k| config.lambdas.iter().map(move |&l| (k, l)))
        .collect();
    let results: Vec<_> = cells.par_iter().map(|&(k, l)| verify_cell(k, l, &config)).collect();
    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    sort_rows(&mut rows);

    let failures = rows.iter().filter(|r| !r.ok).count();
    let status = if failures == 0 { "PASS" } else { "FAIL" };
    let mut table = Table::new(
        json!({
            "k_max": config.k_max,
            "n_max": config.n_max,
            "lambda": config.lambdas,
            "tolerance": config.tolerance,
            "binet": config.binet,
        }),
        vec!["k", "lambda", "i", "n", "method", "dim", "expected", "value", "rel_err", "status"],
    );
    for r in &rows {
        table.push(row_cells(r));
    }
    table.field("status", status);
    table.field("checks", rows.len());
    table.field("failures", failures);
    let output = table.render(format);
    if failures == 0 {
        eprintln!("verify: {} checks, PASS", rows.len());
        Ok(output)
    } else {
        Err(CliError::Failed { output, message: format!("verify: {failures} of {} checks failed", rows.len()) })
    }
}
