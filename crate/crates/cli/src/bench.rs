//! Median-of-repeats timings for each method computing `a[k][n+1]`.
//!
//! Every method's value is checked against the recurrence before any timing
//! is reported.

use std::hint::black_box;
use std::time::Instant;

use serde_json::json;

use korder::binet::BinetEvaluator;
use korder::dense::{det_naive, perm_naive, NAIVE_MAX_DIM};
use korder::families::{build_b, build_d, build_h, build_q};
use korder::hessenberg::{det_hessenberg, perm_hessenberg};
use korder::ring::real_part;
use korder::sequences::{seq_value, SequenceParams};
use korder::Integer;

use crate::output::{Format, Table};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    Recurrence,
    DetQ,
    DetB,
    PerH,
    PerD,
    DetNaive,
    PerNaive,
    Binet,
}

impl Method {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "recurrence" => Method::Recurrence,
            "det-Q" => Method::DetQ,
            "det-B" => Method::DetB,
            "per-H" => Method::PerH,
            "per-D" => Method::PerD,
            "det-naive" => Method::DetNaive,
            "per-naive" => Method::PerNaive,
            "binet" => Method::Binet,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::DetQ => "det-Q",
            Method::DetB => "det-B",
            Method::PerH => "per-H",
            Method::PerD => "per-D",
            Method::DetNaive => "det-naive",
            Method::PerNaive => "per-naive",
            Method::Binet => "binet",
        }
    }

    fn is_naive(self) -> bool {
        matches!(self, Method::DetNaive | Method::PerNaive)
    }
}

pub struct BenchConfig {
    pub k: usize,
    pub lambda: u64,
    pub n_list: Vec<usize>,
    pub methods: Vec<String>,
    pub repeats: usize,
    pub format: Format,
}

enum Outcome {
    Exact(Integer),
    Approx(f64),
}

/// One evaluation of `method` at matrix dimension `n`.
fn run_once(method: Method, params: SequenceParams, n: usize, binet: &BinetEvaluator<f64>) -> Result<Outcome, CliError> {
    let (k, lambda) = (params.k(), params.lambda());
    let real = |z: korder::Gaussian| {
        real_part(&z).ok_or_else(|| CliError::Failed {
            output: String::new(),
            message: format!("{} produced a non-real value", method.name()),
        })
    };
    Ok(match method {
        Method::Recurrence => Outcome::Exact(seq_value(params, k, n as i64 + 1)?),
        Method::DetQ => Outcome::Exact(real(det_hessenberg(&build_q(k, n, lambda)?))?),
        Method::DetB => Outcome::Exact(det_hessenberg(&build_b(k, n, lambda)?)),
        Method::PerH => Outcome::Exact(real(perm_hessenberg(&build_h(k, n, lambda)?))?),
        Method::PerD => Outcome::Exact(perm_hessenberg(&build_d(k, n, lambda)?)),
        Method::DetNaive => Outcome::Exact(det_naive(&build_b(k, n, lambda)?.to_dense())?),
        Method::PerNaive => Outcome::Exact(perm_naive(&build_d(k, n, lambda)?.to_dense())?),
        Method::Binet => Outcome::Approx(binet.kth(n as i64)?),
    })
}

fn median(mut xs: Vec<u128>) -> u128 {
    xs.sort_unstable();
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2
    }
}

pub fn run(config: &BenchConfig) -> Result<String, CliError> {
    let params = SequenceParams::new(config.k, config.lambda)?;
    if config.repeats == 0 {
        return Err(CliError::Usage("--repeats must be >= 1".into()));
    }
    let methods = config
        .methods
        .iter()
        .map(|m| Method::parse(m).ok_or_else(|| CliError::Usage(format!("unknown method {m:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    for &n in &config.n_list {
        if n == 0 {
            return Err(CliError::Usage("--n-list entries must be >= 1".into()));
        }
        if let Some(m) = methods.iter().find(|m| m.is_naive() && n > NAIVE_MAX_DIM) {
            return Err(CliError::Usage(format!(
                "{} is capped at n <= {NAIVE_MAX_DIM}, got n = {n}",
                m.name()
            )));
        }
        if methods.contains(&Method::Binet) && n < config.k {
            return Err(CliError::Usage(format!("binet needs n >= k = {}, got n = {n}", config.k)));
        }
    }
    let binet = BinetEvaluator::<f64>::new(config.k, config.lambda)?;

    let mut table = Table::new(
        json!({
            "k": config.k,
            "lambda": config.lambda,
            "repeats": config.repeats,
            "methods": methods.iter().map(|m| m.name()).collect::<Vec<_>>(),
        }),
        vec!["n", "method", "value", "rel_err", "median_ns"],
    );
    for &n in &config.n_list {
        let expected = seq_value(params, config.k, n as i64 + 1)?;
        let expected_f = expected.to_string().parse::<f64>().unwrap_or(f64::INFINITY);
        for &method in &methods {
            let (value, rel_err) = match run_once(method, params, n, &binet)? {
                Outcome::Exact(v) => {
                    if v != expected {
                        return Err(CliError::Failed {
                            output: String::new(),
                            message: format!("{} at n = {n} gave {v}, recurrence gives {expected}", method.name()),
                        });
                    }
                    (json!(v.to_string()), serde_json::Value::Null)
                }
                Outcome::Approx(v) => {
                    let err = (v - expected_f).abs() / expected_f.abs();
                    if !(err <= 1e-6) {
                        return Err(CliError::Failed {
                            output: String::new(),
                            message: format!(
                                "binet at n = {n} gave {v:e}, relative error {err:e} (floating range exhausted?)"
                            ),
                        });
                    }
                    (json!(v), json!(err))
                }
            };
            let timings: Vec<u128> = (0..config.repeats)
                .map(|_| {
                    let start = Instant::now();
                    let out = run_once(method, params, n, &binet);
                    let elapsed = start.elapsed().as_nanos();
                    drop(black_box(out));
                    elapsed
                })
                .collect();
            table.push(vec![json!(n), json!(method.name()), value, rel_err, json!(median(timings) as u64)]);
        }
    }
    Ok(table.render(config.format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_odd_and_even() {
        assert_eq!(median(vec![5, 1, 3]), 3);
        assert_eq!(median(vec![4, 1, 3, 2]), 2);
    }

    #[test]
    fn method_names_round_trip() {
        for name in ["recurrence", "det-Q", "det-B", "per-H", "per-D", "det-naive", "per-naive", "binet"] {
            assert_eq!(Method::parse(name).unwrap().name(), name);
        }
        assert!(Method::parse("det-X").is_none());
    }
}
