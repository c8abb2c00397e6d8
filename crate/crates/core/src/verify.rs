//! Cross-checks every method against the exact recurrence over a parameter
//! grid.

use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::binet::BinetEvaluator;
use crate::error::Result;
use crate::families::{Family, FamilySpec};
use crate::ring::Integer;
use crate::sequences::{identities_hold, ith_from_kth, seq_table, shift_identity_residual, SequenceParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// det/per of the base family matrix.
    Family(Family),
    /// det/per of the bordered family matrix.
    Bordered(Family),
    /// Sum of consecutive k-th sequence terms.
    SumIdentity,
    /// `a[i+1][n] + a[k][n-k+i]`.
    ShiftIdentity,
    Binet,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = |fam: &Family| if fam.uses_determinant() { "det" } else { "per" };
        match self {
            Method::Family(fam) => write!(f, "{}-{fam}", op(fam)),
            Method::Bordered(fam) => write!(f, "{}-{fam}-bordered", op(fam)),
            Method::SumIdentity => f.write_str("sum-identity"),
            Method::ShiftIdentity => f.write_str("shift-identity"),
            Method::Binet => f.write_str("binet"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(Integer),
    /// Gaussian result with a nonzero imaginary part.
    NotReal { re: Integer, im: Integer },
    Approx(f64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(v) => write!(f, "{v}"),
            Value::NotReal { re, im } => write!(f, "{re}{im:+}i"),
            Value::Approx(v) => write!(f, "{v:e}"),
        }
    }
}

/// One comparison of a method against `a[i][n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub k: usize,
    pub lambda: u64,
    pub i: usize,
    /// Term index: the row checks `a[i][n]`.
    pub n: i64,
    pub method: Method,
    /// Matrix dimension, for matrix methods.
    pub dim: Option<usize>,
    pub expected: Integer,
    pub value: Value,
    /// Relative error, for Binet rows.
    pub rel_err: Option<f64>,
    pub ok: bool,
}

impl ReportRow {
    fn sort_key(&self) -> (usize, u64, usize, i64, Method) {
        (self.k, self.lambda, self.i, self.n, self.method)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub k_max: usize,
    /// Largest matrix dimension and largest bordered/identity term index.
    pub n_max: usize,
    pub lambdas: Vec<u64>,
    /// Relative tolerance for Binet rows.
    pub tolerance: f64,
    pub binet: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { k_max: 5, n_max: 20, lambdas: vec![1, 2, 3], tolerance: 1e-9, binet: true }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub rows: Vec<ReportRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.ok)
    }
}

fn exact_row(
    params: SequenceParams,
    i: usize,
    n: i64,
    method: Method,
    dim: Option<usize>,
    expected: &Integer,
    value: Value,
) -> ReportRow {
    let ok = matches!(&value, Value::Exact(v) if v == expected);
    ReportRow {
        k: params.k(),
        lambda: params.lambda(),
        i,
        n,
        method,
        dim,
        expected: expected.clone(),
        value,
        rel_err: None,
        ok,
    }
}

fn binet_row(params: SequenceParams, i: usize, n: i64, expected: &Integer, estimate: Result<f64>, tol: f64) -> ReportRow {
    let exact = expected.to_f64().unwrap_or(f64::INFINITY);
    let (value, rel_err) = match estimate {
        Ok(v) => (Value::Approx(v), (v - exact).abs() / exact.abs()),
        Err(_) => (Value::Approx(f64::NAN), f64::NAN),
    };
    ReportRow {
        k: params.k(),
        lambda: params.lambda(),
        i,
        n,
        method: Method::Binet,
        dim: None,
        expected: expected.clone(),
        value,
        rel_err: Some(rel_err),
        ok: rel_err <= tol,
    }
}

/// All rows for one `(k, λ)`.
pub fn verify_cell(k: usize, lambda: u64, config: &VerifyConfig) -> Result<Vec<ReportRow>> {
    let params = SequenceParams::new(k, lambda)?;
    let n_max = config.n_max as i64;
    let table = seq_table(params, &[], n_max + 1)?;
    let term = |i: usize, n: i64| table.get(i, n).expect("within table").clone();
    let mut rows = Vec::new();

    for dim in 1..=config.n_max {
        let n = dim as i64;
        let kth = term(k, n + 1);
        for fam in Family::ALL {
            let got = FamilySpec::base(fam, k, dim, lambda).build()?.evaluate(fam);
            rows.push(exact_row(params, k, n + 1, Method::Family(fam), Some(dim), &kth, to_value(got)));
        }
        for i in 2..=k {
            let want = term(i, n);
            for fam in Family::ALL {
                let got = FamilySpec::bordered(fam, k, dim, lambda, i).build()?.evaluate(fam);
                rows.push(exact_row(params, i, n, Method::Bordered(fam), Some(dim), &want, to_value(got)));
            }
        }
        for i in (1..=k).filter(|&i| identities_hold(params, i)) {
            let want = term(i, n);
            let sum = ith_from_kth(params, i, n)?;
            rows.push(exact_row(params, i, n, Method::SumIdentity, None, &want, Value::Exact(sum)));
            if i < k {
                let residual = shift_identity_residual(params, i, n)?;
                let shifted = &want - residual;
                rows.push(exact_row(params, i, n, Method::ShiftIdentity, None, &want, Value::Exact(shifted)));
            }
        }
    }

    if config.binet {
        let ev = BinetEvaluator::<f64>::new(k, lambda)?;
        for n in (k as i64 + 1)..=(n_max + 1) {
            rows.push(binet_row(params, k, n, &term(k, n), ev.kth(n - 1), config.tolerance));
        }
        for i in 1..k {
            for n in 1..=n_max {
                if n - (k - i + 1) as i64 >= k as i64 {
                    rows.push(binet_row(params, i, n, &term(i, n), ev.ith(i, n), config.tolerance));
                }
            }
        }
    }
    Ok(rows)
}

fn to_value(z: crate::ring::Gaussian) -> Value {
    if z.im.is_zero() {
        Value::Exact(z.re)
    } else {
        Value::NotReal { re: z.re, im: z.im }
    }
}

/// Sorts rows by `(k, λ, i, n, method)`.
pub fn sort_rows(rows: &mut [ReportRow]) {
    rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

/// Runs every `(k, λ)` cell of the grid sequentially.
pub fn run_grid(config: &VerifyConfig) -> Result<VerifyReport> {
    let mut rows = Vec::new();
    for k in 2..=config.k_max {
        for &lambda in &config.lambdas {
            rows.extend(verify_cell(k, lambda, config)?);
        }
    }
    sort_rows(&mut rows);
    Ok(VerifyReport { rows })
}
