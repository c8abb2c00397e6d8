//! Matrix families whose determinants or permanents are sequence terms.
//!
//! All families are `n×n` lower Hessenberg with lower bandwidth `k - 1`,
//! weight `λ` on the diagonal, and for `d = s - t` in `-1..=k-1`, `d != 0`:
//!
//! | family | entry at offset `d` | ring     | evaluates to (dimension `n`) |
//! |--------|---------------------|----------|------------------------------|
//! | `Q`    | `i^|d|`             | Gaussian | `det = a[k][n+1]`            |
//! | `B`    | `-1` if `d = -1`, else `1` | integer | `det = a[k][n+1]`    |
//! | `H`    | `i^d` (`i^-1 = -i`) | Gaussian | `per = a[k][n+1]`            |
//! | `D`    | `1`                 | integer  | `per = a[k][n+1]`            |
//!
//! The bordered variant for `2 <= i <= k` puts the `(n-1)`-dimensional base
//! matrix in the trailing block, `(1, σ, 0, …)` in the first row (σ is the
//! family's superdiagonal value) and `(1, c₁, …, c_{k-i}, 0, …)` in the first
//! column (`c_j = i^j` for Q and H, `1` for B and D). Its determinant or
//! permanent is `a[i][n]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::hessenberg::{det_hessenberg, perm_hessenberg, BandedLowerHessenberg};
use crate::ring::{gaussian_from_integer, imag_unit_power, imag_unit_power_signed, real_part, Gaussian, Integer, Ring};
use crate::{GaussianMatrix, IntegerMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Q,
    B,
    H,
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Q, Family::B, Family::H, Family::D];

    /// Whether the family reproduces the sequence through the determinant (Q, B) rather
    /// than the permanent (H, D).
    pub fn uses_determinant(self) -> bool {
        matches!(self, Family::Q | Family::B)
    }

    pub fn is_gaussian(self) -> bool {
        matches!(self, Family::Q | Family::H)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Q => "Q",
            Family::B => "B",
            Family::H => "H",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" | "q" => Ok(Family::Q),
            "B" | "b" => Ok(Family::B),
            "H" | "h" => Ok(Family::H),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::InvalidParams(format!("unknown family {other:?} (expected Q, B, H or D)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub k: usize,
    pub n: usize,
    pub lambda: u64,
    pub border: Option<usize>,
}

impl FamilySpec {
    pub fn base(family: Family, k: usize, n: usize, lambda: u64) -> Self {
        Self { family, k, n, lambda, border: None }
    }

    pub fn bordered(family: Family, k: usize, n: usize, lambda: u64, i: usize) -> Self {
        Self { family, k, n, lambda, border: Some(i) }
    }

    fn validate(&self) -> Result<()> {
        check_params(self.k, self.n, self.lambda)?;
        if let Some(i) = self.border {
            if i < 2 || i > self.k {
                return Err(Error::InvalidBorder { k: self.k, i });
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<FamilyMatrix> {
        self.validate()?;
        let FamilySpec { family, k, n, lambda, border } = *self;
        Ok(match (family, border) {
            (Family::Q, None) => FamilyMatrix::Gaussian(build_q(k, n, lambda)?),
            (Family::B, None) => FamilyMatrix::Integer(build_b(k, n, lambda)?),
            (Family::H, None) => FamilyMatrix::Gaussian(build_h(k, n, lambda)?),
            (Family::D, None) => FamilyMatrix::Integer(build_d(k, n, lambda)?),
            (Family::Q | Family::H, Some(_)) => FamilyMatrix::Gaussian(build_bordered_gaussian(self)?),
            (Family::B | Family::D, Some(_)) => FamilyMatrix::Integer(build_bordered_integer(self)?),
        })
    }
}

/// A built family matrix in its natural entry ring.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilyMatrix {
    Gaussian(GaussianMatrix),
    Integer(IntegerMatrix),
}

impl FamilyMatrix {
    pub fn dim(&self) -> usize {
        match self {
            FamilyMatrix::Gaussian(m) => m.dim(),
            FamilyMatrix::Integer(m) => m.dim(),
        }
    }

    /// The matrix over Gaussian integers (integer families embedded).
    pub fn to_gaussian(&self) -> GaussianMatrix {
        match self {
            FamilyMatrix::Gaussian(m) => m.clone(),
            FamilyMatrix::Integer(m) => m.map(|v| gaussian_from_integer(v.clone())),
        }
    }

    pub fn det(&self) -> Gaussian {
        match self {
            FamilyMatrix::Gaussian(m) => det_hessenberg(m),
            FamilyMatrix::Integer(m) => gaussian_from_integer(det_hessenberg(m)),
        }
    }

    pub fn perm(&self) -> Gaussian {
        match self {
            FamilyMatrix::Gaussian(m) => perm_hessenberg(m),
            FamilyMatrix::Integer(m) => gaussian_from_integer(perm_hessenberg(m)),
        }
    }

    /// Determinant for Q/B, permanent for H/D.
    pub fn evaluate(&self, family: Family) -> Gaussian {
        if family.uses_determinant() {
            self.det()
        } else {
            self.perm()
        }
    }

    /// [`evaluate`](Self::evaluate), required to be real.
    pub fn evaluate_real(&self, family: Family) -> Option<Integer> {
        real_part(&self.evaluate(family))
    }
}

fn check_params(k: usize, n: usize, lambda: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("order k must be >= 2, got {k}")));
    }
    if n < 1 {
        return Err(Error::InvalidParams(format!("dimension n must be >= 1, got {n}")));
    }
    if lambda < 1 {
        return Err(Error::InvalidParams(format!("weight lambda must be >= 1, got {lambda}")));
    }
    Ok(())
}

/// Entry of the base family at offset `d = s - t` inside the band.
fn q_entry(lambda: u64, d: i64) -> Gaussian {
    if d == 0 {
        gaussian_from_integer(BigInt::from(lambda))
    } else {
        imag_unit_power(d.unsigned_abs())
    }
}

fn h_entry(lambda: u64, d: i64) -> Gaussian {
    if d == 0 {
        gaussian_from_integer(BigInt::from(lambda))
    } else {
        imag_unit_power_signed(d)
    }
}

fn b_entry(lambda: u64, d: i64) -> Integer {
    match d {
        0 => BigInt::from(lambda),
        -1 => -BigInt::one(),
        _ => BigInt::one(),
    }
}

fn d_entry(lambda: u64, d: i64) -> Integer {
    if d == 0 {
        BigInt::from(lambda)
    } else {
        BigInt::one()
    }
}

fn offset(s: usize, t: usize) -> i64 {
    s as i64 - t as i64
}

fn base<R: Ring>(k: usize, n: usize, rule: impl Fn(i64) -> R) -> BandedLowerHessenberg<R> {
    BandedLowerHessenberg::from_fn(n, k - 1, |s, t| rule(offset(s, t)))
}

pub fn build_q(k: usize, n: usize, lambda: u64) -> Result<GaussianMatrix> {
    check_params(k, n, lambda)?;
    Ok(base(k, n, |d| q_entry(lambda, d)))
}

pub fn build_b(k: usize, n: usize, lambda: u64) -> Result<IntegerMatrix> {
    check_params(k, n, lambda)?;
    Ok(base(k, n, |d| b_entry(lambda, d)))
}

pub fn build_h(k: usize, n: usize, lambda: u64) -> Result<GaussianMatrix> {
    check_params(k, n, lambda)?;
    Ok(base(k, n, |d| h_entry(lambda, d)))
}

pub fn build_d(k: usize, n: usize, lambda: u64) -> Result<IntegerMatrix> {
    check_params(k, n, lambda)?;
    Ok(base(k, n, |d| d_entry(lambda, d)))
}

fn bordered<R: Ring>(
    k: usize,
    n: usize,
    i: usize,
    rule: impl Fn(i64) -> R,
    sigma: R,
    column: impl Fn(usize) -> R,
) -> BandedLowerHessenberg<R> {
    BandedLowerHessenberg::from_fn(n, k - 1, |s, t| match (s, t) {
        (0, 0) => R::one(),
        (0, 1) => sigma.clone(),
        (0, _) => R::zero(),
        (s, 0) if s <= k - i => column(s),
        (_, 0) => R::zero(),
        (s, t) => rule(offset(s, t)),
    })
}

fn border_of(spec: &FamilySpec) -> Result<usize> {
    spec.validate()?;
    spec.border
        .ok_or_else(|| Error::InvalidParams("bordered builder needs a border index".into()))
}

/// Bordered Q or H of final dimension `spec.n`.
pub fn build_bordered_gaussian(spec: &FamilySpec) -> Result<GaussianMatrix> {
    let i = border_of(spec)?;
    let FamilySpec { family, k, n, lambda, .. } = *spec;
    let column = |j: usize| imag_unit_power(j as u64);
    match family {
        Family::Q => Ok(bordered(k, n, i, |d| q_entry(lambda, d), q_entry(lambda, -1), column)),
        Family::H => Ok(bordered(k, n, i, |d| h_entry(lambda, d), h_entry(lambda, -1), column)),
        other => Err(Error::InvalidParams(format!("family {other} has integer entries"))),
    }
}

/// Bordered B or D of final dimension `spec.n`.
pub fn build_bordered_integer(spec: &FamilySpec) -> Result<IntegerMatrix> {
    let i = border_of(spec)?;
    let FamilySpec { family, k, n, lambda, .. } = *spec;
    let column = |_: usize| BigInt::one();
    match family {
        Family::B => Ok(bordered(k, n, i, |d| b_entry(lambda, d), b_entry(lambda, -1), column)),
        Family::D => Ok(bordered(k, n, i, |d| d_entry(lambda, d), d_entry(lambda, -1), column)),
        other => Err(Error::InvalidParams(format!("family {other} has Gaussian entries"))),
    }
}

/// Bordered variant in its natural ring.
pub fn build_bordered(spec: &FamilySpec) -> Result<FamilyMatrix> {
    border_of(spec)?;
    spec.build()
}

/// Lower Hessenberg Toeplitz matrix of the characteristic polynomial
/// `1 - λz - z² - … - z^k`: `-λ` on the diagonal, `1` on the superdiagonal
/// and `-1` on the `k - 1` subdiagonals. Its determinant is
/// `(-1)^n · det(B)`.
pub fn build_toeplitz_a(k: usize, n: usize, lambda: u64) -> Result<IntegerMatrix> {
    check_params(k, n, lambda)?;
    Ok(base(k, n, |d| match d {
        0 => -BigInt::from(lambda),
        -1 => BigInt::one(),
        _ => -BigInt::one(),
    }))
}

/// Whether every entry of `m` outside the band of width `w` is zero, checked
/// on the dense expansion.
pub fn respects_band<R: Ring>(m: &BandedLowerHessenberg<R>, w: usize) -> bool {
    let dense = m.to_dense();
    (0..m.dim()).all(|s| {
        (0..m.dim()).all(|t| {
            let inside = t <= s + 1 && s <= t + w;
            inside || dense.get(s, t).is_zero()
        })
    })
}
