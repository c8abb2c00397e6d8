//! Band-stored lower Hessenberg matrices and their `O(n·w)` determinant and
//! permanent recursions.
//!
//! A lower Hessenberg matrix has `a[s][t] = 0` whenever `t > s + 1`. The
//! matrices here additionally have a lower bandwidth `w`: `a[s][t] = 0`
//! whenever `s - t > w`. Each row keeps its `w + 2` band slots, ordered
//! superdiagonal first, then diagonal, then the `w` subdiagonals.
//!
//! Expanding along the last row gives, with `D(0) = 1`,
//!
//! ```text
//! D(m) = a[m][m]·D(m-1) + Σ_{r=m-w}^{m-1} (±)^{m-r} a[m][r] · a[r][r+1]⋯a[m-1][m] · D(r-1)
//! ```
//!
//! with alternating signs for the determinant and all `+` for the permanent.
//! Rows are 1-based in the formula and 0-based in the API.

use std::collections::VecDeque;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq)]
pub struct BandedLowerHessenberg<R> {
    n: usize,
    w: usize,
    band: Vec<R>,
}

impl<R: Ring> BandedLowerHessenberg<R> {
    fn stride(w: usize) -> usize {
        w + 2
    }

    /// Slot of `(s, t)` inside row `s`, if it lies in the band.
    fn slot(&self, s: usize, t: usize) -> Option<usize> {
        if s >= self.n || t >= self.n || t > s + 1 || s > t + self.w {
            return None;
        }
        Some(s + 1 - t)
    }

    /// Builds the matrix from an entry rule evaluated only on band cells.
    pub fn from_fn(n: usize, w: usize, mut entry: impl FnMut(usize, usize) -> R) -> Self {
        let stride = Self::stride(w);
        let mut band = Vec::with_capacity(n * stride);
        for s in 0..n {
            for d in 0..stride {
                // d = s - t + 1
                let t = (s + 1).checked_sub(d);
                band.push(match t {
                    Some(t) if t < n => entry(s, t),
                    _ => R::zero(),
                });
            }
        }
        Self { n, w, band }
    }

    /// Builds the matrix from explicit band rows `[a[s][s+1], a[s][s], …, a[s][s-w]]`.
    /// Slots that fall outside the matrix must be zero.
    pub fn from_band_rows(w: usize, rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        let stride = Self::stride(w);
        let mut band = Vec::with_capacity(n * stride);
        for (s, row) in rows.into_iter().enumerate() {
            if row.len() != stride {
                return Err(Error::MalformedMatrix(format!(
                    "band row {s} has {} slots, expected {stride}",
                    row.len()
                )));
            }
            for (d, v) in row.into_iter().enumerate() {
                let inside = matches!((s + 1).checked_sub(d), Some(t) if t < n);
                if !inside && !v.is_zero() {
                    return Err(Error::MalformedMatrix(format!(
                        "row {s} slot {d} lies outside the matrix but is nonzero"
                    )));
                }
                band.push(v);
            }
        }
        Ok(Self { n, w, band })
    }

    /// Band-stores a dense matrix, rejecting it if any entry outside the band
    /// is nonzero.
    pub fn from_dense(m: &DenseMatrix<R>, w: usize) -> Result<Self> {
        let n = m.dim();
        for s in 0..n {
            for t in 0..n {
                let in_band = t <= s + 1 && s <= t + w;
                if !in_band && !m.get(s, t).is_zero() {
                    return Err(Error::MalformedMatrix(format!(
                        "entry ({s}, {t}) is nonzero outside the band (w = {w})"
                    )));
                }
            }
        }
        Ok(Self::from_fn(n, w, |s, t| m.get(s, t).clone()))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn lower_bandwidth(&self) -> usize {
        self.w
    }

    /// Entry at zero-based `(s, t)`; zero outside the band.
    pub fn get(&self, s: usize, t: usize) -> R {
        match self.slot(s, t) {
            Some(d) => self.band[s * Self::stride(self.w) + d].clone(),
            None => R::zero(),
        }
    }

    fn at(&self, s: usize, t: usize) -> &R {
        let d = self.slot(s, t).expect("cell inside band");
        &self.band[s * Self::stride(self.w) + d]
    }

    pub fn to_dense(&self) -> DenseMatrix<R> {
        DenseMatrix::from_fn(self.n, |s, t| self.get(s, t))
    }

    /// Applies `f` to every stored entry.
    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> BandedLowerHessenberg<S> {
        BandedLowerHessenberg { n: self.n, w: self.w, band: self.band.iter().map(&mut f).collect() }
    }
}

/// Last-row expansion with at most `lookback` border terms per row.
fn expand<R: Ring>(m: &BandedLowerHessenberg<R>, signed: bool, lookback: usize) -> R {
    // minors[j] = D(row - 1 - j), newest first
    let mut minors: VecDeque<R> = VecDeque::with_capacity(lookback + 2);
    minors.push_front(R::one());
    for row in 1..=m.dim() {
        let s = row - 1;
        let mut next = m.at(s, s).clone() * minors[0].clone();
        let mut superdiag = R::one();
        let lowest = row.saturating_sub(lookback).max(1);
        for r in (lowest..row).rev() {
            // 1-based r; zero-based column r - 1
            superdiag = superdiag * m.at(r - 1, r).clone();
            let entry = m.get(s, r - 1);
            if entry.is_zero() {
                continue;
            }
            let term = entry * superdiag.clone() * minors[row - r].clone();
            next = next + term.signed(signed && (row - r) % 2 == 1);
        }
        minors.push_front(next);
        minors.truncate(lookback + 1);
    }
    minors.pop_front().expect("D(0) is always present")
}

/// Determinant via the band-truncated last-row recursion, `O(n·w)` ring
/// multiplications. The 0×0 determinant is one.
pub fn det_hessenberg<R: Ring>(m: &BandedLowerHessenberg<R>) -> R {
    expand(m, true, m.lower_bandwidth())
}

/// Permanent via the band-truncated last-row recursion.
pub fn perm_hessenberg<R: Ring>(m: &BandedLowerHessenberg<R>) -> R {
    expand(m, false, m.lower_bandwidth())
}

/// Determinant via the recursion with the border sum over every earlier row,
/// ignoring the band. Quadratic; used to check the truncation.
pub fn det_hessenberg_untruncated<R: Ring>(m: &BandedLowerHessenberg<R>) -> R {
    expand(m, true, m.dim())
}

/// Permanent counterpart of [`det_hessenberg_untruncated`].
pub fn perm_hessenberg_untruncated<R: Ring>(m: &BandedLowerHessenberg<R>) -> R {
    expand(m, false, m.dim())
}
