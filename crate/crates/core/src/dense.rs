//! Dense square matrices and permutation-expansion determinant/permanent.
//!
//! These exist to check the band recursions independently; they cost
//! `O(n!)` and are capped at [`NAIVE_MAX_DIM`].

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Largest dimension accepted by [`det_naive`] and [`perm_naive`].
pub const NAIVE_MAX_DIM: usize = 9;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<R> {
    n: usize,
    data: Vec<R>,
}

impl<R: Ring> DenseMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::MalformedMatrix(format!(
                "row {bad} has {} entries, expected {n}",
                rows[bad].len()
            )));
        }
        Ok(Self { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let data = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).map(|(s, t)| f(s, t)).collect();
        Self { n, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |s, t| if s == t { R::one() } else { R::zero() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, s: usize, t: usize) -> &R {
        &self.data[s * self.n + t]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    /// Matrix with row `s` and column `t` deleted.
    pub fn minor(&self, s: usize, t: usize) -> Self {
        let n = self.n - 1;
        Self::from_fn(n, |a, b| {
            let a = if a >= s { a + 1 } else { a };
            let b = if b >= t { b + 1 } else { b };
            self.get(a, b).clone()
        })
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > NAIVE_MAX_DIM {
        Err(Error::TooLarge { n, max: NAIVE_MAX_DIM })
    } else {
        Ok(())
    }
}

/// Sums `sign(σ)·Π a[s][σ(s)]` (or the unsigned product) over every
/// permutation σ, skipping partial assignments that hit a zero entry.
fn expand<R: Ring>(m: &DenseMatrix<R>, signed: bool) -> R {
    fn walk<R: Ring>(
        m: &DenseMatrix<R>,
        row: usize,
        used: &mut [bool],
        prefix: R,
        odd: bool,
        signed: bool,
        acc: &mut R,
    ) {
        let n = m.dim();
        if row == n {
            let term = if signed { prefix.signed(odd) } else { prefix };
            *acc = acc.clone() + term;
            return;
        }
        for col in 0..n {
            if used[col] || m.get(row, col).is_zero() {
                continue;
            }
            // inversions added by placing `col` after the columns already used
            let inversions = used[col + 1..].iter().filter(|&&u| u).count();
            used[col] = true;
            walk(
                m,
                row + 1,
                used,
                prefix.clone() * m.get(row, col).clone(),
                odd ^ (inversions % 2 == 1),
                signed,
                acc,
            );
            used[col] = false;
        }
    }

    let mut acc = R::zero();
    let mut used = vec![false; m.dim()];
    walk(m, 0, &mut used, R::one(), false, signed, &mut acc);
    acc
}

/// Determinant by signed permutation expansion. `n <= 9`.
pub fn det_naive<R: Ring>(m: &DenseMatrix<R>) -> Result<R> {
    check_size(m.dim())?;
    Ok(expand(m, true))
}

/// Permanent by unsigned permutation expansion. `n <= 9`.
pub fn perm_naive<R: Ring>(m: &DenseMatrix<R>) -> Result<R> {
    check_size(m.dim())?;
    Ok(expand(m, false))
}

/// Permanent by Laplace expansion along row `s`.
pub fn perm_laplace_row<R: Ring>(m: &DenseMatrix<R>, s: usize) -> Result<R> {
    check_size(m.dim())?;
    Ok((0..m.dim()).fold(R::zero(), |acc, t| {
        acc + m.get(s, t).clone() * expand(&m.minor(s, t), false)
    }))
}

/// Permanent by Laplace expansion along column `t`.
pub fn perm_laplace_col<R: Ring>(m: &DenseMatrix<R>, t: usize) -> Result<R> {
    check_size(m.dim())?;
    Ok((0..m.dim()).fold(R::zero(), |acc, s| {
        acc + m.get(s, t).clone() * expand(&m.minor(s, t), false)
    }))
}
