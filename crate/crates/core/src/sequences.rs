//! Exact recurrence engine for the λ-weighted family of k sequences.
//!
//! For order `k` and weight `λ`, sequence `i` (`1 <= i <= k`) is
//!
//! ```text
//! a[i][n] = λ·a[i][n-1] + a[i][n-2] + … + a[i][n-k]      (n >= 1)
//! a[i][n] = 1 if i == 1 - n else 0                       (1-k <= n <= 0)
//! ```
//!
//! `λ = 1` gives the k generalized order-k Fibonacci sequences, `λ = 2` the
//! generalized order-k Pell sequences.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::Integer;

/// Order `k >= 2` and weight `λ >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequenceParams {
    k: usize,
    lambda: u64,
}

impl SequenceParams {
    pub fn new(k: usize, lambda: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParams(format!("order k must be >= 2, got {k}")));
        }
        if lambda < 1 {
            return Err(Error::InvalidParams(format!("weight lambda must be >= 1, got {lambda}")));
        }
        Ok(Self { k, lambda })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    /// Smallest index with a defined value, `1 - k`.
    pub fn first_index(&self) -> i64 {
        1 - self.k as i64
    }

    fn check_i(&self, i: usize, n: i64) -> Result<()> {
        if i == 0 || i > self.k {
            return Err(Error::IndexOutOfRange { k: self.k, i, n });
        }
        Ok(())
    }

    fn check(&self, i: usize, n: i64) -> Result<()> {
        self.check_i(i, n)?;
        if n < self.first_index() {
            return Err(Error::IndexOutOfRange { k: self.k, i, n });
        }
        Ok(())
    }
}

fn initial_value(i: usize, n: i64) -> Integer {
    if i as i64 == 1 - n {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// All terms of one sequence from index `1 - k` up to some `n`, stored with
/// an offset so negative indices are ordinary entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceWindow {
    params: SequenceParams,
    i: usize,
    values: Vec<Integer>,
}

impl SequenceWindow {
    /// The `k` initial-condition terms of sequence `i`.
    pub fn new(params: SequenceParams, i: usize) -> Result<Self> {
        params.check_i(i, 0)?;
        let values = (params.first_index()..=0).map(|n| initial_value(i, n)).collect();
        Ok(Self { params, i, values })
    }

    pub fn params(&self) -> SequenceParams {
        self.params
    }

    pub fn i(&self) -> usize {
        self.i
    }

    /// Largest index currently stored.
    pub fn last_index(&self) -> i64 {
        self.params.first_index() + self.values.len() as i64 - 1
    }

    /// Runs the recurrence forward until index `n` is stored.
    pub fn extend_to(&mut self, n: i64) {
        let k = self.params.k;
        let lambda = BigInt::from(self.params.lambda);
        while self.last_index() < n {
            let len = self.values.len();
            let mut next = &lambda * &self.values[len - 1];
            for back in 2..=k {
                next += &self.values[len - back];
            }
            self.values.push(next);
        }
    }

    pub fn get(&self, n: i64) -> Option<&Integer> {
        let idx = n - self.params.first_index();
        if idx < 0 {
            return None;
        }
        self.values.get(idx as usize)
    }

    /// Terms from index `1 - k` to [`last_index`](Self::last_index).
    pub fn values(&self) -> &[Integer] {
        &self.values
    }
}

/// `a[i][n]` by forward iteration over a rolling window of `k` terms.
pub fn seq_value(params: SequenceParams, i: usize, n: i64) -> Result<Integer> {
    params.check(i, n)?;
    if n <= 0 {
        return Ok(initial_value(i, n));
    }
    let k = params.k;
    let lambda = BigInt::from(params.lambda);
    let mut window: VecDeque<Integer> = (params.first_index()..=0).map(|m| initial_value(i, m)).collect();
    for _ in 1..=n {
        let mut next = &lambda * &window[k - 1];
        for term in window.iter().take(k - 1) {
            next += term;
        }
        window.pop_front();
        window.push_back(next);
    }
    Ok(window.pop_back().expect("window holds k >= 2 terms"))
}

/// `a[i][n]` for any integer `n`, running the recurrence backwards below
/// `1 - k`. The backward continuation is the unique two-sided solution that
/// agrees with the defined terms.
fn value_two_sided(params: SequenceParams, i: usize, n: i64) -> Integer {
    let first = params.first_index();
    if n >= first {
        return seq_value(params, i, n).expect("index checked by caller");
    }
    let k = params.k;
    let lambda = BigInt::from(params.lambda);
    // front is the lowest stored index
    let mut window: VecDeque<Integer> = (first..=0).map(|m| initial_value(i, m)).collect();
    let mut lowest = first;
    while lowest > n {
        // the recurrence at index lowest + k - 1 determines a[lowest - 1]
        let mut prev = window[k - 1].clone() - &lambda * &window[k - 2];
        for j in 0..k - 2 {
            prev -= &window[j];
        }
        window.pop_back();
        window.push_front(prev);
        lowest -= 1;
    }
    window.pop_front().expect("non-empty window")
}

/// Rectangular table of the requested sequences for `1 - k <= n <= n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceTable {
    params: SequenceParams,
    columns: Vec<SequenceWindow>,
    n_max: i64,
}

impl SequenceTable {
    pub fn params(&self) -> SequenceParams {
        self.params
    }

    pub fn indices(&self) -> Vec<usize> {
        self.columns.iter().map(SequenceWindow::i).collect()
    }

    pub fn first_index(&self) -> i64 {
        self.params.first_index()
    }

    pub fn n_max(&self) -> i64 {
        self.n_max
    }

    pub fn get(&self, i: usize, n: i64) -> Option<&Integer> {
        self.columns.iter().find(|c| c.i() == i)?.get(n)
    }

    /// One row `(n, [a[i][n] for each requested i])`.
    pub fn row(&self, n: i64) -> Option<Vec<&Integer>> {
        self.columns.iter().map(|c| c.get(n)).collect()
    }

    /// Rows in increasing `n`.
    pub fn rows(&self) -> impl Iterator<Item = (i64, Vec<&Integer>)> + '_ {
        (self.first_index()..=self.n_max).map(move |n| (n, self.row(n).expect("n within table")))
    }
}

/// Builds the table for sequences `i_set` (all `1..=k` when empty).
pub fn seq_table(params: SequenceParams, i_set: &[usize], n_max: i64) -> Result<SequenceTable> {
    if n_max < 0 {
        return Err(Error::InvalidParams(format!("n_max must be >= 0, got {n_max}")));
    }
    let indices: Vec<usize> = if i_set.is_empty() {
        (1..=params.k).collect()
    } else {
        i_set.to_vec()
    };
    let columns = indices
        .iter()
        .map(|&i| {
            let mut w = SequenceWindow::new(params, i)?;
            w.extend_to(n_max);
            Ok(w)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SequenceTable { params, columns, n_max })
}

/// The terms `a[k][n - m + 1]` for `m = 1..=k-i+1`.
pub fn ith_from_kth_terms(params: SequenceParams, i: usize, n: i64) -> Result<Vec<Integer>> {
    params.check(i, n)?;
    if n < 1 {
        return Err(Error::IndexOutOfRange { k: params.k, i, n });
    }
    let mut kth = SequenceWindow::new(params, params.k)?;
    kth.extend_to(n);
    let count = (params.k - i + 1) as i64;
    Ok((1..=count)
        .map(|m| kth.get(n - m + 1).expect("index >= 1 - k").clone())
        .collect())
}

/// Whether the sum and shift identities relating sequence `i` to the k-th
/// sequence hold: always for `i >= 2`, and for `i = 1` only when `λ = 1`.
///
/// For `i = 1` the λ weight lands on the `n = 0` initial term, and the exact
/// relation becomes `a[1][n] = a[k][n+1]` ([`first_from_kth`]).
pub fn identities_hold(params: SequenceParams, i: usize) -> bool {
    i >= 2 || params.lambda == 1
}

/// `a[1][n]` as `a[k][n+1]`, valid for every λ.
pub fn first_from_kth(params: SequenceParams, n: i64) -> Result<Integer> {
    params.check(1, n)?;
    seq_value(params, params.k, n + 1)
}

/// The sum of `k - i + 1` consecutive terms of the k-th sequence ending at
/// `a[k][n]`. Equals `a[i][n]` whenever [`identities_hold`].
pub fn ith_from_kth(params: SequenceParams, i: usize, n: i64) -> Result<Integer> {
    Ok(ith_from_kth_terms(params, i, n)?.into_iter().sum())
}

/// `a[i][n] - a[i+1][n] - a[k][n-k+i]`; identically zero whenever
/// [`identities_hold`].
pub fn shift_identity_residual(params: SequenceParams, i: usize, n: i64) -> Result<Integer> {
    params.check(i, n)?;
    if i == params.k {
        return Err(Error::IndexOutOfRange { k: params.k, i, n });
    }
    let shifted = value_two_sided(params, params.k, n - params.k as i64 + i as i64);
    Ok(seq_value(params, i, n)? - seq_value(params, i + 1, n)? - shifted)
}

/// Miles' generalized order-k Fibonacci number `f[k][n]`, with
/// `f[k][1] = … = f[k][k-2] = 0` and `f[k][k-1] = f[k][k] = 1`.
pub fn miles_value(k: usize, n: i64) -> Result<Integer> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("order k must be >= 2, got {k}")));
    }
    if n < 1 {
        return Err(Error::InvalidParams(format!("index n must be >= 1, got {n}")));
    }
    let boundary = |m: i64| -> Integer {
        if m >= k as i64 - 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    };
    if n <= k as i64 {
        return Ok(boundary(n));
    }
    let mut window: VecDeque<Integer> = (1..=k as i64).map(boundary).collect();
    for _ in (k as i64 + 1)..=n {
        let next: Integer = window.iter().sum();
        window.pop_front();
        window.push_back(next);
    }
    Ok(window.pop_back().expect("k >= 2 terms"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, lambda: u64) -> SequenceParams {
        SequenceParams::new(k, lambda).unwrap()
    }

    fn int(v: i64) -> Integer {
        BigInt::from(v)
    }

    #[test]
    fn rejects_bad_params() {
        assert!(matches!(SequenceParams::new(1, 2), Err(Error::InvalidParams(_))));
        assert!(matches!(SequenceParams::new(3, 0), Err(Error::InvalidParams(_))));
        assert!(matches!(seq_value(p(3, 2), 0, 1), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(seq_value(p(3, 2), 4, 1), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(seq_value(p(3, 2), 1, -3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(miles_value(1, 3), Err(Error::InvalidParams(_))));
        assert!(matches!(miles_value(3, 0), Err(Error::InvalidParams(_))));
        assert!(matches!(shift_identity_residual(p(3, 2), 3, 1), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn seq_value_examples() {
        assert_eq!(seq_value(p(3, 2), 2, 3).unwrap(), int(7));
        assert_eq!(seq_value(p(3, 2), 1, 0).unwrap(), int(1));
        assert_eq!(seq_value(p(5, 2), 5, 10).unwrap(), int(4116));
        assert_eq!(seq_value(p(4, 3), 2, 4).unwrap(), int(47));
    }

    #[test]
    fn table_examples() {
        let t = seq_table(p(3, 3), &[], 4).unwrap();
        let rows: Vec<Vec<Integer>> = (1..=4)
            .map(|n| t.row(n).unwrap().into_iter().cloned().collect())
            .collect();
        let expect = [[3, 1, 1], [10, 4, 3], [34, 13, 10], [115, 44, 34]];
        for (row, want) in rows.iter().zip(expect) {
            assert_eq!(row, &want.map(int).to_vec());
        }

        let pell = seq_table(p(2, 2), &[2], 5).unwrap();
        let col: Vec<Integer> = (1..=5).map(|n| pell.get(2, n).unwrap().clone()).collect();
        assert_eq!(col, [1, 2, 5, 12, 29].map(int).to_vec());

        let init = seq_table(p(4, 3), &[], 0).unwrap();
        assert_eq!(init.rows().count(), 4);
        for (n, row) in init.rows() {
            for (pos, v) in row.into_iter().enumerate() {
                assert_eq!(*v, initial_value(pos + 1, n));
            }
        }
        assert!(seq_table(p(4, 3), &[], -1).is_err());
        assert!(seq_table(p(4, 3), &[5], 3).is_err());
    }

    #[test]
    fn ith_from_kth_examples() {
        let terms = ith_from_kth_terms(p(5, 2), 2, 10).unwrap();
        assert_eq!(terms, [4116, 1578, 605, 232].map(int).to_vec());
        assert_eq!(ith_from_kth(p(5, 2), 2, 10).unwrap(), int(6531));
        // i = 1 with λ = 2: the sum 13 + 5 + 2 is not a[1][4] = 33
        assert_eq!(ith_from_kth(p(3, 2), 1, 4).unwrap(), int(20));
        assert_eq!(first_from_kth(p(3, 2), 4).unwrap(), int(33));
        assert_eq!(ith_from_kth(p(3, 1), 1, 4).unwrap(), seq_value(p(3, 1), 1, 4).unwrap());
        for n in 1..10 {
            assert_eq!(ith_from_kth(p(4, 2), 4, n).unwrap(), seq_value(p(4, 2), 4, n).unwrap());
        }
    }

    #[test]
    fn shift_identity_examples() {
        assert!(shift_identity_residual(p(3, 2), 2, 3).unwrap().is_zero());
        assert!(shift_identity_residual(p(5, 1), 1, 1).unwrap().is_zero());
        assert!(shift_identity_residual(p(5, 2), 2, 1).unwrap().is_zero());
        // a[1][1] = λ, a[2][1] = 1
        assert_eq!(shift_identity_residual(p(5, 2), 1, 1).unwrap(), int(1));
        assert!(shift_identity_residual(p(4, 3), 3, 4).unwrap().is_zero());
        // below the stored window the k-th sequence is continued backwards
        assert_eq!(value_two_sided(p(3, 2), 3, -3), int(-1));
        for n in -2..=0 {
            for i in 2..3 {
                assert!(shift_identity_residual(p(3, 2), i, n).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn miles_examples() {
        assert_eq!(miles_value(2, 3).unwrap(), int(2));
        assert_eq!(miles_value(4, 4).unwrap(), int(1));
        assert_eq!(miles_value(4, 2).unwrap(), int(0));
        // f[k][k+n-2] = a[k][n] at λ = 1
        assert_eq!(miles_value(3, 5).unwrap(), seq_value(p(3, 1), 3, 4).unwrap());
        assert_eq!(miles_value(3, 5).unwrap(), int(4));
    }

    #[test]
    fn identity_grid() {
        for k in 2..=6 {
            for lambda in 1..=4 {
                let params = p(k, lambda);
                let table = seq_table(params, &[], 30).unwrap();
                for i in 1..=k {
                    for n in 1..=30 {
                        let v = table.get(i, n).unwrap();
                        let mut rec = BigInt::from(lambda) * table.get(i, n - 1).unwrap();
                        for back in 2..=k as i64 {
                            rec += table.get(i, n - back).unwrap();
                        }
                        assert_eq!(*v, rec);
                        assert_eq!(*v, seq_value(params, i, n).unwrap());
                        if i == 1 {
                            assert_eq!(*v, first_from_kth(params, n).unwrap());
                        }
                        if !identities_hold(params, i) {
                            assert_ne!(*v, ith_from_kth(params, i, n).unwrap());
                            continue;
                        }
                        assert_eq!(*v, ith_from_kth(params, i, n).unwrap());
                        if i < k {
                            assert!(shift_identity_residual(params, i, n).unwrap().is_zero());
                        }
                        if i < k && n <= (k - i) as i64 {
                            assert_eq!(v, table.get(i + 1, n).unwrap());
                        }
                    }
                }
            }
            for n in 1..=30 {
                let kth = seq_value(p(k, 1), k, n).unwrap();
                assert_eq!(kth, miles_value(k, k as i64 + n - 2).unwrap(), "k={k} n={n}");
            }
        }
    }
}
