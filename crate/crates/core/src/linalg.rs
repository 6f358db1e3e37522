//! Exact rank and Smith-form computations on sparse integer matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Default bound on either side of a dense Smith-form reduction.
pub const DEFAULT_MAX_MATRIX: usize = 20_000;

/// Column-major sparse integer matrix. Each column is sorted by row and holds
/// no zero entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> Self {
        Self { rows, cols: Vec::new() }
    }

    /// Append a column; entries may be unsorted and repeated.
    pub fn push_col(&mut self, entries: impl IntoIterator<Item = (u32, i64)>) {
        let mut acc: Vec<(u32, i64)> = entries.into_iter().collect();
        acc.sort_unstable_by_key(|e| e.0);
        let mut col: Vec<(u32, i64)> = Vec::with_capacity(acc.len());
        for (r, v) in acc {
            debug_assert!((r as usize) < self.rows);
            match col.last_mut() {
                Some(last) if last.0 == r => last.1 += v,
                _ => col.push((r, v)),
            }
        }
        col.retain(|e| e.1 != 0);
        self.cols.push(col);
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &[(u32, i64)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Product `self * other` (used to check `d∘d = 0`).
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols() != other.rows {
            return Err(Error::Mismatch("matrix shapes do not compose".into()));
        }
        let mut out = SparseMatrix::new(self.rows);
        for col in &other.cols {
            let mut acc: HashMap<u32, i64> = HashMap::new();
            for &(k, b) in col {
                for &(i, a) in &self.cols[k as usize] {
                    *acc.entry(i).or_default() += a * b;
                }
            }
            out.push_col(acc);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Rank over F2.
    pub fn rank_f2(&self) -> usize {
        let mut pivots: HashMap<u32, Vec<u32>> = HashMap::new();
        for col in &self.cols {
            let mut c: Vec<u32> = col.iter().filter(|e| e.1 & 1 != 0).map(|e| e.0).collect();
            while let Some(&low) = c.last() {
                match pivots.get(&low) {
                    Some(p) => c = xor_sorted(&c, p),
                    None => {
                        pivots.insert(low, c);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    /// Rank over Q, by exact rational elimination.
    pub fn rank_q(&self) -> usize {
        type Col = Vec<(u32, BigRational)>;
        let mut pivots: HashMap<u32, Col> = HashMap::new();
        for col in &self.cols {
            let mut c: Col = col.iter().map(|&(r, v)| (r, BigRational::from_integer(BigInt::from(v)))).collect();
            while let Some((low, lv)) = c.last().cloned() {
                match pivots.get(&low) {
                    Some(p) => {
                        let factor = lv / &p.last().expect("pivot column non-empty").1;
                        c = axpy_sorted(&c, p, &factor);
                    }
                    None => {
                        pivots.insert(low, c);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    /// Nonzero diagonal entries of the Smith normal form, in divisibility
    /// order. Dense reduction with checked 128-bit arithmetic.
    pub fn smith_invariants(&self, max_matrix: usize) -> Result<Vec<u128>> {
        if self.rows > max_matrix || self.cols() > max_matrix {
            return Err(Error::CapExceeded {
                what: format!("Smith form of a {}x{} matrix", self.rows, self.cols()),
                limit: max_matrix,
                dim_reached: 0,
            });
        }
        let mut a = vec![vec![0i128; self.cols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                a[i as usize][j] = v as i128;
            }
        }
        let mut diag = diagonalize(&mut a)?;
        // normalize to a divisibility chain
        for i in 0..diag.len() {
            for j in i + 1..diag.len() {
                let g = gcd(diag[i], diag[j]);
                let l = (diag[i] / g).checked_mul(diag[j]).ok_or(Error::Overflow("Smith form"))?;
                diag[i] = g;
                diag[j] = l;
            }
        }
        Ok(diag)
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn diagonalize(a: &mut [Vec<i128>]) -> Result<Vec<u128>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let ov = || Error::Overflow("Smith form");
    for t in 0..rows.min(cols) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize, i128)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|b| v.abs() < b.2) {
                    best = Some((i, j, v.abs()));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        let sub = q.checked_mul(a[t][j]).ok_or_else(ov)?;
                        a[i][j] = a[i][j].checked_sub(sub).ok_or_else(ov)?;
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        let sub = q.checked_mul(row[t]).ok_or_else(ov)?;
                        row[j] = row[j].checked_sub(sub).ok_or_else(ov)?;
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if !dirty {
                // make the pivot divide the rest of the block
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
                match bad {
                    Some(i) => {
                        for j in t..cols {
                            a[t][j] = a[t][j].checked_add(a[i][j]).ok_or_else(ov)?;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // move the smallest remaining entry of row/column t to the pivot
            let mut best = (t, t, a[t][t].abs());
            for i in t + 1..rows {
                if a[i][t] != 0 && a[i][t].abs() < best.2 {
                    best = (i, t, a[i][t].abs());
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 && a[t][j].abs() < best.2 {
                    best = (t, j, a[t][j].abs());
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            }
            if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].unsigned_abs());
    }
    Ok(diag)
}

fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `a - f * b` on sorted sparse rational columns.
fn axpy_sorted(a: &[(u32, BigRational)], b: &[(u32, BigRational)], f: &BigRational) -> Vec<(u32, BigRational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_dense(rows: &[&[i64]]) -> SparseMatrix {
        let mut m = SparseMatrix::new(rows.len());
        let cols = rows.first().map_or(0, |r| r.len());
        for j in 0..cols {
            m.push_col((0..rows.len()).map(|i| (i as u32, rows[i][j])));
        }
        m
    }

    #[test]
    fn ranks_differ_by_field() {
        let m = from_dense(&[&[2, 0], &[0, 1]]);
        assert_eq!(m.rank_q(), 2);
        assert_eq!(m.rank_f2(), 1);
        let m = from_dense(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(m.rank_q(), 3);
        assert_eq!(m.rank_f2(), 2);
    }

    #[test]
    fn smith_examples() {
        let m = from_dense(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(m.smith_invariants(DEFAULT_MAX_MATRIX).unwrap(), vec![2, 6, 12]);
        let m = from_dense(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(m.smith_invariants(DEFAULT_MAX_MATRIX).unwrap(), vec![1, 1, 2]);
        let m = from_dense(&[&[0, 0], &[0, 0]]);
        assert!(m.smith_invariants(DEFAULT_MAX_MATRIX).unwrap().is_empty());
        assert!(matches!(m.smith_invariants(1), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn product_and_zero() {
        let a = from_dense(&[&[1, -1]]);
        let b = from_dense(&[&[1], &[1]]);
        assert!(a.mul(&b).unwrap().is_zero());
        assert!(b.mul(&b).is_err());
    }
}
