//! Exact integer matrices: determinants, Smith and Hermite normal forms,
//! and membership in an integer row span.
//!
//! Entries are arbitrary precision. Nothing in here touches floating point.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        f.write_str("]")
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from small integer rows. All rows must share a length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Shape {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &x) in values.iter().enumerate() {
            m[(i, i)] = BigInt::from(x);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Entries as `i64`, or `None` if any entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| i64::try_from(x).ok()).collect())
            .collect()
    }

    pub fn with_row(&self, row: &[i64]) -> Result<Self> {
        if row.len() != self.cols {
            return Err(Error::Shape {
                expected: self.cols,
                found: row.len(),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(row.iter().map(|&x| BigInt::from(x)));
        Ok(IntMatrix {
            rows: self.rows + 1,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self[(r, c)].is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for c in 0..self.cols {
            let delta = factor * &self[(src, c)];
            self[(dst, c)] += delta;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let delta = factor * &self[(r, src)];
            self[(r, dst)] += delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let x = core::mem::take(&mut self[(r, c)]);
            self[(r, c)] = -x;
        }
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.entries[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }
}

/// The banded matrix `M_k`: `k_i + 1` on the diagonal, `-k_{i+1}` on the
/// superdiagonal and `-k_1` in the bottom-left corner.
pub fn build_mk(k: &[i64]) -> Result<IntMatrix> {
    if k.len() < 2 {
        return Err(Error::InvalidSignature("need at least two entries"));
    }
    if k.iter().any(|&x| x < 0) {
        return Err(Error::InvalidSignature("entries must be nonnegative"));
    }
    let n = k.len();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        let next = (i + 1) % n;
        m[(i, i)] = BigInt::from(k[i] + 1);
        m[(i, next)] = BigInt::from(-k[next]);
    }
    Ok(m)
}

/// `Π(k_i + 1) - Π k_i`.
pub fn closed_form_dk(k: &[i64]) -> BigInt {
    let plus: BigInt = k.iter().map(|&x| BigInt::from(x + 1)).product();
    let plain: BigInt = k.iter().map(|&x| BigInt::from(x)).product();
    plus - plain
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                // exact by Sylvester's identity
                a[(i, j)] = num / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * &a[(n - 1, n - 1)])
}

/// `u · m · v = s` with `u`, `v` unimodular and `s` in Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries of `s`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

/// Smith normal form by elementary row and column operations, always
/// pivoting on the smallest nonzero entry of the remaining block.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    'diag: for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &a[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'diag };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, t)] / &a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(t, j)] / &a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)])));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { s: a, u, v }
}

/// Whether `target` is an integer combination of the rows of `rows`.
///
/// Solved in Smith coordinates: `x·m = t` has an integer solution iff
/// `(t·v)_j` is divisible by `s_j` for every `j`, with zero required
/// wherever `s_j` vanishes.
pub fn integer_span_contains<T>(rows: &IntMatrix, target: &[T]) -> Result<bool>
where
    T: Clone + Into<BigInt>,
{
    if target.len() != rows.cols {
        return Err(Error::Shape {
            expected: rows.cols,
            found: target.len(),
        });
    }
    let t: Vec<BigInt> = target.iter().cloned().map(Into::into).collect();
    let snf = smith_normal_form(rows);
    let diag = snf.diagonal();
    for j in 0..rows.cols {
        let mut c = BigInt::zero();
        for (i, ti) in t.iter().enumerate() {
            c += ti * &snf.v[(i, j)];
        }
        let s = diag.get(j).cloned().unwrap_or_else(BigInt::zero);
        let ok = if s.is_zero() {
            c.is_zero()
        } else {
            c.is_multiple_of(&s)
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Row-style Hermite normal form of the lattice spanned by the rows.
///
/// Returns only the nonzero rows. Each row's leading entry is positive and
/// strictly larger than every entry above it in the same column, which
/// sits in `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let mut pivot_row = 0;
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..a.rows {
                if a[(r, col)].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| a[(r, col)].abs() < a[(b, col)].abs()) {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            a.swap_rows(pivot_row, b);
            let mut done = true;
            for r in pivot_row + 1..a.rows {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let q = -a[(r, col)].div_floor(&a[(pivot_row, col)]);
                a.add_row_multiple(r, pivot_row, &q);
                done &= a[(r, col)].is_zero();
            }
            if done {
                break;
            }
        }
        if a[(pivot_row, col)].is_zero() {
            continue;
        }
        if a[(pivot_row, col)].is_negative() {
            a.negate_row(pivot_row);
        }
        for r in 0..pivot_row {
            let q = -a[(r, col)].div_floor(&a[(pivot_row, col)]);
            if !q.is_zero() {
                a.add_row_multiple(r, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    let entries = a.entries[..pivot_row * a.cols].to_vec();
    IntMatrix {
        rows: pivot_row,
        cols: a.cols,
        entries,
    }
}
