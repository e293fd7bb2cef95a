//! Small dense matrices over a [`Scalar`].
//!
//! Row-major storage. Elimination uses partial pivoting by magnitude in float
//! mode (pivots with `|p| <= eps` count as zero) and first-nonzero pivoting
//! in exact mode.

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, v) in entries.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Each input vector becomes one column.
    pub fn from_cols(cols: &[Vec<S>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
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

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(Scalar::to_f64)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "vector length differs from column count");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|v| v.clone() * s.clone())
    }

    /// Entrywise comparison within `eps` (exact for rationals).
    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| (a.clone() - b.clone()).is_negligible(eps))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self, eps: f64) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = m.pick_pivot(row, col, eps) else {
                // Clear float residue so later rows don't pick it up.
                if !S::EXACT {
                    for r in row..m.rows {
                        m[(r, col)] = S::zero();
                    }
                }
                continue;
            };
            m.swap_rows(row, p);
            let inv = S::one() / m[(row, col)].clone();
            for c in col..m.cols {
                m[(row, c)] = m[(row, c)].clone() * inv.clone();
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let delta = factor.clone() * m[(row, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - delta;
                }
                m[(r, col)] = S::zero();
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn pick_pivot(&self, from_row: usize, col: usize, eps: f64) -> Option<usize> {
        if S::EXACT {
            (from_row..self.rows).find(|&r| !self[(r, col)].is_zero())
        } else {
            let best = (from_row..self.rows)
                .max_by(|&a, &b| {
                    self[(a, col)].to_f64().abs().total_cmp(&self[(b, col)].to_f64().abs())
                })?;
            (!self[(best, col)].is_negligible(eps)).then_some(best)
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn rank(&self, eps: f64) -> usize {
        self.rref(eps).1.len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column.
    pub fn null_space(&self, eps: f64) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref(eps);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (prow, &pcol) in pivots.iter().enumerate() {
                    v[pcol] = -r[(prow, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> S {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = S::one();
        for col in 0..n {
            let p = if S::EXACT {
                (col..n).find(|&r| !m[(r, col)].is_zero())
            } else {
                (col..n).max_by(|&a, &b| m[(a, col)].to_f64().abs().total_cmp(&m[(b, col)].to_f64().abs()))
            };
            let Some(p) = p.filter(|&p| !m[(p, col)].is_zero()) else {
                return S::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = det * pivot.clone();
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() / pivot.clone();
                for c in col..n {
                    let delta = factor.clone() * m[(col, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - delta;
                }
            }
        }
        det
    }

    /// Inverse via Gauss-Jordan; `None` when singular at tolerance `eps`.
    pub fn inverse(&self, eps: f64) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = S::one();
        }
        let (red, pivots) = aug.rref(eps);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red[(r, n + c)].clone();
            }
        }
        Some(inv)
    }

    /// Solves `self * x = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &[S], eps: f64) -> Option<Vec<S>> {
        Some(self.inverse(eps)?.mul_vec(rhs))
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.data[r * self.cols + c]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.data[r * self.cols + c]
    }
}

/// Basis of the span of `vectors`, as the nonzero rows of their RREF.
pub fn span_basis<S: Scalar>(vectors: &[Vec<S>], dim: usize, eps: f64) -> Vec<Vec<S>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec());
    debug_assert_eq!(m.cols(), dim);
    let (r, pivots) = m.rref(eps);
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Membership of `v` in the span of `basis`.
pub fn in_span<S: Scalar>(basis: &[Vec<S>], v: &[S], eps: f64) -> bool {
    let mut rows = basis.to_vec();
    let before = if rows.is_empty() { 0 } else { Matrix::from_rows(rows.clone()).rank(eps) };
    rows.push(v.to_vec());
    Matrix::from_rows(rows).rank(eps) == before
}

/// Coefficients of `v` in the linearly independent `basis`, or `None` when
/// `v` is outside their span.
pub fn coordinates_in<S: Scalar>(basis: &[Vec<S>], v: &[S], eps: f64) -> Option<Vec<S>> {
    let mut cols = basis.to_vec();
    cols.push(v.to_vec());
    let k = basis.len();
    let (r, pivots) = Matrix::from_cols(&cols).rref(eps);
    if pivots.contains(&k) || pivots.len() < k {
        return None;
    }
    Some((0..k).map(|i| r[(i, k)].clone()).collect())
}

pub fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};
    use num_traits::Zero;

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v, 1)).collect()).collect())
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = qm(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2*(3-2) - 0 + 1*(1-3) = 0
        assert_eq!(m.determinant(), q(0, 1));
        let m = qm(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant(), q(-1, 1));
    }

    #[test]
    fn null_space_is_annihilated() {
        let m = qm(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 0, 1, 1]]);
        let ns = m.null_space(0.0);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = qm(&[&[1, 2], &[3, 5]]);
        let inv = m.inverse(0.0).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(qm(&[&[1, 2], &[2, 4]]).inverse(0.0).is_none());
    }

    #[test]
    fn float_rank_respects_tolerance() {
        let m = Matrix::from_rows(vec![vec![1.0, 1.0], vec![1.0, 1.0 + 1e-12]]);
        assert_eq!(m.rank(1e-9), 1);
        assert_eq!(m.rank(1e-14), 2);
    }

    #[test]
    fn span_membership() {
        let basis = vec![vec![q(1, 1), q(0, 1), q(1, 1)]];
        assert!(in_span(&basis, &[q(2, 1), q(0, 1), q(2, 1)], 0.0));
        assert!(!in_span(&basis, &[q(0, 1), q(1, 1), q(0, 1)], 0.0));
    }
}
