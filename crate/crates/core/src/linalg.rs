//! Dense and sparse matrices over any [`Scalar`] field, with the handful of
//! elimination routines the rest of the crate needs: determinant, rank,
//! inverse, nullspace, and an incremental sparse echelon form.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Self { rows: n, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
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

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_negligible())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    /// Matrix product; zero entries of `self` are skipped, which matters for
    /// the very sparse adjoint matrices.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
            })
            .collect()
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc.add_ref(&self[(i, i)]))
    }

    /// `selfᵀ · form · self`, the pullback of a bilinear form.
    pub fn congruence(&self, form: &Self) -> Self {
        self.transpose().mul(form).mul(self)
    }

    fn pivot_in_column(&self, col: usize, from_row: usize) -> Option<usize> {
        if S::EXACT {
            (from_row..self.rows).find(|&r| !self[(r, col)].is_zero())
        } else {
            (from_row..self.rows)
                .filter(|&r| !self[(r, col)].is_negligible())
                .max_by(|&a, &b| self[(a, col)].magnitude().total_cmp(&self[(b, col)].magnitude()))
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = self.pivot_in_column(c, r) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = S::one().div_ref(&self[(r, c)]);
            for j in c..self.cols {
                let idx = r * self.cols + j;
                if !self.data[idx].is_zero() {
                    self.data[idx] = self.data[idx].mul_ref(&inv);
                }
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    let pivot_entry = &self.data[r * self.cols + j];
                    if pivot_entry.is_zero() {
                        continue;
                    }
                    let delta = factor.mul_ref(pivot_entry);
                    let idx = i * self.cols + j;
                    self.data[idx] = self.data[idx].sub_ref(&delta);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> S {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = S::one();
        for c in 0..n {
            let Some(p) = m.pivot_in_column(c, c) else {
                return S::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det.mul_ref(&pivot);
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].div_ref(&pivot);
                for j in c..n {
                    let pe = &m.data[c * n + j];
                    if pe.is_zero() {
                        continue;
                    }
                    let delta = factor.mul_ref(pe);
                    m.data[i * n + j] = m.data[i * n + j].sub_ref(&delta);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                S::one()
            } else {
                S::zero()
            }
        });
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    /// Basis of `{ v : self · v = 0 }`.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m[(r, f)].clone();
                }
                v
            })
            .collect()
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Row-major sparse matrix; each row holds `(column, value)` sorted by column.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<S> {
    cols: usize,
    rows: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![Vec::new(); rows],
        }
    }

    pub fn from_dense(m: &Matrix<S>) -> Self {
        let rows = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        Self { cols: m.cols(), rows }
    }

    pub fn to_dense(&self) -> Matrix<S> {
        let mut m = Matrix::zeros(self.rows.len(), self.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                m[(i, *j)] = v.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Adds `value` to entry `(i, j)`.
    pub fn add_entry(&mut self, i: usize, j: usize, value: S) {
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => {
                let sum = row[pos].1.add_ref(&value);
                if sum.is_zero() {
                    row.remove(pos);
                } else {
                    row[pos].1 = sum;
                }
            }
            Err(pos) => {
                if !value.is_zero() {
                    row.insert(pos, (j, value));
                }
            }
        }
    }

    pub fn row(&self, i: usize) -> &[(usize, S)] {
        &self.rows[i]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Diagonal entries when the matrix is square and diagonal.
    pub fn as_diagonal(&self) -> Option<Vec<S>> {
        if self.rows.len() != self.cols {
            return None;
        }
        let mut diag = vec![S::zero(); self.cols];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                if *j != i {
                    return None;
                }
                diag[i] = v.clone();
            }
        }
        Some(diag)
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .fold(S::zero(), |acc, (j, a)| acc.add_ref(&a.mul_ref(&v[*j])))
            })
            .collect()
    }
}

/// Incrementally maintained echelon basis of a row space, stored sparsely.
///
/// Each stored row has leading coefficient 1 at its pivot column; inserting a
/// new row reduces it against existing pivots and keeps it if a nonzero
/// remainder survives.
#[derive(Clone, Debug)]
pub struct SparseEchelon<S> {
    ncols: usize,
    pivots: HashMap<usize, Vec<(usize, S)>>,
}

impl<S: Scalar> SparseEchelon<S> {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }

    /// Inserts a row given as `(column, value)` pairs in any order with
    /// possible repeats. Returns true when the row was independent.
    pub fn insert(&mut self, entries: impl IntoIterator<Item = (usize, S)>) -> bool {
        let mut row: Vec<(usize, S)> = Vec::new();
        let mut raw: Vec<(usize, S)> = entries.into_iter().collect();
        raw.sort_by_key(|(c, _)| *c);
        for (c, v) in raw {
            debug_assert!(c < self.ncols);
            match row.last_mut() {
                Some((lc, lv)) if *lc == c => *lv = lv.add_ref(&v),
                _ => row.push((c, v)),
            }
        }
        row.retain(|(_, v)| !v.is_negligible());

        while let Some((lead, coeff)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(pivot_row) => {
                    row = axpy_sparse(&row, &coeff, pivot_row);
                }
                None => {
                    let inv = S::one().div_ref(&coeff);
                    for (_, v) in row.iter_mut() {
                        *v = v.mul_ref(&inv);
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }
}

/// `row - c * pivot` on sorted sparse rows.
fn axpy_sparse<S: Scalar>(row: &[(usize, S)], c: &S, pivot: &[(usize, S)]) -> Vec<(usize, S)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_pivot {
            out.push((pivot[j].0, -c.mul_ref(&pivot[j].1)));
            j += 1;
        } else {
            let v = row[i].1.sub_ref(&c.mul_ref(&pivot[j].1));
            if !v.is_negligible() {
                out.push((row[i].0, v));
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
    use crate::scalar::ratio;
    use crate::Rational;

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| ratio(x, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn determinant_and_inverse() {
        let m = q(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.determinant(), ratio(18, 1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        let singular = q(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.determinant(), ratio(0, 1));
    }

    #[test]
    fn determinant_tracks_row_swaps() {
        let p = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(p.determinant(), ratio(-1, 1));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = q(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|x| *x == ratio(0, 1)));
        }
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn float_instantiation_agrees() {
        let m: Matrix<f64> = Matrix::from_rows(vec![vec![4.0, 3.0], vec![6.0, 3.0]]);
        assert!((m.determinant() - (-6.0)).abs() < 1e-12);
    }

    #[test]
    fn sparse_echelon_rank() {
        let mut e = SparseEchelon::<Rational>::new(3);
        assert!(e.insert([(0, ratio(1, 1)), (1, ratio(1, 1))]));
        assert!(e.insert([(1, ratio(1, 1)), (2, ratio(1, 1))]));
        // (1,0,-1) = first - second
        assert!(!e.insert([(0, ratio(1, 1)), (2, ratio(-1, 1))]));
        assert!(!e.insert([(0, ratio(0, 1))]));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.nullity(), 1);
    }

    #[test]
    fn sparse_round_trip_and_diagonal() {
        let m = q(&[&[1, 0], &[0, -2]]);
        let s = SparseMatrix::from_dense(&m);
        assert_eq!(s.to_dense(), m);
        assert_eq!(s.as_diagonal(), Some(vec![ratio(1, 1), ratio(-2, 1)]));
        let mut t = SparseMatrix::<Rational>::new(2, 2);
        t.add_entry(0, 1, ratio(1, 1));
        assert!(t.as_diagonal().is_none());
        t.add_entry(0, 1, ratio(-1, 1));
        assert_eq!(t.nnz(), 0);
    }
}
