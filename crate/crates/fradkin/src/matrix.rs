//! Dense matrices over exact scalars.

use std::fmt::Debug;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ext::ExtScalar;
use crate::rational::Q;

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn matmul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matmul shape");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let v = out[(i, j)].clone() + a.clone() * b.clone();
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "mul_vec shape");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "add shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "sub shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| x.clone() * k.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.matmul(o).sub(&o.matmul(self))
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Copy of the sub-block with the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }
}

impl Matrix<Q> {
    /// Row echelon form in place; returns pivot columns and the determinant sign flips.
    fn eliminate(&mut self, reduce: bool) -> (Vec<usize>, bool) {
        let mut pivots = Vec::new();
        let mut flipped = false;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
                flipped = !flipped;
            }
            let piv = self[(r, c)].clone();
            let lo = if reduce { 0 } else { r + 1 };
            if reduce {
                for j in c..self.cols {
                    let v = &self[(r, j)] / &piv;
                    self[(r, j)] = v;
                }
            }
            let prow: Vec<Q> = self.row(r).to_vec();
            let pv = if reduce { Q::one() } else { piv };
            for i in lo..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = &self[(i, c)] / &pv;
                for j in c..self.cols {
                    if prow[j].is_zero() {
                        continue;
                    }
                    let v = &self[(i, j)] - &f * &prow[j];
                    self[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, flipped)
    }

    pub fn det(&self) -> Q {
        assert!(self.is_square(), "det of non-square matrix");
        let mut m = self.clone();
        let (piv, flipped) = m.eliminate(false);
        if piv.len() < self.rows {
            return Q::zero();
        }
        let mut d = (0..self.rows).fold(Q::one(), |acc, i| acc * &m[(i, i)]);
        if flipped {
            d = -d;
        }
        d
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(false).0.len()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Q::one()
            } else {
                Q::zero()
            }
        });
        let (piv, _) = aug.eliminate(true);
        if piv.len() < n || piv.iter().any(|&c| c >= n) {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    /// Some solution of `self * x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows, "solve shape");
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (piv, _) = aug.eliminate(true);
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, &c) in piv.iter().enumerate() {
            x[c] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Diagonal of a congruence diagonalization `P^T A P = D` of a symmetric matrix.
    pub fn congruence_pivots(&self) -> Vec<Q> {
        assert!(
            self.is_symmetric(),
            "congruence diagonalization needs a symmetric matrix"
        );
        let mut a = self.clone();
        let n = a.rows;
        let mut out = Vec::with_capacity(n);
        let mut k = 0;
        while k < n {
            if a[(k, k)].is_zero() {
                if let Some(p) = (k + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                    a.swap_sym(k, p);
                } else if let Some(p) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                    // a_kk = 0 = a_pp, a_kp != 0: add row/col p to k, giving 2 a_kp on the diagonal
                    for j in 0..n {
                        let v = &a[(k, j)] + &a[(p, j)];
                        a[(k, j)] = v;
                    }
                    for i in 0..n {
                        let v = &a[(i, k)] + &a[(i, p)];
                        a[(i, k)] = v;
                    }
                } else if let Some((i, _)) = (k + 1..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[(i, j)].is_zero())
                {
                    a.swap_sym(k, i);
                    continue;
                } else {
                    out.extend((k..n).map(|_| Q::zero()));
                    break;
                }
            }
            let piv = a[(k, k)].clone();
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] / &piv;
                for j in k..n {
                    let v = &a[(i, j)] - &f * &a[(k, j)];
                    a[(i, j)] = v;
                }
            }
            for j in k + 1..n {
                a[(k, j)] = Q::zero();
            }
            for i in k + 1..n {
                for j in k + 1..i {
                    let v = a[(i, j)].clone();
                    a[(j, i)] = v;
                }
            }
            out.push(piv);
            k += 1;
        }
        out
    }

    fn swap_sym(&mut self, i: usize, j: usize) {
        let n = self.rows;
        for c in 0..n {
            self.data.swap(i * n + c, j * n + c);
        }
        for r in 0..n {
            self.data.swap(r * n + i, r * n + j);
        }
    }
}

impl Matrix<ExtScalar> {
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn is_antihermitian(&self) -> bool {
        self.add(&self.conj_transpose()).is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.entries().iter().all(|x| x.is_real())
    }

    /// All entries as rational coordinates, for linear independence tests over Q.
    pub fn flatten_rational(&self) -> Vec<Q> {
        self.entries().iter().flat_map(|x| x.coords()).collect()
    }
}

pub fn to_ext(m: &Matrix<Q>) -> Matrix<ExtScalar> {
    m.map(|x| ExtScalar::real(x.clone()))
}

/// Rank of a set of rational vectors.
pub fn rank_of_vectors(vs: &[Vec<Q>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    Matrix::from_rows(vs.to_vec()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qq};

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn det_and_inverse() {
        let a = m(&[&[0, 2, 1], &[1, 1, 0], &[3, 0, 1]]);
        assert_eq!(a.det(), q(-5));
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), Matrix::identity(3));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), q(0));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn rank_and_solve() {
        let a = m(&[&[1, 2], &[2, 4], &[0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.solve(&[q(3), q(6), q(1)]), Some(vec![q(1), q(1)]));
        assert_eq!(a.solve(&[q(3), q(5), q(1)]), None);
    }

    #[test]
    fn congruence_signature_of_hyperbolic_plane() {
        let a = m(&[&[0, 1], &[1, 0]]);
        let p = a.congruence_pivots();
        assert_eq!(p.len(), 2);
        assert_eq!(p.iter().filter(|x| **x > q(0)).count(), 1);
        assert_eq!(p.iter().filter(|x| **x < q(0)).count(), 1);
    }

    #[test]
    fn congruence_keeps_zero_block() {
        let a = m(&[&[0, 0, 0], &[0, 0, 3], &[0, 3, 0]]);
        let p = a.congruence_pivots();
        assert_eq!(p.iter().filter(|x| x.is_zero()).count(), 1);
        let b = Matrix::from_rows(vec![vec![qq(1, 2), q(1)], vec![q(1), q(2)]]);
        assert_eq!(b.congruence_pivots(), vec![qq(1, 2), q(0)]);
    }
}
