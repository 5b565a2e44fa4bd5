//! Dense exact matrices over ℚ or ℚ(i).
//!
//! Matrices double as linear maps and as bilinear forms. A form `b` is stored
//! as the matrix of the induced map `V → V*`, so that `b(u, v) = vᵀ B u`;
//! with this convention a form is skew (resp. symmetric) exactly when its
//! matrix is, and compositions like `ε ∘ J` are literal matrix products.
//! Dimensions in this crate stay small (≤ 24), so everything is dense and
//! elimination-based.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactla::scalar::{CRat, Field, Rat};

/// Dense row-major matrix with entries in `K`.
#[derive(Clone, PartialEq)]
pub struct Mat<K: Field> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> fmt::Debug for Mat<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<K: Field> Index<(usize, usize)> for Mat<K> {
    type Output = K;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl<K: Field> IndexMut<(usize, usize)> for Mat<K> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.data[i * self.cols + j]
    }
}

impl<K: Field> Mat<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(ambient: usize, cols: Vec<Vec<K>>) -> Self {
        let c = cols.len();
        let mut m = Mat::zeros(ambient, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), ambient, "column length mismatch");
            for i in 0..ambient {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
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

    pub fn col(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<K> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat<K> {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Mat<L> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn conj(&self) -> Mat<K> {
        self.map(|x| x.conj())
    }

    pub fn scale(&self, s: &K) -> Mat<K> {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(K::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && self.transpose() == -self
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat<K>) -> Mat<K> {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { other[(i, j - self.cols)].clone() }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Mat<K>) -> Mat<K> {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        Mat::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows { self[(i, j)].clone() } else { other[(i - self.rows, j)].clone() }
        })
    }

    pub fn block_diag(&self, other: &Mat<K>) -> Mat<K> {
        Mat::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)].clone()
            } else {
                K::zero()
            }
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat<K> {
        Mat::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    acc = acc + self[(i, j)].clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    /// Row-reduce in place to reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
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
            }
            let inv = self[(r, c)].inv();
            for j in 0..self.cols {
                self[(r, j)] = self[(r, j)].clone() * inv.clone();
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in 0..self.cols {
                        let v = self[(i, j)].clone() - factor.clone() * self[(r, j)].clone();
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the null space `{x : Ax = 0}`, returned as matrix columns.
    pub fn kernel_basis(&self) -> Mat<K> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut cols = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![K::zero(); self.cols];
            v[f] = K::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, f)].clone();
            }
            cols.push(v);
        }
        Mat::from_cols(self.cols, cols)
    }

    /// One exact solution of `Ax = b`, if the system is consistent.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        assert_eq!(self.rows, b.len(), "solve shape mismatch");
        let rhs = Mat::from_cols(self.rows, vec![b.to_vec()]);
        self.solve_mat(&rhs).map(|m| m.col(0))
    }

    /// Columnwise exact solution of `AX = B`, if every column is consistent.
    pub fn solve_mat(&self, b: &Mat<K>) -> Option<Mat<K>> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        let mut aug = self.hstack(b);
        let pivots = aug.rref_in_place();
        // Any pivot landing in the right block marks an inconsistent column.
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = aug[(r, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat<K>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Mat::identity(n));
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }

    pub fn det(&self) -> K {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = K::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return K::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            det = det * m[(c, c)].clone();
            let inv = m[(c, c)].inv();
            for i in (c + 1)..n {
                if !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone() * inv.clone();
                    for j in c..n {
                        let v = m[(i, j)].clone() - factor.clone() * m[(c, j)].clone();
                        m[(i, j)] = v;
                    }
                }
            }
        }
        det
    }

    /// Restriction of a bilinear form to the span of `basis`: `Bᵀ M B`.
    pub fn restrict_form(&self, basis: &Mat<K>) -> Mat<K> {
        &(&basis.transpose() * self) * basis
    }

    pub fn commutes_with(&self, other: &Mat<K>) -> bool {
        self * other == other * self
    }
}

impl Mat<Rat> {
    /// Entrywise embedding ℚ → ℚ(i).
    pub fn complexify(&self) -> Mat<CRat> {
        self.map(|x| CRat::from_rat(x.clone()))
    }

    /// Exact Sylvester test: symmetric with all leading principal minors positive.
    pub fn is_positive_definite(&self) -> Result<bool> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        for k in 1..=self.rows {
            let minor = self.submatrix(&idx[..k], &idx[..k]).det();
            if minor <= Rat::from_integer(0.into()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Mat<CRat> {
    pub fn real_part(&self) -> Mat<Rat> {
        self.map(|x| x.re.clone())
    }

    pub fn imag_part(&self) -> Mat<Rat> {
        self.map(|x| x.im.clone())
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|x| x.im == Rat::from_integer(0.into()))
    }
}

impl<K: Field> Add for &Mat<K> {
    type Output = Mat<K>;

    fn add(self, rhs: &Mat<K>) -> Mat<K> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape mismatch");
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() + rhs[(i, j)].clone())
    }
}

impl<K: Field> Sub for &Mat<K> {
    type Output = Mat<K>;

    fn sub(self, rhs: &Mat<K>) -> Mat<K> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape mismatch");
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - rhs[(i, j)].clone())
    }
}

impl<K: Field> Neg for &Mat<K> {
    type Output = Mat<K>;

    fn neg(self) -> Mat<K> {
        self.map(|x| -x.clone())
    }
}

impl<K: Field> Mul for &Mat<K> {
    type Output = Mat<K>;

    fn mul(self, rhs: &Mat<K>) -> Mat<K> {
        assert_eq!(self.cols, rhs.rows, "mul shape mismatch");
        let mut out: Mat<K> = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::scalar::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn transpose_involution_and_product_shapes() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.transpose().transpose(), a);
        let b = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let ab = &a * &b;
        assert_eq!((ab.rows(), ab.cols()), (2, 2));
    }

    #[test]
    fn mul_is_associative_on_conforming_shapes() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 1]]);
        let c = m(&[&[2, -1], &[1, 0]]);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn solve_reproduces_rhs_exactly() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = vec![rat(5), rat(10)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert_eq!(x, vec![rat(1), rat(3)]);
    }

    #[test]
    fn inconsistent_system_is_rejected() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let z: Mat<Rat> = Mat::zeros(2, 3);
        assert_eq!(z.kernel_basis().cols(), 3);
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1], &[1, 2]]);
        assert_eq!(a.det(), rat(3));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Mat::identity(2));
        assert_eq!(inv[(0, 0)], ratio(2, 3));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn sylvester_positive_definite_test() {
        assert!(Mat::<Rat>::identity(3).is_positive_definite().unwrap());
        assert!(!m(&[&[1, 0], &[0, -1]]).is_positive_definite().unwrap());
        assert!(m(&[&[2, 1], &[1, 2]]).is_positive_definite().unwrap());
        assert!(m(&[&[0, 1], &[1, 0]]).is_positive_definite().is_err() == false);
        assert!(!m(&[&[0, 1], &[1, 0]]).is_positive_definite().unwrap());
        assert!(m(&[&[1, 2], &[3, 4]]).is_positive_definite().is_err());
    }
}
