//! Subspaces of `K^m` in canonical reduced column-echelon form.
//!
//! The canonical form is unique per subspace: pivots are found scanning rows
//! top to bottom, each pivot is normalized to 1 and its row is cleared in all
//! other basis columns. Two subspaces are therefore equal as sets if and only
//! if their stored bases are identical, which makes equality a plain
//! comparison and every lattice identity an exact check.

use crate::error::{Error, Result};
use crate::exactla::matrix::Mat;
use crate::exactla::scalar::{CRat, Field, Rat};

#[derive(Clone, PartialEq)]
pub struct Subspace<K: Field> {
    ambient: usize,
    /// `ambient × dim` matrix whose columns are the canonical basis.
    basis: Mat<K>,
    /// Pivot row of each basis column, strictly increasing.
    pivots: Vec<usize>,
}

impl<K: Field> std::fmt::Debug for Subspace<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of K^{}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

impl<K: Field> Subspace<K> {
    /// Canonicalize the column span of `raw_basis`. Zero columns are dropped;
    /// the zero matrix yields the zero subspace. Idempotent by construction.
    pub fn from_span(raw_basis: &Mat<K>) -> Self {
        let ambient = raw_basis.rows();
        let mut cols: Vec<Vec<K>> = (0..raw_basis.cols()).map(|j| raw_basis.col(j)).collect();
        let mut pivots = Vec::new();
        let mut filled = 0;
        for row in 0..ambient {
            let Some(j) = (filled..cols.len()).find(|&j| !cols[j][row].is_zero()) else {
                continue;
            };
            cols.swap(filled, j);
            let inv = cols[filled][row].inv();
            for x in cols[filled].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for j in 0..cols.len() {
                if j != filled && !cols[j][row].is_zero() {
                    let factor = cols[j][row].clone();
                    for i in 0..ambient {
                        let v = cols[j][i].clone() - factor.clone() * cols[filled][i].clone();
                        cols[j][i] = v;
                    }
                }
            }
            pivots.push(row);
            filled += 1;
        }
        cols.truncate(filled);
        Subspace { ambient, basis: Mat::from_cols(ambient, cols), pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::zeros(ambient, 0), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn span_of_vectors(ambient: usize, vectors: &[Vec<K>]) -> Self {
        Subspace::from_span(&Mat::from_cols(ambient, vectors.to_vec()))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat<K> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_ambient(&self, other: &Subspace<K>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of K^{} and K^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace<K>) -> Result<Subspace<K>> {
        self.check_ambient(other)?;
        Ok(Subspace::from_span(&self.basis.hstack(&other.basis)))
    }

    /// Intersection via the kernel of `[A | -B]`: a vector lies in both spans
    /// exactly when some `A a = B b`.
    pub fn intersect(&self, other: &Subspace<K>) -> Result<Subspace<K>> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let joined = self.basis.hstack(&(-&other.basis));
        let ker = joined.kernel_basis();
        let a_part = Mat::from_fn(self.dim(), ker.cols(), |i, j| ker[(i, j)].clone());
        Ok(Subspace::from_span(&(&self.basis * &a_part)))
    }

    pub fn contains_vector(&self, v: &[K]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in K^{}",
                v.len(),
                self.ambient
            )));
        }
        Ok(self.coords_of(v).is_some())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    /// Pivot rows of the canonical basis are unit rows, so the candidate
    /// coordinates can be read off directly and then verified.
    pub fn coords_of(&self, v: &[K]) -> Option<Vec<K>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<K> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let reproduced = self.basis.mul_vec(&coords);
        if reproduced == v { Some(coords) } else { None }
    }

    pub fn contains_subspace(&self, other: &Subspace<K>) -> Result<bool> {
        self.check_ambient(other)?;
        for j in 0..other.dim() {
            if !self.contains_vector(&other.basis.col(j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image (column span) of a linear map.
    pub fn image(m: &Mat<K>) -> Subspace<K> {
        Subspace::from_span(m)
    }

    /// Kernel of a linear map, as a subspace of the domain.
    pub fn kernel(m: &Mat<K>) -> Subspace<K> {
        Subspace::from_span(&m.kernel_basis())
    }

    /// Preimage `{x : Mx ∈ A}`.
    pub fn preimage(m: &Mat<K>, a: &Subspace<K>) -> Result<Subspace<K>> {
        if m.rows() != a.ambient {
            return Err(Error::DimensionMismatch(format!(
                "map into K^{} against subspace of K^{}",
                m.rows(),
                a.ambient
            )));
        }
        if a.is_zero() {
            return Ok(Subspace::kernel(m));
        }
        let joined = m.hstack(&(-a.basis()));
        let ker = joined.kernel_basis();
        let x_part = Mat::from_fn(m.cols(), ker.cols(), |i, j| ker[(i, j)].clone());
        Ok(Subspace::from_span(&x_part))
    }

    /// Image of this subspace under a linear map.
    pub fn map_by(&self, m: &Mat<K>) -> Result<Subspace<K>> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "map from K^{} applied to subspace of K^{}",
                m.cols(),
                self.ambient
            )));
        }
        Ok(Subspace::from_span(&(m * &self.basis)))
    }

    /// Annihilator `{α ∈ V* : α|_A = 0}`, in dual coordinates.
    pub fn annihilator(&self) -> Subspace<K> {
        Subspace::kernel(&self.basis.transpose())
    }

    /// Deterministic complement: the standard basis vectors at non-pivot rows.
    pub fn complement(&self) -> Subspace<K> {
        let cols: Vec<Vec<K>> = (0..self.ambient)
            .filter(|r| !self.pivots.contains(r))
            .map(|r| {
                let mut v = vec![K::zero(); self.ambient];
                v[r] = K::one();
                v
            })
            .collect();
        Subspace::span_of_vectors(self.ambient, &cols)
    }

    pub fn conjugate(&self) -> Subspace<K> {
        Subspace::from_span(&self.basis.conj())
    }

    pub fn is_conjugation_invariant(&self) -> bool {
        *self == self.conjugate()
    }
}

impl Subspace<Rat> {
    pub fn complexify(&self) -> Subspace<CRat> {
        Subspace::from_span(&self.basis.complexify())
    }
}

impl Subspace<CRat> {
    /// The real subspace `R ⊆ ℚ^m` with `R ⊗ ℚ(i) = A`, for conjugation-invariant `A`.
    ///
    /// Writing a real vector as `A·(c_re + i·c_im)` and separating real and
    /// imaginary parts turns membership into a rational kernel computation.
    pub fn real_points(&self) -> Result<Subspace<Rat>> {
        if !self.is_conjugation_invariant() {
            return Err(Error::NotConjugationInvariant);
        }
        let re = self.basis.real_part();
        let im = self.basis.imag_part();
        // x = Re(A)·c_re - Im(A)·c_im is real iff Im(A)·c_re + Re(A)·c_im = 0.
        let constraint = im.hstack(&re);
        let ker = constraint.kernel_basis();
        let producer = re.hstack(&(-&im));
        let real = Subspace::from_span(&(&producer * &ker));
        debug_assert_eq!(real.dim(), self.dim());
        Ok(real)
    }
}
