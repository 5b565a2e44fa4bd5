//! Linear Dirac structures: maximal isotropic subspaces of `V ⊕ V*`.
//!
//! Coordinates on `V ⊕ V*` are: first `n` entries the vector part, last `n`
//! entries the covector part in the dual basis. The symmetric pairing is
//! `⟨u+α, v+β⟩ = ½(α(v) + β(u))`; a Dirac structure is a maximal isotropic
//! subspace, always of dimension `n`.
//!
//! Every Dirac structure is `L(E, ε) = {u + α : u ∈ E, α|_E = ε(u)}` for a
//! unique skew form `ε` on `E = π(L)`; [`Dirac::decompose`] and
//! [`Dirac::build`] convert between the two views exactly. Push-forward and
//! pull-back along linear maps are implemented twice: definitionally, as a
//! relation composition in subspace arithmetic, and through closed formulas;
//! the pair is kept as a cross-check (`debug_assert` in the wrappers, and the
//! verification suites compare them on random inputs).

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, Subspace};

/// A linear Dirac structure on an `n`-dimensional space over `K`.
#[derive(Clone, PartialEq, Debug)]
pub struct Dirac<K: Field> {
    v_dim: usize,
    space: Subspace<K>,
}

/// The `(E, ε)` view of a Dirac structure; `eps` is expressed in the
/// canonical basis of `e` (as the matrix of `ε: E → E*`).
#[derive(Clone, PartialEq, Debug)]
pub struct EEpsilon<K: Field> {
    pub e: Subspace<K>,
    pub eps: Mat<K>,
}

/// Pairing `⟨u+α, v+β⟩ = ½(α(v) + β(u))` of two vectors in `K^{2n}`.
pub fn pairing<K: Field>(z: &[K], w: &[K]) -> Result<K> {
    if z.len() != w.len() || z.len() % 2 != 0 {
        return Err(Error::DimensionMismatch(format!(
            "pairing of vectors of length {} and {}",
            z.len(),
            w.len()
        )));
    }
    let n = z.len() / 2;
    let mut acc = K::zero();
    for i in 0..n {
        acc = acc + z[n + i].clone() * w[i].clone() + w[n + i].clone() * z[i].clone();
    }
    Ok(acc / K::from_i64(2))
}

/// True iff `space ⊆ K^{2n}` is maximal isotropic for the pairing.
pub fn is_maximal_isotropic<K: Field>(space: &Subspace<K>, v_dim: usize) -> bool {
    if space.ambient_dim() != 2 * v_dim || space.dim() != v_dim {
        return false;
    }
    let b = space.basis();
    for i in 0..v_dim {
        for j in i..v_dim {
            let p = pairing(&b.col(i), &b.col(j)).expect("conforming columns");
            if !p.is_zero() {
                return false;
            }
        }
    }
    true
}

impl<K: Field> Dirac<K> {
    /// Wrap a subspace of `K^{2n}`, validating maximal isotropy.
    pub fn from_subspace(v_dim: usize, space: Subspace<K>) -> Result<Self> {
        if space.ambient_dim() != 2 * v_dim {
            return Err(Error::DimensionMismatch(format!(
                "subspace of K^{} cannot be a Dirac structure on K^{}",
                space.ambient_dim(),
                v_dim
            )));
        }
        if !is_maximal_isotropic(&space, v_dim) {
            return Err(Error::NotMaximalIsotropic(format!(
                "dimension {} in K^{}, or nonzero pairing on the span",
                space.dim(),
                2 * v_dim
            )));
        }
        Ok(Dirac { v_dim, space })
    }

    /// `L(E, ε)`: basis vectors `u_i + ε̃(u_i)` for the canonical basis of `E`
    /// together with a basis of `Ann(E)`. The extension `ε̃` puts the values
    /// of `ε(u_i)` at the pivot rows of `E` and zero elsewhere; the result is
    /// extension-independent after canonicalization.
    pub fn build(e: &Subspace<K>, eps: &Mat<K>) -> Result<Self> {
        let n = e.ambient_dim();
        let k = e.dim();
        if eps.rows() != k || eps.cols() != k {
            return Err(Error::DimensionMismatch(format!(
                "form of shape {}x{} on a subspace of dimension {}",
                eps.rows(),
                eps.cols(),
                k
            )));
        }
        if !eps.is_skew() {
            return Err(Error::NotSkew("building a Dirac structure".into()));
        }
        let mut cols: Vec<Vec<K>> = Vec::with_capacity(n);
        for i in 0..k {
            let mut v = vec![K::zero(); 2 * n];
            for (r, x) in e.basis().col(i).into_iter().enumerate() {
                v[r] = x;
            }
            for (j, &p) in e.pivots().iter().enumerate() {
                v[n + p] = eps[(j, i)].clone();
            }
            cols.push(v);
        }
        let ann = e.annihilator();
        for j in 0..ann.dim() {
            let mut v = vec![K::zero(); 2 * n];
            for (r, x) in ann.basis().col(j).into_iter().enumerate() {
                v[n + r] = x;
            }
            cols.push(v);
        }
        Dirac::from_subspace(n, Subspace::span_of_vectors(2 * n, &cols))
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn space(&self) -> &Subspace<K> {
        &self.space
    }

    fn top_half(&self) -> Mat<K> {
        let b = self.space.basis();
        Mat::from_fn(self.v_dim, b.cols(), |i, j| b[(i, j)].clone())
    }

    fn bottom_half(&self) -> Mat<K> {
        let b = self.space.basis();
        Mat::from_fn(self.v_dim, b.cols(), |i, j| b[(self.v_dim + i, j)].clone())
    }

    /// `π(L) ⊆ V`.
    pub fn tangent_range(&self) -> Subspace<K> {
        Subspace::image(&self.top_half())
    }

    /// `*π(L) ⊆ V*`.
    pub fn cotangent_range(&self) -> Subspace<K> {
        Subspace::image(&self.bottom_half())
    }

    /// `V ∩ L`, as a subspace of `V`.
    pub fn tangent_intersection(&self) -> Subspace<K> {
        // Elements of L with zero covector part.
        let coords = self.bottom_half().kernel_basis();
        Subspace::image(&(&self.top_half() * &coords))
    }

    /// The unique `(E, ε)` with `L = L(E, ε)`; checks the kernel identities
    /// `V ∩ L = ker ε` and `*π(L) = Ann(V ∩ L)` before returning.
    pub fn decompose(&self) -> Result<EEpsilon<K>> {
        let e = self.tangent_range();
        let k = e.dim();
        let top = self.top_half();
        let bottom = self.bottom_half();
        // One lift u_i + α_i per canonical basis vector of E; ε is
        // independent of the choice because lifts differ by Ann(E) parts.
        let lifts = top
            .solve_mat(e.basis())
            .ok_or_else(|| Error::Internal("tangent range lift must exist".into()))?;
        let alphas = &bottom * &lifts;
        let mut eps = Mat::zeros(k, k);
        for j in 0..k {
            for i in 0..k {
                let mut acc = K::zero();
                for r in 0..self.v_dim {
                    acc = acc + alphas[(r, j)].clone() * e.basis()[(r, i)].clone();
                }
                eps[(i, j)] = acc;
            }
        }
        if !eps.is_skew() {
            return Err(Error::Internal("decomposed form is not skew".into()));
        }
        let out = EEpsilon { e, eps };
        debug_assert!(self.kernel_identities_hold(&out));
        Ok(out)
    }

    /// `V ∩ L = ker ε` and `*π(L) = Ann(V ∩ L)`.
    pub fn kernel_identities_hold(&self, ee: &EEpsilon<K>) -> bool {
        let ker_eps_in_v = Subspace::image(&(ee.e.basis() * &ee.eps.kernel_basis()));
        self.tangent_intersection() == ker_eps_in_v
            && self.cotangent_range() == ker_eps_in_v.annihilator()
    }

    /// Push-forward along `f: V → W`, computed set-theoretically:
    /// pull the covector part back through `fᵀ`, intersect with `L` inside
    /// `V ⊕ W*`, then push the vector part forward through `f`.
    pub fn pushforward_def(&self, f: &Mat<K>) -> Result<Dirac<K>> {
        let n = self.v_dim;
        let m = f.rows();
        if f.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "map of shape {}x{} from K^{}",
                f.rows(),
                f.cols(),
                n
            )));
        }
        // (X, η) ∈ V ⊕ W*  ↦  (X, fᵀη) ∈ V ⊕ V*
        let into_l = Mat::identity(n).block_diag(&f.transpose());
        let graph = Subspace::preimage(&into_l, &self.space)?;
        // (X, η) ↦ (fX, η)
        let out = f.block_diag(&Mat::identity(m));
        let image = graph.map_by(&out)?;
        Dirac::from_subspace(m, image)
            .map_err(|_| Error::Internal("push-forward lost maximal isotropy".into()))
    }

    /// Push-forward through the closed formula
    /// `f_*(L(E, ε)) = L(f((E ∩ ker f)^{⊥_ε}), ε̌)` with `f*(ε̌) = ε` on the
    /// ε-orthogonal complement.
    pub fn pushforward_formula(&self, f: &Mat<K>) -> Result<Dirac<K>> {
        let n = self.v_dim;
        if f.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "map of shape {}x{} from K^{}",
                f.rows(),
                f.cols(),
                n
            )));
        }
        let ee = self.decompose()?;
        let ker_f = Subspace::kernel(f);
        let meet = ee.e.intersect(&ker_f)?;
        // Coordinates of E ∩ ker f inside E.
        let mut meet_coords = Mat::zeros(ee.e.dim(), meet.dim());
        for j in 0..meet.dim() {
            let c = ee
                .e
                .coords_of(&meet.basis().col(j))
                .ok_or_else(|| Error::Internal("intersection must lie in E".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                meet_coords[(i, j)] = x;
            }
        }
        // (E ∩ ker f)^{⊥_ε} inside E: ε(u, w) = 0 for all w in the meet.
        let perp_coords = (&meet_coords.transpose() * &ee.eps).kernel_basis();
        let perp_basis = ee.e.basis() * &perp_coords;
        let target_e = Subspace::image(&(f * &perp_basis));
        // Descend ε: pick x_i in the ε-orthogonal complement with f(x_i) the
        // canonical basis of the target; well-definedness is guaranteed.
        let lifts = (f * &perp_basis)
            .solve_mat(target_e.basis())
            .ok_or_else(|| Error::Internal("descended basis must lift".into()))?;
        let x_in_e = &perp_coords * &lifts;
        let descended = ee.eps.restrict_form(&x_in_e);
        Dirac::build(&target_e, &descended)
    }

    /// Pull-back along `f: V → W` of a structure on `W`, set-theoretically.
    pub fn pullback_def(&self, f: &Mat<K>) -> Result<Dirac<K>> {
        let m = self.v_dim;
        let n = f.cols();
        if f.rows() != m {
            return Err(Error::DimensionMismatch(format!(
                "map of shape {}x{} into K^{}",
                f.rows(),
                f.cols(),
                m
            )));
        }
        // (X, η) ∈ V ⊕ W*  ↦  (fX, η) ∈ W ⊕ W*
        let into_l = f.block_diag(&Mat::identity(m));
        let graph = Subspace::preimage(&into_l, &self.space)?;
        // (X, η) ↦ (X, fᵀη)
        let out = Mat::identity(n).block_diag(&f.transpose());
        let image = graph.map_by(&out)?;
        Dirac::from_subspace(n, image)
            .map_err(|_| Error::Internal("pull-back lost maximal isotropy".into()))
    }

    /// Pull-back through the closed formula `f*(L(F, η)) = L(f⁻¹(F), f*(η))`.
    pub fn pullback_formula(&self, f: &Mat<K>) -> Result<Dirac<K>> {
        let m = self.v_dim;
        if f.rows() != m {
            return Err(Error::DimensionMismatch(format!(
                "map of shape {}x{} into K^{}",
                f.rows(),
                f.cols(),
                m
            )));
        }
        let ee = self.decompose()?;
        let source_e = Subspace::preimage(f, &ee.e)?;
        let mapped = f * source_e.basis();
        let mut mapped_coords = Mat::zeros(ee.e.dim(), source_e.dim());
        for j in 0..source_e.dim() {
            let c = ee
                .e
                .coords_of(&mapped.col(j))
                .ok_or_else(|| Error::Internal("f(x) must lie in F".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                mapped_coords[(i, j)] = x;
            }
        }
        let pulled = ee.eps.restrict_form(&mapped_coords);
        Dirac::build(&source_e, &pulled)
    }

    /// Push-forward with the definition as a debug-mode cross-check.
    pub fn pushforward(&self, f: &Mat<K>) -> Result<Dirac<K>> {
        let by_formula = self.pushforward_formula(f)?;
        debug_assert_eq!(by_formula, self.pushforward_def(f)?);
        Ok(by_formula)
    }

    /// Pull-back with the definition as a debug-mode cross-check.
    pub fn pullback(&self, f: &Mat<K>) -> Result<Dirac<K>> {
        let by_formula = self.pullback_formula(f)?;
        debug_assert_eq!(by_formula, self.pullback_def(f)?);
        Ok(by_formula)
    }

    /// B-field transform `X + α ↦ X + B(X) + α`; fixes `E` and shears `ε`
    /// to `ε + B|_E`. Both routes are computed and compared.
    pub fn b_field(&self, b: &Mat<K>) -> Result<Dirac<K>> {
        let n = self.v_dim;
        if b.rows() != n || b.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "B-field of shape {}x{} on K^{}",
                b.rows(),
                b.cols(),
                n
            )));
        }
        if !b.is_skew() {
            return Err(Error::NotSkew("B-field transform".into()));
        }
        let mut shear = Mat::identity(2 * n);
        for i in 0..n {
            for j in 0..n {
                shear[(n + i, j)] = b[(i, j)].clone();
            }
        }
        let elementwise = self.space.map_by(&shear)?;
        let out = Dirac::from_subspace(n, elementwise)
            .map_err(|_| Error::Internal("B-field transform lost maximal isotropy".into()))?;
        debug_assert_eq!(out, {
            let ee = self.decompose().expect("valid structure");
            let sheared = &ee.eps + &b.restrict_form(ee.e.basis());
            Dirac::build(&ee.e, &sheared).expect("sheared form is skew")
        });
        Ok(out)
    }

    /// Direct sum on `V_a ⊕ V_b`, with coordinates regrouped as
    /// `(V_a, V_b, V_a*, V_b*)`.
    pub fn direct_sum(&self, other: &Dirac<K>) -> Dirac<K> {
        let (na, nb) = (self.v_dim, other.v_dim);
        let n = na + nb;
        let mut cols = Vec::new();
        for j in 0..self.space.dim() {
            let c = self.space.basis().col(j);
            let mut v = vec![K::zero(); 2 * n];
            for i in 0..na {
                v[i] = c[i].clone();
                v[n + i] = c[na + i].clone();
            }
            cols.push(v);
        }
        for j in 0..other.space.dim() {
            let c = other.space.basis().col(j);
            let mut v = vec![K::zero(); 2 * n];
            for i in 0..nb {
                v[na + i] = c[i].clone();
                v[n + na + i] = c[nb + i].clone();
            }
            cols.push(v);
        }
        Dirac::from_subspace(n, Subspace::span_of_vectors(2 * n, &cols))
            .expect("direct sum of Dirac structures is Dirac")
    }

    /// Bivector `η` with `L = L(V*, η)`, when `*π(L) = V*`.
    pub fn poisson_bivector(&self) -> Option<Mat<K>> {
        let bottom = self.bottom_half();
        let inv = bottom.inverse()?;
        let eta = &self.top_half() * &inv;
        debug_assert!(eta.is_skew());
        Some(eta)
    }

    /// Two-form `ε` with `L = L(V, ε)`, when `π(L) = V`.
    pub fn presymplectic_form(&self) -> Option<Mat<K>> {
        let top = self.top_half();
        let inv = top.inverse()?;
        let eps = &self.bottom_half() * &inv;
        debug_assert!(eps.is_skew());
        Some(eps)
    }

    /// Canonical Poisson quotient: `φ: V → V/ker ε` (pivot-complement
    /// coordinates) together with `φ_*(L)`, which is Poisson and pulls back
    /// to `L`.
    pub fn poisson_quotient(&self) -> Result<(Mat<K>, Dirac<K>)> {
        let ee = self.decompose()?;
        let w = Subspace::image(&(ee.e.basis() * &ee.eps.kernel_basis()));
        let phi = quotient_map(&w);
        let pushed = self.pushforward_def(&phi)?;
        if pushed.poisson_bivector().is_none() {
            return Err(Error::Internal("canonical quotient must be Poisson".into()));
        }
        if pushed.pullback_def(&phi)? != *self {
            return Err(Error::Internal("canonical quotient must pull back to L".into()));
        }
        Ok((phi, pushed))
    }

    /// Linear Poisson morphism test: the bivector identity `f η_V fᵀ = η_W`
    /// and the push-forward identity `f_*(L_V) = L_W` are both evaluated and
    /// must agree.
    pub fn is_poisson_morphism(f: &Mat<K>, source: &Dirac<K>, target: &Dirac<K>) -> Result<bool> {
        let eta_v = source
            .poisson_bivector()
            .ok_or_else(|| Error::NotPoisson("source of a Poisson morphism check".into()))?;
        let eta_w = target
            .poisson_bivector()
            .ok_or_else(|| Error::NotPoisson("target of a Poisson morphism check".into()))?;
        let by_bivector = &(f * &eta_v) * &f.transpose() == eta_w;
        let by_pushforward = source.pushforward_def(f)? == *target;
        if by_bivector != by_pushforward {
            return Err(Error::Internal(
                "bivector and push-forward characterizations disagree".into(),
            ));
        }
        Ok(by_bivector)
    }
}

/// Projection matrix `V → V/W` realized by deleting the pivot coordinates of
/// `W`: each non-pivot coordinate is corrected by the pivot entries so that
/// `W` maps to zero.
pub fn quotient_map<K: Field>(w: &Subspace<K>) -> Mat<K> {
    let n = w.ambient_dim();
    let non_pivots: Vec<usize> = (0..n).filter(|r| !w.pivots().contains(r)).collect();
    Mat::from_fn(non_pivots.len(), n, |j, c| {
        let r = non_pivots[j];
        if c == r {
            K::one()
        } else if let Some(i) = w.pivots().iter().position(|&p| p == c) {
            -w.basis()[(r, i)].clone()
        } else {
            K::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{crat, rat, ratio, CRat, Rat};

    fn mq(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    fn span_q(ambient: usize, cols: &[&[i64]]) -> Subspace<Rat> {
        Subspace::span_of_vectors(
            ambient,
            &cols.iter().map(|c| c.iter().map(|&x| rat(x)).collect()).collect::<Vec<_>>(),
        )
    }

    fn symplectic_r2() -> Dirac<Rat> {
        // L = span{e1 + e2*, e2 - e1*}: the graph of ω with ω(e1, e2) = 1.
        Dirac::from_subspace(2, span_q(4, &[&[1, 0, 0, 1], &[0, 1, -1, 0]])).unwrap()
    }

    #[test]
    fn pairing_values() {
        let half = ratio(1, 2);
        let e1_e1star = pairing(&[rat(1), rat(0), rat(0), rat(0)], &[rat(0), rat(0), rat(1), rat(0)]).unwrap();
        assert_eq!(e1_e1star, half);
        let v = [rat(1), rat(0), rat(1), rat(0)];
        assert_eq!(pairing(&v, &v).unwrap(), rat(1));
        let z = [rat(1), rat(0), rat(0), rat(1)];
        let w = [rat(0), rat(1), rat(-1), rat(0)];
        assert_eq!(pairing(&z, &w).unwrap(), rat(0));
        assert!(pairing(&z, &[rat(1), rat(0)]).is_err());
    }

    #[test]
    fn maximal_isotropic_examples() {
        assert!(is_maximal_isotropic(&span_q(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]), 2));
        assert!(!is_maximal_isotropic(&span_q(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]), 2));
        // Graph of a skew form is maximal isotropic.
        assert!(is_maximal_isotropic(symplectic_r2().space(), 2));
    }

    #[test]
    fn build_with_zero_form_is_e_plus_annihilator() {
        let e = span_q(2, &[&[1, 0]]);
        let l = Dirac::build(&e, &Mat::zeros(1, 1)).unwrap();
        assert_eq!(l.space(), &span_q(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]));
    }

    #[test]
    fn build_full_space_with_symplectic_form() {
        let e = Subspace::full(2);
        let eps = mq(&[&[0, -1], &[1, 0]]);
        let l = Dirac::build(&e, &eps).unwrap();
        assert_eq!(l, symplectic_r2());
        assert!(matches!(
            Dirac::build(&e, &mq(&[&[0, 1], &[1, 0]])),
            Err(Error::NotSkew(_))
        ));
    }

    #[test]
    fn build_on_three_space() {
        let e = span_q(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let eps = mq(&[&[0, -1], &[1, 0]]);
        let l = Dirac::build(&e, &eps).unwrap();
        let expected = span_q(
            6,
            &[&[1, 0, 0, 0, 1, 0], &[0, 1, 0, -1, 0, 0], &[0, 0, 0, 0, 0, 1]],
        );
        assert_eq!(l.space(), &expected);
    }

    #[test]
    fn decompose_inverts_build() {
        let l = symplectic_r2();
        let ee = l.decompose().unwrap();
        assert!(ee.e.is_full());
        assert_eq!(ee.eps, mq(&[&[0, -1], &[1, 0]]));

        let l2 = Dirac::from_subspace(2, span_q(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]])).unwrap();
        let ee2 = l2.decompose().unwrap();
        assert_eq!(ee2.e, span_q(2, &[&[1, 0]]));
        assert!(ee2.eps.is_zero());
    }

    #[test]
    fn pushforward_identity_is_identity() {
        let l = symplectic_r2();
        let id = Mat::identity(2);
        assert_eq!(l.pushforward_def(&id).unwrap(), l);
        assert_eq!(l.pushforward_formula(&id).unwrap(), l);
    }

    #[test]
    fn pushforward_with_kernel_meeting_e() {
        // f(e1) = u1, f(e2) = 0, f(e3) = u2 applied to L(span{e1,e2}, e1∧e2)
        // collapses everything: the result is {0} ⊕ W*.
        let f = mq(&[&[1, 0, 0], &[0, 0, 1]]);
        let e = span_q(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let l = Dirac::build(&e, &mq(&[&[0, -1], &[1, 0]])).unwrap();
        let pushed = l.pushforward_def(&f).unwrap();
        assert_eq!(pushed.space(), &span_q(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]));
        assert_eq!(pushed, l.pushforward_formula(&f).unwrap());
        assert_eq!(pushed.poisson_bivector().unwrap(), Mat::zeros(2, 2));
    }

    #[test]
    fn pushforward_to_zero_space() {
        let f: Mat<Rat> = Mat::zeros(0, 2);
        let l = symplectic_r2();
        let pushed = l.pushforward_def(&f).unwrap();
        assert_eq!(pushed.v_dim(), 0);
        assert_eq!(pushed, l.pushforward_formula(&f).unwrap());
    }

    #[test]
    fn pullback_to_everything_from_zero_space() {
        let zero = Dirac::from_subspace(0, Subspace::zero(0)).unwrap();
        let f: Mat<Rat> = Mat::zeros(0, 2);
        let pulled = zero.pullback_def(&f).unwrap();
        // Everything pulls back to V ⊕ {0}... i.e. L(V, 0).
        assert_eq!(pulled, Dirac::build(&Subspace::full(2), &Mat::zeros(2, 2)).unwrap());
        assert_eq!(pulled, zero.pullback_formula(&f).unwrap());
    }

    #[test]
    fn pullback_along_inclusion_restricts_the_form() {
        // Inclusion Q^2 -> Q^3 against a symplectic-type structure on the
        // image directions plus a spectator coordinate.
        let incl = mq(&[&[1, 0], &[0, 1], &[0, 0]]);
        let eps = mq(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let l = Dirac::build(&Subspace::full(3), &eps).unwrap();
        let pulled = l.pullback_def(&incl).unwrap();
        assert_eq!(pulled, Dirac::build(&Subspace::full(2), &mq(&[&[0, -1], &[1, 0]])).unwrap());
        assert_eq!(pulled, l.pullback_formula(&incl).unwrap());
    }

    #[test]
    fn b_field_shears_the_form() {
        let e = Subspace::full(2);
        let l0 = Dirac::build(&e, &Mat::zeros(2, 2)).unwrap();
        let b = mq(&[&[0, -1], &[1, 0]]);
        let sheared = l0.b_field(&b).unwrap();
        assert_eq!(sheared, Dirac::build(&e, &b).unwrap());
        // exp(0) = identity.
        assert_eq!(l0.b_field(&Mat::zeros(2, 2)).unwrap(), l0);
        assert!(matches!(l0.b_field(&mq(&[&[0, 1], &[1, 0]])), Err(Error::NotSkew(_))));
    }

    #[test]
    fn poisson_and_presymplectic_views() {
        let l = symplectic_r2();
        let eta = l.poisson_bivector().unwrap();
        let eps = l.presymplectic_form().unwrap();
        assert_eq!(eps, mq(&[&[0, -1], &[1, 0]]));
        assert_eq!(&eta * &eps, Mat::identity(2));

        // L(V, 0) is Poisson with zero bivector.
        let lv: Dirac<Rat> = Dirac::build(&Subspace::full(2), &Mat::zeros(2, 2)).unwrap();
        assert_eq!(lv.presymplectic_form().unwrap(), Mat::zeros(2, 2));
        assert!(lv.poisson_bivector().is_none());

        // span{e1, e2*} is neither.
        let l2 = Dirac::from_subspace(2, span_q(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]])).unwrap();
        assert!(l2.poisson_bivector().is_none());
        assert!(l2.presymplectic_form().is_none());
    }

    #[test]
    fn poisson_quotient_examples() {
        // Nondegenerate ε on a 2-plane in Q^3: kernel is zero, φ is injective
        // on nothing... the quotient is by W = 0, so φ is the identity.
        let e = span_q(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let l = Dirac::build(&e, &mq(&[&[0, -1], &[1, 0]])).unwrap();
        let (phi, lp) = l.poisson_quotient().unwrap();
        assert_eq!(phi, Mat::identity(3));
        assert!(lp.poisson_bivector().is_some());

        // Zero form: W = E, quotient kills E.
        let l0 = Dirac::build(&e, &Mat::zeros(2, 2)).unwrap();
        let (phi0, lp0) = l0.poisson_quotient().unwrap();
        assert_eq!(phi0.rows(), 1);
        assert_eq!(lp0.poisson_bivector().unwrap(), Mat::zeros(1, 1));

        // Rank-two ε on Q^3 with e3 in the kernel: quotient is symplectic Q^2.
        let eps = mq(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let l1 = Dirac::build(&Subspace::full(3), &eps).unwrap();
        let (phi1, lp1) = l1.poisson_quotient().unwrap();
        assert_eq!(phi1, mq(&[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(lp1.presymplectic_form().unwrap(), mq(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn poisson_morphism_examples() {
        // Symplectic projection (e1,e2,e3,e4) -> (e1,e2).
        let f = mq(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let eta_v = mq(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let eta_w = mq(&[&[0, -1], &[1, 0]]);
        let lv = Dirac::from_subspace(
            4,
            Subspace::from_span(&eta_v.vstack(&Mat::identity(4))),
        )
        .unwrap();
        let lw = Dirac::from_subspace(
            2,
            Subspace::from_span(&eta_w.vstack(&Mat::identity(2))),
        )
        .unwrap();
        assert!(Dirac::is_poisson_morphism(&f, &lv, &lw).unwrap());

        let lw_scaled = Dirac::from_subspace(
            2,
            Subspace::from_span(&eta_w.scale(&rat(2)).vstack(&Mat::identity(2))),
        )
        .unwrap();
        assert!(!Dirac::is_poisson_morphism(&f, &lv, &lw_scaled).unwrap());

        let id2 = Mat::identity(2);
        assert!(Dirac::is_poisson_morphism(&id2, &lw, &lw).unwrap());
        // Non-Poisson input is rejected.
        let not_poisson = Dirac::build(&Subspace::full(2), &Mat::zeros(2, 2)).unwrap();
        assert!(matches!(
            Dirac::is_poisson_morphism(&id2, &not_poisson, &lw),
            Err(Error::NotPoisson(_))
        ));
    }

    #[test]
    fn complex_coefficients_work_throughout() {
        // L(V^C, i·ω) over Q(i).
        let e = Subspace::<CRat>::full(2);
        let i = crat(0, 1);
        let eps = Mat::from_rows(vec![
            vec![crat(0, 0), -i.clone()],
            vec![i.clone(), crat(0, 0)],
        ]);
        let l = Dirac::build(&e, &eps).unwrap();
        assert!(is_maximal_isotropic(l.space(), 2));
        let ee = l.decompose().unwrap();
        assert_eq!(ee.eps, eps);
    }
}
