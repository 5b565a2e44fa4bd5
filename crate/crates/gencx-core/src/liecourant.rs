//! The Courant bracket on left-invariant sections over a Lie algebra.
//!
//! For constant (left-invariant) sections `X + α` of `TG ⊕ T*G` the exact
//! term of the Courant bracket drops — `ι_X β − ι_Y α` is a constant
//! function — and the differential of an invariant one-form reduces to
//! `(dα)(Y, Z) = −α([Y, Z])`. The bracket of invariant sections is therefore
//! computable purely from structure constants:
//!
//! `[X + α, Y + β] = [X, Y] + γ`, `γ(Z) = −β([X, Z]) + α([Y, Z])`.
//!
//! With this reduction the symmetrized bracket of invariant sections
//! vanishes identically (a unit test pins this), and integrability of an
//! invariant Dirac or generalized complex structure is the exact membership
//! of all pairwise brackets of a basis.

use crate::dirac::{quotient_map, Dirac};
use crate::error::{Error, Result};
use crate::exactla::{imag_unit, rat, ratio, CRat, Field, Mat, Rat, Subspace};
use crate::gclin::{is_cocr, is_gc_linear, normal_form_build, FStructure, GcStructure};

/// A Lie algebra given by structure constants `c[i][j][k]`, meaning
/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`. Antisymmetry and the Jacobi identity
/// are checked exactly at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Vec<Vec<Rat>>>,
}

impl LieAlgebra {
    pub fn new(c: Vec<Vec<Vec<Rat>>>) -> Result<Self> {
        let n = c.len();
        if c.iter().any(|p| p.len() != n || p.iter().any(|q| q.len() != n)) {
            return Err(Error::DimensionMismatch("ragged structure constant table".into()));
        }
        let alg = LieAlgebra { dim: n, c };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if alg.c[i][j][k] != -alg.c[j][i][k].clone() {
                        return Err(Error::Precondition(format!(
                            "structure constants are not antisymmetric at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        // Jacobi: [[e_i, e_j], e_k] + [[e_j, e_k], e_i] + [[e_k, e_i], e_j] = 0.
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for m in 0..n {
                        let mut acc = rat(0);
                        for l in 0..n {
                            acc = acc
                                + alg.c[i][j][l].clone() * alg.c[l][k][m].clone()
                                + alg.c[j][k][l].clone() * alg.c[l][i][m].clone()
                                + alg.c[k][i][l].clone() * alg.c[l][j][m].clone();
                        }
                        if !Field::is_zero(&acc) {
                            return Err(Error::Precondition(format!(
                                "Jacobi identity fails at ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> &Vec<Vec<Vec<Rat>>> {
        &self.c
    }

    /// Lie bracket of coefficient vectors over `K` (structure constants are
    /// embedded into `K`).
    pub fn bracket<K: Field>(&self, x: &[K], y: &[K]) -> Result<Vec<K>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of lengths {} and {} on a {}-dimensional algebra",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = vec![K::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let prod = x[i].clone() * y[j].clone();
                for k in 0..self.dim {
                    if !Field::is_zero(&self.c[i][j][k]) {
                        let add = prod.clone() * K::from_rat(self.c[i][j][k].clone());
                        out[k] = out[k].clone() + add;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `ad(x)` as a matrix over `K`.
    pub fn ad<K: Field>(&self, x: &[K]) -> Result<Mat<K>> {
        let mut cols = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let mut e = vec![K::zero(); self.dim];
            e[j] = K::one();
            cols.push(self.bracket(x, &e)?);
        }
        Ok(Mat::from_cols(self.dim, cols))
    }

    pub fn abelian(dim: usize) -> LieAlgebra {
        LieAlgebra { dim, c: vec![vec![vec![rat(0); dim]; dim]; dim] }
    }

    /// `su(2)` with `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`.
    pub fn su2() -> LieAlgebra {
        let mut c = vec![vec![vec![rat(0); 3]; 3]; 3];
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            c[i][j][k] = rat(1);
            c[j][i][k] = rat(-1);
        }
        LieAlgebra::new(c).expect("su(2) satisfies Jacobi")
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let mut c = vec![vec![vec![rat(0); n]; n]; n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    c[i][j][k] = self.c[i][j][k].clone();
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    c[self.dim + i][self.dim + j][self.dim + k] = other.c[i][j][k].clone();
                }
            }
        }
        LieAlgebra { dim: n, c }
    }

    /// `su(2) ⊕ su(2)`, the rank-two compact algebra used by the shipped
    /// examples (chosen because its root vectors are rational over ℚ(i)).
    pub fn su2_su2() -> LieAlgebra {
        let su2 = LieAlgebra::su2();
        su2.direct_sum(&su2)
    }
}

/// A left-invariant section `X + α` with coefficients in `K`.
#[derive(Clone, Debug, PartialEq)]
pub struct Section<K: Field> {
    pub x: Vec<K>,
    pub alpha: Vec<K>,
}

impl<K: Field> Section<K> {
    pub fn new(x: Vec<K>, alpha: Vec<K>) -> Self {
        Section { x, alpha }
    }

    pub fn from_flat(v: &[K]) -> Self {
        let n = v.len() / 2;
        Section { x: v[..n].to_vec(), alpha: v[n..].to_vec() }
    }

    pub fn flat(&self) -> Vec<K> {
        let mut out = self.x.clone();
        out.extend(self.alpha.iter().cloned());
        out
    }
}

/// Courant bracket of invariant sections:
/// `[X + α, Y + β] = [X, Y] + γ` with `γ(Z) = −β([X, Z]) + α([Y, Z])`.
pub fn courant_bracket<K: Field>(
    g: &LieAlgebra,
    s1: &Section<K>,
    s2: &Section<K>,
) -> Result<Section<K>> {
    let n = g.dim();
    if s1.x.len() != n || s2.x.len() != n || s1.alpha.len() != n || s2.alpha.len() != n {
        return Err(Error::DimensionMismatch("sections of the wrong dimension".into()));
    }
    let x_part = g.bracket(&s1.x, &s2.x)?;
    let mut gamma = vec![K::zero(); n];
    for k in 0..n {
        let mut e = vec![K::zero(); n];
        e[k] = K::one();
        let xz = g.bracket(&s1.x, &e)?;
        let yz = g.bracket(&s2.x, &e)?;
        let mut acc = K::zero();
        for l in 0..n {
            acc = acc - s2.alpha[l].clone() * xz[l].clone() + s1.alpha[l].clone() * yz[l].clone();
        }
        gamma[k] = acc;
    }
    Ok(Section::new(x_part, gamma))
}

/// Closure of an invariant maximal isotropic subspace under the Courant
/// bracket: every pairwise bracket of the canonical basis must lie back in
/// the subspace.
pub fn is_integrable_invariant<K: Field>(g: &LieAlgebra, l: &Dirac<K>) -> Result<bool> {
    Ok(first_failing_pair(g, l)?.is_none())
}

/// The first basis pair whose bracket escapes, if any.
pub fn first_failing_pair<K: Field>(
    g: &LieAlgebra,
    l: &Dirac<K>,
) -> Result<Option<(usize, usize)>> {
    if l.v_dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "Dirac structure on dimension {} over an algebra of dimension {}",
            l.v_dim(),
            g.dim()
        )));
    }
    let basis = l.space().basis();
    for i in 0..basis.cols() {
        for j in (i + 1)..basis.cols() {
            let si = Section::from_flat(&basis.col(i));
            let sj = Section::from_flat(&basis.col(j));
            let bracket = courant_bracket(g, &si, &sj)?;
            if !l.space().contains_vector(&bracket.flat())? {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Chevalley–Eilenberg closedness of an invariant two-form:
/// `dB(X,Y,Z) = −B([X,Y],Z) − B([Y,Z],X) − B([Z,X],Y) = 0`.
pub fn is_closed_invariant_form(g: &LieAlgebra, b: &Mat<Rat>) -> Result<bool> {
    let n = g.dim();
    if b.rows() != n || b.cols() != n {
        return Err(Error::DimensionMismatch("form of the wrong dimension".into()));
    }
    let value = |u: &[Rat], v: &[Rat]| -> Rat {
        let bu = b.mul_vec(u);
        bu.iter().zip(v.iter()).map(|(a, x)| a.clone() * x.clone()).sum()
    };
    let e = |k: usize| -> Vec<Rat> {
        let mut v = vec![rat(0); n];
        v[k] = rat(1);
        v
    };
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let term = value(&g.bracket(&e(i), &e(j))?, &e(k))
                    + value(&g.bracket(&e(j), &e(k))?, &e(i))
                    + value(&g.bracket(&e(k), &e(i))?, &e(j));
                if !Field::is_zero(&term) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Basis of the space of closed invariant two-forms, as skew matrices.
pub fn closed_invariant_forms(g: &LieAlgebra) -> Result<Vec<Mat<Rat>>> {
    let n = g.dim();
    let unknowns: Vec<(usize, usize)> =
        (0..n).flat_map(|p| ((p + 1)..n).map(move |q| (p, q))).collect();
    if unknowns.is_empty() {
        return Ok(Vec::new());
    }
    let mut rows = Vec::new();
    let e = |k: usize| -> Vec<Rat> {
        let mut v = vec![rat(0); n];
        v[k] = rat(1);
        v
    };
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let brackets =
                    [(g.bracket(&e(i), &e(j))?, k), (g.bracket(&e(j), &e(k))?, i), (g.bracket(&e(k), &e(i))?, j)];
                let mut row = vec![rat(0); unknowns.len()];
                for (u, &(p, q)) in unknowns.iter().enumerate() {
                    // B = unit skew form at (p, q): B(a, b) = a_p b_q − a_q b_p.
                    let mut coeff = rat(0);
                    for (br, z) in &brackets {
                        let zq = if *z == q { rat(1) } else { rat(0) };
                        let zp = if *z == p { rat(1) } else { rat(0) };
                        coeff = coeff + br[p].clone() * zq - br[q].clone() * zp;
                    }
                    row[u] = coeff;
                }
                rows.push(row);
            }
        }
    }
    let system = Mat::from_rows(rows);
    let kernel = system.kernel_basis();
    let mut out = Vec::new();
    for c in 0..kernel.cols() {
        let mut b = Mat::zeros(n, n);
        for (u, &(p, q)) in unknowns.iter().enumerate() {
            b[(p, q)] = kernel[(u, c)].clone();
            b[(q, p)] = -kernel[(u, c)].clone();
        }
        debug_assert!(is_closed_invariant_form(g, &b).unwrap());
        out.push(b);
    }
    Ok(out)
}

/// Cartan and root data for the shipped rank-two example.
#[derive(Clone, Debug)]
pub struct BorelData {
    pub cartan: Subspace<Rat>,
    pub positive_roots: Vec<Subspace<CRat>>,
    pub borel: Subspace<CRat>,
    pub omega: Mat<Rat>,
}

impl BorelData {
    /// `𝔠 + 𝔠̄ = 𝔤^ℂ`, `𝔠 ∩ 𝔠̄ = 𝔨^ℂ`, `ω` nondegenerate on `𝔨` and
    /// contracting to zero with every positive root vector.
    pub fn validate(&self) -> Result<()> {
        let conj = self.borel.conjugate();
        if !self.borel.sum(&conj)?.is_full() {
            return Err(Error::Precondition("Borel subalgebra plus conjugate is not all".into()));
        }
        if self.borel.intersect(&conj)? != self.cartan.complexify() {
            return Err(Error::Precondition(
                "Borel subalgebra meets its conjugate off the Cartan part".into(),
            ));
        }
        let restricted = self.omega.restrict_form(self.cartan.basis());
        if restricted.inverse().is_none() {
            return Err(Error::Precondition("ω degenerates on the Cartan subalgebra".into()));
        }
        let omega_c = self.omega.complexify();
        for root in &self.positive_roots {
            if !(&omega_c * root.basis()).is_zero() {
                return Err(Error::Precondition("ω pairs a root vector nontrivially".into()));
            }
        }
        Ok(())
    }
}

/// The invariant generalized complex structure in normal form on
/// `su(2) ⊕ su(2)`: Cartan part `span{e3, f3}`, positive root vectors
/// `e1 − i e2` and `f1 − i f2`, and `ω(e3, f3) = 1` extended by zero.
pub fn so4_borel_example() -> Result<(LieAlgebra, BorelData, GcStructure, FStructure)> {
    let g = LieAlgebra::su2_su2();
    let n = g.dim();
    let cartan = Subspace::span_of_vectors(
        n,
        &[unit_vec(n, 2), unit_vec(n, 5)],
    );
    let root_e = Subspace::span_of_vectors(n, &[root_vector(n, 0, 1)]);
    let root_f = Subspace::span_of_vectors(n, &[root_vector(n, 3, 4)]);
    let borel = cartan.complexify().sum(&root_e)?.sum(&root_f)?;
    let mut omega = Mat::zeros(n, n);
    omega[(5, 2)] = rat(1);
    omega[(2, 5)] = rat(-1);
    let data = BorelData {
        cartan,
        positive_roots: vec![root_e.clone(), root_f.clone()],
        borel: borel.clone(),
        omega: omega.clone(),
    };
    data.validate()?;
    if !is_cocr(&borel)? {
        return Err(Error::Internal("Borel subalgebra is not co-CR".into()));
    }

    let f = FStructure::from_split(&data.cartan.complexify(), &root_e.sum(&root_f)?)?;
    let gc = normal_form_build(&f, &omega)?;
    if gc.cocr_space() != &borel {
        return Err(Error::Internal("normal form does not sit on the Borel subalgebra".into()));
    }
    if !is_integrable_invariant(&g, gc.dirac())? {
        return Err(Error::Internal("the Borel structure must be invariant-integrable".into()));
    }
    Ok((g, data, gc, f))
}

fn unit_vec(n: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![rat(0); n];
    v[k] = rat(1);
    v
}

/// `e_a − i e_b` in `K^n`.
fn root_vector(n: usize, a: usize, b: usize) -> Vec<CRat> {
    let mut v = vec![CRat::zero(); n];
    v[a] = CRat::one();
    v[b] = -imag_unit();
    v
}

/// Flags of the group-multiplication differential check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiplicationReport {
    /// `(X, Y) ↦ X − Y` into the structure with the halved form: expected true.
    pub half_scaled: bool,
    /// The same map into the unscaled structure: expected false.
    pub unscaled: bool,
    /// The diagonal `X ↦ (X, X)` satisfies the co-CR clause into the product.
    pub diagonal_cocr: bool,
}

/// The differential at the identity of `(a, b) ↦ a b⁻¹` is
/// `(X, Y) ↦ X − Y`; it is generalized complex linear from the product
/// structure to the structure with the halved two-form, and not to the
/// unscaled one.
pub fn multiplication_map_check() -> Result<MultiplicationReport> {
    let (g, data, gc, f) = so4_borel_example()?;
    let n = g.dim();
    let product = GcStructure::from_dirac(gc.dirac().direct_sum(gc.dirac()))?;
    let half_omega = data.omega.scale(&ratio(1, 2));
    let target_half = normal_form_build(&f, &half_omega)?;
    let diff = Mat::identity(n).hstack(&(-&Mat::identity(n)));
    let half_scaled = is_gc_linear(&diff, &product, &target_half)?;
    let unscaled = is_gc_linear(&diff, &product, &gc)?;

    let diagonal = Mat::identity(n).vstack(&Mat::identity(n));
    let mapped = gc.cocr_space().map_by(&diagonal.complexify())?;
    let diagonal_cocr = product.cocr_space().contains_subspace(&mapped)?;
    Ok(MultiplicationReport { half_scaled, unscaled, diagonal_cocr })
}

/// Flags of the quotient-projection check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectionReport {
    /// The image of the Borel subalgebra defines a complex structure on the
    /// quotient.
    pub complex_structure: bool,
    /// Complex dimension of that image (expected 2 on the 4-dimensional
    /// quotient).
    pub image_dim: usize,
    /// The projection is generalized complex linear onto the complex-type
    /// structure of that image.
    pub gc_linear: bool,
}

/// The projection `𝔤 → 𝔤/𝔨` maps the Borel subalgebra onto a complex
/// structure of the quotient and is generalized complex linear onto the
/// associated complex-type structure (the symplectic directions die in the
/// quotient, so the bivector clause is the zero identity).
pub fn projection_cocr_check() -> Result<ProjectionReport> {
    let (_, data, gc, _) = so4_borel_example()?;
    let q = quotient_map(&data.cartan);
    let qc = q.complexify();
    let image = data.borel.map_by(&qc)?;
    let complex_structure =
        image.intersect(&image.conjugate())?.is_zero() && image.sum(&image.conjugate())?.is_full();
    let target = GcStructure::from_dirac(Dirac::build(&image, &Mat::zeros(image.dim(), image.dim()))?)?;
    let gc_linear = is_gc_linear(&q, &gc, &target)?;
    Ok(ProjectionReport { complex_structure, image_dim: image.dim(), gc_linear })
}

/// Clause-by-clause report of the invariant integrability criteria for a
/// normal-form structure `L(V⁰ ⊕ V^{1,0}, iω)` over a Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalFormCriteria {
    /// `V^{1,0}` closed under the Lie bracket.
    pub cr_integrable: bool,
    /// `V⁰ ⊕ V^{1,0}` closed under the Lie bracket.
    pub cocr_integrable: bool,
    /// `L(V⁰, ω)` closed under the invariant Courant bracket.
    pub poisson_v0: bool,
    /// `(ℒ_X ω)(Y, Z) = −ω([X,Y],Z) − ω(Y,[X,Z]) = 0` for `X` in the complex
    /// directions and `Y, Z ∈ V⁰`.
    pub omega_invariance: bool,
    /// Direct invariant integrability of `L(V⁰ ⊕ V^{1,0}, iω)`.
    pub direct: bool,
}

impl NormalFormCriteria {
    pub fn clause_conjunction(&self) -> bool {
        self.cr_integrable && self.cocr_integrable && self.poisson_v0 && self.omega_invariance
    }

    /// The conjunction of the clauses must agree with direct integrability.
    pub fn agree(&self) -> bool {
        self.clause_conjunction() == self.direct
    }
}

pub fn invariant_normal_form_criteria(
    g: &LieAlgebra,
    f: &FStructure,
    omega: &Mat<Rat>,
) -> Result<NormalFormCriteria> {
    crate::gclin::check_compatible(f, omega)?;
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch("f-structure dimension".into()));
    }
    let closed_under_bracket = |s: &Subspace<CRat>| -> Result<bool> {
        for i in 0..s.dim() {
            for j in (i + 1)..s.dim() {
                let br = g.bracket(&s.basis().col(i), &s.basis().col(j))?;
                if !s.contains_vector(&br)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    let cr_integrable = closed_under_bracket(f.v10())?;
    let cocr_integrable = closed_under_bracket(&f.cocr())?;

    let v0 = f.v0_real();
    let poisson_v0 = {
        let omega_v0 = omega.restrict_form(v0.basis());
        let l = Dirac::build(&v0, &omega_v0)?;
        is_integrable_invariant(g, &l)?
    };

    let omega_c = omega.complexify();
    let value = |u: &[CRat], v: &[CRat]| -> CRat {
        let bu = omega_c.mul_vec(u);
        let mut acc = CRat::zero();
        for (a, x) in bu.iter().zip(v.iter()) {
            acc = acc + a.clone() * x.clone();
        }
        acc
    };
    let v0c = v0.basis().complexify();
    let mut omega_invariance = true;
    'outer: for xs in [f.v10(), f.v01()] {
        for xj in 0..xs.dim() {
            let x = xs.basis().col(xj);
            for a in 0..v0.dim() {
                for b in 0..v0.dim() {
                    let y = v0c.col(a);
                    let z = v0c.col(b);
                    let lie = -value(&g.bracket(&x, &y)?, &z) - value(&y, &g.bracket(&x, &z)?);
                    if !Field::is_zero(&lie) {
                        omega_invariance = false;
                        break 'outer;
                    }
                }
            }
        }
    }

    let gc = normal_form_build(f, omega)?;
    let direct = is_integrable_invariant(g, gc.dirac())?;
    Ok(NormalFormCriteria { cr_integrable, cocr_integrable, poisson_v0, omega_invariance, direct })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::crat;

    fn sec_q(x: [i64; 3], alpha: [i64; 3]) -> Section<Rat> {
        Section::new(x.iter().map(|&v| rat(v)).collect(), alpha.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn algebra_validation() {
        assert!(LieAlgebra::su2().dim() == 3);
        assert!(LieAlgebra::su2_su2().dim() == 6);
        // Breaking antisymmetry is rejected.
        let mut c = LieAlgebra::su2().structure_constants().clone();
        c[0][0][1] = rat(1);
        assert!(LieAlgebra::new(c).is_err());
        // Breaking Jacobi is rejected: [e1,e2] = e2 and [e2,e3] = e1 give
        // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = e1 ≠ 0.
        let mut c = vec![vec![vec![rat(0); 3]; 3]; 3];
        c[0][1][1] = rat(1);
        c[1][0][1] = rat(-1);
        c[1][2][0] = rat(1);
        c[2][1][0] = rat(-1);
        assert!(LieAlgebra::new(c).is_err());
    }

    #[test]
    fn bracket_on_abelian_algebra_vanishes() {
        let g = LieAlgebra::abelian(3);
        let s1 = sec_q([1, 2, 3], [4, 5, 6]);
        let s2 = sec_q([7, 8, 9], [1, 0, 1]);
        let out = courant_bracket(&g, &s1, &s2).unwrap();
        assert!(out.x.iter().all(Field::is_zero));
        assert!(out.alpha.iter().all(Field::is_zero));
    }

    #[test]
    fn bracket_of_pure_vectors_is_the_lie_bracket() {
        let g = LieAlgebra::su2();
        let out = courant_bracket(&g, &sec_q([1, 0, 0], [0, 0, 0]), &sec_q([0, 1, 0], [0, 0, 0]))
            .unwrap();
        assert_eq!(out.x, vec![rat(0), rat(0), rat(1)]);
        assert!(out.alpha.iter().all(Field::is_zero));
    }

    #[test]
    fn bracket_with_covector_part() {
        // [e1 + e1*, e2] = e3 + e3*.
        let g = LieAlgebra::su2();
        let out = courant_bracket(&g, &sec_q([1, 0, 0], [1, 0, 0]), &sec_q([0, 1, 0], [0, 0, 0]))
            .unwrap();
        assert_eq!(out.x, vec![rat(0), rat(0), rat(1)]);
        assert_eq!(out.alpha, vec![rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn pure_covector_sections_commute() {
        let g = LieAlgebra::su2();
        let out = courant_bracket(&g, &sec_q([0, 0, 0], [1, 2, 3]), &sec_q([0, 0, 0], [3, 1, 4]))
            .unwrap();
        assert!(out.x.iter().all(Field::is_zero));
        assert!(out.alpha.iter().all(Field::is_zero));
    }

    #[test]
    fn symmetrized_bracket_vanishes() {
        let g = LieAlgebra::su2_su2();
        let s1 = Section::new(
            vec![rat(1), rat(-2), rat(0), rat(3), rat(1), rat(0)],
            vec![rat(0), rat(1), rat(2), rat(-1), rat(0), rat(5)],
        );
        let s2 = Section::new(
            vec![rat(2), rat(0), rat(1), rat(0), rat(-3), rat(1)],
            vec![rat(1), rat(1), rat(0), rat(2), rat(0), rat(-2)],
        );
        let b12 = courant_bracket(&g, &s1, &s2).unwrap();
        let b21 = courant_bracket(&g, &s2, &s1).unwrap();
        let sum_x: Vec<Rat> =
            b12.x.iter().zip(b21.x.iter()).map(|(a, b)| a.clone() + b.clone()).collect();
        let sum_a: Vec<Rat> =
            b12.alpha.iter().zip(b21.alpha.iter()).map(|(a, b)| a.clone() + b.clone()).collect();
        assert!(sum_x.iter().all(Field::is_zero));
        assert!(sum_a.iter().all(Field::is_zero));
    }

    #[test]
    fn abelian_tangent_structure_is_integrable() {
        let g = LieAlgebra::abelian(3);
        let l: Dirac<Rat> = Dirac::build(&Subspace::full(3), &Mat::zeros(3, 3)).unwrap();
        assert!(is_integrable_invariant(&g, &l).unwrap());
    }

    #[test]
    fn borel_example_class_checks() {
        let (g, data, gc, f) = so4_borel_example().unwrap();
        assert_eq!(data.borel.intersect(&data.borel.conjugate()).unwrap().dim(), 2);
        assert!(is_cocr(&data.borel).unwrap());
        assert!(gc.normal_form_omega(&f).unwrap().is_some());
        assert!(is_integrable_invariant(&g, gc.dirac()).unwrap());
    }

    #[test]
    fn pairing_a_root_vector_breaks_integrability() {
        let (g, _, gc, _) = so4_borel_example().unwrap();
        // Pair the root vector e1 − ie2 with f3 inside ε: the bracket of the
        // corresponding lifts escapes the subspace.
        let ee = gc.dirac().decompose().unwrap();
        let mut eps = ee.eps.clone();
        let one = CRat::one();
        // Canonical basis of the Borel subalgebra: column 0 is the e-root
        // vector (pivot row 0), column 3 is f3 (pivot row 5).
        assert_eq!(ee.e.basis().col(0)[1], crat(0, -1));
        assert_eq!(ee.e.basis().col(3)[5], crat(1, 0));
        eps[(3, 0)] = eps[(3, 0)].clone() + one.clone();
        eps[(0, 3)] = eps[(0, 3)].clone() - one;
        let perturbed = Dirac::build(&ee.e, &eps).unwrap();
        assert!(!is_integrable_invariant(&g, &perturbed).unwrap());
        assert!(first_failing_pair(&g, &perturbed).unwrap().is_some());
    }

    #[test]
    fn multiplication_map_flags() {
        let report = multiplication_map_check().unwrap();
        assert!(report.half_scaled);
        assert!(!report.unscaled);
        assert!(report.diagonal_cocr);
    }

    #[test]
    fn projection_flags() {
        let report = projection_cocr_check().unwrap();
        assert!(report.complex_structure);
        assert_eq!(report.image_dim, 2);
        assert!(report.gc_linear);
    }

    #[test]
    fn normal_form_criteria_on_the_borel_instance() {
        let (g, data, _, f) = so4_borel_example().unwrap();
        let report = invariant_normal_form_criteria(&g, &f, &data.omega).unwrap();
        assert!(report.clause_conjunction());
        assert!(report.direct);
        assert!(report.agree());
    }

    #[test]
    fn normal_form_criteria_on_abelian_algebra() {
        let g = LieAlgebra::abelian(4);
        let j0 = Mat::from_rows(vec![
            vec![rat(0), rat(-1), rat(0), rat(0)],
            vec![rat(1), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(0)],
        ]);
        let f = FStructure::from_endo(j0).unwrap();
        let mut omega = Mat::zeros(4, 4);
        omega[(3, 2)] = rat(1);
        omega[(2, 3)] = rat(-1);
        let report = invariant_normal_form_criteria(&g, &f, &omega).unwrap();
        assert!(report.clause_conjunction() && report.direct && report.agree());
    }

    #[test]
    fn normal_form_criteria_matched_failure() {
        // Pair the two factors instead of rotating within each: CR
        // integrability fails and the direct check fails with it.
        let g = LieAlgebra::su2_su2();
        let mut f_endo = Mat::zeros(6, 6);
        // e1 ↦ f1, f1 ↦ −e1, e2 ↦ f2, f2 ↦ −e2.
        f_endo[(3, 0)] = rat(1);
        f_endo[(0, 3)] = rat(-1);
        f_endo[(4, 1)] = rat(1);
        f_endo[(1, 4)] = rat(-1);
        let f = FStructure::from_endo(f_endo).unwrap();
        let mut omega = Mat::zeros(6, 6);
        omega[(5, 2)] = rat(1);
        omega[(2, 5)] = rat(-1);
        let report = invariant_normal_form_criteria(&g, &f, &omega).unwrap();
        assert!(!report.cr_integrable);
        assert!(!report.direct);
        assert!(report.agree());
    }

    #[test]
    fn closed_forms_preserve_integrability() {
        let (g, _, gc, _) = so4_borel_example().unwrap();
        let closed = closed_invariant_forms(&g).unwrap();
        assert!(!closed.is_empty());
        for b in closed.iter().take(4) {
            assert!(is_closed_invariant_form(&g, b).unwrap());
            let moved = gc.dirac().b_field(&b.complexify()).unwrap();
            assert!(is_integrable_invariant(&g, &moved).unwrap());
        }
        // A cross-factor pairing like B(e3, f1) = 1 is not closed:
        // dB(e1, e2, f1) = −B([e1,e2], f1) = −1.
        let mut b = Mat::zeros(6, 6);
        b[(3, 2)] = rat(1);
        b[(2, 3)] = rat(-1);
        assert!(!is_closed_invariant_form(&g, &b).unwrap());
    }
}
