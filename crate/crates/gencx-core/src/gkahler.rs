//! Pointwise generalized Kähler algebra.
//!
//! A generalized Kähler pair is two commuting generalized complex structures
//! `(L₁, L₂)` whose product `−J₁J₂` is positive definite for the pairing. It
//! corresponds bijectively to bi-Hermitian data `(g, b, J₊, J₋)` through
//! `L^± = {X + (b ± g)(X) : X ∈ V^±}`, `L₁ = L⁺ ⊕ L⁻`, `L₂ = L⁺ ⊕ L̄⁻`,
//! with `V^±` the +i eigenspaces of `J_±`.
//!
//! The kernels `H^± = ker(J₊ ∓ J₋)` and their g-orthocomplement `𝒱` give the
//! pointwise type decomposition; pairs with `J₊ + J₋` invertible are exactly
//! those coming from tamed symplectic data `(ε, J)` with `J₋ = −ε⁻¹Jᵀε` and
//! `g, b` the symmetric and skew parts of `εJ`. The derived identities (the
//! `½ε((J₊+J₋)X, Y)` expressions, the bivector chain `¼[J₊,J₋]g⁻¹`, the
//! `(Im ε₁)(J₊−J₋) = ε(J₊+J₋)` equation) are all checked as exact matrix
//! identities.

use crate::dirac::Dirac;
use crate::error::{Error, Result};
use crate::exactla::{imag_unit, ratio, CRat, Field, Mat, Rat, Subspace};
use crate::gclin::{
    bivector_one_one_part, complex_structure_from_plus_eigenspace, is_gc_linear, pairing_gram,
    FStructure, GcStructure,
};

/// Bi-Hermitian data: a positive definite metric, a two-form and two
/// g-orthogonal complex structures.
#[derive(Clone, PartialEq, Debug)]
pub struct BiHermitian {
    g: Mat<Rat>,
    b: Mat<Rat>,
    jp: Mat<Rat>,
    jm: Mat<Rat>,
}

impl BiHermitian {
    pub fn new(g: Mat<Rat>, b: Mat<Rat>, jp: Mat<Rat>, jm: Mat<Rat>) -> Result<Self> {
        let n = g.rows();
        for (name, m) in [("g", &g), ("b", &b), ("Jp", &jp), ("Jm", &jm)] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "{name} has shape {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if !g.is_positive_definite()? {
            return Err(Error::Precondition("metric is not positive definite".into()));
        }
        if !b.is_skew() {
            return Err(Error::NotSkew("two-form of bi-Hermitian data".into()));
        }
        let id = Mat::identity(n);
        for (name, j) in [("Jp", &jp), ("Jm", &jm)] {
            if !(&(j * j) + &id).is_zero() {
                return Err(Error::Precondition(format!("{name}^2 != -Id")));
            }
            if &(&j.transpose() * &g) * j != g {
                return Err(Error::Precondition(format!("{name} is not g-orthogonal")));
            }
        }
        Ok(BiHermitian { g, b, jp, jm })
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn metric(&self) -> &Mat<Rat> {
        &self.g
    }

    pub fn two_form(&self) -> &Mat<Rat> {
        &self.b
    }

    pub fn j_plus(&self) -> &Mat<Rat> {
        &self.jp
    }

    pub fn j_minus(&self) -> &Mat<Rat> {
        &self.jm
    }
}

/// A generalized Kähler pair with its cached eigenspace and kernel data.
#[derive(Clone, Debug)]
pub struct GkPair {
    bh: BiHermitian,
    l1: GcStructure,
    l2: GcStructure,
    l_plus: Subspace<CRat>,
    l_minus: Subspace<CRat>,
    v_plus: Subspace<CRat>,
    v_minus: Subspace<CRat>,
    h_plus: Subspace<Rat>,
    h_minus: Subspace<Rat>,
    vcal: Subspace<Rat>,
}

impl GkPair {
    pub fn bihermitian(&self) -> &BiHermitian {
        &self.bh
    }

    pub fn l1(&self) -> &GcStructure {
        &self.l1
    }

    pub fn l2(&self) -> &GcStructure {
        &self.l2
    }

    pub fn l_plus(&self) -> &Subspace<CRat> {
        &self.l_plus
    }

    pub fn l_minus(&self) -> &Subspace<CRat> {
        &self.l_minus
    }

    pub fn v_plus(&self) -> &Subspace<CRat> {
        &self.v_plus
    }

    pub fn v_minus(&self) -> &Subspace<CRat> {
        &self.v_minus
    }

    /// `H⁺ = ker(J₊ − J₋)`.
    pub fn h_plus(&self) -> &Subspace<Rat> {
        &self.h_plus
    }

    /// `H⁻ = ker(J₊ + J₋)`.
    pub fn h_minus(&self) -> &Subspace<Rat> {
        &self.h_minus
    }

    /// g-orthocomplement of `H⁺ ⊕ H⁻`.
    pub fn vcal(&self) -> &Subspace<Rat> {
        &self.vcal
    }

    pub fn dim(&self) -> usize {
        self.bh.dim()
    }

    /// `J₊ + J₋` invertible: the pair comes from tamed symplectic data.
    pub fn is_tamed_type(&self) -> bool {
        (self.bh.j_plus() + self.bh.j_minus()).inverse().is_some()
    }

    /// B-field transform of the whole pair; shifts `b` by the form. (That
    /// this matches the componentwise transform of `L₁` and `L₂` is checked
    /// in the unit tests.)
    pub fn b_field(&self, b: &Mat<Rat>) -> Result<GkPair> {
        let shifted = BiHermitian::new(
            self.bh.g.clone(),
            &self.bh.b + b,
            self.bh.jp.clone(),
            self.bh.jm.clone(),
        )?;
        gk_from_bihermitian(shifted)
    }

    /// The pair `(L₂, L₁)`, which corresponds to `(g, b, J₊, −J₋)`.
    pub fn swapped(&self) -> Result<GkPair> {
        gk_from_bihermitian(BiHermitian::new(
            self.bh.g.clone(),
            self.bh.b.clone(),
            self.bh.jp.clone(),
            -&self.bh.jm,
        )?)
    }
}

/// +i eigenspace of a real complex structure, inside `V^ℂ`.
fn plus_eigenspace(j: &Mat<Rat>) -> Subspace<CRat> {
    let n = j.rows();
    let jc = j.complexify();
    let i_scaled = Mat::<CRat>::identity(n).scale(&imag_unit());
    Subspace::kernel(&(&jc - &i_scaled))
}

/// Graph `{X + M(X) : X ∈ v}` inside `K^{2n}` for a complex-linear map `M`.
fn graph_over(v: &Subspace<CRat>, m: &Mat<CRat>) -> Subspace<CRat> {
    let n = v.ambient_dim();
    let images = m * v.basis();
    let mut cols = Vec::new();
    for j in 0..v.dim() {
        let mut col = vec![CRat::zero(); 2 * n];
        for i in 0..n {
            col[i] = v.basis()[(i, j)].clone();
            col[n + i] = images[(i, j)].clone();
        }
        cols.push(col);
    }
    Subspace::span_of_vectors(2 * n, &cols)
}

/// Assemble the generalized Kähler pair of a bi-Hermitian quadruple and
/// validate every defining identity: commutation of `J₁, J₂`, positive
/// definiteness of `−J₁J₂` against the pairing, the `L₁ = L⁺ ⊕ L⁻`
/// decomposition shape, and g-orthogonality of `H⁺, H⁻, 𝒱`.
pub fn gk_from_bihermitian(bh: BiHermitian) -> Result<GkPair> {
    let n = bh.dim();
    let v_plus = plus_eigenspace(&bh.jp);
    let v_minus = plus_eigenspace(&bh.jm);
    if 2 * v_plus.dim() != n || 2 * v_minus.dim() != n {
        return Err(Error::Precondition("complex structures need even dimension".into()));
    }
    let bg_plus = (&bh.b + &bh.g).complexify();
    let bg_minus = (&bh.b - &bh.g).complexify();
    let l_plus = graph_over(&v_plus, &bg_plus);
    let l_minus = graph_over(&v_minus, &bg_minus);

    let l1_space = l_plus.sum(&l_minus)?;
    let l2_space = l_plus.sum(&l_minus.conjugate())?;
    if l1_space.dim() != n || l2_space.dim() != n {
        return Err(Error::Internal("graph summands do not assemble to half dimension".into()));
    }
    let l1 = GcStructure::from_dirac(Dirac::from_subspace(n, l1_space)?)?;
    let l2 = GcStructure::from_dirac(Dirac::from_subspace(n, l2_space)?)?;

    // Commutation and positivity of the endomorphism pair.
    let j1j2 = l1.endo() * l2.endo();
    if j1j2 != l2.endo() * l1.endo() {
        return Err(Error::Internal("J1 and J2 do not commute".into()));
    }
    let metric_form = &(-&j1j2).transpose() * &pairing_gram(n);
    if !metric_form.is_positive_definite()? {
        return Err(Error::Internal("-J1 J2 is not positive definite".into()));
    }

    // Kernel decomposition.
    let h_plus = Subspace::kernel(&(&bh.jp - &bh.jm));
    let h_minus = Subspace::kernel(&(&bh.jp + &bh.jm));
    let h_sum = h_plus.sum(&h_minus)?;
    if h_sum.dim() != h_plus.dim() + h_minus.dim() {
        return Err(Error::Internal("H+ and H- overlap".into()));
    }
    let vcal = Subspace::kernel(&(&h_sum.basis().transpose() * &bh.g));
    if h_sum.dim() + vcal.dim() != n {
        return Err(Error::Internal("orthocomplement dimension defect".into()));
    }
    let g_orthogonal = |a: &Subspace<Rat>, b: &Subspace<Rat>| {
        (&(&a.basis().transpose() * &bh.g) * b.basis()).is_zero()
    };
    if !g_orthogonal(&h_plus, &h_minus)
        || !g_orthogonal(&h_plus, &vcal)
        || !g_orthogonal(&h_minus, &vcal)
    {
        return Err(Error::Internal("kernel blocks are not g-orthogonal".into()));
    }

    Ok(GkPair { bh, l1, l2, l_plus, l_minus, v_plus, v_minus, h_plus, h_minus, vcal })
}

/// Invert the correspondence: recover `(g, b, J₊, J₋)` from two generalized
/// complex structures with commuting endomorphisms and positive `−J₁J₂`.
/// The graph maps `b ± g` are read off `L⁺ = L₁ ∩ L₂` and `L⁻ = L₁ ∩ L̄₂`,
/// and the round trip through [`gk_from_bihermitian`] is checked exactly.
pub fn bihermitian_from_gk(l1: &GcStructure, l2: &GcStructure) -> Result<GkPair> {
    if l1.v_dim() != l2.v_dim() {
        return Err(Error::DimensionMismatch("pair on different spaces".into()));
    }
    let n = l1.v_dim();
    if l1.endo() * l2.endo() != l2.endo() * l1.endo() {
        return Err(Error::Precondition("J1 and J2 do not commute".into()));
    }
    let product = l1.endo() * l2.endo();
    let metric_form = &(-&product).transpose() * &pairing_gram(n);
    if !metric_form.is_positive_definite()? {
        return Err(Error::Precondition("-J1 J2 is not positive definite".into()));
    }

    let l_plus = l1.dirac().space().intersect(l2.dirac().space())?;
    let l_minus = l1.dirac().space().intersect(&l2.dirac().space().conjugate())?;
    if 2 * l_plus.dim() != n || 2 * l_minus.dim() != n {
        return Err(Error::Internal("summand dimensions are not n/2".into()));
    }

    let read_graph = |l: &Subspace<CRat>| -> Result<Mat<Rat>> {
        let k = l.dim();
        let top = Mat::from_fn(n, k, |i, j| l.basis()[(i, j)].clone());
        let bottom = Mat::from_fn(n, k, |i, j| l.basis()[(n + i, j)].clone());
        let full_top = top.hstack(&top.conj());
        let full_bottom = bottom.hstack(&bottom.conj());
        let inv = full_top
            .inverse()
            .ok_or_else(|| Error::Internal("graph summand does not project onto V^C".into()))?;
        let map = &full_bottom * &inv;
        if !map.is_real() {
            return Err(Error::Internal("graph map is not real".into()));
        }
        Ok(map.real_part())
    };
    let m_plus = read_graph(&l_plus)?;
    let m_minus = read_graph(&l_minus)?;
    let half = ratio(1, 2);
    let g = (&m_plus - &m_minus).scale(&half);
    let b = (&m_plus + &m_minus).scale(&half);

    let project_v = Mat::identity(n).hstack(&Mat::zeros(n, n));
    let v_plus = l_plus.map_by(&project_v)?;
    let v_minus = l_minus.map_by(&project_v)?;
    let jp = complex_structure_from_plus_eigenspace(&v_plus)?;
    let jm = complex_structure_from_plus_eigenspace(&v_minus)?;

    let pair = gk_from_bihermitian(BiHermitian::new(g, b, jp, jm)?)?;
    if pair.l1.dirac() != l1.dirac() || pair.l2.dirac() != l2.dirac() {
        return Err(Error::Internal("bi-Hermitian round trip failed".into()));
    }
    Ok(pair)
}

/// Exact subspace identities of the pointwise type decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceIdentities {
    /// `E₁ = (V⁺ ∩ V⁻) ⊕ (H⁻ ⊕ 𝒱)^ℂ`
    pub e1_splits: bool,
    /// `E₂ = (V⁺ ∩ V̄⁻) ⊕ (H⁺ ⊕ 𝒱)^ℂ`
    pub e2_splits: bool,
    /// `E₁ ∩ Ē₁ = (H⁻ ⊕ 𝒱)^ℂ = ((H⁺)^⊥)^ℂ`
    pub e1_bar_intersection: bool,
    /// `E₂ ∩ Ē₂ = (H⁺ ⊕ 𝒱)^ℂ = ((H⁻)^⊥)^ℂ`
    pub e2_bar_intersection: bool,
    /// `E₁^⊥ = V⁺ ∩ V⁻` (g-orthocomplement in `V^ℂ`)
    pub e1_perp: bool,
    /// `E₂^⊥ = V⁺ ∩ V̄⁻`
    pub e2_perp: bool,
    /// `V = H⁺ ⊕ H⁻ ⊕ 𝒱`, pairwise g-orthogonal
    pub orthogonal_splitting: bool,
}

impl SubspaceIdentities {
    pub fn all_hold(&self) -> bool {
        self.e1_splits
            && self.e2_splits
            && self.e1_bar_intersection
            && self.e2_bar_intersection
            && self.e1_perp
            && self.e2_perp
            && self.orthogonal_splitting
    }
}

/// Check the kernel/eigenspace subspace identities on a pair.
pub fn subspace_identities(p: &GkPair) -> Result<SubspaceIdentities> {
    let g_c = p.bh.metric().complexify();
    let perp_of =
        |s: &Subspace<CRat>| -> Subspace<CRat> { Subspace::kernel(&(&s.basis().transpose() * &g_c)) };
    let vv = p.v_plus.intersect(&p.v_minus)?;
    let vv_bar = p.v_plus.intersect(&p.v_minus.conjugate())?;
    let hm_v = p.h_minus.sum(&p.vcal)?.complexify();
    let hp_v = p.h_plus.sum(&p.vcal)?.complexify();

    let e1 = p.l1.cocr_space();
    let e2 = p.l2.cocr_space();
    let e1_splits = e1 == &vv.sum(&hm_v)? && vv.intersect(&hm_v)?.is_zero();
    let e2_splits = e2 == &vv_bar.sum(&hp_v)? && vv_bar.intersect(&hp_v)?.is_zero();

    let e1_cap = e1.intersect(&e1.conjugate())?;
    let e2_cap = e2.intersect(&e2.conjugate())?;
    let hp_perp = Subspace::kernel(&(&p.h_plus.basis().transpose() * p.bh.metric())).complexify();
    let hm_perp = Subspace::kernel(&(&p.h_minus.basis().transpose() * p.bh.metric())).complexify();
    let e1_bar_intersection = e1_cap == hm_v && e1_cap == hp_perp;
    let e2_bar_intersection = e2_cap == hp_v && e2_cap == hm_perp;

    let e1_perp = perp_of(e1) == vv;
    let e2_perp = perp_of(e2) == vv_bar;

    let g_orth = |a: &Subspace<Rat>, b: &Subspace<Rat>| {
        (&(&a.basis().transpose() * p.bh.metric()) * b.basis()).is_zero()
    };
    let orthogonal_splitting = p.h_plus.dim() + p.h_minus.dim() + p.vcal.dim() == p.dim()
        && g_orth(&p.h_plus, &p.h_minus)
        && g_orth(&p.h_plus, &p.vcal)
        && g_orth(&p.h_minus, &p.vcal);

    Ok(SubspaceIdentities {
        e1_splits,
        e2_splits,
        e1_bar_intersection,
        e2_bar_intersection,
        e1_perp,
        e2_perp,
        orthogonal_splitting,
    })
}

/// The f-structures of `L₁` and `L₂`: `F₁ = J₊` on `H⁺` and zero on its
/// g-orthocomplement, `F₂ = J₊` on `H⁻` likewise. Validates `F³ + F = 0`,
/// skew-adjointness, and the eigenspace identities
/// `V^{1,0}(F₁) = V⁺ ∩ V⁻ = E₁^⊥` and `V⁰ ⊕ V^{1,0}(F_j) = E_j`.
pub fn f_structures_of(p: &GkPair) -> Result<(FStructure, FStructure)> {
    let g = p.bh.metric();
    let n = p.dim();
    let build_f = |h: &Subspace<Rat>| -> Result<FStructure> {
        let hb = h.basis();
        let proj = if h.is_zero() {
            Mat::zeros(n, n)
        } else {
            let gram = &(&hb.transpose() * g) * hb;
            let inv = gram
                .inverse()
                .ok_or_else(|| Error::Internal("metric degenerates on a kernel block".into()))?;
            &(hb * &inv) * &(&hb.transpose() * g)
        };
        let f = p.bh.j_plus() * &proj;
        let fs = FStructure::from_endo(f)?;
        if !(&(&fs.endo().transpose() * g) + &(g * fs.endo())).is_zero() {
            return Err(Error::Internal("f-structure is not skew-adjoint".into()));
        }
        Ok(fs)
    };
    let f1 = build_f(&p.h_plus)?;
    let f2 = build_f(&p.h_minus)?;

    let vv = p.v_plus.intersect(&p.v_minus)?;
    let vv_bar = p.v_plus.intersect(&p.v_minus.conjugate())?;
    if f1.v10() != &vv || &f1.cocr() != p.l1.cocr_space() {
        return Err(Error::Internal("F1 eigenspaces do not match L1".into()));
    }
    if f2.v10() != &vv_bar || &f2.cocr() != p.l2.cocr_space() {
        return Err(Error::Internal("F2 eigenspaces do not match L2".into()));
    }
    Ok((f1, f2))
}

/// Tamed symplectic data: a nondegenerate two-form and a complex structure
/// with `ε(JX, X) > 0` for nonzero `X` (exact Sylvester test on the
/// symmetric part of `εJ`).
#[derive(Clone, PartialEq, Debug)]
pub struct TamedData {
    eps: Mat<Rat>,
    j: Mat<Rat>,
}

impl TamedData {
    pub fn new(eps: Mat<Rat>, j: Mat<Rat>) -> Result<Self> {
        let n = eps.rows();
        if j.rows() != n || j.cols() != n || eps.cols() != n {
            return Err(Error::DimensionMismatch("tamed data shapes".into()));
        }
        if !eps.is_skew() {
            return Err(Error::NotSkew("tamed two-form".into()));
        }
        if eps.inverse().is_none() {
            return Err(Error::Singular("tamed two-form must be nondegenerate".into()));
        }
        if !(&(&j * &j) + &Mat::identity(n)).is_zero() {
            return Err(Error::Precondition("J^2 != -Id".into()));
        }
        let ej = &eps * &j;
        let sym = (&ej + &ej.transpose()).scale(&ratio(1, 2));
        if !sym.is_positive_definite()? {
            return Err(Error::Precondition("form does not tame the complex structure".into()));
        }
        Ok(TamedData { eps, j })
    }

    pub fn eps(&self) -> &Mat<Rat> {
        &self.eps
    }

    pub fn j(&self) -> &Mat<Rat> {
        &self.j
    }
}

/// Generalized Kähler pair of tamed data: `J₊ = J`, `J₋ = −ε⁻¹Jᵀε`, and
/// `g, b` the symmetric and skew parts of `εJ`. Asserts
/// `ε(J₊X, Y) = −ε(X, J₋Y)`, the closed expressions `g = ½ε(J₊+J₋)` and
/// `b = ½ε(J₊−J₋)`, and invertibility of `J₊ + J₋`.
pub fn tamed_to_gk(t: &TamedData) -> Result<GkPair> {
    let jp = t.j.clone();
    let eps_inv = t.eps.inverse().expect("validated nondegenerate");
    let jm = -&(&(&eps_inv * &jp.transpose()) * &t.eps);
    let ej = &t.eps * &jp;
    let half = ratio(1, 2);
    let g = (&ej + &ej.transpose()).scale(&half);
    let b = (&ej - &ej.transpose()).scale(&half);

    if &t.eps * &jp != -&(&jm.transpose() * &t.eps) {
        return Err(Error::Internal("adjoint relation between J+ and J- fails".into()));
    }
    let j_sum = &jp + &jm;
    let j_diff = &jp - &jm;
    if (&t.eps * &j_sum).scale(&half) != g {
        return Err(Error::Internal("metric expression mismatch".into()));
    }
    if (&t.eps * &j_diff).scale(&half) != b {
        return Err(Error::Internal("two-form expression mismatch".into()));
    }
    if j_sum.inverse().is_none() {
        return Err(Error::Internal("J+ + J- must be invertible for tamed data".into()));
    }
    gk_from_bihermitian(BiHermitian::new(g, b, jp, jm)?)
}

/// Inverse of [`tamed_to_gk`] up to the residual B-field: requires
/// `π(L₂) = V^ℂ` (equivalently `J₊ + J₋` invertible), splits `ε₂ = B + iε`
/// into real and imaginary parts, and checks that applying `exp(B)` to the
/// pair of the recovered tamed data reproduces the input.
pub fn gk_to_tamed(p: &GkPair) -> Result<(TamedData, Mat<Rat>)> {
    if !p.l2.cocr_space().is_full() {
        return Err(Error::Precondition("not of tamed type: J+ + J- is singular".into()));
    }
    let eps2 = p.l2.eps();
    let b_residual = eps2.real_part();
    let eps = eps2.imag_part();
    let tamed = TamedData::new(eps, p.bh.j_plus().clone())?;
    // Round trip at the quadruple level: the pair is a function of
    // (g, b, J₊, J₋), and the tamed quadruple shifted by the residual must
    // reproduce the input quadruple exactly.
    let ej = tamed.eps() * tamed.j();
    let half = ratio(1, 2);
    let g = (&ej + &ej.transpose()).scale(&half);
    let b = (&ej - &ej.transpose()).scale(&half);
    let eps_inv = tamed.eps().inverse().expect("validated nondegenerate");
    let jm = -&(&(&eps_inv * &tamed.j().transpose()) * tamed.eps());
    if &g != p.bh.metric()
        || &b + &b_residual != *p.bh.two_form()
        || &jm != p.bh.j_minus()
        || tamed.j() != p.bh.j_plus()
    {
        return Err(Error::Internal("tamed round trip failed".into()));
    }
    Ok((tamed, b_residual))
}

/// The holomorphic Poisson bivectors of a tamed-type pair.
#[derive(Clone, Debug)]
pub struct HolomorphicPoisson {
    pub eta_plus: Mat<Rat>,
    pub eta_minus: Mat<Rat>,
}

/// Computes `η₋ = −η₊` through four routes and asserts their equality:
/// `½(Jε⁻¹ + ε⁻¹Jᵀ)`, `½(J₊−J₋)ε⁻¹`, `¼[J₊,J₋]g⁻¹`, and definitionally as
/// the real bivector whose holomorphic part is the push-forward of the
/// B-free `L₂` onto the +i eigenspace of `J₊`. Also asserts `im(η₊) = 𝒱`
/// and vanishing of the `(1,1)` parts of `η₊` for both complex structures.
pub fn holo_poisson(p: &GkPair) -> Result<HolomorphicPoisson> {
    let (tamed, _) = gk_to_tamed(p)?;
    let eps_inv = tamed.eps().inverse().expect("nondegenerate");
    let jp = p.bh.j_plus();
    let jm = p.bh.j_minus();
    let half = ratio(1, 2);
    let quarter = ratio(1, 4);
    let r1 = (&(jp * &eps_inv) + &(&eps_inv * &jp.transpose())).scale(&half);
    let r2 = (&(jp - jm) * &eps_inv).scale(&half);
    let g_inv = p
        .bh
        .metric()
        .inverse()
        .ok_or_else(|| Error::Internal("metric must be invertible".into()))?;
    let commutator = &(jp * jm) - &(jm * jp);
    let r3 = (&commutator * &g_inv).scale(&quarter);
    if r1 != r2 || r2 != r3 {
        return Err(Error::Internal("closed bivector expressions disagree".into()));
    }
    let eta_minus = r1;
    let eta_plus = -&eta_minus;

    // Definitional route: push the B-free L₂ forward onto V^{1,0} of J₊ and
    // rebuild the real bivector from its holomorphic part.
    let n = p.dim();
    let i_eps = tamed.eps().complexify().scale(&imag_unit());
    let l2_free = Dirac::build(&Subspace::full(n), &i_eps)?;
    let basis_plus = p.v_plus.basis();
    let selector = Mat::from_fn(p.v_plus.dim(), n, |r, c| {
        if p.v_plus.pivots()[r] == c {
            CRat::one()
        } else {
            CRat::zero()
        }
    });
    let jc = jp.complexify();
    let half_c = CRat::from_rat(half.clone());
    let proj_plus = (&Mat::<CRat>::identity(n) - &jc.scale(&imag_unit())).scale(&half_c);
    let rho = &selector * &proj_plus;
    let pushed = l2_free.pushforward_def(&rho)?;
    let eta_hol = pushed
        .poisson_bivector()
        .ok_or_else(|| Error::Internal("push-forward onto V^{1,0} must be Poisson".into()))?;
    let ambient = &(basis_plus * &eta_hol) * &basis_plus.transpose();
    let from_definition = ambient.real_part().scale(&ratio(2, 1));
    if from_definition != eta_plus {
        return Err(Error::Internal("definitional bivector route disagrees".into()));
    }

    if Subspace::image(&eta_plus) != *p.vcal() {
        return Err(Error::Internal("image of the bivector is not the 𝒱 block".into()));
    }
    for j in [jp, jm] {
        if !bivector_one_one_part(&eta_plus, j)?.is_zero() {
            return Err(Error::Internal("bivector has a nonzero (1,1) part".into()));
        }
    }
    Ok(HolomorphicPoisson { eta_plus, eta_minus })
}

/// The complex forms `ε±` on `S = V^{1,0}₊ + V^{1,0}₋`.
#[derive(Clone, Debug)]
pub struct EpsPm {
    pub domain: Subspace<CRat>,
    /// The forms in the canonical basis of `domain`.
    pub eps_plus: Mat<CRat>,
    pub eps_minus: Mat<CRat>,
    /// The same forms in ambient coordinates, when the domain is all of `V^ℂ`.
    pub ambient_plus: Option<Mat<CRat>>,
    pub ambient_minus: Option<Mat<CRat>>,
}

/// Solve for the forms `ε±` defined by `ε± = ε` on `V^{1,0}±` and
/// `ι_X ε± = 0` for `X ∈ V^{1,0}∓`, with a uniqueness check on the linear
/// system, and assert the reconstruction `L₁ = L(S, iε₊ − iε₋)`.
pub fn eps_pm(p: &GkPair) -> Result<EpsPm> {
    let (tamed, _) = gk_to_tamed(p)?;
    let eps_c = tamed.eps().complexify();
    let s = p.v_plus.sum(&p.v_minus)?;
    let k = s.dim();
    let coords_in_s = |sub: &Subspace<CRat>| -> Result<Mat<CRat>> {
        let mut cols = Vec::new();
        for j in 0..sub.dim() {
            let c = s
                .coords_of(&sub.basis().col(j))
                .ok_or_else(|| Error::Internal("eigenspace outside its own sum".into()))?;
            cols.push(c);
        }
        Ok(Mat::from_cols(k, cols))
    };
    let c_plus = coords_in_s(&p.v_plus)?;
    let c_minus = coords_in_s(&p.v_minus)?;

    // Unknown: the k×k matrix of the form on S. Constraints: skewness,
    // agreement with ε on the structure's own eigenspace, vanishing
    // contraction with the other eigenspace.
    let solve_for =
        |own: &Mat<CRat>, own_space: &Subspace<CRat>, other: &Mat<CRat>| -> Result<Mat<CRat>> {
            let unknowns = k * k;
            let idx = |r: usize, c: usize| r * k + c;
            let mut rows: Vec<Vec<CRat>> = Vec::new();
            let mut rhs: Vec<CRat> = Vec::new();
            for r in 0..k {
                for c in r..k {
                    let mut row = vec![CRat::zero(); unknowns];
                    row[idx(r, c)] = CRat::one();
                    let prev = row[idx(c, r)].clone();
                    row[idx(c, r)] = prev + CRat::one();
                    rows.push(row);
                    rhs.push(CRat::zero());
                }
            }
            let target = eps_c.restrict_form(own_space.basis());
            for i in 0..own.cols() {
                for j in 0..own.cols() {
                    // Entry (i, j) of the restriction to the eigenspace:
                    // Σ own[r][i]·A[r][c]·own[c][j] = ε-restriction (i, j)
                    // in the map-matrix convention.
                    let mut row = vec![CRat::zero(); unknowns];
                    for r in 0..k {
                        for c in 0..k {
                            let add = own[(r, i)].clone() * own[(c, j)].clone();
                            row[idx(r, c)] = row[idx(r, c)].clone() + add;
                        }
                    }
                    rows.push(row);
                    rhs.push(target[(i, j)].clone());
                }
            }
            for jcol in 0..other.cols() {
                for r in 0..k {
                    let mut row = vec![CRat::zero(); unknowns];
                    for c in 0..k {
                        row[idx(r, c)] = other[(c, jcol)].clone();
                    }
                    rows.push(row);
                    rhs.push(CRat::zero());
                }
            }
            let system = Mat::from_rows(rows);
            if system.kernel_basis().cols() != 0 {
                return Err(Error::Precondition(
                    "degenerate eigenspace sum: the defining system is not unique".into(),
                ));
            }
            let sol = system.solve(&rhs).ok_or_else(|| {
                Error::Precondition("degenerate eigenspace sum: no solution".into())
            })?;
            Ok(Mat::from_fn(k, k, |r, c| sol[idx(r, c)].clone()))
        };
    let a_plus = solve_for(&c_plus, &p.v_plus, &c_minus)?;
    let a_minus = solve_for(&c_minus, &p.v_minus, &c_plus)?;

    // Reconstruction: L₁ = L(S, iε₊ − iε₋).
    let form = (&a_plus - &a_minus).scale(&imag_unit());
    let rebuilt = Dirac::build(&s, &form)?;
    if &rebuilt != p.l1.dirac() {
        return Err(Error::Internal("L1 reconstruction from ε± failed".into()));
    }

    let (ambient_plus, ambient_minus) = if s.is_full() {
        let sb_inv = s
            .basis()
            .inverse()
            .ok_or_else(|| Error::Internal("full-space basis must be invertible".into()))?;
        let to_ambient = |a: &Mat<CRat>| &(&sb_inv.transpose() * a) * &sb_inv;
        (Some(to_ambient(&a_plus)), Some(to_ambient(&a_minus)))
    } else {
        (None, None)
    };
    Ok(EpsPm { domain: s, eps_plus: a_plus, eps_minus: a_minus, ambient_plus, ambient_minus })
}

/// Exact check of `(Im ε₁)(J₊ − J₋) = ε(J₊ + J₋)` with `ε₁ = iε₊ − iε₋`;
/// requires both `J₊ ± J₋` invertible so that `ε₁` is a form on `V^ℂ`.
pub fn im_eps1_identity(p: &GkPair) -> Result<bool> {
    let (tamed, _) = gk_to_tamed(p)?;
    let pm = eps_pm(p)?;
    let (Some(amb_plus), Some(amb_minus)) = (pm.ambient_plus, pm.ambient_minus) else {
        return Err(Error::Precondition(
            "J+ - J- is singular: ε± do not live on all of V^C".into(),
        ));
    };
    let eps1 = (&amb_plus - &amb_minus).scale(&imag_unit());
    let im_eps1 = eps1.imag_part();
    let jp = p.bh.j_plus();
    let jm = p.bh.j_minus();
    let lhs = &im_eps1 * &(jp - jm);
    let rhs = tamed.eps() * &(jp + jm);
    Ok(lhs == rhs)
}

/// The two-of-three flags for an invertible map against a tamed-type pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoOfThree {
    pub holo_l1: bool,
    pub holo_l2: bool,
    pub commutes: bool,
}

impl TwoOfThree {
    pub fn count_true(&self) -> usize {
        usize::from(self.holo_l1) + usize::from(self.holo_l2) + usize::from(self.commutes)
    }

    /// Any two of the flags imply the third, so exactly two cannot occur.
    pub fn law_holds(&self) -> bool {
        self.count_true() != 2
    }
}

pub fn two_of_three(phi: &Mat<Rat>, p: &GkPair) -> Result<TwoOfThree> {
    if phi.inverse().is_none() {
        return Err(Error::Singular("two-of-three check needs an invertible map".into()));
    }
    let jp = p.bh.j_plus();
    let jm = p.bh.j_minus();
    if (jp + jm).inverse().is_none() || (jp - jm).inverse().is_none() {
        return Err(Error::Precondition("two-of-three check needs J+ ± J- invertible".into()));
    }
    let holo_l1 = is_gc_linear(phi, &p.l1, &p.l1)?;
    let holo_l2 = is_gc_linear(phi, &p.l2, &p.l2)?;
    let product = jp * jm;
    let commutes = phi.commutes_with(&product);
    Ok(TwoOfThree { holo_l1, holo_l2, commutes })
}

/// First product: the block-diagonal quadruple.
pub fn first_product(a: &GkPair, b: &GkPair) -> Result<GkPair> {
    gk_from_bihermitian(BiHermitian::new(
        a.bh.metric().block_diag(b.bh.metric()),
        a.bh.two_form().block_diag(b.bh.two_form()),
        a.bh.j_plus().block_diag(b.bh.j_plus()),
        a.bh.j_minus().block_diag(b.bh.j_minus()),
    )?)
}

/// A Kähler point: bi-Hermitian data with `J₊ = J₋` and `b = 0`.
#[derive(Clone, Debug)]
pub struct KahlerPoint {
    g: Mat<Rat>,
    j: Mat<Rat>,
}

impl KahlerPoint {
    pub fn new(g: Mat<Rat>, j: Mat<Rat>) -> Result<Self> {
        let zero = Mat::zeros(g.rows(), g.rows());
        BiHermitian::new(g.clone(), zero, j.clone(), j.clone())?;
        Ok(KahlerPoint { g, j })
    }

    pub fn metric(&self) -> &Mat<Rat> {
        &self.g
    }

    pub fn complex_structure(&self) -> &Mat<Rat> {
        &self.j
    }

    /// `ω = gJ` as a map `V → V*`.
    pub fn kaehler_form(&self) -> Mat<Rat> {
        &self.g * &self.j
    }

    pub fn pair(&self) -> Result<GkPair> {
        let zero = Mat::zeros(self.g.rows(), self.g.rows());
        gk_from_bihermitian(BiHermitian::new(self.g.clone(), zero, self.j.clone(), self.j.clone())?)
    }
}

/// Second product of two Kähler points: the quadruple
/// `(g₁ ⊕ g₂, 0, J₁ ⊕ J₂, J₁ ⊕ (−J₂))`. Both members of the pair are in
/// normal form for the block f-structures `J₁ ⊕ 0` and `0 ⊕ J₂`, which are
/// skew-adjoint; with the +i eigenvalue convention the recovered
/// normal-form two-forms are `−ω₂` and `−ω₁`.
pub fn second_product(a: &KahlerPoint, b: &KahlerPoint) -> Result<GkPair> {
    let (na, nb) = (a.g.rows(), b.g.rows());
    let pair = gk_from_bihermitian(BiHermitian::new(
        a.g.block_diag(&b.g),
        Mat::zeros(na + nb, na + nb),
        a.j.block_diag(&b.j),
        a.j.block_diag(&(-&b.j)),
    )?)?;

    let f1 = FStructure::from_endo(a.j.block_diag(&Mat::zeros(nb, nb)))?;
    let f2 = FStructure::from_endo(Mat::zeros(na, na).block_diag(&b.j))?;
    let omega1 = pair
        .l1
        .normal_form_omega(&f1)?
        .ok_or_else(|| Error::Internal("second product: L1 is not in normal form".into()))?;
    let omega2 = pair
        .l2
        .normal_form_omega(&f2)?
        .ok_or_else(|| Error::Internal("second product: L2 is not in normal form".into()))?;
    let expected1 = -&Mat::zeros(na, na).block_diag(&b.kaehler_form());
    let expected2 = -&a.kaehler_form().block_diag(&Mat::zeros(nb, nb));
    if omega1 != expected1 || omega2 != expected2 {
        return Err(Error::Internal("second product normal forms carry unexpected data".into()));
    }
    let g = pair.bh.metric();
    for f in [&f1, &f2] {
        if !(&(&f.endo().transpose() * g) + &(g * f.endo())).is_zero() {
            return Err(Error::Internal("second product f-structure is not skew-adjoint".into()));
        }
    }
    Ok(pair)
}

/// The flat quaternionic triple on `R⁴`: left multiplications by `i`, `j`,
/// `k` in the basis `(1, i, j, k)`, satisfying `IJ = K`.
pub fn quaternion_triple() -> (Mat<Rat>, Mat<Rat>, Mat<Rat>) {
    let m = |rows: &[[i64; 4]; 4]| {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect())
                .collect(),
        )
    };
    let i = m(&[[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]);
    let j = m(&[[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]);
    let k = m(&[[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]);
    (i, j, k)
}

/// The hyper-Kähler point on flat `R⁴`: tamed data `ε = −(ω_J + ω_K)` with
/// `J` as the complex structure.
pub fn hyperkaehler_tamed() -> TamedData {
    let (_, j, k) = quaternion_triple();
    let eps = -&(&j + &k);
    TamedData::new(eps, j).expect("the flat quaternionic data tames")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn mq(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    fn j0() -> Mat<Rat> {
        mq(&[&[0, -1], &[1, 0]])
    }

    fn kaehler_point_r2() -> GkPair {
        KahlerPoint::new(Mat::identity(2), j0()).unwrap().pair().unwrap()
    }

    #[test]
    fn quaternion_relations() {
        let (i, j, k) = quaternion_triple();
        let id = Mat::identity(4);
        assert!((&(&i * &i) + &id).is_zero());
        assert!((&(&j * &j) + &id).is_zero());
        assert!((&(&k * &k) + &id).is_zero());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        // [J, K] = 2I.
        assert_eq!(&(&j * &k) - &(&k * &j), i.scale(&rat(2)));
    }

    #[test]
    fn kaehler_point_structure() {
        let p = kaehler_point_r2();
        // L1 is complex type, L2 symplectic type with ε₂ = −iω.
        assert!(p.l1().poisson_bivector().is_zero());
        assert!(p.l2().cocr_space().is_full());
        let omega = j0(); // g = Id, so ω = J0 as a map.
        let eps2 = p.l2().eps();
        assert!(eps2.real_part().is_zero());
        assert_eq!(eps2.imag_part(), -&omega);
        // H+ is everything, H- and 𝒱 vanish.
        assert!(p.h_plus().is_full());
        assert!(p.h_minus().is_zero());
        assert!(p.vcal().is_zero());
    }

    #[test]
    fn kaehler_point_tamed_round_trip() {
        let p = kaehler_point_r2();
        let (tamed, b_res) = gk_to_tamed(&p).unwrap();
        assert!(b_res.is_zero());
        assert_eq!(tamed.eps(), &-&j0()); // ε = −ω with ω = J0.
        assert_eq!(tamed.j(), &j0());
        let rebuilt = tamed_to_gk(&tamed).unwrap();
        assert_eq!(rebuilt.l1().dirac(), p.l1().dirac());
        assert_eq!(rebuilt.l2().dirac(), p.l2().dirac());
        assert_eq!(rebuilt.bihermitian(), p.bihermitian());
    }

    #[test]
    fn hyperkaehler_point_reproduces_stated_data() {
        let (i, j, k) = quaternion_triple();
        let tamed = hyperkaehler_tamed();
        let p = tamed_to_gk(&tamed).unwrap();
        // (g, b, J+, J-) = (Id, ω_I, J, K).
        assert_eq!(p.bihermitian().metric(), &Mat::identity(4));
        assert_eq!(p.bihermitian().two_form(), &i);
        assert_eq!(p.bihermitian().j_plus(), &j);
        assert_eq!(p.bihermitian().j_minus(), &k);
        // H± = 0, 𝒱 = R⁴.
        assert!(p.h_plus().is_zero());
        assert!(p.h_minus().is_zero());
        assert!(p.vcal().is_full());
        // L₂ = L(V^ℂ, −i(ω_J + ω_K)).
        let eps2 = p.l2().eps();
        assert!(eps2.real_part().is_zero());
        assert_eq!(eps2.imag_part(), -&(&j + &k));
        // L₁ = L(V^ℂ, 2ω_I − i(ω_J − ω_K)).
        assert!(p.l1().cocr_space().is_full());
        let eps1 = p.l1().eps();
        assert_eq!(eps1.real_part(), i.scale(&rat(2)));
        assert_eq!(eps1.imag_part(), -&(&j - &k));
    }

    #[test]
    fn hyperkaehler_bivector_and_forms() {
        let (i, j, k) = quaternion_triple();
        let tamed = hyperkaehler_tamed();
        let p = tamed_to_gk(&tamed).unwrap();
        let hp = holo_poisson(&p).unwrap();
        // η₊ = −½ I g⁻¹ with g = Id.
        assert_eq!(hp.eta_plus, i.scale(&ratio(-1, 2)));
        assert_eq!(hp.eta_minus, i.scale(&ratio(1, 2)));

        // ε₊ = −i(ω_I − iω_J) = −iω_I − ω_J, ε₋ = −(ω_K − iω_I).
        let pm = eps_pm(&p).unwrap();
        let amb_plus = pm.ambient_plus.unwrap();
        let amb_minus = pm.ambient_minus.unwrap();
        assert_eq!(amb_plus.real_part(), -&j);
        assert_eq!(amb_plus.imag_part(), -&i);
        assert_eq!(amb_minus.real_part(), -&k);
        assert_eq!(amb_minus.imag_part(), i.clone());

        assert!(im_eps1_identity(&p).unwrap());
    }

    #[test]
    fn bihermitian_round_trip_on_fixtures() {
        for p in [kaehler_point_r2(), tamed_to_gk(&hyperkaehler_tamed()).unwrap()] {
            let back = bihermitian_from_gk(p.l1(), p.l2()).unwrap();
            assert_eq!(back.bihermitian(), p.bihermitian());
        }
    }

    #[test]
    fn subspace_identities_on_fixtures() {
        let kp = kaehler_point_r2();
        let ids = subspace_identities(&kp).unwrap();
        assert!(ids.all_hold());
        let e1 = kp.l1().cocr_space();
        assert!(e1.intersect(&e1.conjugate()).unwrap().is_zero());

        let hk = tamed_to_gk(&hyperkaehler_tamed()).unwrap();
        let ids = subspace_identities(&hk).unwrap();
        assert!(ids.all_hold());
        let e1 = hk.l1().cocr_space();
        assert!(e1.intersect(&e1.conjugate()).unwrap().is_full());
    }

    #[test]
    fn f_structures_on_fixtures() {
        let kp = kaehler_point_r2();
        let (f1, f2) = f_structures_of(&kp).unwrap();
        assert_eq!(f1.endo(), &j0());
        assert!(f2.endo().is_zero());

        let hk = tamed_to_gk(&hyperkaehler_tamed()).unwrap();
        let (f1, f2) = f_structures_of(&hk).unwrap();
        assert!(f1.endo().is_zero());
        assert!(f2.endo().is_zero());
    }

    #[test]
    fn second_product_blocks() {
        let a = KahlerPoint::new(Mat::identity(2), j0()).unwrap();
        let b = KahlerPoint::new(Mat::identity(2), j0()).unwrap();
        let p = second_product(&a, &b).unwrap();
        // H+ = first factor, H- = second factor, 𝒱 = 0.
        let e12: Vec<Vec<Rat>> =
            vec![vec![rat(1), rat(0), rat(0), rat(0)], vec![rat(0), rat(1), rat(0), rat(0)]];
        let e34: Vec<Vec<Rat>> =
            vec![vec![rat(0), rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(0), rat(1)]];
        assert_eq!(p.h_plus(), &Subspace::span_of_vectors(4, &e12));
        assert_eq!(p.h_minus(), &Subspace::span_of_vectors(4, &e34));
        assert!(p.vcal().is_zero());

        let (f1, f2) = f_structures_of(&p).unwrap();
        assert_eq!(f1.endo(), &j0().block_diag(&Mat::zeros(2, 2)));
        assert_eq!(f2.endo(), &Mat::zeros(2, 2).block_diag(&j0()));
    }

    #[test]
    fn first_product_of_kaehler_points_is_kaehler() {
        let a = kaehler_point_r2();
        let p = first_product(&a, &a).unwrap();
        assert!(p.h_plus().is_full());
        assert!(p.h_minus().is_zero());
        assert!(p.vcal().is_zero());
    }

    #[test]
    fn first_product_hyperkaehler_kaehler_blocks() {
        let hk = tamed_to_gk(&hyperkaehler_tamed()).unwrap();
        let kp = kaehler_point_r2();
        let p = first_product(&hk, &kp).unwrap();
        // H+ is the Kähler factor, 𝒱 the hyper-Kähler factor.
        assert_eq!(p.h_plus().dim(), 2);
        assert!(p.h_minus().is_zero());
        assert_eq!(p.vcal().dim(), 4);
        for j in 0..p.h_plus().dim() {
            let col = p.h_plus().basis().col(j);
            assert!(col[..4].iter().all(|x| x == &rat(0)));
        }
    }

    #[test]
    fn two_of_three_on_hyperkaehler() {
        let (i, j, k) = quaternion_triple();
        let hk = tamed_to_gk(&hyperkaehler_tamed()).unwrap();
        let id4 = Mat::identity(4);

        let flags = two_of_three(&id4, &hk).unwrap();
        assert_eq!(flags.count_true(), 3);
        assert!(flags.law_holds());

        // Right multiplication by the unit quaternion 3/5 + 4/5·i commutes
        // with all left multiplications and is orthogonal, hence holomorphic
        // for both structures: all three flags hold.
        let c = ratio(3, 5);
        let s = ratio(4, 5);
        let mut rq = Mat::zeros(4, 4);
        rq[(0, 0)] = c.clone();
        rq[(1, 0)] = s.clone();
        rq[(0, 1)] = -s.clone();
        rq[(1, 1)] = c.clone();
        rq[(2, 2)] = c.clone();
        rq[(3, 2)] = -s.clone();
        rq[(2, 3)] = s.clone();
        rq[(3, 3)] = c.clone();
        for m in [&i, &j, &k] {
            assert!(rq.commutes_with(m));
        }
        let flags = two_of_three(&rq, &hk).unwrap();
        assert_eq!(flags.count_true(), 3);

        // Left multiplication by I commutes with J₊J₋ = I but is not
        // holomorphic for either structure: exactly one flag true.
        let flags = two_of_three(&i, &hk).unwrap();
        assert!(flags.commutes);
        assert!(!flags.holo_l1);
        assert!(!flags.holo_l2);
        assert!(flags.law_holds());
    }

    #[test]
    fn swapped_pair_negates_the_bivector() {
        let hk = tamed_to_gk(&hyperkaehler_tamed()).unwrap();
        let swapped = hk.swapped().unwrap();
        let eta = holo_poisson(&hk).unwrap().eta_plus;
        let eta_swapped = holo_poisson(&swapped).unwrap().eta_plus;
        assert_eq!(eta_swapped, -&eta);
    }

    #[test]
    fn pair_b_field_matches_componentwise_transforms() {
        let p = kaehler_point_r2();
        let b = mq(&[&[0, 3], &[-3, 0]]);
        let moved = p.b_field(&b).unwrap();
        assert_eq!(moved.l1().dirac(), p.l1().b_field(&b).unwrap().dirac());
        assert_eq!(moved.l2().dirac(), p.l2().b_field(&b).unwrap().dirac());
        // Dirac-level round trip through the tamed correspondence.
        let (tamed, residual) = gk_to_tamed(&moved).unwrap();
        let rebuilt = tamed_to_gk(&tamed).unwrap().b_field(&residual).unwrap();
        assert_eq!(rebuilt.l1().dirac(), moved.l1().dirac());
        assert_eq!(rebuilt.l2().dirac(), moved.l2().dirac());
    }

    #[test]
    fn b_field_perturbation_shows_in_the_residual() {
        let p = kaehler_point_r2();
        let b = mq(&[&[0, 5], &[-5, 0]]);
        let moved = p.b_field(&b).unwrap();
        let (tamed, residual) = gk_to_tamed(&moved).unwrap();
        assert_eq!(residual, b);
        assert_eq!(tamed.eps(), &-&j0());
    }

    #[test]
    fn im_eps1_requires_both_inversions() {
        let p = kaehler_point_r2();
        // J₊ = J₋, so J₊ − J₋ is singular and ε± live on a proper subspace.
        assert!(matches!(im_eps1_identity(&p), Err(Error::Precondition(_))));
        let pm = eps_pm(&p).unwrap();
        assert_eq!(pm.domain.dim(), 1);
        assert!(pm.eps_plus.is_zero());
        assert!(pm.eps_minus.is_zero());
    }

    #[test]
    fn taming_is_validated() {
        // ε(J0 X, X) with ε = +ω0 is negative definite: rejected.
        assert!(TamedData::new(j0(), j0()).is_err());
        assert!(TamedData::new(-&j0(), j0()).is_ok());
    }
}
