//! Linear generalized complex structures and generalized complex linear maps.
//!
//! A generalized complex structure on a real `n`-space `V` is a complex Dirac
//! structure `L` on `V^ℂ` with `L ∩ L̄ = 0`; equivalently `E = π(L)` is a
//! co-CR subspace and the imaginary part of `ε` restricted to `E ∩ Ē` is
//! nondegenerate. Both characterizations are evaluated on every construction
//! and must agree. The +i eigenvalue convention is fixed throughout: for an
//! f-structure `F`, the space `V^{1,0}` is the eigenspace of eigenvalue `i`,
//! and the endomorphism `J` of `V ⊕ V*` attached to `L` has `L` as its
//! +i eigenspace.

use crate::dirac::{Dirac, EEpsilon};
use crate::error::{Error, Result};
use crate::exactla::{CRat, Field, Mat, Rat, Subspace};

/// `C ∩ C̄ = 0`.
pub fn is_cr(c: &Subspace<CRat>) -> Result<bool> {
    Ok(c.intersect(&c.conjugate())?.is_zero())
}

/// `C + C̄ = V^ℂ`.
pub fn is_cocr(c: &Subspace<CRat>) -> Result<bool> {
    Ok(c.sum(&c.conjugate())?.is_full())
}

/// `C` is co-CR exactly when `Ann(C)` is CR; evaluates both sides and
/// reports whether the biconditional holds (it always should).
pub fn annihilator_duality(c: &Subspace<CRat>) -> Result<bool> {
    Ok(is_cocr(c)? == is_cr(&c.annihilator())?)
}

/// Gram matrix of the pairing on `V ⊕ V*`: `½ [[0, I], [I, 0]]`.
pub fn pairing_gram(n: usize) -> Mat<Rat> {
    let half = crate::exactla::ratio(1, 2);
    Mat::from_fn(2 * n, 2 * n, |i, j| {
        if i + n == j || j + n == i {
            half.clone()
        } else {
            Rat::from_integer(0.into())
        }
    })
}

/// Real endomorphism with prescribed +i eigenspace `plus` (its conjugate is
/// the −i eigenspace, and `zero_part`, when present, is the kernel).
fn real_endo_from_eigenspaces(
    zero_part: Option<&Subspace<CRat>>,
    plus: &Subspace<CRat>,
) -> Result<Mat<Rat>> {
    let n = plus.ambient_dim();
    let minus = plus.conjugate();
    let mut columns = Vec::new();
    let mut eigenvalues: Vec<CRat> = Vec::new();
    if let Some(z) = zero_part {
        for j in 0..z.dim() {
            columns.push(z.basis().col(j));
            eigenvalues.push(CRat::zero());
        }
    }
    for j in 0..plus.dim() {
        columns.push(plus.basis().col(j));
        eigenvalues.push(crate::exactla::imag_unit());
    }
    for j in 0..minus.dim() {
        columns.push(minus.basis().col(j));
        eigenvalues.push(-crate::exactla::imag_unit());
    }
    if columns.len() != n {
        return Err(Error::Precondition(format!(
            "eigenspaces of total dimension {} cannot split K^{}",
            columns.len(),
            n
        )));
    }
    let m = Mat::from_cols(n, columns);
    let m_inv = m.inverse().ok_or_else(|| Error::Precondition("eigenspaces do not span".into()))?;
    let mut d = Mat::zeros(n, n);
    for (i, ev) in eigenvalues.into_iter().enumerate() {
        d[(i, i)] = ev;
    }
    let endo = &(&m * &d) * &m_inv;
    if !endo.is_real() {
        return Err(Error::Internal("eigenspace data does not define a real map".into()));
    }
    Ok(endo.real_part())
}

/// Real complex structure on `V` whose +i eigenspace is `plus` (which must
/// be transverse to its conjugate). On the real and imaginary parts of a
/// basis column `a + ib` the structure acts by `J a = −b`, `J b = a`, and
/// transversality makes those parts a real basis, so `J` comes from a real
/// solve with no complex arithmetic.
pub fn complex_structure_from_plus_eigenspace(plus: &Subspace<CRat>) -> Result<Mat<Rat>> {
    let re = plus.basis().real_part();
    let im = plus.basis().imag_part();
    let frame = re.hstack(&im);
    let frame_inv = frame
        .inverse()
        .ok_or_else(|| Error::Precondition("eigenspace meets its conjugate".into()))?;
    let target = (-&im).hstack(&re);
    let j = &target * &frame_inv;
    let n = j.rows();
    if !(&(&j * &j) + &Mat::identity(n)).is_zero() {
        return Err(Error::Internal("eigenspace does not define a complex structure".into()));
    }
    Ok(j)
}

/// A linear f-structure `F` (`F³ + F = 0`) with its cached splitting
/// `V^ℂ = V⁰ ⊕ V^{1,0} ⊕ V^{0,1}`.
#[derive(Clone, PartialEq, Debug)]
pub struct FStructure {
    f: Mat<Rat>,
    v0c: Subspace<CRat>,
    v10: Subspace<CRat>,
    v01: Subspace<CRat>,
}

impl FStructure {
    /// Split an endomorphism with `F³ + F = 0` into its eigenspaces, via the
    /// projectors `P⁰ = F² + Id` and `P^{1,0} = −(F² + iF)/2`.
    pub fn from_endo(f: Mat<Rat>) -> Result<FStructure> {
        if !f.is_square() {
            return Err(Error::DimensionMismatch("f-structure from a non-square matrix".into()));
        }
        let n = f.rows();
        let f2 = &f * &f;
        let f3 = &f2 * &f;
        if !(&f3 + &f).is_zero() {
            return Err(Error::Precondition("F^3 + F != 0".into()));
        }
        let fc = f.complexify();
        let fc2 = &fc * &fc;
        let p0 = &fc2 + &Mat::identity(n);
        let i = crate::exactla::imag_unit();
        let minus_half = CRat::from_rat(crate::exactla::ratio(-1, 2));
        let p10 = (&fc2 + &fc.scale(&i)).scale(&minus_half);
        let v0c = Subspace::image(&p0);
        let v10 = Subspace::image(&p10);
        let v01 = v10.conjugate();
        debug_assert_eq!(v0c.dim() + v10.dim() + v01.dim(), n);
        Ok(FStructure { f, v0c, v10, v01 })
    }

    /// Rebuild the endomorphism from a splitting: zero on `v0c` (which must
    /// be conjugation-invariant), `+i` on `v10`, `−i` on the conjugate.
    pub fn from_split(v0c: &Subspace<CRat>, v10: &Subspace<CRat>) -> Result<FStructure> {
        if !v0c.is_conjugation_invariant() {
            return Err(Error::Precondition("V0 is not conjugation-invariant".into()));
        }
        if !v10.intersect(&v10.conjugate())?.is_zero() {
            return Err(Error::Precondition("V10 meets its conjugate".into()));
        }
        let f = real_endo_from_eigenspaces(Some(v0c), v10)?;
        let built = FStructure::from_endo(f)?;
        if &built.v0c != v0c || &built.v10 != v10 {
            return Err(Error::Internal("eigenspace round trip failed".into()));
        }
        Ok(built)
    }

    pub fn endo(&self) -> &Mat<Rat> {
        &self.f
    }

    pub fn dim(&self) -> usize {
        self.f.rows()
    }

    pub fn v0c(&self) -> &Subspace<CRat> {
        &self.v0c
    }

    pub fn v10(&self) -> &Subspace<CRat> {
        &self.v10
    }

    pub fn v01(&self) -> &Subspace<CRat> {
        &self.v01
    }

    /// Real points of `V⁰` (the kernel of `F`).
    pub fn v0_real(&self) -> Subspace<Rat> {
        Subspace::kernel(&self.f)
    }

    /// The associated co-CR subspace `V⁰ ⊕ V^{1,0}`.
    pub fn cocr(&self) -> Subspace<CRat> {
        self.v0c.sum(&self.v10).expect("same ambient")
    }

    /// Real points of `V^{1,0} ⊕ V^{0,1}` (the image of `F`).
    pub fn complex_directions(&self) -> Subspace<Rat> {
        Subspace::image(&self.f)
    }
}

/// f-linearity of `t`: commutation `t F_V = F_W t` and the subspace
/// formulation (`t(C_V) ⊆ C_W` and `t(D_V) ⊆ D_W`) are both evaluated and
/// must agree.
pub fn is_f_linear(t: &Mat<Rat>, fv: &FStructure, fw: &FStructure) -> Result<bool> {
    if t.rows() != fw.dim() || t.cols() != fv.dim() {
        return Err(Error::DimensionMismatch(format!(
            "map of shape {}x{} between f-structures on dimensions {} and {}",
            t.rows(),
            t.cols(),
            fv.dim(),
            fw.dim()
        )));
    }
    let commutes = (t * fv.endo()) == (fw.endo() * t);
    let tc = t.complexify();
    let cr_linear = fw.v10().contains_subspace(&fv.v10().map_by(&tc)?)?;
    let cocr_linear = fw.cocr().contains_subspace(&fv.cocr().map_by(&tc)?)?;
    let by_subspaces = cr_linear && cocr_linear;
    if commutes != by_subspaces {
        return Err(Error::Internal(
            "commutation and subspace formulations of f-linearity disagree".into(),
        ));
    }
    Ok(commutes)
}

/// A linear generalized complex structure with its cached derived data.
#[derive(Clone, PartialEq, Debug)]
pub struct GcStructure {
    v_dim: usize,
    l: Dirac<CRat>,
    e: Subspace<CRat>,
    eps: Mat<CRat>,
    j: Mat<Rat>,
    poisson: Mat<Rat>,
}

impl GcStructure {
    /// Validate a complex Dirac structure as generalized complex and cache
    /// `E`, `ε`, the endomorphism `J` and the associated real Poisson
    /// bivector.
    ///
    /// Both definitional characterizations (`L ∩ L̄ = 0` versus co-CR `E`
    /// with nondegenerate `Im ε|_{E∩Ē}`) are computed; a disagreement is an
    /// internal error, a joint failure a rejection. The bivector is computed
    /// two ways — from the real Dirac structure `L(D, Im ε|_D)` on the real
    /// points `D` of `E ∩ Ē`, and as the `V* → V` block of `J` — and the two
    /// must coincide.
    pub fn from_dirac(l: Dirac<CRat>) -> Result<GcStructure> {
        let n = l.v_dim();
        let disjoint = l.space().intersect(&l.space().conjugate())?.is_zero();
        let ee = l.decompose()?;
        let cocr = is_cocr(&ee.e)?;
        let (real_d, im_form) = restricted_imaginary_form(&ee)?;
        let nondegenerate = real_d.is_zero() || im_form.inverse().is_some();
        let by_decomposition = cocr && nondegenerate;
        if disjoint != by_decomposition {
            return Err(Error::Internal(
                "transversality and co-CR characterizations disagree".into(),
            ));
        }
        if !disjoint {
            return Err(Error::NotGeneralizedComplex(
                "L meets its conjugate (equivalently: E is not co-CR or Im ε degenerates)".into(),
            ));
        }

        // J: the real endomorphism of V ⊕ V* with +i eigenspace L.
        let j = complex_structure_from_plus_eigenspace(l.space())?;
        let gram = pairing_gram(n);
        if &(&j.transpose() * &gram) * &j != gram {
            return Err(Error::Internal("J does not preserve the pairing".into()));
        }
        debug_assert_eq!(
            {
                let jc = j.complexify();
                let i_scaled = Mat::<CRat>::identity(2 * n).scale(&crate::exactla::imag_unit());
                &Subspace::kernel(&(&jc - &i_scaled))
            },
            l.space()
        );

        // Associated Poisson bivector, route (a): L(D, Im ε|_D) on V.
        let eta_a = if real_d.is_zero() {
            Mat::zeros(n, n)
        } else {
            let real_dirac = Dirac::build(&real_d, &im_form)?;
            real_dirac
                .poisson_bivector()
                .ok_or_else(|| Error::Internal("associated structure must be Poisson".into()))?
        };
        // Route (b): the V* → V block of J.
        let eta_b = Mat::from_fn(n, n, |r, c| j[(r, n + c)].clone());
        if eta_a != eta_b {
            return Err(Error::Internal("the two bivector computations disagree".into()));
        }

        Ok(GcStructure { v_dim: n, e: ee.e, eps: ee.eps, l, j, poisson: eta_a })
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn dirac(&self) -> &Dirac<CRat> {
        &self.l
    }

    /// The associated co-CR subspace `E = π(L)`.
    pub fn cocr_space(&self) -> &Subspace<CRat> {
        &self.e
    }

    /// `ε` in the canonical basis of `E`.
    pub fn eps(&self) -> &Mat<CRat> {
        &self.eps
    }

    /// The endomorphism of `V ⊕ V*` with +i eigenspace `L`.
    pub fn endo(&self) -> &Mat<Rat> {
        &self.j
    }

    /// The associated real Poisson bivector on `V`.
    pub fn poisson_bivector(&self) -> &Mat<Rat> {
        &self.poisson
    }

    /// B-field transform by a real skew form; `E`, the imaginary part of `ε`
    /// and hence the Poisson bivector are unchanged.
    pub fn b_field(&self, b: &Mat<Rat>) -> Result<GcStructure> {
        let out = GcStructure::from_dirac(self.l.b_field(&b.complexify())?)?;
        debug_assert_eq!(out.poisson, self.poisson);
        Ok(out)
    }

    /// Push-forward along a real linear isomorphism.
    pub fn pushforward_iso(&self, t: &Mat<Rat>) -> Result<GcStructure> {
        if t.inverse().is_none() {
            return Err(Error::Singular("push-forward of a GC structure".into()));
        }
        GcStructure::from_dirac(self.l.pushforward_def(&t.complexify())?)
    }

    /// `ε(x, y)` for `x, y ∈ E` given in ambient coordinates.
    fn eps_value(&self, x: &[CRat], y: &[CRat]) -> Option<CRat> {
        let cx = self.e.coords_of(x)?;
        let cy = self.e.coords_of(y)?;
        let mut acc = CRat::zero();
        for i in 0..cy.len() {
            for j in 0..cx.len() {
                acc = acc + cy[i].clone() * self.eps[(i, j)].clone() * cx[j].clone();
            }
        }
        Some(acc)
    }

    /// If `L = L(V⁰ ⊕ V^{1,0}, iω)` for the given f-structure, return `ω`
    /// (as a real form on `V` annihilating the complex directions).
    pub fn normal_form_omega(&self, f: &FStructure) -> Result<Option<Mat<Rat>>> {
        if self.e != f.cocr() {
            return Ok(None);
        }
        let omega = match self.recover_omega(f)? {
            Some(o) => o,
            None => return Ok(None),
        };
        let rebuilt = normal_form_build(f, &omega)?;
        Ok(if rebuilt.l == self.l { Some(omega) } else { None })
    }

    /// Extract `Im(ε|_{V⁰})` as a form on `V`, provided `ε` vanishes against
    /// `V^{1,0}` within `E` and is purely imaginary on `V⁰`.
    fn recover_omega(&self, f: &FStructure) -> Result<Option<Mat<Rat>>> {
        let v0r = f.v0_real();
        let v0_basis = v0r.basis().complexify();
        for j in 0..f.v10().dim() {
            let x = f.v10().basis().col(j);
            for k in 0..self.e.dim() {
                let y = self.e.basis().col(k);
                match self.eps_value(&x, &y) {
                    Some(v) if Field::is_zero(&v) => {}
                    _ => return Ok(None),
                }
            }
        }
        let r = v0r.dim();
        let mut omega_v0 = Mat::<CRat>::zeros(r, r);
        for a in 0..r {
            for b in 0..r {
                let v = self
                    .eps_value(&v0_basis.col(b), &v0_basis.col(a))
                    .ok_or_else(|| Error::Internal("V0 must lie in E".into()))?;
                if !Field::is_zero(&Field::real_part(&v)) {
                    return Ok(None);
                }
                omega_v0[(a, b)] = CRat::from_rat(v.im.clone());
            }
        }
        // Assemble on V: ω on V⁰, zero against the complex directions.
        let n = self.v_dim;
        let t = assemble_basis(&v0r, f)?;
        let t_inv =
            t.inverse().ok_or_else(|| Error::Internal("splitting basis singular".into()))?;
        let padded = omega_v0.block_diag(&Mat::zeros(n - r, n - r));
        let omega = &(&t_inv.transpose() * &padded) * &t_inv;
        if !omega.is_real() {
            return Ok(None);
        }
        let omega = omega.real_part();
        if !omega.is_skew() {
            return Ok(None);
        }
        Ok(Some(omega))
    }
}

/// Real points `D` of `E ∩ Ē` together with `Im(ε|_D)` in the canonical
/// basis of `D`.
fn restricted_imaginary_form(ee: &EEpsilon<CRat>) -> Result<(Subspace<Rat>, Mat<Rat>)> {
    let d_complex = ee.e.intersect(&ee.e.conjugate())?;
    let d_real = d_complex.real_points()?;
    let k = d_real.dim();
    let basis_c = d_real.basis().complexify();
    let coords: Vec<Vec<CRat>> = (0..k)
        .map(|j| {
            ee.e.coords_of(&basis_c.col(j))
                .ok_or_else(|| Error::Internal("D must lie in E".into()))
        })
        .collect::<Result<_>>()?;
    let mut form = Mat::zeros(k, k);
    for j in 0..k {
        for i in 0..k {
            let mut acc = CRat::zero();
            for a in 0..coords[i].len() {
                for b in 0..coords[j].len() {
                    acc = acc + coords[i][a].clone() * ee.eps[(a, b)].clone() * coords[j][b].clone();
                }
            }
            form[(i, j)] = acc.im.clone();
        }
    }
    Ok((d_real, form))
}

/// `[V⁰ real basis | V^{1,0} basis | V^{0,1} basis]` as a complex `n×n` matrix.
fn assemble_basis(v0r: &Subspace<Rat>, f: &FStructure) -> Result<Mat<CRat>> {
    let n = f.dim();
    let mut cols = Vec::with_capacity(n);
    let v0c = v0r.basis().complexify();
    for j in 0..v0r.dim() {
        cols.push(v0c.col(j));
    }
    for j in 0..f.v10().dim() {
        cols.push(f.v10().basis().col(j));
    }
    for j in 0..f.v01().dim() {
        cols.push(f.v01().basis().col(j));
    }
    if cols.len() != n {
        return Err(Error::Precondition("splitting does not span".into()));
    }
    Ok(Mat::from_cols(n, cols))
}

/// Compatibility of `(F, ω)`: `ω` skew with `ker ω` exactly the complex
/// directions of `F` and `ω|_{V⁰}` nondegenerate.
pub fn check_compatible(f: &FStructure, omega: &Mat<Rat>) -> Result<()> {
    let n = f.dim();
    if omega.rows() != n || omega.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "two-form of shape {}x{} on dimension {}",
            omega.rows(),
            omega.cols(),
            n
        )));
    }
    if !omega.is_skew() {
        return Err(Error::NotSkew("compatibility data".into()));
    }
    if Subspace::kernel(omega) != f.complex_directions() {
        return Err(Error::Precondition("ker ω is not V^{1,0} ⊕ V^{0,1}".into()));
    }
    let v0 = f.v0_real();
    let restricted = omega.restrict_form(v0.basis());
    if restricted.rows() > 0 && restricted.inverse().is_none() {
        return Err(Error::Precondition("ω degenerates on V⁰".into()));
    }
    Ok(())
}

/// `L(V⁰ ⊕ V^{1,0}, iω)` for a compatible pair; also asserts the block-matrix
/// identity `J = [[F, η], [−ω, −Fᵀ]]` with `η` the bivector of `L(V⁰, ω)`.
pub fn normal_form_build(f: &FStructure, omega: &Mat<Rat>) -> Result<GcStructure> {
    check_compatible(f, omega)?;
    let n = f.dim();
    let e = f.cocr();
    let i_unit = crate::exactla::imag_unit();
    let eps = omega.complexify().scale(&i_unit).restrict_form(e.basis());
    let gc = GcStructure::from_dirac(Dirac::build(&e, &eps)?)?;

    // Block identity for J.
    let v0 = f.v0_real();
    let eta = if v0.is_zero() {
        Mat::zeros(n, n)
    } else {
        let omega_v0 = omega.restrict_form(v0.basis());
        Dirac::build(&v0, &omega_v0)?
            .poisson_bivector()
            .ok_or_else(|| Error::Internal("L(V0, ω) must be Poisson".into()))?
    };
    let mut expected = Mat::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            expected[(r, c)] = f.endo()[(r, c)].clone();
            expected[(r, n + c)] = eta[(r, c)].clone();
            expected[(n + r, c)] = -omega[(r, c)].clone();
            expected[(n + r, n + c)] = -f.endo()[(c, r)].clone();
        }
    }
    if gc.endo() != &expected {
        return Err(Error::Internal("normal-form J does not match its block matrix".into()));
    }
    Ok(gc)
}

/// The distinguished B-field certificate produced by [`normalize`].
#[derive(Clone, Debug)]
pub struct NormalFormCertificate {
    pub f_structure: FStructure,
    pub omega: Mat<Rat>,
    pub b: Mat<Rat>,
}

/// The unique real skew `B` (with vanishing block across
/// `V^{1,0} × V^{0,1}`) such that `exp(B)(L)` is in normal form for `F`.
///
/// The defining block relations are `B = −Re ε` on `V⁰ × V⁰` and `B = −ε` on
/// `V^{1,0} × V^{1,0}` and `V⁰ × V^{1,0}`; conjugation symmetry fills the
/// remaining blocks. B-fields vanishing on `E × E` act trivially on `L`, so
/// the transformed structure is unique outright and `B` itself is pinned by
/// the vanishing mixed block; [`normalize_uniqueness_dimension`] certifies
/// that the combined linear system has a zero-dimensional solution space.
pub fn normalize(gc: &GcStructure, f: &FStructure) -> Result<NormalFormCertificate> {
    if gc.cocr_space() != &f.cocr() {
        return Err(Error::Precondition(
            "π(L) is not the co-CR subspace of the given f-structure".into(),
        ));
    }
    let n = gc.v_dim();
    let v0r = f.v0_real();
    let r = v0r.dim();
    let s = f.v10().dim();
    let t = assemble_basis(&v0r, f)?;
    let v0_cols: Vec<Vec<CRat>> = (0..r).map(|j| t.col(j)).collect();
    let v10_cols: Vec<Vec<CRat>> = (0..s).map(|j| t.col(r + j)).collect();

    let eps_of = |x: &[CRat], y: &[CRat]| -> Result<CRat> {
        gc.eps_value(x, y)
            .ok_or_else(|| Error::Internal("vector outside E during normalization".into()))
    };

    // B in the splitting basis; entry (i, j) is B(t_j, t_i).
    let mut b_split = Mat::<CRat>::zeros(n, n);
    for a in 0..r {
        for b in 0..r {
            let v = eps_of(&v0_cols[b], &v0_cols[a])?;
            b_split[(a, b)] = -CRat::from_rat(v.re.clone());
        }
    }
    for a in 0..r {
        for b in 0..s {
            // V⁰ × V^{1,0} and the conjugate block.
            let v = eps_of(&v10_cols[b], &v0_cols[a])?;
            b_split[(a, r + b)] = -v.clone();
            b_split[(r + b, a)] = v.clone();
            b_split[(a, r + s + b)] = -v.conj();
            b_split[(r + s + b, a)] = v.conj();
        }
    }
    for a in 0..s {
        for b in 0..s {
            let v = eps_of(&v10_cols[b], &v10_cols[a])?;
            b_split[(a + r, b + r)] = -v.clone();
            b_split[(a + r + s, b + r + s)] = -v.conj();
        }
    }
    let t_inv = t.inverse().ok_or_else(|| Error::Internal("splitting basis singular".into()))?;
    let b_ambient = &(&t_inv.transpose() * &b_split) * &t_inv;
    if !b_ambient.is_real() {
        return Err(Error::Internal("normalizing B-field is not real".into()));
    }
    let b = b_ambient.real_part();
    if !b.is_skew() {
        return Err(Error::Internal("normalizing B-field is not skew".into()));
    }

    let transformed = gc.b_field(&b)?;
    let omega = transformed
        .normal_form_omega(f)?
        .ok_or_else(|| Error::Internal("transformed structure is not in normal form".into()))?;
    Ok(NormalFormCertificate { f_structure: f.clone(), omega, b })
}

/// Dimension of the solution space of the homogeneous normalization system:
/// real skew `B` with `B|_{E×E} = 0` and vanishing `V^{1,0} × V^{0,1}`
/// block. Zero means the system solved by [`normalize`] pins `B` uniquely.
pub fn normalize_uniqueness_dimension(f: &FStructure) -> Result<usize> {
    let n = f.dim();
    let e = f.cocr();
    let unknowns: Vec<(usize, usize)> =
        (0..n).flat_map(|p| ((p + 1)..n).map(move |q| (p, q))).collect();
    if unknowns.is_empty() {
        return Ok(0);
    }
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let zero = Rat::from_integer(0.into());
    let mut push_constraints = |left: &Mat<CRat>, right: &Mat<CRat>| {
        // leftᵀ · B · right = 0 entrywise, linear in the unknowns b_{pq}.
        for i in 0..left.cols() {
            for j in 0..right.cols() {
                let mut row_re = vec![zero.clone(); unknowns.len()];
                let mut row_im = vec![zero.clone(); unknowns.len()];
                for (u, &(p, q)) in unknowns.iter().enumerate() {
                    let coeff = left[(p, i)].clone() * right[(q, j)].clone()
                        - left[(q, i)].clone() * right[(p, j)].clone();
                    row_re[u] = coeff.re.clone();
                    row_im[u] = coeff.im.clone();
                }
                rows.push(row_re);
                rows.push(row_im);
            }
        }
    };
    push_constraints(e.basis(), e.basis());
    push_constraints(f.v01().basis(), f.v10().basis());
    let system = Mat::from_rows(rows);
    Ok(system.kernel_basis().cols())
}

/// Generalized complex linearity: `t` maps the co-CR subspace of the source
/// into that of the target and pushes the associated Poisson bivector onto
/// the target one.
pub fn is_gc_linear(t: &Mat<Rat>, source: &GcStructure, target: &GcStructure) -> Result<bool> {
    if t.cols() != source.v_dim() || t.rows() != target.v_dim() {
        return Err(Error::DimensionMismatch(format!(
            "map of shape {}x{} between GC structures on dimensions {} and {}",
            t.rows(),
            t.cols(),
            source.v_dim(),
            target.v_dim()
        )));
    }
    let tc = t.complexify();
    let cocr_linear = target.cocr_space().contains_subspace(&source.cocr_space().map_by(&tc)?)?;
    let pushed = &(t * source.poisson_bivector()) * &t.transpose();
    Ok(cocr_linear && &pushed == target.poisson_bivector())
}

/// Existence of a real B-field with `exp(B)(L₁) = L₂`. B-fields fix `E`, so
/// the structures must share their co-CR subspace; the remaining condition
/// `B|_E = ε₂ − ε₁` is a rational linear system in the entries of `B`.
pub fn bfield_equivalent(l1: &GcStructure, l2: &GcStructure) -> Result<Option<Mat<Rat>>> {
    if l1.v_dim() != l2.v_dim() {
        return Err(Error::DimensionMismatch("B-field equivalence needs equal dimensions".into()));
    }
    if l1.cocr_space() != l2.cocr_space() {
        return Ok(None);
    }
    let n = l1.v_dim();
    let e = l1.cocr_space();
    let delta = l2.eps() - l1.eps();
    let unknowns: Vec<(usize, usize)> =
        (0..n).flat_map(|p| ((p + 1)..n).map(move |q| (p, q))).collect();
    let k = e.dim();
    let zero = Rat::from_integer(0.into());
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for i in 0..k {
        for j in 0..k {
            // (B restricted to E in its canonical basis)[i][j] = Δ[i][j],
            // i.e. B(e_j, e_i) = Δ[i][j].
            let mut row_re = vec![zero.clone(); unknowns.len()];
            let mut row_im = vec![zero.clone(); unknowns.len()];
            for (u, &(p, q)) in unknowns.iter().enumerate() {
                let coeff = e.basis()[(p, i)].clone() * e.basis()[(q, j)].clone()
                    - e.basis()[(q, i)].clone() * e.basis()[(p, j)].clone();
                row_re[u] = coeff.re.clone();
                row_im[u] = coeff.im.clone();
            }
            rows.push(row_re);
            rows.push(row_im);
            let value = delta[(i, j)].clone();
            rhs.push(value.re.clone());
            rhs.push(value.im.clone());
        }
    }
    if unknowns.is_empty() {
        return Ok(if rhs.iter().all(|x| x == &zero) { Some(Mat::zeros(n, n)) } else { None });
    }
    let system = Mat::from_rows(rows);
    let Some(solution) = system.solve(&rhs) else {
        return Ok(None);
    };
    let mut b = Mat::zeros(n, n);
    for (u, &(p, q)) in unknowns.iter().enumerate() {
        b[(p, q)] = solution[u].clone();
        b[(q, p)] = -solution[u].clone();
    }
    let transformed = l1.b_field(&b)?;
    if transformed.dirac() == l2.dirac() {
        Ok(Some(b))
    } else {
        Err(Error::Internal("solved B-field does not transform L1 into L2".into()))
    }
}

/// The rejected alternative linearity notion: invariance of the subspace
/// `{(X, tᵀη, tX, η)}` under `J_V ⊕ J_W`. Kept because it distinguishes
/// B-fields of type `(1,1)` from the rest, which the main definition does
/// not.
pub fn graph_invariance_check(
    t: &Mat<Rat>,
    source: &GcStructure,
    target: &GcStructure,
) -> Result<bool> {
    let n = source.v_dim();
    let m = target.v_dim();
    if t.cols() != n || t.rows() != m {
        return Err(Error::DimensionMismatch("graph invariance shape mismatch".into()));
    }
    let total = 2 * n + 2 * m;
    let zero = Rat::from_integer(0.into());
    let one = Rat::from_integer(1.into());
    let mut cols = Vec::new();
    for i in 0..n {
        let mut v = vec![zero.clone(); total];
        v[i] = one.clone();
        for r in 0..m {
            v[2 * n + r] = t[(r, i)].clone();
        }
        cols.push(v);
    }
    for j in 0..m {
        let mut v = vec![zero.clone(); total];
        v[2 * n + m + j] = one.clone();
        for r in 0..n {
            v[n + r] = t[(j, r)].clone();
        }
        cols.push(v);
    }
    let graph = Subspace::span_of_vectors(total, &cols);
    let j_sum = source.endo().block_diag(target.endo());
    Ok(graph.map_by(&j_sum)? == graph)
}

/// Split a real skew form into its `(2,0)+(0,2)` and `(1,1)` parts with
/// respect to a complex structure: `b^{1,1} = ½(b + JᵀbJ)`.
pub fn type_decompose(b: &Mat<Rat>, j: &Mat<Rat>) -> Result<(Mat<Rat>, Mat<Rat>)> {
    let n = j.rows();
    if !(&(j * j) + &Mat::identity(n)).is_zero() {
        return Err(Error::Precondition("J^2 != -Id".into()));
    }
    if !b.is_skew() || b.rows() != n {
        return Err(Error::NotSkew("type decomposition".into()));
    }
    let half = crate::exactla::ratio(1, 2);
    let conjugated = &(&j.transpose() * b) * j;
    let b11 = (b + &conjugated).scale(&half);
    let b2002 = (b - &conjugated).scale(&half);
    debug_assert_eq!(&b11 + &b2002, b.clone());
    debug_assert_eq!(&(&j.transpose() * &b11) * j, b11);
    Ok((b2002, b11))
}

/// The `(1,1)` part of a bivector `η: V* → V`: `½(η + J η Jᵀ)`.
pub fn bivector_one_one_part(eta: &Mat<Rat>, j: &Mat<Rat>) -> Result<Mat<Rat>> {
    let n = j.rows();
    if !(&(j * j) + &Mat::identity(n)).is_zero() {
        return Err(Error::Precondition("J^2 != -Id".into()));
    }
    let half = crate::exactla::ratio(1, 2);
    Ok((eta + &(&(j * eta) * &j.transpose())).scale(&half))
}

/// Witness data for the direct-sum factorization of a generalized complex
/// linear map: B-fields normalizing both sides, adapted f-structures, the
/// symplectic/complex splittings and the two blocks of `t`.
#[derive(Clone, Debug)]
pub struct GcLinearWitness {
    pub b_v: Mat<Rat>,
    pub b_w: Mat<Rat>,
    pub f_v: FStructure,
    pub f_w: FStructure,
    pub omega_v: Mat<Rat>,
    pub omega_w: Mat<Rat>,
    pub d_v: Subspace<Rat>,
    pub v_prime: Subspace<Rat>,
    pub d_w: Subspace<Rat>,
    pub w_prime: Subspace<Rat>,
    pub t_symp: Mat<Rat>,
    pub t_cplx: Mat<Rat>,
}

/// Deterministic complement of `inner` inside `outer` (`inner ⊆ outer`),
/// from the pivot-complement rule applied in coordinates of `outer`.
fn complement_within(inner: &Subspace<Rat>, outer: &Subspace<Rat>) -> Result<Subspace<Rat>> {
    let mut coord_cols = Vec::new();
    for j in 0..inner.dim() {
        let c = outer
            .coords_of(&inner.basis().col(j))
            .ok_or_else(|| Error::Precondition("inner space not contained in outer".into()))?;
        coord_cols.push(c);
    }
    let inner_coords = Subspace::span_of_vectors(outer.dim(), &coord_cols);
    inner_coords.complement().map_by(outer.basis())
}

/// Factor a generalized complex linear map, after normalizing B-fields, as a
/// direct sum of a Poisson morphism between symplectic blocks and a complex
/// linear map between complex blocks.
pub fn decompose_gc_linear(
    t: &Mat<Rat>,
    source: &GcStructure,
    target: &GcStructure,
) -> Result<GcLinearWitness> {
    if !is_gc_linear(t, source, target)? {
        return Err(Error::Precondition("map is not generalized complex linear".into()));
    }
    let n = source.v_dim();
    let d_v = source.cocr_space().intersect(&source.cocr_space().conjugate())?.real_points()?;
    let d_w = target.cocr_space().intersect(&target.cocr_space().conjugate())?.real_points()?;

    // Complement of D_V chosen inside ker t first, so that t maps it into a
    // complement of D_W.
    let ker_t = Subspace::kernel(t);
    let a = ker_t.intersect(&d_v)?;
    let a_prime = complement_within(&a, &ker_t)?;
    let k_sub = d_v.sum(&a_prime)?;
    let c = k_sub.complement();
    let v_prime = a_prime.sum(&c)?;
    if d_v.intersect(&v_prime)?.dim() != 0 || d_v.dim() + v_prime.dim() != n {
        return Err(Error::Internal("source splitting failed".into()));
    }
    let t_image = v_prime.map_by(t)?;
    if t_image.intersect(&d_w)?.dim() != 0 {
        return Err(Error::Internal("image of the complement meets D_W".into()));
    }
    let occupied = d_w.sum(&t_image)?;
    let extra = occupied.complement();
    let w_prime = t_image.sum(&extra)?;
    if d_w.intersect(&w_prime)?.dim() != 0 || d_w.dim() + w_prime.dim() != target.v_dim() {
        return Err(Error::Internal("target splitting failed".into()));
    }

    // Adapted f-structures: V⁰ = D, V^{1,0} = E ∩ (complement)^ℂ.
    let c_v = source.cocr_space().intersect(&v_prime.complexify())?;
    let c_w = target.cocr_space().intersect(&w_prime.complexify())?;
    let f_v = FStructure::from_split(&d_v.complexify(), &c_v)?;
    let f_w = FStructure::from_split(&d_w.complexify(), &c_w)?;
    let cert_v = normalize(source, &f_v)?;
    let cert_w = normalize(target, &f_w)?;

    let t_symp = block_matrix(t, &d_v, &d_w)?;
    let t_cplx = block_matrix(t, &v_prime, &w_prime)?;

    Ok(GcLinearWitness {
        b_v: cert_v.b,
        b_w: cert_w.b,
        f_v,
        f_w,
        omega_v: cert_v.omega,
        omega_w: cert_w.omega,
        d_v,
        v_prime,
        d_w,
        w_prime,
        t_symp,
        t_cplx,
    })
}

/// Matrix of `t` restricted to `from → to`, in the canonical bases.
fn block_matrix(t: &Mat<Rat>, from: &Subspace<Rat>, to: &Subspace<Rat>) -> Result<Mat<Rat>> {
    let mut cols = Vec::new();
    for j in 0..from.dim() {
        let image = t.mul_vec(&from.basis().col(j));
        let c = to
            .coords_of(&image)
            .ok_or_else(|| Error::Precondition("map does not respect the splitting".into()))?;
        cols.push(c);
    }
    Ok(Mat::from_cols(to.dim(), cols))
}

/// Replay a factorization witness and confirm the three equivalent
/// formulations of generalized complex linearity on this instance.
pub fn verify_gc_linear_witness(
    t: &Mat<Rat>,
    source: &GcStructure,
    target: &GcStructure,
    w: &GcLinearWitness,
) -> Result<bool> {
    // (i) the definition itself.
    if !is_gc_linear(t, source, target)? {
        return Ok(false);
    }
    // (ii) after the B-fields, both sides are in normal form and t is
    // f-linear for the adapted f-structures.
    let nv = source.b_field(&w.b_v)?;
    let nw = target.b_field(&w.b_w)?;
    if nv.normal_form_omega(&w.f_v)?.as_ref() != Some(&w.omega_v) {
        return Ok(false);
    }
    if nw.normal_form_omega(&w.f_w)?.as_ref() != Some(&w.omega_w) {
        return Ok(false);
    }
    if !is_f_linear(t, &w.f_v, &w.f_w)? {
        return Ok(false);
    }
    // (iii) direct-sum shape: t maps the splitting blocks into each other
    // and reassembles from its two blocks.
    let assembled_left = t * &w.d_v.basis().hstack(w.v_prime.basis());
    let assembled_right = (w.d_w.basis() * &w.t_symp).hstack(&(w.w_prime.basis() * &w.t_cplx));
    if assembled_left != assembled_right {
        return Ok(false);
    }
    // Symplectic block: a Poisson morphism between symplectic forms.
    let omega_v_block = w.omega_v.restrict_form(w.d_v.basis());
    let omega_w_block = w.omega_w.restrict_form(w.d_w.basis());
    let (Some(eta_v), Some(eta_w)) = (omega_v_block.inverse(), omega_w_block.inverse()) else {
        return Ok(false);
    };
    if &(&w.t_symp * &eta_v) * &w.t_symp.transpose() != eta_w {
        return Ok(false);
    }
    // Complex block: t commutes with the block complex structures.
    let j_v = block_matrix(w.f_v.endo(), &w.v_prime, &w.v_prime)?;
    let j_w = block_matrix(w.f_w.endo(), &w.w_prime, &w.w_prime)?;
    if &w.t_cplx * &j_v != &j_w * &w.t_cplx {
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{crat, rat};

    fn mq(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    fn span_c(ambient: usize, cols: &[Vec<CRat>]) -> Subspace<CRat> {
        Subspace::span_of_vectors(ambient, cols)
    }

    /// J with J(e1) = e2, J(e2) = -e1; +i eigenvector (1, -i).
    fn j0() -> Mat<Rat> {
        mq(&[&[0, -1], &[1, 0]])
    }

    fn omega0() -> Mat<Rat> {
        mq(&[&[0, -1], &[1, 0]])
    }

    fn symplectic_gc() -> GcStructure {
        let f = FStructure::from_endo(Mat::zeros(2, 2)).unwrap();
        normal_form_build(&f, &omega0()).unwrap()
    }

    fn complex_gc() -> GcStructure {
        let f = FStructure::from_endo(j0()).unwrap();
        normal_form_build(&f, &Mat::zeros(2, 2)).unwrap()
    }

    #[test]
    fn cr_cocr_examples() {
        let eig = span_c(2, &[vec![crat(1, 0), crat(0, 1)]]);
        assert!(is_cr(&eig).unwrap());
        assert!(is_cocr(&eig).unwrap());

        let real_line = span_c(2, &[vec![crat(1, 0), crat(0, 0)]]);
        assert!(!is_cr(&real_line).unwrap());
        assert!(!is_cocr(&real_line).unwrap());

        let mixed = span_c(
            3,
            &[vec![crat(1, 0), crat(0, 0), crat(0, 0)], vec![crat(0, 0), crat(1, 0), crat(0, 1)]],
        );
        assert!(is_cocr(&mixed).unwrap());
        assert!(!is_cr(&mixed).unwrap());

        for s in [&eig, &real_line, &mixed] {
            assert!(annihilator_duality(s).unwrap());
        }
    }

    #[test]
    fn f_split_of_complex_structure() {
        let f = FStructure::from_endo(j0()).unwrap();
        assert!(f.v0c().is_zero());
        assert_eq!(f.v10(), &span_c(2, &[vec![crat(1, 0), crat(0, -1)]]));
    }

    #[test]
    fn f_split_of_zero() {
        let f = FStructure::from_endo(Mat::zeros(2, 2)).unwrap();
        assert!(f.v0c().is_full());
        assert!(f.v10().is_zero());
    }

    #[test]
    fn f_split_round_trip_on_mixed_structure() {
        // F = J0 ⊕ 0 on R^3.
        let f_endo = mq(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let f = FStructure::from_endo(f_endo.clone()).unwrap();
        assert_eq!(f.v0c().dim(), 1);
        assert_eq!(f.v10().dim(), 1);
        let rebuilt = FStructure::from_split(f.v0c(), f.v10()).unwrap();
        assert_eq!(rebuilt.endo(), &f_endo);

        assert!(FStructure::from_endo(mq(&[&[1, 0], &[0, 1]])).is_err());
    }

    #[test]
    fn f_linear_examples() {
        let f2 = FStructure::from_endo(j0()).unwrap();
        let id = Mat::identity(2);
        assert!(is_f_linear(&id, &f2, &f2).unwrap());
        // Transposition swaps the eigenspaces: not f-linear.
        let swap = mq(&[&[1, 0], &[0, -1]]);
        assert!(!is_f_linear(&swap, &f2, &f2).unwrap());
    }

    #[test]
    fn symplectic_type_structure() {
        let gc = symplectic_gc();
        // J = [[0, ω⁻¹], [−ω, 0]].
        let expected = mq(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]]);
        assert_eq!(gc.endo(), &expected);
        // Associated bivector is ω⁻¹.
        assert_eq!(gc.poisson_bivector(), &omega0().inverse().unwrap());
    }

    #[test]
    fn complex_type_structure() {
        let gc = complex_gc();
        // J = [[J0, 0], [0, −J0ᵀ]] and −J0ᵀ = J0.
        let expected = mq(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        assert_eq!(gc.endo(), &expected);
        assert!(gc.poisson_bivector().is_zero());
    }

    #[test]
    fn invalid_dirac_is_rejected() {
        // E = span{e1} is not co-CR in C^2, so L(E, 0) is not GC.
        let e = span_c(2, &[vec![crat(1, 0), crat(0, 0)]]);
        let l = Dirac::build(&e, &Mat::zeros(1, 1)).unwrap();
        assert!(matches!(GcStructure::from_dirac(l), Err(Error::NotGeneralizedComplex(_))));
    }

    #[test]
    fn product_type_normal_form() {
        // F = J0 ⊕ 0 on R^4 with ω supported on the last two coordinates.
        let f_endo = mq(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
        ]);
        let f = FStructure::from_endo(f_endo).unwrap();
        let omega = mq(&[
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
        ]);
        let gc = normal_form_build(&f, &omega).unwrap();
        assert_eq!(gc.cocr_space().dim(), 3);
        assert_eq!(gc.poisson_bivector().rank(), 2);
    }

    #[test]
    fn incompatible_pairs_are_rejected() {
        let f = FStructure::from_endo(j0()).unwrap();
        assert!(normal_form_build(&f, &omega0()).is_err());
        let f0 = FStructure::from_endo(Mat::zeros(2, 2)).unwrap();
        assert!(normal_form_build(&f0, &Mat::zeros(2, 2)).is_err());
    }

    #[test]
    fn normalize_already_normal_gives_zero_b() {
        let gc = symplectic_gc();
        let f = FStructure::from_endo(Mat::zeros(2, 2)).unwrap();
        let cert = normalize(&gc, &f).unwrap();
        assert!(cert.b.is_zero());
        assert_eq!(cert.omega, omega0());
        assert_eq!(normalize_uniqueness_dimension(&f).unwrap(), 0);
    }

    #[test]
    fn normalize_recovers_a_scrambling_b_field() {
        let f = FStructure::from_endo(Mat::zeros(2, 2)).unwrap();
        let gc = symplectic_gc();
        let b0 = mq(&[&[0, 3], &[-3, 0]]);
        let scrambled = gc.b_field(&b0).unwrap();
        let cert = normalize(&scrambled, &f).unwrap();
        assert_eq!(cert.b, -&b0);
        assert_eq!(cert.omega, omega0());
        let back = scrambled.b_field(&cert.b).unwrap();
        assert!(back.normal_form_omega(&f).unwrap().is_some());
    }

    #[test]
    fn normalize_on_complex_type_accepts_any_b_scrambling() {
        // On a pure complex type every B-field acts trivially, so the
        // canonical normalizing B is zero.
        let gc = complex_gc();
        let f = FStructure::from_endo(j0()).unwrap();
        let b0 = mq(&[&[0, 5], &[-5, 0]]);
        let scrambled = gc.b_field(&b0).unwrap();
        assert_eq!(scrambled.dirac(), gc.dirac());
        let cert = normalize(&scrambled, &f).unwrap();
        assert!(cert.b.is_zero());
        assert_eq!(normalize_uniqueness_dimension(&f).unwrap(), 0);
    }

    #[test]
    fn gc_linear_examples() {
        let id = Mat::identity(2);
        let cplx = complex_gc();
        let symp = symplectic_gc();
        assert!(is_gc_linear(&id, &cplx, &cplx).unwrap());
        assert!(!is_gc_linear(&id, &symp, &cplx).unwrap());

        // Projection of the product (symplectic × complex) onto the complex
        // factor is generalized complex linear.
        let f_endo = mq(&[
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
        ]);
        let f = FStructure::from_endo(f_endo).unwrap();
        let omega = mq(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
        ]);
        let mixed = normal_form_build(&f, &omega).unwrap();
        let proj = mq(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(is_gc_linear(&proj, &mixed, &cplx).unwrap());

        // Inclusion of a symplectic plane into symplectic R^4 fails the
        // bivector push-forward.
        let omega4 = mq(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
        ]);
        let f0 = FStructure::from_endo(Mat::zeros(4, 4)).unwrap();
        let symp4 = normal_form_build(&f0, &omega4).unwrap();
        let incl = mq(&[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
        assert!(!is_gc_linear(&incl, &symp, &symp4).unwrap());
    }

    #[test]
    fn bfield_equivalence_examples() {
        let gc = symplectic_gc();
        let b0 = mq(&[&[0, 7], &[-7, 0]]);
        let moved = gc.b_field(&b0).unwrap();
        let found = bfield_equivalent(&gc, &moved).unwrap().unwrap();
        assert_eq!(gc.b_field(&found).unwrap().dirac(), moved.dirac());

        // Different co-CR subspaces: no B-field relates them.
        assert!(bfield_equivalent(&complex_gc(), &gc).unwrap().is_none());
    }

    #[test]
    fn graph_invariance_distinguishes_b_field_types() {
        // Complex structure on R^4 given by two copies of J0 on (x1,y1,x2,y2).
        let j = mq(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
        ]);
        let f = FStructure::from_endo(j.clone()).unwrap();
        let source = normal_form_build(&f, &Mat::zeros(4, 4)).unwrap();
        let id = Mat::identity(4);
        assert!(graph_invariance_check(&id, &source, &source).unwrap());

        // b = dx1∧dx2 − dy1∧dy2 is pure (2,0)+(0,2).
        let b_pure = mq(&[
            &[0, 0, -1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, -1, 0, 0],
        ]);
        let (b2002, b11) = type_decompose(&b_pure, &j).unwrap();
        assert!(b11.is_zero());
        assert_eq!(b2002, b_pure);
        let target_pure = source.b_field(&b_pure).unwrap();
        assert!(is_gc_linear(&id, &source, &target_pure).unwrap());
        assert!(!graph_invariance_check(&id, &source, &target_pure).unwrap());

        // b = dx1∧dy1 is type (1,1).
        let b11_form = mq(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
        ]);
        let (b2002, b11) = type_decompose(&b11_form, &j).unwrap();
        assert!(b2002.is_zero());
        assert_eq!(b11, b11_form);
        let target_11 = source.b_field(&b11_form).unwrap();
        assert!(is_gc_linear(&id, &source, &target_11).unwrap());
        assert!(graph_invariance_check(&id, &source, &target_11).unwrap());
    }

    #[test]
    fn type_decompose_top_degree_on_r2() {
        let b = mq(&[&[0, 4], &[-4, 0]]);
        let (b2002, b11) = type_decompose(&b, &j0()).unwrap();
        assert_eq!(b11, b);
        assert!(b2002.is_zero());
    }

    #[test]
    fn decompose_product_projection() {
        // Mixed structure (symplectic plane × complex plane) projected onto
        // the complex factor.
        let f_endo = mq(&[
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
        ]);
        let f = FStructure::from_endo(f_endo).unwrap();
        let omega = mq(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
        ]);
        let mixed = normal_form_build(&f, &omega).unwrap();
        let proj = mq(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let cplx = complex_gc();
        let w = decompose_gc_linear(&proj, &mixed, &cplx).unwrap();
        assert!(w.b_v.is_zero());
        assert!(w.b_w.is_zero());
        assert_eq!(w.d_v.dim(), 2);
        assert_eq!(w.d_w.dim(), 0);
        assert!(verify_gc_linear_witness(&proj, &mixed, &cplx, &w).unwrap());

        // Scramble the source by a B-field: the witness must recover it.
        let b0 = mq(&[
            &[0, 0, 2, 0],
            &[0, 0, 0, -1],
            &[-2, 0, 0, 3],
            &[0, 1, -3, 0],
        ]);
        let scrambled = mixed.b_field(&b0).unwrap();
        let w2 = decompose_gc_linear(&proj, &scrambled, &cplx).unwrap();
        assert!(verify_gc_linear_witness(&proj, &scrambled, &cplx, &w2).unwrap());
    }

    #[test]
    fn decompose_non_surjective_complex_inclusion() {
        // Inclusion of a complex plane into complex R^4.
        let cplx2 = complex_gc();
        let j4 = mq(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
        ]);
        let f4 = FStructure::from_endo(j4).unwrap();
        let cplx4 = normal_form_build(&f4, &Mat::zeros(4, 4)).unwrap();
        let incl = mq(&[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
        assert!(is_gc_linear(&incl, &cplx2, &cplx4).unwrap());
        let w = decompose_gc_linear(&incl, &cplx2, &cplx4).unwrap();
        assert!(w.d_v.is_zero() && w.d_w.is_zero());
        assert_eq!(w.t_cplx.rows(), 4);
        assert!(verify_gc_linear_witness(&incl, &cplx2, &cplx4, &w).unwrap());
    }
}
