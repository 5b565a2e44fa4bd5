//! Seeded random generators for the verification suites.
//!
//! Everything is driven by a `ChaCha8` stream so that a fixed seed worth of
//! instances is reproducible bit for bit. Entries are kept small to bound
//! coefficient growth under exact elimination. Structured data is generated
//! by construction, never by rejection on validity: Dirac structures come
//! from `(E, ε)` pairs, generalized complex structures from compatible
//! `(F, ω)` pairs scrambled by B-fields and isomorphisms, bi-Hermitian
//! quadruples from a congruence metric and a Cayley-rotated pair of complex
//! structures (which makes both automatically g-orthogonal without square
//! roots).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dirac::Dirac;
use crate::exactla::{rat, CRat, Mat, Rat, Subspace};
use crate::gclin::{normal_form_build, FStructure, GcStructure};
use crate::gkahler::{gk_from_bihermitian, BiHermitian, GkPair, TamedData};
use crate::liecourant::{closed_invariant_forms, LieAlgebra};

pub type TestRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform small integer as a rational.
pub fn rand_rat(rng: &mut TestRng, bound: i64) -> Rat {
    rat(rng.gen_range(-bound..=bound))
}

pub fn rand_crat(rng: &mut TestRng, bound: i64) -> CRat {
    CRat::new(rand_rat(rng, bound), rand_rat(rng, bound))
}

pub fn rand_mat_q(rng: &mut TestRng, rows: usize, cols: usize) -> Mat<Rat> {
    Mat::from_fn(rows, cols, |_, _| rand_rat(rng, 2))
}

pub fn rand_mat_qi(rng: &mut TestRng, rows: usize, cols: usize) -> Mat<CRat> {
    Mat::from_fn(rows, cols, |_, _| rand_crat(rng, 2))
}

pub fn rand_skew_q(rng: &mut TestRng, n: usize) -> Mat<Rat> {
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rand_rat(rng, 2);
            m[(i, j)] = v.clone();
            m[(j, i)] = -v;
        }
    }
    m
}

pub fn rand_skew_qi(rng: &mut TestRng, n: usize) -> Mat<CRat> {
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rand_crat(rng, 2);
            m[(i, j)] = v.clone();
            m[(j, i)] = -v;
        }
    }
    m
}

/// Random invertible rational matrix (retry loop on the same stream).
pub fn rand_invertible_q(rng: &mut TestRng, n: usize) -> Mat<Rat> {
    loop {
        let m = Mat::from_fn(n, n, |_, _| rand_rat(rng, 1));
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// Random nondegenerate rational skew form (n must be even).
pub fn rand_nondegenerate_skew_q(rng: &mut TestRng, n: usize) -> Mat<Rat> {
    assert!(n % 2 == 0, "nondegenerate skew forms need even dimension");
    loop {
        let m = rand_skew_q(rng, n);
        if n == 0 || m.inverse().is_some() {
            return m;
        }
    }
}

pub fn rand_subspace_q(rng: &mut TestRng, ambient: usize, cols: usize) -> Subspace<Rat> {
    Subspace::from_span(&rand_mat_q(rng, ambient, cols))
}

pub fn rand_subspace_qi(rng: &mut TestRng, ambient: usize, cols: usize) -> Subspace<CRat> {
    Subspace::from_span(&rand_mat_qi(rng, ambient, cols))
}

/// Random Dirac structure on `K^n` over ℚ via a random `(E, ε)` pair.
pub fn rand_dirac_q(rng: &mut TestRng, n: usize) -> Dirac<Rat> {
    let e_cols = rng.gen_range(0..=n);
    let e = rand_subspace_q(rng, n, e_cols);
    let eps = rand_skew_q(rng, e.dim());
    Dirac::build(&e, &eps).expect("any skew form on a subspace builds")
}

/// Random Dirac structure over ℚ(i).
pub fn rand_dirac_qi(rng: &mut TestRng, n: usize) -> Dirac<CRat> {
    let e_cols = rng.gen_range(0..=n);
    let e = rand_subspace_qi(rng, n, e_cols);
    let eps = rand_skew_qi(rng, e.dim());
    Dirac::build(&e, &eps).expect("any skew form on a subspace builds")
}

/// Random compatible `(F, ω)` on `R^n` (`n` even): the standard block model
/// conjugated by a random invertible change of basis, with a random
/// nondegenerate form in the kernel block.
pub fn rand_compatible_f_omega(rng: &mut TestRng, n: usize) -> (FStructure, Mat<Rat>) {
    assert!(n % 2 == 0, "generalized complex structures need even dimension");
    let s = rng.gen_range(0..=(n / 2));
    let r = n - 2 * s;
    let mut f_std = Mat::zeros(n, n);
    for p in 0..s {
        f_std[(2 * p, 2 * p + 1)] = rat(-1);
        f_std[(2 * p + 1, 2 * p)] = rat(1);
    }
    let omega_block = rand_nondegenerate_skew_q(rng, r);
    let mut omega_std = Mat::zeros(n, n);
    for i in 0..r {
        for j in 0..r {
            omega_std[(2 * s + i, 2 * s + j)] = omega_block[(i, j)].clone();
        }
    }
    let t = rand_invertible_q(rng, n);
    let t_inv = t.inverse().expect("invertible by construction");
    let f = &(&t * &f_std) * &t_inv;
    let omega = &(&t_inv.transpose() * &omega_std) * &t_inv;
    let fs = FStructure::from_endo(f).expect("conjugated block model is an f-structure");
    (fs, omega)
}

/// Random generalized complex structure together with the f-structure whose
/// co-CR space is its `E`: a scrambled normal form
/// `t_*(exp(B)(L(F, ω)))` with the conjugated f-structure `t F t⁻¹`.
pub fn rand_gc_with_f(rng: &mut TestRng, n: usize) -> (GcStructure, FStructure) {
    let (f, omega) = rand_compatible_f_omega(rng, n);
    let gc = normal_form_build(&f, &omega).expect("compatible pair builds");
    let b = rand_skew_q(rng, n);
    let moved = gc.b_field(&b).expect("B-field of a GC structure");
    let t = rand_invertible_q(rng, n);
    let pushed = moved.pushforward_iso(&t).expect("push-forward along an isomorphism");
    let t_inv = t.inverse().expect("invertible");
    let f_conj =
        FStructure::from_endo(&(&t * f.endo()) * &t_inv).expect("conjugated f-structure");
    (pushed, f_conj)
}

pub fn rand_gc(rng: &mut TestRng, n: usize) -> GcStructure {
    rand_gc_with_f(rng, n).0
}

/// Cayley transform `(I − K)(I + K)⁻¹` of a skew matrix: a rational
/// orthogonal matrix (`I + K` is always invertible for skew `K`).
pub fn cayley_orthogonal(k: &Mat<Rat>) -> Mat<Rat> {
    let n = k.rows();
    let id = Mat::identity(n);
    let inv = (&id + k).inverse().expect("I + K is invertible for skew K");
    &(&id - k) * &inv
}

/// Random bi-Hermitian quadruple: `g = S⁻ᵀS⁻¹`, `J₊ = S J₀ S⁻¹`,
/// `J₋ = (SQ) J₀ (SQ)⁻¹` with `Q` a Cayley orthogonal matrix, plus a random
/// skew `b`. Both complex structures are g-orthogonal by construction.
pub fn rand_bihermitian(rng: &mut TestRng, n: usize) -> BiHermitian {
    assert!(n % 2 == 0);
    let mut j_std = Mat::zeros(n, n);
    for p in 0..(n / 2) {
        j_std[(2 * p, 2 * p + 1)] = rat(-1);
        j_std[(2 * p + 1, 2 * p)] = rat(1);
    }
    let s = rand_invertible_q(rng, n);
    let s_inv = s.inverse().expect("invertible");
    let g = &s_inv.transpose() * &s_inv;
    let jp = &(&s * &j_std) * &s_inv;
    let mut k = Mat::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rand_rat(rng, 1);
            k[(i, j)] = v.clone();
            k[(j, i)] = -v;
        }
    }
    let q = cayley_orthogonal(&k);
    let sq = &s * &q;
    let sq_inv = sq.inverse().expect("product of invertibles");
    let jm = &(&sq * &j_std) * &sq_inv;
    let b = rand_skew_q(rng, n);
    BiHermitian::new(g, b, jp, jm).expect("construction yields valid data")
}

pub fn rand_gk_pair(rng: &mut TestRng, n: usize) -> GkPair {
    gk_from_bihermitian(rand_bihermitian(rng, n)).expect("generated quadruple assembles")
}

/// Random tamed symplectic data: from a random quadruple with `J₊ + J₋`
/// invertible set `ε = 2g(J₊ + J₋)⁻¹` (skew by g-orthogonality). When
/// `require_difference` is set, resample until `J₊ − J₋` is invertible too;
/// that is only attainable in dimensions divisible by four — the +i
/// eigenspaces of two g-orthogonal complex structures of equal orientation
/// are maximal isotropics in the same family of the complex quadric, and in
/// dimension 2 mod 4 same-family maximal isotropics always intersect.
pub fn rand_tamed(rng: &mut TestRng, n: usize, require_difference: bool) -> TamedData {
    assert!(
        !require_difference || n % 4 == 0,
        "J+ - J- is never invertible in dimension {n}"
    );
    loop {
        let bh = rand_bihermitian(rng, n);
        let j_sum = bh.j_plus() + bh.j_minus();
        let Some(sum_inv) = j_sum.inverse() else {
            continue;
        };
        if require_difference && (bh.j_plus() - bh.j_minus()).inverse().is_none() {
            continue;
        }
        let eps = (bh.metric() * &sum_inv).scale(&rat(2));
        match TamedData::new(eps, bh.j_plus().clone()) {
            Ok(t) => return t,
            Err(_) => continue,
        }
    }
}

/// Random closed invariant two-form on a Lie algebra, as a small-integer
/// combination of a basis of the closed forms.
pub fn rand_closed_invariant_form(rng: &mut TestRng, g: &LieAlgebra) -> Mat<Rat> {
    let basis = closed_invariant_forms(g).expect("closed form computation");
    let n = g.dim();
    let mut out = Mat::zeros(n, n);
    for b in &basis {
        out = &out + &b.scale(&rand_rat(rng, 2));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let mut a = rng_from_seed(7);
        let mut b = rng_from_seed(7);
        assert_eq!(rand_mat_q(&mut a, 3, 3), rand_mat_q(&mut b, 3, 3));
        assert_eq!(rand_dirac_qi(&mut a, 4), rand_dirac_qi(&mut b, 4));
        let (gca, fa) = rand_gc_with_f(&mut a, 4);
        let (gcb, fb) = rand_gc_with_f(&mut b, 4);
        assert_eq!(gca.dirac(), gcb.dirac());
        assert_eq!(fa.endo(), fb.endo());
    }

    #[test]
    fn cayley_is_orthogonal() {
        let mut rng = rng_from_seed(3);
        let q = cayley_orthogonal(&rand_skew_q(&mut rng, 4));
        assert_eq!(&q.transpose() * &q, Mat::identity(4));
    }

    #[test]
    fn generated_tamed_data_has_invertible_difference_when_asked() {
        let mut rng = rng_from_seed(11);
        let t = rand_tamed(&mut rng, 4, true);
        let pair = crate::gkahler::tamed_to_gk(&t).unwrap();
        let diff = pair.bihermitian().j_plus() - pair.bihermitian().j_minus();
        assert!(diff.inverse().is_some());
    }
}
