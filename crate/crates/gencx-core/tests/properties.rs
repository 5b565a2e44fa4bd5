//! Property tests for the algebraic invariants of the exact kernels.

use gencx_core::dirac::{pairing, Dirac};
use gencx_core::exactla::{rat, CRat, Mat, Rat, Subspace};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-3i64..=3).prop_map(rat)
}

fn small_crat() -> impl Strategy<Value = CRat> {
    ((-2i64..=2), (-2i64..=2)).prop_map(|(re, im)| CRat::new(rat(re), rat(im)))
}

fn mat_q(rows: usize, cols: usize) -> impl Strategy<Value = Mat<Rat>> {
    proptest::collection::vec(small_rat(), rows * cols).prop_map(move |data| {
        let mut idx = 0;
        Mat::from_fn(rows, cols, |_, _| {
            let v = data[idx].clone();
            idx += 1;
            v
        })
    })
}

fn mat_qi(rows: usize, cols: usize) -> impl Strategy<Value = Mat<CRat>> {
    proptest::collection::vec(small_crat(), rows * cols).prop_map(move |data| {
        let mut idx = 0;
        Mat::from_fn(rows, cols, |_, _| {
            let v = data[idx].clone();
            idx += 1;
            v
        })
    })
}

fn skew_q(n: usize) -> impl Strategy<Value = Mat<Rat>> {
    proptest::collection::vec(small_rat(), n * n).prop_map(move |data| {
        let mut m = Mat::zeros(n, n);
        let mut idx = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                m[(i, j)] = data[idx].clone();
                m[(j, i)] = -data[idx].clone();
                idx += 1;
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dimension_formula_is_exact(a in mat_q(4, 3), b in mat_q(4, 3)) {
        let sa = Subspace::from_span(&a);
        let sb = Subspace::from_span(&b);
        let sum = sa.sum(&sb).unwrap();
        let cap = sa.intersect(&sb).unwrap();
        prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + cap.dim());
        prop_assert!(sum.contains_subspace(&sa).unwrap());
        prop_assert!(sa.contains_subspace(&cap).unwrap());
    }

    #[test]
    fn canonicalization_is_idempotent(m in mat_qi(4, 5)) {
        let s = Subspace::from_span(&m);
        prop_assert_eq!(Subspace::from_span(s.basis()), s);
    }

    #[test]
    fn conjugation_is_an_involution_on_subspaces(m in mat_qi(4, 2)) {
        let s = Subspace::from_span(&m);
        prop_assert_eq!(s.conjugate().conjugate(), s);
    }

    #[test]
    fn pairing_is_symmetric(
        z in proptest::collection::vec(small_rat(), 8),
        w in proptest::collection::vec(small_rat(), 8),
    ) {
        prop_assert_eq!(pairing(&z, &w).unwrap(), pairing(&w, &z).unwrap());
    }

    #[test]
    fn dirac_build_decompose_round_trip(raw in mat_q(4, 2), eps_seed in skew_q(2)) {
        let e = Subspace::from_span(&raw);
        let k = e.dim();
        let eps = Mat::from_fn(k, k, |i, j| eps_seed[(i, j)].clone());
        let l = Dirac::build(&e, &eps).unwrap();
        let ee = l.decompose().unwrap();
        prop_assert_eq!(ee.e, e);
        prop_assert_eq!(ee.eps, eps);
        prop_assert!(l.kernel_identities_hold(&l.decompose().unwrap()));
    }

    #[test]
    fn b_field_transforms_act_additively(raw in mat_q(3, 2), b1 in skew_q(3), b2 in skew_q(3)) {
        let e = Subspace::from_span(&raw);
        let eps = Mat::zeros(e.dim(), e.dim());
        let l = Dirac::build(&e, &eps).unwrap();
        let chained = l.b_field(&b2).unwrap().b_field(&b1).unwrap();
        let at_once = l.b_field(&(&b1 + &b2)).unwrap();
        prop_assert_eq!(chained, at_once);
    }

    #[test]
    fn pushforward_formula_equals_definition(raw in mat_q(3, 2), f in mat_q(3, 3)) {
        let e = Subspace::from_span(&raw);
        let eps = Mat::zeros(e.dim(), e.dim());
        let l = Dirac::build(&e, &eps).unwrap();
        prop_assert_eq!(l.pushforward_formula(&f).unwrap(), l.pushforward_def(&f).unwrap());
        prop_assert_eq!(l.pullback_formula(&f).unwrap(), l.pullback_def(&f).unwrap());
    }
}
