//! Shared fixtures for the benchmark targets.

use gencx_core::dirac::Dirac;
use gencx_core::exactla::{CRat, Mat, Rat};
use gencx_core::generators::{
    rand_bihermitian, rand_dirac_qi, rand_gc_with_f, rand_mat_q, rand_tamed, rng_from_seed,
};
use gencx_core::gkahler::{BiHermitian, TamedData};

pub struct BenchInputs {
    pub raw_basis: Mat<Rat>,
    pub pushforward_map: Mat<Rat>,
    pub dirac_q4: gencx_core::dirac::Dirac<Rat>,
    pub dirac_qi4: Dirac<CRat>,
    pub gc_input: Dirac<CRat>,
    pub bihermitian: BiHermitian,
    pub tamed: TamedData,
}

/// Deterministic inputs at the sizes the verification suites use.
pub fn inputs() -> BenchInputs {
    let mut rng = rng_from_seed(2024);
    let raw_basis = rand_mat_q(&mut rng, 12, 8);
    let pushforward_map = rand_mat_q(&mut rng, 4, 6);
    let dirac_q4 = gencx_core::generators::rand_dirac_q(&mut rng, 6);
    let dirac_qi4 = rand_dirac_qi(&mut rng, 6);
    let gc_input = rand_gc_with_f(&mut rng, 4).0.dirac().clone();
    let bihermitian = rand_bihermitian(&mut rng, 4);
    let tamed = rand_tamed(&mut rng, 4, true);
    BenchInputs { raw_basis, pushforward_map, dirac_q4, dirac_qi4, gc_input, bihermitian, tamed }
}
