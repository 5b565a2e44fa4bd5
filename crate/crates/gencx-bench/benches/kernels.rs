//! Benchmarks of the exact kernels at the sizes the verification suites use.

use criterion::{criterion_group, criterion_main, Criterion};
use gencx_bench::inputs;
use gencx_core::exactla::Subspace;
use gencx_core::gclin::GcStructure;
use gencx_core::gkahler::{gk_from_bihermitian, holo_poisson, tamed_to_gk};
use gencx_core::liecourant::{is_integrable_invariant, so4_borel_example};
use std::hint::black_box;

fn bench_kernels(c: &mut Criterion) {
    let data = inputs();

    c.bench_function("canonicalize 12x8 rational basis", |b| {
        b.iter(|| Subspace::from_span(black_box(&data.raw_basis)))
    });

    c.bench_function("push-forward dim 6 -> 4 over Q", |b| {
        b.iter(|| data.dirac_q4.pushforward_def(black_box(&data.pushforward_map)).unwrap())
    });

    c.bench_function("push-forward formula dim 6 -> 4 over Q", |b| {
        b.iter(|| data.dirac_q4.pushforward_formula(black_box(&data.pushforward_map)).unwrap())
    });

    c.bench_function("decompose dim 6 over Q(i)", |b| {
        b.iter(|| data.dirac_qi4.decompose().unwrap())
    });

    c.bench_function("generalized complex validation dim 4", |b| {
        b.iter(|| GcStructure::from_dirac(black_box(data.gc_input.clone())).unwrap())
    });

    c.bench_function("generalized Kähler assembly dim 4", |b| {
        b.iter(|| gk_from_bihermitian(black_box(data.bihermitian.clone())).unwrap())
    });

    c.bench_function("holomorphic Poisson bivector dim 4", |b| {
        let pair = tamed_to_gk(&data.tamed).unwrap();
        b.iter(|| holo_poisson(black_box(&pair)).unwrap())
    });

    c.bench_function("invariant integrability of the Borel structure", |b| {
        let (g, _, gc, _) = so4_borel_example().unwrap();
        b.iter(|| is_integrable_invariant(&g, black_box(gc.dirac())).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = bench_kernels
}
criterion_main!(benches);
