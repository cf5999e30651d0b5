use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use phforge_core::arith::{int, rat};
use phforge_core::{
    build_gram_slice, build_residue_system, certify_regular, convex_hull_contains_origin,
    sample_motion, sdp_feasible_point, synthesize_curve, tangent_indicatrix, PoleStructure,
    Polynomial, QuadraticFactor, Quaternion, QuaternionPolynomial, SynthesisProblem,
};

fn cubic() -> QuaternionPolynomial {
    let q = Quaternion::from_ints;
    QuaternionPolynomial::new(vec![q(0, 0, 0, -1), q(-1, -2, 0, 0), q(0, 0, 2, 1), q(1, 0, 0, 0)])
}

fn problem(n: u32) -> SynthesisProblem {
    let f = QuadraticFactor::new(int(0), int(4), n).unwrap();
    SynthesisProblem::new(cubic(), PoleStructure::single(f)).unwrap()
}

fn mu() -> Polynomial {
    Polynomial::new(vec![int(1), int(0), int(0), int(0), rat(11, 53264)])
}

fn pipeline(c: &mut Criterion) {
    let p6 = problem(6);
    let space = build_residue_system(&p6);
    let slice = build_gram_slice(&space);
    let curve = synthesize_curve(&p6, &mu()).unwrap();
    let indicatrix = tangent_indicatrix(&cubic()).unwrap();

    c.bench_function("residue_system_n6", |b| b.iter(|| build_residue_system(black_box(&p6))));
    c.bench_function("residue_system_n8", |b| {
        let p8 = problem(8);
        b.iter(|| build_residue_system(black_box(&p8)))
    });
    c.bench_function("gram_slice_n6", |b| b.iter(|| build_gram_slice(black_box(&space))));
    c.bench_function("sdp_n6", |b| b.iter(|| sdp_feasible_point(black_box(&slice), 1e-4)));
    c.bench_function("sturm_certificate", |b| b.iter(|| certify_regular(black_box(&mu()))));
    c.bench_function("synthesize_n6", |b| b.iter(|| synthesize_curve(black_box(&p6), &mu())));
    c.bench_function("hull_256", |b| {
        b.iter(|| convex_hull_contains_origin(black_box(&indicatrix), 256, 1e-9))
    });
    c.bench_function("motion_1000", |b| b.iter(|| sample_motion(black_box(&cubic()), &curve, 1000)));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = pipeline
}
criterion_main!(benches);
