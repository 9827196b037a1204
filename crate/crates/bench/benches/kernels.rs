use criterion::{black_box, criterion_group, criterion_main, Criterion};

use torsion_core::build_chain;
use torsion_core::complex::clique_complex;
use torsion_core::constructors::{complete, cross_polytope, cycle, icosahedron, strong_product};
use torsion_core::linalg::{det, ExactMatrix};
use torsion_core::spectral::zeta_torsion;
use torsion_core::torsion::{torsion_dirac, torsion_report};
use torsion_core::trees::spanning_tree_count;
use torsion_core::wu::wu_torsion;

fn chains(c: &mut Criterion) {
    let s3 = clique_complex(&cross_polytope(3));
    c.bench_function("build_chain/3-sphere", |b| b.iter(|| build_chain(black_box(&s3)).unwrap()));
}

fn torsion(c: &mut Criterion) {
    let mut g = c.benchmark_group("torsion");
    g.sample_size(10);
    for (name, graph) in [("icosahedron", icosahedron()), ("K_7", complete(7)), ("3-sphere", cross_polytope(3))] {
        let cd = build_chain(&clique_complex(&graph)).unwrap();
        g.bench_function(name, |b| b.iter(|| torsion_dirac(black_box(&cd)).unwrap()));
    }
    let cc = build_chain(&clique_complex(&strong_product(&cycle(4), &cycle(4)))).unwrap();
    g.bench_function("report/C_4 x C_4", |b| b.iter(|| torsion_report(black_box(&cc)).unwrap()));
    g.finish();
}

fn determinants(c: &mut Criterion) {
    let n = 80;
    let m = ExactMatrix::from_vec(n, n, (0..n * n).map(|i| ((i * 7919 % 23) as i64 - 11).into()).collect()).unwrap();
    c.bench_function("det/80x80", |b| b.iter(|| det(black_box(&m)).unwrap()));
    let ico = icosahedron();
    c.bench_function("trees/icosahedron", |b| b.iter(|| spanning_tree_count(black_box(&ico)).unwrap()));
}

fn spectral_and_wu(c: &mut Criterion) {
    let cd = build_chain(&clique_complex(&icosahedron())).unwrap();
    c.bench_function("zeta_torsion/icosahedron", |b| b.iter(|| zeta_torsion(black_box(&cd)).unwrap()));
    let k4 = clique_complex(&complete(4));
    c.bench_function("wu_torsion/K_4", |b| b.iter(|| wu_torsion(black_box(&k4)).unwrap()));
}

criterion_group!(benches, chains, torsion, determinants, spectral_and_wu);
criterion_main!(benches);
