use std::f64::consts::PI;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tenfold_core::charclass::{ahat_series, todd_series};
use tenfold_core::clifford::{chessboard, classify_real_recursive, CliffordSignature};
use tenfold_core::invariants::{chern_number, phase_diagram, z2_invariant, PhaseDiagramSpec};
use tenfold_core::linalg::eig_hermitian;
use tenfold_core::models::{haldane, kane_mele, kane_mele_time_reversal, HaldaneParams, KaneMeleParams};
use tenfold_core::rep::{build_generators, commutant_dimension, irreducible_pieces};

fn tables(c: &mut Criterion) {
    c.bench_function("chessboard 8x8", |b| b.iter(|| chessboard(black_box(8), black_box(8))));
    c.bench_function("recursive classification p,q <= 16", |b| {
        b.iter(|| {
            for p in 0..=16 {
                for q in 0..=16 {
                    black_box(classify_real_recursive(CliffordSignature::new(p, q)));
                }
            }
        })
    });
    let mut group = c.benchmark_group("commutant");
    for (p, q) in [(3, 3), (8, 0), (5, 5)] {
        let gens = build_generators(CliffordSignature::new(p, q)).unwrap();
        let piece = irreducible_pieces(&gens).unwrap().remove(0);
        group.bench_with_input(BenchmarkId::from_parameter(format!("{p},{q}")), &piece, |b, piece| {
            b.iter(|| commutant_dimension(piece).unwrap())
        });
    }
    group.finish();
}

fn genera(c: &mut Criterion) {
    c.bench_function("ahat_series(16)", |b| b.iter(|| ahat_series(black_box(16)).unwrap()));
    c.bench_function("todd_series(10)", |b| b.iter(|| todd_series(black_box(10)).unwrap()));
}

fn invariants(c: &mut Criterion) {
    let h = haldane(HaldaneParams::new(1.0, 0.2, PI / 2.0, 0.0));
    let km = kane_mele(KaneMeleParams::new(1.0, 0.06, 0.03, 0.1));
    let t = kane_mele_time_reversal();
    let k = km.hamiltonian_reduced(0.13, 0.41);
    c.bench_function("eig_hermitian 4x4", |b| b.iter(|| eig_hermitian(black_box(&k)).unwrap()));
    let mut group = c.benchmark_group("chern haldane");
    for n in [24, 48] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| chern_number(&h, &[0], n).unwrap()));
    }
    group.finish();
    c.bench_function("z2 kane-mele N=24", |b| b.iter(|| z2_invariant(&km, &t, 24).unwrap()));
    let mut slow = c.benchmark_group("phase diagram");
    slow.sample_size(10);
    slow.bench_function("41x41, N=24", |b| b.iter(|| phase_diagram(PhaseDiagramSpec::default()).unwrap()));
    slow.finish();
}

criterion_group!(benches, tables, genera, invariants);
criterion_main!(benches);
