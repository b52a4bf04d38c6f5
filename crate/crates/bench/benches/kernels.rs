use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use crosscap::clutching::{
    canonical_disk_loop, canonical_klein_loop, classify_disk, det_winding, klein_class,
    perturb_klein_loop,
};
use crosscap::realcurves::{build, check_equivariance_seeded, RealMapParams};
use crosscap::spectral::{contour_integral, numerical_kernel, DiskProblem};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn clutching(c: &mut Criterion) {
    let disk = canonical_disk_loop(3, 2, 256).unwrap();
    c.bench_function("det_winding 3x3 N=256", |b| {
        b.iter(|| det_winding(black_box(&disk)))
    });
    c.bench_function("classify_disk 3x3 N=256", |b| {
        b.iter(|| classify_disk(black_box(&disk), 1e-9))
    });
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let klein = perturb_klein_loop(&canonical_klein_loop(3, true, 256), &mut rng, 0.2).unwrap();
    c.bench_function("klein_class 3x3 N=256", |b| {
        b.iter(|| klein_class(black_box(&klein)))
    });
}

fn spectral(c: &mut Criterion) {
    let mut g = c.benchmark_group("numerical_kernel");
    for d in [0i64, 2, 4] {
        let p = DiskProblem::standard(d);
        g.bench_with_input(BenchmarkId::from_parameter(d), &p, |b, p| {
            b.iter(|| numerical_kernel(p))
        });
    }
    g.finish();
    c.bench_function("contour_integral k=4 m=8 N=64", |b| {
        b.iter(|| contour_integral(black_box(4), black_box(8), 64))
    });
}

fn realcurves(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let p = RealMapParams::random(3, 4, &mut rng).unwrap();
    c.bench_function("build n=3 d=4", |b| b.iter(|| build(black_box(&p))));
    let t = build(&p);
    c.bench_function("check_equivariance 200 samples", |b| {
        b.iter(|| check_equivariance_seeded(black_box(&t), 200, 1e-9, 0))
    });
}

criterion_group!(benches, clutching, spectral, realcurves);
criterion_main!(benches);
