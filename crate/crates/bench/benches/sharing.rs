use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mss_core::analysis::{degeneracy_census, CensusMethod};
use mss_core::schemes::{coeff_reconstruct, coeff_split, points_reconstruct, points_split, shamir_split};
use mss_core::{interpolate, PointSet, PrimeModulus, RandomSource, SecretSet};

const P: u64 = 999_961;

fn bench_interpolate(c: &mut Criterion) {
    let p = PrimeModulus::new(P).unwrap();
    let pts: Vec<(u64, u64)> = (1..=16).map(|x| (x, x * x * 7 + 3)).collect();
    let set = PointSet::from_values(&pts, p).unwrap();
    c.bench_function("interpolate_16_points", |b| {
        b.iter(|| black_box(interpolate(black_box(&set)).unwrap()))
    });
}

fn bench_schemes(c: &mut Criterion) {
    let p = PrimeModulus::new(P).unwrap();
    let secrets = SecretSet::from_values(&[15, 2, 3, 4, 9, 26, 5, 35], p).unwrap();
    let coeff = coeff_split(&secrets, 8, 20, &mut RandomSource::from_seed(0)).unwrap();
    let points = points_split(&secrets, 20).unwrap();

    c.bench_function("coeff_split_8_of_20", |b| {
        let mut rng = RandomSource::from_seed(1);
        b.iter(|| black_box(coeff_split(&secrets, 8, 20, &mut rng).unwrap()))
    });
    c.bench_function("coeff_reconstruct_8", |b| {
        b.iter(|| black_box(coeff_reconstruct(&coeff[..8], 8).unwrap()))
    });
    c.bench_function("points_split_8_of_20", |b| {
        b.iter(|| black_box(points_split(&secrets, 20).unwrap()))
    });
    c.bench_function("points_reconstruct_8", |b| {
        b.iter(|| black_box(points_reconstruct(&points[..8]).unwrap()))
    });
    c.bench_function("shamir_split_8_times", |b| {
        let mut rng = RandomSource::from_seed(2);
        b.iter(|| {
            for s in secrets.secrets() {
                black_box(shamir_split(*s, 8, 20, &mut rng).unwrap());
            }
        })
    });
}

fn bench_census(c: &mut Criterion) {
    let p = PrimeModulus::new(11).unwrap();
    let mut group = c.benchmark_group("census_p11_k4");
    group.sample_size(20);
    for (name, method) in [
        ("interpolate", CensusMethod::Interpolate),
        ("vandermonde", CensusMethod::Vandermonde),
        ("both", CensusMethod::Both),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| black_box(degeneracy_census(p, 4, method).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_interpolate, bench_schemes, bench_census);
criterion_main!(benches);
