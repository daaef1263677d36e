use criterion::{criterion_group, criterion_main, Criterion};
use distlab::claims::{inequality_sweep, transference_search};
use distlab::compression::{gap_squared, gap_squared_via_identity};
use distlab::estimates::harmonic_number;
use distlab::vector::{RationalVector, Scale};

fn gap_routes(c: &mut Criterion) {
    let v = RationalVector::from_integers(&[3, 7, 11, 13, 17, 19, 23, 29]);
    let m = Scale::from_integer(3).unwrap();
    c.bench_function("gap_squared_direct", |b| {
        b.iter(|| gap_squared(&v, &m).unwrap())
    });
    c.bench_function("gap_squared_identity", |b| {
        b.iter(|| gap_squared_via_identity(&v, &m).unwrap())
    });
}

fn sweeps(c: &mut Criterion) {
    c.bench_function("harmonic_number_1000", |b| {
        b.iter(|| harmonic_number(1000).unwrap())
    });
    c.bench_function("inequality_sweep_8_3", |b| {
        b.iter(|| inequality_sweep(8, 3, &[1, 2]).unwrap())
    });
    c.bench_function("transference_search_3_3", |b| {
        b.iter(|| transference_search(3, 3, false, 100).unwrap())
    });
}

criterion_group!(benches, gap_routes, sweeps);
criterion_main!(benches);
