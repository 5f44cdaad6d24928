use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use g2pv::case1::reduce_to_normal_form;
use g2pv::case2::{find_isotropic_witness, normalize_hermitian2};
use g2pv::fields::{int, is_norm, rat};
use g2pv::g2rep::{exterior_cube, g1_membership};
use g2pv::QuadField;
use g2pv_bench::{normalizable_form, semistable_points, word_and_point};

fn wedge(c: &mut Criterion) {
    let (g, x) = word_and_point(4, 20);
    c.bench_function("exterior_cube", |b| b.iter(|| exterior_cube(black_box(g.matrix()))));
    c.bench_function("g1_membership", |b| b.iter(|| g1_membership(black_box(g.matrix()))));
    c.bench_function("act", |b| b.iter(|| g.act(black_box(&x))));
}

fn reduction(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce_to_normal_form");
    for height in [10, 100, 1000] {
        let points = semistable_points(16, height);
        group.bench_with_input(BenchmarkId::from_parameter(height), &points, |b, pts| {
            b.iter(|| pts.iter().map(|x| reduce_to_normal_form(x).is_ok()).count())
        });
    }
    group.finish();
}

fn hermitian(c: &mut Criterion) {
    let (h, w) = normalizable_form(-7, 20);
    c.bench_function("normalize_hermitian2", |b| b.iter(|| normalize_hermitian2(black_box(&h), Some(&w))));
    let f = QuadField::new(5).expect("nonsquare");
    c.bench_function("find_isotropic_witness", |b| {
        b.iter(|| find_isotropic_witness(f, black_box(&rat(3, 2)), black_box(&int(-7)), 20))
    });
}

fn norms(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_norm");
    for d in [-1, 5, -163] {
        let f = QuadField::new(d).expect("nonsquare");
        group.bench_with_input(BenchmarkId::from_parameter(d), &f, |b, &f| {
            b.iter(|| (1..=30).filter(|&n| is_norm(f, &int(n)).unwrap_or(false)).count())
        });
    }
    group.finish();
}

criterion_group!(benches, wedge, reduction, hermitian, norms);
criterion_main!(benches);
