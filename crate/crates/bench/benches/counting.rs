use chainpoly::lattice::{chain_polytope, count_lattice_points, count_zigzag_fast, kirillov_polytope};
use chainpoly::pp::{count_order_preserving_brute, count_order_preserving_zigzag, w_polynomial_descents};
use chainpoly::zigzag_poset;
use chainpoly_bench::sample_poset;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn fence_transfer(c: &mut Criterion) {
    let mut g = c.benchmark_group("fence-transfer");
    for n in [10usize, 25, 50] {
        g.bench_with_input(BenchmarkId::new("lattice", n), &n, |b, &n| {
            b.iter(|| count_zigzag_fast(black_box(n), n as u64))
        });
        g.bench_with_input(BenchmarkId::new("order", n), &n, |b, &n| {
            b.iter(|| count_order_preserving_zigzag(black_box(n), n as u64 + 1))
        });
    }
    g.finish();
}

fn box_walk(c: &mut Criterion) {
    let mut g = c.benchmark_group("box-walk");
    g.sample_size(20);
    for n in [4usize, 6] {
        let q = kirillov_polytope(n).unwrap();
        g.bench_with_input(BenchmarkId::new("kirillov", n), &q, |b, q| {
            b.iter(|| count_lattice_points(black_box(q), n as u64).unwrap())
        });
    }
    let p = sample_poset(6);
    let q = chain_polytope(&p);
    g.bench_function("random-6", |b| b.iter(|| count_lattice_points(black_box(&q), 6).unwrap()));
    g.finish();
}

fn order_brute(c: &mut Criterion) {
    let p = sample_poset(6);
    c.bench_function("order-brute/random-6", |b| b.iter(|| count_order_preserving_brute(black_box(&p), 7)));
}

fn descents(c: &mut Criterion) {
    let mut g = c.benchmark_group("descents");
    g.sample_size(10);
    for n in [8usize, 10] {
        let z = zigzag_poset(n).unwrap();
        let w = z.natural_labeling();
        g.bench_with_input(BenchmarkId::new("fence", n), &n, |b, _| {
            b.iter(|| w_polynomial_descents(black_box(&z), &w).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, fence_transfer, box_walk, order_brute, descents);
criterion_main!(benches);
