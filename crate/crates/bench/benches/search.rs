use std::hint::black_box;

use binlift::census::{enumerate_codes, CensusOptions};
use binlift::minor::{gammoid_obstruction, in_class_gk};
use binlift::{isomorphic, splitting};
use binlift_bench::{catalog_matroids, gammoids};
use criterion::{criterion_group, criterion_main, Criterion};

fn minor_search(c: &mut Criterion) {
    let mut g = c.benchmark_group("k4_obstruction");
    for (name, m) in catalog_matroids() {
        g.bench_function(name, |b| b.iter(|| gammoid_obstruction(black_box(&m)).unwrap()));
    }
    g.finish();

    let g1 = catalog_matroids().into_iter().find(|(n, _)| *n == "G1").unwrap().1;
    c.bench_function("in_class_g2/G1", |b| b.iter(|| in_class_gk(black_box(&g1), 2).unwrap()));
    let split = splitting(&g1, &["x", "y"]).unwrap();
    c.bench_function("splitting/G1", |b| b.iter(|| splitting(black_box(&g1), &["x", "y"]).unwrap()));
    c.bench_function("isomorphic/G1_split_self", |b| {
        b.iter(|| isomorphic(black_box(&split), black_box(&split)).unwrap())
    });
}

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    for k in [5, 6] {
        g.bench_function(format!("codes/{k}"), |b| {
            b.iter(|| enumerate_codes(k, true, &CensusOptions::default()).unwrap())
        });
    }
    g.bench_function("gammoids/5", |b| b.iter(|| gammoids(5)));
    g.finish();
}

criterion_group!(benches, minor_search, census);
criterion_main!(benches);
