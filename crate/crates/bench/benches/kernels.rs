//! Hot-kernel timings: spectral radius on both representations, the
//! characteristic-polynomial oracle, canonical labeling, containment
//! deciders, and one full enumeration level.

use criterion::{criterion_group, criterion_main, Criterion};
use specturan::{
    canonical_key, char_poly_radius_oracle, contains_subgraph, enumerate_graphs, spectral_radius,
    to_graph6, EnumOptions, EnumSpec, FamilySpec, ForbiddenPattern, Graph, LargeGraph, MatchMode,
};
use std::hint::black_box;

fn classes_at_m7() -> Vec<Graph> {
    let mut out = Vec::new();
    enumerate_graphs(&EnumSpec::new(7), &EnumOptions::serial(), &mut |g| {
        out.push(*g);
    })
    .unwrap();
    out
}

fn bench_spectral(c: &mut Criterion) {
    let join = FamilySpec::JoinCliqueIndep { k: 3, s: 30 }
        .construct()
        .unwrap();
    c.bench_function("spectral_radius join(3,30)", |b| {
        b.iter(|| spectral_radius(black_box(&join), 1e-12).unwrap());
    });

    let wide = LargeGraph::from_family(&FamilySpec::JoinCliqueIndep { k: 3, s: 97 }).unwrap();
    c.bench_function("perron wide join(3,97)", |b| {
        b.iter(|| wide.perron(1e-12).unwrap().lambda);
    });

    let apex = FamilySpec::CycleTriangle { t: 6 }.construct().unwrap();
    c.bench_function("char_poly_radius_oracle n=7", |b| {
        b.iter(|| char_poly_radius_oracle(black_box(&apex)).unwrap());
    });
}

fn bench_canonical(c: &mut Criterion) {
    let classes = classes_at_m7();
    c.bench_function("canonical_key over the 79 classes at m=7", |b| {
        b.iter(|| {
            for g in &classes {
                black_box(canonical_key(g));
            }
        });
    });
}

fn bench_containment(c: &mut Criterion) {
    let classes = classes_at_m7();
    let apex = ForbiddenPattern::CtTriangle(6);
    c.bench_function("c-triangle:6 freeness over the 79 classes at m=7", |b| {
        b.iter(|| {
            let mut hits = 0u32;
            for g in &classes {
                if apex.contained_in(g).unwrap() {
                    hits += 1;
                }
            }
            black_box(hits)
        });
    });

    let host = FamilySpec::Gnks { n: 10, k: 5, s: 2 }.construct().unwrap();
    let p6 = FamilySpec::Path { n: 6 }.construct().unwrap();
    c.bench_function("induced P_6 search in gnks(10,5,2)", |b| {
        b.iter(|| black_box(contains_subgraph(&host, &p6, MatchMode::Induced).is_none()));
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("m=7 connected with graph6 emission", |b| {
        b.iter(|| {
            let mut count = 0u64;
            enumerate_graphs(&EnumSpec::new(7), &EnumOptions::serial(), &mut |g| {
                count += 1;
                black_box(to_graph6(g));
            })
            .unwrap();
            count
        });
    });
    group.finish();
}

criterion_group!(
    kernels,
    bench_spectral,
    bench_canonical,
    bench_containment,
    bench_enumeration
);
criterion_main!(kernels);
