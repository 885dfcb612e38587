use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use monster_bench::{alternating_chart, critical_chart, CUSP};
use monster_core::nodal::{binomials_by_differentiation, build_chain, node_binomial, verify_flat_limit};
use monster_core::parse::parse_curve_spec;
use monster_core::prolong::{default_truncation_order, prolong, ParametricCurve};
use monster_core::strata::{annotate_chain, enumerate_code_words, node_word_explicit, node_word_recursive};
use std::hint::black_box;

fn binomials(c: &mut Criterion) {
    let mut group = c.benchmark_group("binomial");
    for len in [4, 8, 12] {
        let chart = alternating_chart(len);
        group.bench_with_input(BenchmarkId::new("recursion", len), &chart, |b, chart| {
            b.iter(|| node_binomial(black_box(chart)))
        });
    }
    for len in [2, 4, 6] {
        let chart = alternating_chart(len);
        group.bench_with_input(BenchmarkId::new("differentiation", len), &chart, |b, chart| {
            b.iter(|| binomials_by_differentiation(black_box(chart)).unwrap())
        });
    }
    group.finish();
}

fn flat_limit(c: &mut Criterion) {
    let chart = alternating_chart(8);
    c.bench_function("flat limit 21212121", |b| {
        b.iter(|| verify_flat_limit(black_box(&chart)).unwrap())
    });
}

fn node_words(c: &mut Criterion) {
    let chart = critical_chart(12);
    let mut group = c.benchmark_group("node word k=12");
    group.bench_function("recursive", |b| {
        b.iter(|| node_word_recursive(black_box(&chart)).unwrap())
    });
    group.bench_function("explicit", |b| b.iter(|| node_word_explicit(black_box(&chart))));
    group.finish();
}

fn code_words(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate code words");
    for k in [6, 10, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| enumerate_code_words(black_box(k)))
        });
    }
    group.finish();
}

fn chains(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain");
    for k in [4, 8] {
        group.bench_with_input(BenchmarkId::new("build", k), &k, |b, &k| {
            b.iter(|| build_chain(black_box(k)).unwrap())
        });
        let chain = build_chain(k).unwrap();
        group.bench_with_input(BenchmarkId::new("annotate", k), &chain, |b, chain| {
            b.iter(|| annotate_chain(black_box(chain)).unwrap())
        });
    }
    group.finish();
}

fn cusp(c: &mut Criterion) {
    let spec = parse_curve_spec(CUSP).unwrap();
    let curve = ParametricCurve::from_spec(&spec, default_truncation_order(3)).unwrap();
    c.bench_function("prolong cusp 3 levels", |b| {
        b.iter(|| prolong(black_box(&curve), 3).unwrap())
    });
}

criterion_group!(benches, binomials, flat_limit, node_words, code_words, chains, cusp);
criterion_main!(benches);
