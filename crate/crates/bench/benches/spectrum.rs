use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use weil_bench::fixture;
use weil_core::{q_count, spectrum, verify_identities, weil_sum, QQuery, SurveyConfig};

fn spectra(c: &mut Criterion) {
    let mut g = c.benchmark_group("spectrum");
    for q in [5u32, 64, 125, 343] {
        let (field, s) = fixture(q);
        g.bench_with_input(BenchmarkId::from_parameter(q), &q, |b, _| {
            b.iter(|| spectrum(&field, black_box(s)).unwrap())
        });
    }
    g.finish();

    let (field, s) = fixture(125);
    let u = field.one();
    c.bench_function("weil_sum/125", |b| b.iter(|| weil_sum(&field, black_box(s), u).unwrap()));
}

fn counts(c: &mut Criterion) {
    let (field, s) = fixture(13);
    let t: Vec<_> = (1..=3).map(|i| field.element(i).unwrap()).collect();
    let query = QQuery { t, a: field.one(), b: field.element(2).unwrap() };
    c.bench_function("q_count/13/k3", |b| b.iter(|| q_count(&field, s, black_box(&query)).unwrap()));
}

fn identities(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_identities");
    g.sample_size(10);
    for q in [7u32, 13, 16] {
        let (field, s) = fixture(q);
        g.bench_with_input(BenchmarkId::from_parameter(q), &q, |b, _| {
            b.iter(|| verify_identities(&field, s, 42).unwrap())
        });
    }
    g.finish();
}

fn surveys(c: &mut Criterion) {
    let mut g = c.benchmark_group("survey");
    g.sample_size(10);
    let config = SurveyConfig { q_max: 64, ..Default::default() };
    g.bench_function("q_max=64", |b| b.iter(|| weil_core::survey(black_box(&config)).unwrap()));
    g.finish();
}

criterion_group!(benches, spectra, counts, identities, surveys);
criterion_main!(benches);
