use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use statlab_bench::specs;
use statlab_core::distributions::ProbabilityQuery;

fn cdf_and_quantile(c: &mut Criterion) {
    let mut g = c.benchmark_group("cdf");
    for s in specs() {
        let x = s.quantile(0.7).unwrap();
        g.bench_function(s.tag(), |b| b.iter(|| s.cdf(black_box(x)).unwrap()));
    }
    g.finish();
    let mut g = c.benchmark_group("quantile");
    for s in specs() {
        g.bench_function(s.tag(), |b| b.iter(|| s.quantile(black_box(0.7)).unwrap()));
    }
    g.finish();
}

fn probability_with_derivation(c: &mut Criterion) {
    let mut g = c.benchmark_group("probability");
    for s in specs() {
        let q = ProbabilityQuery::Interval { a: s.quantile(0.2).unwrap(), b: s.quantile(0.8).unwrap() };
        g.bench_function(s.tag(), |b| b.iter(|| s.probability(black_box(&q)).unwrap()));
    }
    g.finish();
}

fn worked_example_over_json(c: &mut Criterion) {
    let body = r#"{"distribution":"normal","params":{"mu":0,"var":1},"query":{"type":"lower_tail","x":1}}"#;
    c.bench_function("api/probability normal", |b| {
        b.iter(|| {
            let req = serde_json::from_str(black_box(body)).unwrap();
            serde_json::to_vec(&statlab_service::api::probability(req).unwrap()).unwrap()
        })
    });
}

criterion_group!(benches, cdf_and_quantile, probability_with_derivation, worked_example_over_json);
criterion_main!(benches);
