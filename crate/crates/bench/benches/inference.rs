use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use statlab_bench::inference_requests;
use statlab_core::inference::run_test;

fn run_tests(c: &mut Criterion) {
    let mut g = c.benchmark_group("run_test");
    for n in [20, 1000] {
        for req in inference_requests(n) {
            let id = BenchmarkId::new(req.setting.tag(), n);
            g.bench_with_input(id, &req, |b, req| b.iter(|| run_test(black_box(req)).unwrap()));
        }
    }
    g.finish();
}

criterion_group!(benches, run_tests);
criterion_main!(benches);
