use criterion::{black_box, criterion_group, criterion_main, Criterion};

use qsym_bench::{chain, product_pairs};
use qsym_core::combinatorics::compositions;
use qsym_core::ppartitions::gamma;
use qsym_core::qsym::{eta_to_m, m_to_eta, product_eta, product_m};
use qsym_core::ZAlphabet;

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("product");
    for (a, b) in product_pairs() {
        g.bench_function(format!("eta {} * {}", a, b), |bench| {
            bench.iter(|| product_eta(black_box(&a), black_box(&b)))
        });
        g.bench_function(format!("M {} * {}", a, b), |bench| {
            bench.iter(|| product_m(black_box(&a), black_box(&b)))
        });
    }
    g.finish();
}

fn conversions(c: &mut Criterion) {
    let all = compositions(8);
    c.bench_function("eta -> M, all of degree 8", |bench| {
        bench.iter(|| all.iter().map(|a| eta_to_m(a).len()).sum::<usize>())
    });
    c.bench_function("M -> eta, all of degree 8", |bench| {
        bench.iter(|| all.iter().map(|a| m_to_eta(a).len()).sum::<usize>())
    });
}

fn ppartitions(c: &mut Criterion) {
    let z = ZAlphabet::signed(4);
    let p = chain(&[3, 1, 4, 2, 5], &[1, 1, 1, 1, 1]);
    c.bench_function("gamma chain 31425 over P+-_4", |bench| bench.iter(|| gamma(black_box(&p), &z)));
}

criterion_group!(benches, products, conversions, ppartitions);
criterion_main!(benches);
