use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use eisenstein_core::{
    builtin_semiring, enumerate_semirings, search_factorizations, verify_theorem, EnumerationBudget,
    FiniteSemiring, Polynomial, Semiring,
};

fn search(c: &mut Criterion) {
    let nat = builtin_semiring("nat").unwrap();
    let irreducible = Polynomial::parse("x^4 + 12*x^3 + 6*x^2 + 4*x + 10", &nat).unwrap();
    c.bench_function("search nat degree 4 coefficients <= 12", |b| {
        b.iter(|| search_factorizations(black_box(&irreducible), 2, None).unwrap())
    });

    let z4 = Arc::new(Semiring::finite("Z4", FiniteSemiring::integers_mod(4)).unwrap());
    let f = Polynomial::parse("x^3 + 2*x + 2", &z4).unwrap();
    c.bench_function("search Z4 degree 3 window 2", |b| {
        b.iter(|| search_factorizations(black_box(&f), 2, None).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    for order in [2, 3] {
        group.bench_function(format!("enumerate_semirings order {order}"), |b| {
            b.iter(|| enumerate_semirings(black_box(order), EnumerationBudget::default()).unwrap())
        });
    }
    let n3 = Arc::new(Semiring::finite("N3", FiniteSemiring::saturating(2)).unwrap());
    group.bench_function("verify_theorem N3 degree 3", |b| {
        b.iter(|| verify_theorem(black_box(&n3), 3, 2).unwrap())
    });
    group.finish();
}

criterion_group!(benches, search, enumeration);
criterion_main!(benches);
