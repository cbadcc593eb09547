use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use eisenstein_core::{
    builtin_semiring, check_eisenstein, check_eisenstein_with, principal_ideal, Element, Polynomial,
};

fn eisenstein(c: &mut Criterion) {
    let nat = builtin_semiring("nat").unwrap();
    let ideal = principal_ideal(&nat, &Element::nat(2u32)).unwrap();
    let f = Polynomial::parse("x^4 + 6*x^3 + 4*x^2 + 10*x + 6", &nat).unwrap();
    let preds = ideal.predicates(4096).unwrap();

    c.bench_function("check_eisenstein nat (2) bound 4096", |b| {
        b.iter(|| check_eisenstein(black_box(&f), &ideal, 4096).unwrap())
    });
    c.bench_function("check_eisenstein_with nat (2) precomputed", |b| {
        b.iter(|| check_eisenstein_with(black_box(&f), &ideal, preds.clone()).unwrap())
    });
    c.bench_function("polynomial mul nat degree 8", |b| {
        let g = Polynomial::parse("3*x^8 + 7*x^5 + x^2 + 11", &nat).unwrap();
        b.iter(|| black_box(&g).mul(&g).unwrap())
    });
}

criterion_group!(benches, eisenstein);
criterion_main!(benches);
