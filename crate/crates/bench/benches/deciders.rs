//! Benchmarks for the hot paths: the direct finite-ring deciders, the
//! generic capability-record deciders, tensor/Tor construction, and the
//! valuation closed forms against the bounded definitional search.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use skprimes::core::PrimeSetKind;
use skprimes::finite::deciders::all_prime_sets;
use skprimes::finite::module::{tor1, FinModule};
use skprimes::finite::{FinModCtx, FiniteRing};
use skprimes::valuation::{
    bounded_oracle, sk_membership_cyclic, ValPrime, ValueGroup,
};

fn bench_direct_deciders(c: &mut Criterion) {
    let ring = Arc::new(FiniteRing::zmod(12).unwrap());
    let m = FinModule::new(ring, 2, vec![vec![4, 6], vec![0, 3]]).unwrap();
    let e = m.explicit();
    c.bench_function("direct_all_prime_sets_z12", |b| {
        b.iter(|| all_prime_sets(&*e))
    });
}

fn bench_generic_deciders(c: &mut Criterion) {
    let ring = Arc::new(FiniteRing::zmod(12).unwrap());
    let m = FinModule::new(ring, 2, vec![vec![4, 6], vec![0, 3]]).unwrap();
    let ctx = FinModCtx::new(m.explicit());
    c.bench_function("generic_sk_prime_set_z12", |b| {
        b.iter(|| skprimes::core::prime_set(PrimeSetKind::StrongKrull, &ctx).unwrap())
    });
}

fn bench_tensor_tor(c: &mut Criterion) {
    let ring = Arc::new(FiniteRing::zmod(8).unwrap());
    let l = FinModule::new(ring.clone(), 1, vec![vec![4]]).unwrap();
    let m = FinModule::new(ring, 1, vec![vec![2]]).unwrap();
    c.bench_function("tor1_z8", |b| {
        b.iter(|| tor1(&l, m.explicit()).unwrap())
    });
}

fn bench_valuation(c: &mut Criterion) {
    let g = ValueGroup::LexZ(2);
    let a = g.from_ints(&[1, 0]).unwrap();
    c.bench_function("valuation_closed_form", |b| {
        b.iter(|| sk_membership_cyclic(g, ValPrime::Finite(1), &a).unwrap())
    });
    c.bench_function("valuation_bounded_search_b2", |b| {
        b.iter(|| bounded_oracle::sk_search(g, ValPrime::Finite(1), &a, 2))
    });
}

fn bench_gallery_item(c: &mut Criterion) {
    c.bench_function("gallery_nonmax", |b| {
        b.iter(|| skprimes::gallery::run_item("nonmax").unwrap())
    });
}

criterion_group!(
    benches,
    bench_direct_deciders,
    bench_generic_deciders,
    bench_tensor_tor,
    bench_valuation,
    bench_gallery_item
);
criterion_main!(benches);
