//! Randomized invariant checks across the galleries: containment chains,
//! oracle agreement, arithmetic laws, and canonical-form soundness.

use std::sync::Arc;

use proptest::prelude::*;
use skprimes::constructions::axes::{AxesElement, AxesPoly};
use skprimes::constructions::Fp;
use skprimes::content::{content, content_checked, dm_exponent, Poly};
use skprimes::core::Verdict;
use skprimes::finite::deciders::{all_prime_sets, chain_holds, collapsed_prime_set};
use skprimes::finite::{FinModule, FiniteRing};
use skprimes::perfect::{frobenius, normalize, perf_eq, perf_gcd, root, FpCtx, PerfElem};
use skprimes::valuation::{
    bounded_oracle, colon_principal, sk_membership_cyclic, wass_membership_cyclic, ValIdeal,
    ValPrime, ValueGroup,
};

fn zmod(n: usize) -> Arc<FiniteRing> {
    Arc::new(FiniteRing::zmod(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Over a finite ring the four prime sets coincide and the chain holds,
    /// for arbitrary small presentations.
    #[test]
    fn finite_chain_and_collapse(
        n in prop::sample::select(vec![4usize, 6, 8, 9, 12]),
        cols in prop::collection::vec(prop::collection::vec(0usize..12, 2), 0..3),
    ) {
        let ring = zmod(n);
        let cols: Vec<Vec<usize>> = cols
            .into_iter()
            .map(|c| c.into_iter().map(|x| x % n).collect())
            .collect();
        let m = FinModule::new(ring, 2, cols).unwrap();
        let e = m.explicit();
        prop_assert!(chain_holds(&*e));
        prop_assert!(collapsed_prime_set(&*e).is_some());
        // The sets are canonical: recomputation is identical.
        prop_assert_eq!(all_prime_sets(&*e), all_prime_sets(&*e));
    }

    /// The valuation closed forms agree with the bounded definitional
    /// search for arbitrary positive values in the rank-2 integer group.
    #[test]
    fn valuation_closed_form_matches_search(
        c0 in -3i64..=3,
        c1 in -3i64..=3,
        k in 1u32..=2,
    ) {
        let g = ValueGroup::LexZ(2);
        let a = g.from_ints(&[c0, c1]).unwrap();
        prop_assume!(g.is_pos(&a));
        let p = ValPrime::Finite(k);
        let closed = sk_membership_cyclic(g, p, &a).unwrap().is_proved();
        prop_assert_eq!(closed, bounded_oracle::sk_search(g, p, &a, 3));
        let closed_w = wass_membership_cyclic(g, p, &a).unwrap().is_proved();
        prop_assert_eq!(closed_w, bounded_oracle::wass_search(g, p, &a, 3));
    }

    /// The colon of principal ideals inverts multiplication: when b <= a the
    /// result's value plus b gives back a; otherwise the colon is the unit
    /// ideal.
    #[test]
    fn valuation_colon_law(
        a0 in 0i64..=4, a1 in -3i64..=3,
        b0 in 0i64..=4, b1 in -3i64..=3,
    ) {
        let g = ValueGroup::LexZ(2);
        let a = g.from_ints(&[a0, a1]).unwrap();
        let b = g.from_ints(&[b0, b1]).unwrap();
        prop_assume!(g.is_nonneg(&a) && g.is_nonneg(&b));
        match colon_principal(g, &a, &b).unwrap() {
            ValIdeal::Principal(v) => {
                prop_assert!(g.is_pos(&v));
                prop_assert_eq!(g.add(&b, &v), a);
            }
            ValIdeal::Unit => {
                // b does not properly divide a.
                prop_assert!(g.cmp_elems(&b, &a) != std::cmp::Ordering::Less);
            }
            other => prop_assert!(false, "unexpected colon {:?}", other),
        }
    }

    /// Content equals its intersection definition, is submultiplicative, and
    /// satisfies Dedekind-Mertens within deg(g) + 2, over Z/6 and Z/8.
    #[test]
    fn content_laws(
        n in prop::sample::select(vec![6usize, 8]),
        fc in prop::collection::vec(0usize..8, 0..4),
        gc in prop::collection::vec(0usize..8, 0..4),
    ) {
        let ring = zmod(n);
        let f = Poly::new(ring.clone(), fc.into_iter().map(|c| c % n).collect());
        let g = Poly::new(ring.clone(), gc.into_iter().map(|c| c % n).collect());
        prop_assert_eq!(content(&f), content_checked(&f));
        let cfg = content(&f.mul(&g));
        let bound = ring.ideal_product(content(&f), content(&g));
        prop_assert_eq!(cfg & !bound, 0, "c(fg) outside c(f)c(g)");
        let gd = g.degree().unwrap_or(0);
        match dm_exponent(&f, &g, gd + 2).unwrap() {
            Verdict::Proved(e) => prop_assert!(e <= gd + 1),
            other => prop_assert!(false, "no exponent: {:?}", other),
        }
    }

    /// Perfect-closure canonical forms: normalization is sound and
    /// idempotent, root/Frobenius are mutually inverse, and the gcd divides
    /// both inputs at a common level.
    #[test]
    fn perfect_closure_canonical_forms(
        coeffs in prop::collection::vec(0u8..2, 0..6),
        level in 0u32..3,
        coeffs2 in prop::collection::vec(0u8..2, 0..5),
    ) {
        let ctx = FpCtx::new(2).unwrap();
        let z = PerfElem::new(ctx, level, coeffs);
        prop_assert_eq!(normalize(ctx, z.clone()), z.clone());
        prop_assert!(perf_eq(ctx, &root(ctx, &frobenius(ctx, &z)), &z));
        prop_assert!(perf_eq(ctx, &frobenius(ctx, &root(ctx, &z)), &z));
        let w = PerfElem::new(ctx, level + 1, coeffs2);
        if !(z.is_zero() && w.is_zero()) {
            let d = perf_gcd(ctx, &z, &w).unwrap();
            let lvl = d.level.max(z.level).max(w.level);
            let dl = d.at_level(ctx, lvl);
            if !z.is_zero() {
                prop_assert!(ctx.divides(&dl, &z.at_level(ctx, lvl)));
            }
            if !w.is_zero() {
                prop_assert!(ctx.divides(&dl, &w.at_level(ctx, lvl)));
            }
        }
    }

    /// Axes-ring normal forms are confluent: ring laws hold structurally on
    /// canonical representatives.
    #[test]
    fn axes_ring_laws(
        ma in prop::collection::vec((1u32..=4, 1usize..=2, 0u64..2), 0..4),
        mb in prop::collection::vec((1u32..=4, 1usize..=2, 0u64..2), 0..4),
        mc in prop::collection::vec((1u32..=4, 1usize..=2, 0u64..2), 0..4),
    ) {
        let build = |ms: Vec<(u32, usize, u64)>| {
            let mut p = AxesPoly::<Fp<2>>::zero();
            for (i, d, c) in ms {
                p = p.add(&AxesPoly::monomial(i, d, Fp(c % 2)));
            }
            p
        };
        let (a, b, c) = (build(ma), build(mb), build(mc));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        // Localization equality is reflexive and respects representatives.
        let one_plus = AxesPoly::one().add(&AxesPoly::monomial(1, 1, Fp(1)));
        let e1 = AxesElement::new(a.mul(&one_plus), one_plus).unwrap();
        prop_assert!(e1.eq_elem(&AxesElement::from_poly(a)));
    }
}
