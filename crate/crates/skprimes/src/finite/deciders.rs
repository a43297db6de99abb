//! Direct definition-unrolling deciders over finite modules, written against
//! raw bitmasks with no shared code with the generic capability-record path.
//! The two paths are cross-checked against each other
//! ([`agree_with_generic`]).

use crate::core::{self, PrimeSetKind};
use crate::error::Result;
use crate::finite::ctx::FinModCtx;
use crate::finite::module::{ann_mask, ModRef, RMod};
use crate::finite::ring::{mask_contains, mask_subset, Mask};

fn anns(m: &dyn RMod) -> Vec<Mask> {
    (0..m.size()).map(|z| ann_mask(m, z)).collect()
}

pub fn membership_direct(kind: PrimeSetKind, p: Mask, m: &dyn RMod) -> bool {
    let ring = m.ring().clone();
    let anns = anns(m);
    match kind {
        PrimeSetKind::Ass => anns.iter().any(|&a| a == p),
        PrimeSetKind::WAss => (1..m.size()).any(|z| {
            let a = anns[z];
            mask_subset(a, p)
                && !ring
                    .spec()
                    .iter()
                    .any(|&q| q != p && mask_subset(q, p) && mask_subset(a, q))
        }),
        PrimeSetKind::Krull => (0..ring.order())
            .filter(|&x| mask_contains(p, x))
            .all(|x| {
                anns
                    .iter()
                    .any(|&a| mask_contains(a, x) && mask_subset(a, p))
            }),
        PrimeSetKind::StrongKrull => ring
            .ideals()
            .iter()
            .filter(|&&i| mask_subset(i, p))
            .all(|&i| anns.iter().any(|&a| mask_subset(i, a) && mask_subset(a, p))),
    }
}

/// The `kind` prime set in canonical Spec order, by definition unrolling.
pub fn prime_set_direct(kind: PrimeSetKind, m: &dyn RMod) -> Vec<Mask> {
    m.ring()
        .spec()
        .iter()
        .copied()
        .filter(|&p| membership_direct(kind, p, m))
        .collect()
}

/// All four prime sets at once.
pub fn all_prime_sets(m: &dyn RMod) -> [Vec<Mask>; 4] {
    PrimeSetKind::ALL.map(|k| prime_set_direct(k, m))
}

/// Do the direct and the generic capability-record deciders agree on every
/// prime and every notion?
pub fn agree_with_generic(m: ModRef) -> Result<bool> {
    let ctx = FinModCtx::new(m.clone());
    for kind in PrimeSetKind::ALL {
        let generic = core::prime_set(kind, &ctx)?;
        let direct = prime_set_direct(kind, &*m);
        if generic != direct {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Over a finite (hence Noetherian) ring all four notions coincide; returns
/// the common set, or `None` (a genuine failure) if they differ.
pub fn collapsed_prime_set(m: &dyn RMod) -> Option<Vec<Mask>> {
    let [ass, wass, sk, k] = all_prime_sets(m);
    if ass == wass && wass == sk && sk == k {
        Some(ass)
    } else {
        None
    }
}

/// The containment chain Ass ⊆ wAss ⊆ sK ⊆ K as computed sets.
pub fn chain_holds(m: &dyn RMod) -> bool {
    let [ass, wass, sk, k] = all_prime_sets(m);
    let le = |a: &[Mask], b: &[Mask]| a.iter().all(|p| b.contains(p));
    le(&ass, &wass) && le(&wass, &sk) && le(&sk, &k)
}

/// `Supp(M) = {p : M_p != 0}`, computed elementwise: `p` is in the support
/// iff some element survives localization at `p`.
pub fn support(m: &dyn RMod) -> Vec<Mask> {
    let ring = m.ring().clone();
    ring.spec()
        .iter()
        .copied()
        .filter(|&p| {
            let w = ring.full_mask() & !p;
            (1..m.size()).any(|x| !crate::finite::module::vanishes_in_localization(m, x, w))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::module::FinModule;
    use std::sync::Arc;

    fn ring(n: usize) -> crate::finite::ring::RingRef {
        Arc::new(crate::finite::ring::FiniteRing::zmod(n).unwrap())
    }

    #[test]
    fn prime_sets_of_z12_itself() {
        // ann(6) = (2) and ann(4) = (3), so both primes are associated to
        // Z/12 as a module over itself.
        let r = ring(12);
        let free = FinModule::free(r.clone(), 1).unwrap();
        let e = free.explicit();
        let expected: Vec<Mask> = r.spec().to_vec();
        for kind in PrimeSetKind::ALL {
            assert_eq!(prime_set_direct(kind, &*e), expected, "{}", kind.label());
        }
        // The wAss witness 4 has annihilator exactly (3).
        assert_eq!(crate::finite::module::ann_mask(&*e, 4), r.principal_ideal(3));
    }

    #[test]
    fn prime_sets_of_field_module() {
        let r = ring(12);
        let p = r.principal_ideal(2);
        let m = FinModule::cyclic_quotient(r.clone(), p).unwrap();
        for kind in PrimeSetKind::ALL {
            assert_eq!(prime_set_direct(kind, &*m.explicit()), vec![p]);
        }
    }

    #[test]
    fn zero_module_has_empty_sets() {
        let r = ring(6);
        let m = FinModule::zero(r).unwrap();
        for kind in PrimeSetKind::ALL {
            assert!(prime_set_direct(kind, &*m.explicit()).is_empty());
        }
    }

    #[test]
    fn chain_and_collapse_on_samples() {
        for n in [4usize, 6, 8, 9, 12] {
            let r = ring(n);
            for cols in [vec![], vec![vec![2 % n]], vec![vec![3 % n]]] {
                let m = FinModule::new(r.clone(), 1, cols).unwrap();
                let e = m.explicit();
                assert!(chain_holds(&*e));
                assert!(collapsed_prime_set(&*e).is_some());
            }
        }
    }

    #[test]
    fn generic_and_direct_paths_agree() {
        let r = ring(12);
        for cols in [vec![], vec![vec![4, 6]], vec![vec![2, 0], vec![0, 3]]] {
            let s = cols.first().map_or(1, |c: &Vec<usize>| c.len());
            let m = FinModule::new(r.clone(), s, cols).unwrap();
            assert!(agree_with_generic(m.explicit()).unwrap());
        }
    }

    #[test]
    fn support_of_cyclic_is_primes_over_ann() {
        let r = ring(12);
        let i = r.principal_ideal(4);
        let m = FinModule::cyclic_quotient(r.clone(), i).unwrap();
        let supp = support(&*m.explicit());
        let expected: Vec<Mask> = r
            .spec()
            .iter()
            .copied()
            .filter(|&p| crate::finite::ring::mask_subset(i, p))
            .collect();
        assert_eq!(supp, expected);
    }
}
