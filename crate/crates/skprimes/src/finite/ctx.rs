//! Capability-record adapters that plug finite rings and modules into the
//! generic deciders.

use crate::core::{ModuleContext, RingContext};
use crate::finite::module::{ann_mask, vanishes_in_localization, ModRef};
use crate::finite::ring::{mask_subset, Mask, RingRef};

/// A finite ring as a [`RingContext`]: ideals and primes are bitmasks and
/// every capability is total.
#[derive(Clone)]
pub struct FinRingCtx {
    pub ring: RingRef,
}

impl FinRingCtx {
    pub fn new(ring: RingRef) -> Self {
        FinRingCtx { ring }
    }
}

impl RingContext for FinRingCtx {
    type Ideal = Mask;
    type Prime = Mask;

    fn ideal_subset(&self, a: &Mask, b: &Mask) -> bool {
        mask_subset(*a, *b)
    }

    fn prime_as_ideal(&self, p: &Mask) -> Mask {
        *p
    }

    fn is_unit_ideal(&self, i: &Mask) -> bool {
        *i == self.ring.full_mask()
    }

    fn fg_subideals(&self, p: &Mask) -> Option<Vec<Mask>> {
        // Every ideal of a finite ring is finitely generated.
        Some(
            self.ring
                .ideals()
                .iter()
                .copied()
                .filter(|&i| mask_subset(i, *p))
                .collect(),
        )
    }

    fn principal_subideals(&self, p: &Mask) -> Option<Vec<Mask>> {
        let mut v: Vec<Mask> = crate::finite::ring::mask_elements(*p)
            .filter(|&a| a < self.ring.order())
            .map(|a| self.ring.principal_ideal(a))
            .collect();
        v.sort_unstable();
        v.dedup();
        Some(v)
    }

    fn minimal_over(&self, p: &Mask, i: &Mask) -> bool {
        self.ring.minimal_primes_over(*i).contains(p)
    }

    fn spec(&self) -> Option<Vec<Mask>> {
        Some(self.ring.spec().to_vec())
    }

    fn prime_subset(&self, p: &Mask, q: &Mask) -> bool {
        mask_subset(*p, *q)
    }

    fn describe_ideal(&self, i: &Mask) -> String {
        self.ring.describe_subset(*i)
    }

    fn describe_prime(&self, p: &Mask) -> String {
        self.ring.describe_subset(*p)
    }
}

/// Any element-level finite module as a [`ModuleContext`].
pub struct FinModCtx {
    ctx: FinRingCtx,
    pub module: ModRef,
}

impl FinModCtx {
    pub fn new(module: ModRef) -> Self {
        let ctx = FinRingCtx::new(module.ring().clone());
        FinModCtx { ctx, module }
    }
}

impl ModuleContext for FinModCtx {
    type Ring = FinRingCtx;
    type Elem = usize;

    fn ring(&self) -> &FinRingCtx {
        &self.ctx
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.module.size()).collect())
    }

    fn is_zero_elem(&self, z: &usize) -> bool {
        *z == 0
    }

    fn ann(&self, z: &usize) -> Mask {
        ann_mask(&*self.module, *z)
    }

    fn describe_elem(&self, z: &usize) -> String {
        self.module.describe(*z)
    }

    fn vanishes_at(&self, x: &usize, p: &Mask) -> Option<bool> {
        let w = self.ctx.ring.full_mask() & !*p;
        Some(vanishes_in_localization(&*self.module, *x, w))
    }
}
