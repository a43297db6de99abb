//! Fully enumerated finite commutative rings.
//!
//! Elements are indices `0..n` with `0` the zero element and (for nonzero
//! rings) `1` the identity. Subsets of the ring — ideals, primes, unit sets —
//! are bitmasks in a `u64`, which caps the supported order at 64.

use std::sync::Arc;

use crate::error::{Error, Result};

pub const ORDER_CAP: usize = 64;

pub type RingRef = Arc<FiniteRing>;

/// An ideal or other subset of a finite ring, as a bitmask over element
/// indices.
pub type Mask = u64;

pub fn mask_contains(m: Mask, e: usize) -> bool {
    m >> e & 1 == 1
}

pub fn mask_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

pub fn mask_elements(m: Mask) -> impl Iterator<Item = usize> {
    (0..64).filter(move |e| mask_contains(m, *e))
}

#[derive(Debug)]
pub struct FiniteRing {
    name: String,
    n: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    elem_names: Vec<String>,
    units: Mask,
    regulars: Mask,
    ideals: Vec<Mask>,
    spec: Vec<Mask>,
    is_zero_ring: bool,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.add == other.add && self.mul == other.mul
    }
}

impl FiniteRing {
    /// Build a ring from raw tables. `zero` and `one` designate the neutral
    /// elements in the incoming numbering; elements are renumbered so that
    /// zero lands at index 0 and one at index 1.
    pub fn from_tables(
        name: impl Into<String>,
        elem_names: Vec<String>,
        add: &dyn Fn(usize, usize) -> usize,
        mul: &dyn Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = elem_names.len();
        if n == 0 {
            return Err(Error::Precondition("a ring needs at least one element".into()));
        }
        if n > ORDER_CAP {
            return Err(Error::OrderCap { order: n, cap: ORDER_CAP });
        }
        let is_zero_ring = zero == one;

        // Renumbering: zero -> 0, one -> 1, the rest in ascending old index.
        let mut order: Vec<usize> = vec![zero];
        if !is_zero_ring {
            order.push(one);
        }
        order.extend((0..n).filter(|&i| i != zero && i != one));
        let mut new_of_old = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old] = new;
        }

        let mut add_t = vec![0u8; n * n];
        let mut mul_t = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                add_t[new_of_old[a] * n + new_of_old[b]] = new_of_old[add(a, b)] as u8;
                mul_t[new_of_old[a] * n + new_of_old[b]] = new_of_old[mul(a, b)] as u8;
            }
        }
        let names = order.iter().map(|&old| elem_names[old].clone()).collect();

        let mut ring = FiniteRing {
            name: name.into(),
            n,
            add: add_t,
            mul: mul_t,
            neg: vec![0; n],
            elem_names: names,
            units: 0,
            regulars: 0,
            ideals: Vec::new(),
            spec: Vec::new(),
            is_zero_ring,
        };
        ring.check_laws()?;
        ring.build_caches();
        Ok(ring)
    }

    fn check_laws(&mut self) -> Result<()> {
        let n = self.n;
        let fail = |msg: &str| Err(Error::Precondition(format!("ring law violated: {msg}")));
        for a in 0..n {
            if self.add(0, a) != a {
                return fail("0 is not an additive identity");
            }
            if self.mul(0, a) != 0 {
                return fail("0 does not absorb multiplication");
            }
            if !self.is_zero_ring && self.mul(1, a) != a {
                return fail("1 is not a multiplicative identity");
            }
            let inv = (0..n).find(|&b| self.add(a, b) == 0);
            match inv {
                Some(b) => self.neg[a] = b as u8,
                None => return fail("missing additive inverse"),
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("addition is not commutative");
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplication is not commutative");
                }
            }
        }
        // Triple laws: exhaustive up to order 16, strided sample above.
        let triples: Vec<(usize, usize, usize)> = if n <= 16 {
            (0..n)
                .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
                .collect()
        } else {
            let mut v = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    for c in [0, 1, (a + b) % n, a * b % n, n - 1] {
                        v.push((a, b, c));
                    }
                }
            }
            v
        };
        for (a, b, c) in triples {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail("addition is not associative");
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail("multiplication is not associative");
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail("distributivity fails");
            }
        }
        Ok(())
    }

    fn build_caches(&mut self) {
        let n = self.n;
        for a in 0..n {
            if (0..n).any(|b| self.mul(a, b) == 1 && !self.is_zero_ring) {
                self.units |= 1 << a;
            }
            if (1..n).all(|b| self.mul(a, b) != 0) {
                self.regulars |= 1 << a;
            }
        }
        if self.is_zero_ring {
            // In the zero ring, 0 is vacuously regular and also the unit.
            self.units = 1;
        }
        // Every regular element of a finite ring is a unit, so the total
        // quotient ring is the ring itself. Relied on throughout.
        debug_assert_eq!(self.units, self.regulars);

        self.ideals = self.enumerate_ideals();
        self.spec = self
            .ideals
            .iter()
            .copied()
            .filter(|&i| self.is_prime_ideal(i))
            .collect();
        self.spec.sort_unstable();
    }

    fn enumerate_ideals(&self) -> Vec<Mask> {
        let mut seen: Vec<Mask> = vec![1]; // the zero ideal
        for a in 0..self.n {
            let p = self.principal_ideal(a);
            if !seen.contains(&p) {
                seen.push(p);
            }
        }
        // Close under ideal sums; the sum of two ideals is elementwise.
        loop {
            let mut grew = false;
            let snapshot = seen.clone();
            for &i in &snapshot {
                for &j in &snapshot {
                    let s = self.ideal_sum(i, j);
                    if !seen.contains(&s) {
                        seen.push(s);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        seen.sort_unstable();
        seen
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_zero_ring(&self) -> bool {
        self.is_zero_ring
    }

    pub fn elem_name(&self, a: usize) -> &str {
        &self.elem_names[a]
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn is_unit(&self, a: usize) -> bool {
        mask_contains(self.units, a)
    }

    pub fn units(&self) -> Mask {
        self.units
    }

    pub fn regulars(&self) -> Mask {
        self.regulars
    }

    pub fn full_mask(&self) -> Mask {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn principal_ideal(&self, a: usize) -> Mask {
        let mut m = 0;
        for r in 0..self.n {
            m |= 1 << self.mul(r, a);
        }
        m
    }

    pub fn ideal_sum(&self, i: Mask, j: Mask) -> Mask {
        let mut m = 0;
        for a in mask_elements(i) {
            for b in mask_elements(j) {
                m |= 1 << self.add(a, b);
            }
        }
        m
    }

    pub fn ideal_product(&self, i: Mask, j: Mask) -> Mask {
        let mut gens = 0u64;
        for a in mask_elements(i) {
            for b in mask_elements(j) {
                gens |= 1 << self.mul(a, b);
            }
        }
        self.ideal_generated(gens)
    }

    pub fn ideal_generated(&self, gens: Mask) -> Mask {
        let mut m: Mask = 1; // zero
        for g in mask_elements(gens) {
            m = self.ideal_sum(m, self.principal_ideal(g));
        }
        m
    }

    /// All ideals, ascending by mask.
    pub fn ideals(&self) -> &[Mask] {
        &self.ideals
    }

    pub fn is_ideal(&self, m: Mask) -> bool {
        self.ideals.contains(&m)
    }

    pub fn is_prime_ideal(&self, p: Mask) -> bool {
        if p == self.full_mask() {
            return false;
        }
        // Prime iff the complement is multiplicatively closed.
        for a in 0..self.n {
            if mask_contains(p, a) {
                continue;
            }
            for b in 0..self.n {
                if !mask_contains(p, b) && mask_contains(p, self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// The prime spectrum in canonical (ascending mask) order.
    pub fn spec(&self) -> &[Mask] {
        &self.spec
    }

    pub fn maximal_ideals(&self) -> Vec<Mask> {
        self.spec
            .iter()
            .copied()
            .filter(|&p| !self.spec.iter().any(|&q| p != q && mask_subset(p, q)))
            .collect()
    }

    pub fn minimal_primes_over(&self, i: Mask) -> Vec<Mask> {
        let over: Vec<Mask> = self
            .spec
            .iter()
            .copied()
            .filter(|&p| mask_subset(i, p))
            .collect();
        over.iter()
            .copied()
            .filter(|&p| !over.iter().any(|&q| q != p && mask_subset(q, p)))
            .collect()
    }

    /// A small generating set for an ideal, chosen greedily.
    pub fn minimal_generators(&self, ideal: Mask) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current: Mask = 1;
        while current != ideal {
            let mut best: Option<(usize, Mask)> = None;
            for a in mask_elements(ideal) {
                if mask_contains(current, a) {
                    continue;
                }
                let next = self.ideal_sum(current, self.principal_ideal(a));
                if best.map_or(true, |(_, b)| next.count_ones() > b.count_ones()) {
                    best = Some((a, next));
                }
            }
            let (a, next) = best.expect("ideal closure must terminate");
            gens.push(a);
            current = next;
        }
        if gens.is_empty() {
            gens.push(0);
        }
        gens
    }

    /// Annihilator of a ring element, as an ideal mask.
    pub fn ann(&self, a: usize) -> Mask {
        let mut m = 0;
        for r in 0..self.n {
            if self.mul(r, a) == 0 {
                m |= 1 << r;
            }
        }
        m
    }

    /// Colon ideal `(i : a) = {r | ra in i}`.
    pub fn colon(&self, i: Mask, a: usize) -> Mask {
        let mut m = 0;
        for r in 0..self.n {
            if mask_contains(i, self.mul(r, a)) {
                m |= 1 << r;
            }
        }
        m
    }

    pub fn describe_subset(&self, m: Mask) -> String {
        let names: Vec<&str> = mask_elements(m)
            .filter(|&e| e < self.n)
            .map(|e| self.elem_name(e))
            .collect();
        format!("{{{}}}", names.join(","))
    }

    /// Quotient ring `R/I` and the projection map on element indices.
    pub fn quotient(&self, ideal: Mask) -> Result<(FiniteRing, Vec<usize>)> {
        if !self.is_ideal(ideal) {
            return Err(Error::Precondition("quotient by a non-ideal".into()));
        }
        // Coset representative: smallest element index in a + I.
        let rep = |a: usize| -> usize {
            mask_elements(ideal)
                .map(|i| self.add(a, i))
                .min()
                .unwrap_or(a)
        };
        let mut reps: Vec<usize> = (0..self.n).map(rep).collect();
        let mut distinct: Vec<usize> = reps.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let idx_of_rep = |r: usize| distinct.iter().position(|&d| d == r).unwrap();
        let proj: Vec<usize> = reps.iter().map(|&r| idx_of_rep(r)).collect();
        let names: Vec<String> = distinct
            .iter()
            .map(|&r| format!("[{}]", self.elem_name(r)))
            .collect();
        let zero = proj[0];
        let one = proj[if self.is_zero_ring { 0 } else { 1 }];
        let add = |a: usize, b: usize| proj[self.add(distinct[a], distinct[b])];
        let mul = |a: usize, b: usize| proj[self.mul(distinct[a], distinct[b])];
        let q = FiniteRing::from_tables(
            format!("{}/{}", self.name, self.describe_subset(ideal)),
            names,
            &add,
            &mul,
            zero,
            one,
        )?;
        // from_tables renumbers; compose the two maps.
        let renumber: Vec<usize> = {
            // Recover the renumbering by matching names is fragile; rebuild it
            // the same way from_tables does.
            let n = distinct.len();
            let mut order: Vec<usize> = vec![zero];
            if zero != one {
                order.push(one);
            }
            order.extend((0..n).filter(|&i| i != zero && i != one));
            let mut new_of_old = vec![0usize; n];
            for (new, &old) in order.iter().enumerate() {
                new_of_old[old] = new;
            }
            new_of_old
        };
        for r in reps.iter_mut() {
            *r = renumber[idx_of_rep(*r)];
        }
        Ok((q, reps))
    }

    /// Kernel of the localization map at the multiplicative set `w`:
    /// elements killed by some member of `w`.
    pub fn localization_kernel(&self, w: Mask) -> Mask {
        let mut m = 0;
        for r in 0..self.n {
            if mask_elements(w).any(|s| self.mul(s, r) == 0) {
                m |= 1 << r;
            }
        }
        m
    }

    /// Localize at a multiplicative set `w` (e.g. the complement of a prime
    /// or of a union of primes). For a finite ring this is the quotient by
    /// the kernel ideal, under which every image of `w` becomes a unit.
    pub fn localize(&self, w: Mask) -> Result<(FiniteRing, Vec<usize>)> {
        if !mask_contains(w, if self.is_zero_ring { 0 } else { 1 }) {
            return Err(Error::Precondition("multiplicative set must contain 1".into()));
        }
        let ker = self.localization_kernel(w);
        debug_assert!(self.is_ideal(ker));
        let (ring, proj) = self.quotient(ker)?;
        for s in mask_elements(w) {
            debug_assert!(ring.is_unit(proj[s]), "localized element must become a unit");
        }
        Ok((ring, proj))
    }

    /// The saturated multiplicative set avoiding exactly the given primes:
    /// the complement of their union.
    pub fn complement_of_primes(&self, primes: &[Mask]) -> Mask {
        let union = primes.iter().fold(0u64, |m, &p| m | p);
        self.full_mask() & !union
    }

    /// Direct product of two rings.
    pub fn product(a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing> {
        let n = a.n * b.n;
        if n > ORDER_CAP {
            return Err(Error::OrderCap { order: n, cap: ORDER_CAP });
        }
        let pair = |i: usize| (i / b.n, i % b.n);
        let idx = |x: usize, y: usize| x * b.n + y;
        let names: Vec<String> = (0..n)
            .map(|i| {
                let (x, y) = pair(i);
                format!("({},{})", a.elem_name(x), b.elem_name(y))
            })
            .collect();
        let add = move |i: usize, j: usize| {
            let (x1, y1) = pair(i);
            let (x2, y2) = pair(j);
            idx(a.add(x1, x2), b.add(y1, y2))
        };
        let mul = move |i: usize, j: usize| {
            let (x1, y1) = pair(i);
            let (x2, y2) = pair(j);
            idx(a.mul(x1, x2), b.mul(y1, y2))
        };
        FiniteRing::from_tables(
            format!("{} x {}", a.name, b.name),
            names,
            &add,
            &mul,
            idx(0, 0),
            idx(if a.is_zero_ring { 0 } else { 1 }, if b.is_zero_ring { 0 } else { 1 }),
        )
    }

    /// `Z/n`.
    pub fn zmod(n: usize) -> Result<FiniteRing> {
        if n == 0 {
            return Err(Error::Precondition("Z/0 is not finite".into()));
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        FiniteRing::from_tables(
            format!("Z/{n}"),
            names,
            &|a, b| (a + b) % n,
            &|a, b| (a * b) % n,
            0,
            1 % n,
        )
    }

    /// The field with `q` elements, `q` in {2, 3, 4}.
    pub fn galois_field(q: usize) -> Result<FiniteRing> {
        match q {
            2 | 3 => {
                let mut r = FiniteRing::zmod(q)?;
                r.name = format!("F{q}");
                Ok(r)
            }
            4 => {
                // F4 = F2[a]/(a^2 + a + 1); elements as 2-bit vectors c1*a + c0.
                let names = vec!["0".into(), "1".into(), "a".into(), "a+1".into()];
                let mul = |x: usize, y: usize| -> usize {
                    let (x1, x0) = (x >> 1, x & 1);
                    let (y1, y0) = (y >> 1, y & 1);
                    // (x1 a + x0)(y1 a + y0) with a^2 = a + 1.
                    let c_a2 = x1 * y1;
                    let c_a = (x1 * y0 + x0 * y1 + c_a2) % 2;
                    let c_1 = (x0 * y0 + c_a2) % 2;
                    (c_a << 1) | c_1
                };
                FiniteRing::from_tables("F4", names, &|a, b| a ^ b, &mul, 0, 1)
            }
            _ => Err(Error::Precondition(format!("unsupported field size {q}"))),
        }
    }
}

/// A unital homomorphism between finite rings, stored as a full image table.
#[derive(Debug, Clone)]
pub struct RingHom {
    pub source: RingRef,
    pub target: RingRef,
    map: Vec<u8>,
    pub name: String,
}

impl RingHom {
    pub fn new(name: impl Into<String>, source: RingRef, target: RingRef, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::Precondition("hom table has wrong length".into()));
        }
        let f = |a: usize| map[a];
        if f(0) != 0 {
            return Err(Error::Precondition("hom must send 0 to 0".into()));
        }
        if !source.is_zero_ring() && !target.is_zero_ring() && f(1) != 1 {
            return Err(Error::Precondition("hom must be unital".into()));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if f(source.add(a, b)) != target.add(f(a), f(b))
                    || f(source.mul(a, b)) != target.mul(f(a), f(b))
                {
                    return Err(Error::Precondition("hom must preserve + and *".into()));
                }
            }
        }
        Ok(RingHom {
            source,
            target,
            map: map.into_iter().map(|x| x as u8).collect(),
            name: name.into(),
        })
    }

    pub fn identity(ring: RingRef) -> Self {
        let map = (0..ring.order()).collect();
        RingHom::new(format!("id:{}", ring.name()), ring.clone(), ring, map).unwrap()
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a] as usize
    }

    /// Contraction of a target prime to the source: the preimage.
    pub fn contract(&self, target_prime: Mask) -> Mask {
        let mut m = 0;
        for a in 0..self.source.order() {
            if mask_contains(target_prime, self.apply(a)) {
                m |= 1 << a;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> FiniteRing {
        FiniteRing::zmod(n).unwrap()
    }

    #[test]
    fn spec_of_z12_is_two_and_three() {
        let r = zn(12);
        let two = r.principal_ideal(2);
        let three = r.principal_ideal(3);
        let mut expected = vec![two, three];
        expected.sort_unstable();
        assert_eq!(r.spec(), &expected[..]);
    }

    #[test]
    fn ann_of_three_in_z6_is_two() {
        let r = zn(6);
        assert_eq!(r.ann(3), r.principal_ideal(2));
    }

    #[test]
    fn z6_ideals_and_units() {
        let r = zn(6);
        assert_eq!(r.ideals().len(), 4);
        assert_eq!(r.units(), 1 << 1 | 1 << 5);
        assert_eq!(r.units(), r.regulars());
    }

    #[test]
    fn field_has_only_trivial_ideals() {
        let f4 = FiniteRing::galois_field(4).unwrap();
        assert_eq!(f4.ideals().len(), 2);
        assert_eq!(f4.spec(), &[1u64]);
        // a * (a+1) = 1 in F4.
        assert_eq!(f4.mul(2, 3), 1);
    }

    #[test]
    fn quotient_z12_by_four_is_z4_shape() {
        let r = zn(12);
        let (q, proj) = r.quotient(r.principal_ideal(4)).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(proj[0], 0);
        assert_eq!(proj[4], 0);
        assert_eq!(proj[1], 1);
        assert_eq!(proj[5], proj[1]);
        for a in 0..12 {
            for b in 0..12 {
                assert_eq!(proj[r.add(a, b)], q.add(proj[a], proj[b]));
                assert_eq!(proj[r.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }
    }

    #[test]
    fn localize_z6_at_complement_of_two() {
        let r = zn(6);
        let p = r.principal_ideal(2);
        let w = r.full_mask() & !p;
        let (l, proj) = r.localize(w).unwrap();
        // W = {1, 3, 5}; 3 kills both 2 and 4, so the kernel is (2) and the
        // localization is Z/6 / (2), of order 2, where 3 maps to 1.
        assert_eq!(l.order(), 2);
        assert_eq!(proj[3], 1);
        assert!(l.is_unit(proj[5]));
    }

    #[test]
    fn localize_z6_at_complement_of_three() {
        let r = zn(6);
        let p = r.principal_ideal(3);
        let w = r.full_mask() & !p;
        let (l, _) = r.localize(w).unwrap();
        assert_eq!(l.order(), 3);
    }

    #[test]
    fn minimal_generators_regenerate() {
        let r = zn(12);
        for &i in r.ideals() {
            let gens = r.minimal_generators(i);
            let mut m = 0u64;
            for g in gens {
                m |= 1 << g;
            }
            assert_eq!(r.ideal_generated(m), i);
        }
    }

    #[test]
    fn colon_matches_definition() {
        let r = zn(12);
        let i = r.principal_ideal(4);
        let c = r.colon(i, 2);
        for x in 0..12 {
            assert_eq!(mask_contains(c, x), mask_contains(i, r.mul(x, 2)));
        }
    }

    #[test]
    fn product_and_crt() {
        let a = zn(4);
        let b = zn(3);
        let p = FiniteRing::product(&a, &b).unwrap();
        assert_eq!(p.order(), 12);
        assert_eq!(p.spec().len(), 2);
    }

    #[test]
    fn hom_contract_of_prime_is_prime() {
        let z12: RingRef = Arc::new(zn(12));
        let z4: RingRef = Arc::new(zn(4));
        let map = (0..12).map(|a| a % 4).collect();
        let h = RingHom::new("pi", z12.clone(), z4.clone(), map).unwrap();
        for &q in z4.spec() {
            assert!(z12.is_prime_ideal(h.contract(q)));
        }
    }

    #[test]
    fn zero_ring_is_handled() {
        let z1 = zn(1);
        assert!(z1.is_zero_ring());
        assert!(z1.spec().is_empty());
    }
}
