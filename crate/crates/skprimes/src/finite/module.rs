//! Modules over finite rings.
//!
//! The workhorse representation is a presentation `R^s / N` with a full coset
//! labeling of the ambient free module. Derived constructions (tuples,
//! subquotients, localizations, scalar restriction) implement the same
//! element-level [`RMod`] interface, so the prime-set deciders can run on any
//! of them.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite::ring::{mask_elements, Mask, RingHom, RingRef};

/// Cap on the ambient free-module size `|R|^s`.
pub const FREE_CAP: usize = 1 << 20;

/// Element-level module operations. Elements are ids `0..size()`, with 0 the
/// zero element.
pub trait RMod: Send + Sync {
    fn ring(&self) -> &RingRef;
    fn size(&self) -> usize;
    fn add(&self, x: usize, y: usize) -> usize;
    fn smul(&self, r: usize, x: usize) -> usize;
    fn describe(&self, x: usize) -> String;
}

pub type ModRef = Arc<dyn RMod>;

pub fn neg_elem(m: &dyn RMod, x: usize) -> usize {
    m.smul(m.ring().neg(if m.ring().is_zero_ring() { 0 } else { 1 }), x)
}

pub fn is_zero_module(m: &dyn RMod) -> bool {
    m.size() == 1
}

/// Annihilator `{r | r x = 0}` as a ring mask.
pub fn ann_mask(m: &dyn RMod, x: usize) -> Mask {
    let ring = m.ring();
    let mut mask = 0;
    for r in 0..ring.order() {
        if m.smul(r, x) == 0 {
            mask |= 1 << r;
        }
    }
    mask
}

/// Annihilator of the whole module.
pub fn module_ann(m: &dyn RMod) -> Mask {
    (0..m.size()).fold(m.ring().full_mask(), |acc, x| acc & ann_mask(m, x))
}

/// The distinct annihilator ideals occurring in `m`.
pub fn distinct_anns(m: &dyn RMod) -> Vec<Mask> {
    let mut v: Vec<Mask> = (0..m.size()).map(|x| ann_mask(m, x)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Additive closure of a generating set, as a sorted element list.
pub fn additive_closure(m: &dyn RMod, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; m.size()];
    seen[0] = true;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = m.add(x, g);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    (0..m.size()).filter(|&x| seen[x]).collect()
}

/// The submodule generated by `gens`: additive closure of all scalar
/// multiples.
pub fn module_span(m: &dyn RMod, gens: &[usize]) -> Vec<usize> {
    let ring = m.ring().clone();
    let mut expanded = Vec::new();
    for &g in gens {
        for r in 0..ring.order() {
            let x = m.smul(r, g);
            if x != 0 && !expanded.contains(&x) {
                expanded.push(x);
            }
        }
    }
    additive_closure(m, &expanded)
}

/// Does some member of the multiplicative set `w` kill `x`?
pub fn vanishes_in_localization(m: &dyn RMod, x: usize, w: Mask) -> bool {
    mask_elements(w).any(|s| s < m.ring().order() && m.smul(s, x) == 0)
}

fn encode(digits: &[usize], radix: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * radix + d)
}

fn decode(mut idx: usize, radix: usize, len: usize) -> Vec<usize> {
    let mut v = vec![0usize; len];
    for d in v.iter_mut() {
        *d = idx % radix;
        idx /= radix;
    }
    v
}

/// `R^s / N` with a full coset labeling of the ambient `R^s`.
pub struct PresModule {
    ring: RingRef,
    s: usize,
    free_size: usize,
    /// free-module index -> element id
    label: Vec<u32>,
    /// element id -> canonical (minimal) free-module index
    reps: Vec<u32>,
    sub_size: usize,
}

impl PresModule {
    pub fn new(ring: RingRef, s: usize, cols: &[Vec<usize>]) -> Result<Self> {
        let n = ring.order();
        let free_size = n
            .checked_pow(s as u32)
            .filter(|&f| f <= FREE_CAP)
            .ok_or_else(|| Error::SearchSpace(format!("free module of rank {s} over order {n}")))?;
        for c in cols {
            if c.len() != s {
                return Err(Error::Precondition("presentation column has wrong length".into()));
            }
        }

        // Additive generators of the relation submodule: all scalar multiples
        // of the columns.
        let vec_add = |a: &[usize], b: &[usize]| -> Vec<usize> {
            a.iter().zip(b).map(|(&x, &y)| ring.add(x, y)).collect()
        };
        let mut gens: Vec<usize> = Vec::new();
        for c in cols {
            for r in 0..n {
                let scaled: Vec<usize> = c.iter().map(|&x| ring.mul(r, x)).collect();
                let idx = encode(&scaled, n);
                if idx != 0 && !gens.contains(&idx) {
                    gens.push(idx);
                }
            }
        }

        // Count the relation submodule (closure of the generators).
        let mut in_sub = vec![false; free_size];
        in_sub[0] = true;
        let mut stack = vec![0usize];
        let mut sub_size = 1usize;
        while let Some(x) = stack.pop() {
            let xv = decode(x, n, s);
            for &g in &gens {
                let y = encode(&vec_add(&xv, &decode(g, n, s)), n);
                if !in_sub[y] {
                    in_sub[y] = true;
                    sub_size += 1;
                    stack.push(y);
                }
            }
        }

        // Coset labeling via BFS along the same generators.
        let mut label = vec![u32::MAX; free_size];
        let mut reps = Vec::new();
        for start in 0..free_size {
            if label[start] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(start as u32);
            label[start] = id;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let xv = decode(x, n, s);
                for &g in &gens {
                    let y = encode(&vec_add(&xv, &decode(g, n, s)), n);
                    if label[y] == u32::MAX {
                        label[y] = id;
                        stack.push(y);
                    }
                }
            }
        }
        debug_assert_eq!(reps.len() * sub_size, free_size);
        Ok(PresModule { ring, s, free_size, label, reps, sub_size })
    }

    pub fn free(ring: RingRef, s: usize) -> Result<Self> {
        PresModule::new(ring, s, &[])
    }

    pub fn rank(&self) -> usize {
        self.s
    }

    pub fn relation_submodule_size(&self) -> usize {
        self.sub_size
    }

    /// Element id of the coset of a free-module vector.
    pub fn project(&self, v: &[usize]) -> usize {
        self.label[encode(v, self.ring.order())] as usize
    }

    /// Canonical representative vector of an element.
    pub fn rep_vector(&self, x: usize) -> Vec<usize> {
        decode(self.reps[x] as usize, self.ring.order(), self.s)
    }

    pub fn free_size(&self) -> usize {
        self.free_size
    }
}

impl RMod for PresModule {
    fn ring(&self) -> &RingRef {
        &self.ring
    }

    fn size(&self) -> usize {
        self.reps.len()
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let n = self.ring.order();
        let xv = decode(self.reps[x] as usize, n, self.s);
        let yv = decode(self.reps[y] as usize, n, self.s);
        let sum: Vec<usize> = xv.iter().zip(&yv).map(|(&a, &b)| self.ring.add(a, b)).collect();
        self.label[encode(&sum, n)] as usize
    }

    fn smul(&self, r: usize, x: usize) -> usize {
        let n = self.ring.order();
        let xv = decode(self.reps[x] as usize, n, self.s);
        let scaled: Vec<usize> = xv.iter().map(|&a| self.ring.mul(r, a)).collect();
        self.label[encode(&scaled, n)] as usize
    }

    fn describe(&self, x: usize) -> String {
        let v = self.rep_vector(x);
        let names: Vec<&str> = v.iter().map(|&a| self.ring.elem_name(a)).collect();
        format!("[{}]", names.join(","))
    }
}

/// `M^k` with componentwise operations.
pub struct TupleModule {
    base: ModRef,
    k: usize,
    size: usize,
}

impl TupleModule {
    pub fn new(base: ModRef, k: usize) -> Result<Self> {
        let size = base
            .size()
            .checked_pow(k as u32)
            .filter(|&f| f <= FREE_CAP)
            .ok_or_else(|| Error::SearchSpace(format!("tuple module of arity {k}")))?;
        Ok(TupleModule { base, k, size })
    }

    pub fn components(&self, x: usize) -> Vec<usize> {
        decode(x, self.base.size(), self.k)
    }

    pub fn from_components(&self, v: &[usize]) -> usize {
        encode(v, self.base.size())
    }

    pub fn base(&self) -> &ModRef {
        &self.base
    }

    pub fn arity(&self) -> usize {
        self.k
    }
}

impl RMod for TupleModule {
    fn ring(&self) -> &RingRef {
        self.base.ring()
    }

    fn size(&self) -> usize {
        self.size
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let (xs, ys) = (self.components(x), self.components(y));
        let v: Vec<usize> = xs.iter().zip(&ys).map(|(&a, &b)| self.base.add(a, b)).collect();
        self.from_components(&v)
    }

    fn smul(&self, r: usize, x: usize) -> usize {
        let xs = self.components(x);
        let v: Vec<usize> = xs.iter().map(|&a| self.base.smul(r, a)).collect();
        self.from_components(&v)
    }

    fn describe(&self, x: usize) -> String {
        let parts: Vec<String> = self.components(x).iter().map(|&c| self.base.describe(c)).collect();
        format!("({})", parts.join(","))
    }
}

/// A subquotient `U / W` of a parent module, with `W ⊆ U` submodules.
pub struct SubquotientModule {
    parent: ModRef,
    /// parent element id -> own id, defined on the members of `U`
    label: HashMap<usize, u32>,
    reps: Vec<usize>,
}

impl SubquotientModule {
    /// `members`: the submodule `U` as an element list (`None` = the whole
    /// parent); `w_gens`: module generators of `W`.
    pub fn new(parent: ModRef, members: Option<Vec<usize>>, w_gens: &[usize]) -> Result<Self> {
        let u: Vec<usize> = match members {
            Some(v) => v,
            None => (0..parent.size()).collect(),
        };
        // Additive generators of W: all scalar multiples of its generators.
        let ring = parent.ring().clone();
        let mut add_gens = Vec::new();
        for &g in w_gens {
            for r in 0..ring.order() {
                let x = parent.smul(r, g);
                if x != 0 && !add_gens.contains(&x) {
                    add_gens.push(x);
                }
            }
        }
        let mut label: HashMap<usize, u32> = HashMap::with_capacity(u.len());
        let mut reps = Vec::new();
        for &start in &u {
            if label.contains_key(&start) {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(start);
            label.insert(start, id);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &g in &add_gens {
                    let y = parent.add(x, g);
                    if let std::collections::hash_map::Entry::Vacant(e) = label.entry(y) {
                        e.insert(id);
                        stack.push(y);
                    }
                }
            }
        }
        debug_assert_eq!(label.get(&0), Some(&0), "zero must label the zero coset");
        Ok(SubquotientModule { parent, label, reps })
    }

    pub fn label_of_parent(&self, parent_id: usize) -> usize {
        self.label[&parent_id] as usize
    }

    pub fn rep(&self, x: usize) -> usize {
        self.reps[x]
    }

    pub fn parent(&self) -> &ModRef {
        &self.parent
    }
}

impl RMod for SubquotientModule {
    fn ring(&self) -> &RingRef {
        self.parent.ring()
    }

    fn size(&self) -> usize {
        self.reps.len()
    }

    fn add(&self, x: usize, y: usize) -> usize {
        self.label_of_parent(self.parent.add(self.reps[x], self.reps[y]))
    }

    fn smul(&self, r: usize, x: usize) -> usize {
        self.label_of_parent(self.parent.smul(r, self.reps[x]))
    }

    fn describe(&self, x: usize) -> String {
        format!("[{}]", self.parent.describe(self.reps[x]))
    }
}

/// An `S`-module viewed as an `R`-module along a ring map `R -> S`.
pub struct RestrictedModule {
    inner: ModRef,
    hom: RingHom,
}

impl RestrictedModule {
    pub fn new(inner: ModRef, hom: RingHom) -> Self {
        debug_assert!(*hom.target == **inner.ring());
        RestrictedModule { inner, hom }
    }
}

impl RMod for RestrictedModule {
    fn ring(&self) -> &RingRef {
        &self.hom.source
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn add(&self, x: usize, y: usize) -> usize {
        self.inner.add(x, y)
    }

    fn smul(&self, r: usize, x: usize) -> usize {
        self.inner.smul(self.hom.apply(r), x)
    }

    fn describe(&self, x: usize) -> String {
        self.inner.describe(x)
    }
}

/// `M_W` over the localized ring: the quotient of `M` by its `W`-torsion,
/// with scalars acting through a chosen section of `R -> R_W`.
pub struct LocalizedModule {
    subq: SubquotientModule,
    lring: RingRef,
    section: Vec<usize>,
}

impl LocalizedModule {
    /// `proj` is the element map `R -> R_W` produced by
    /// [`FiniteRing::localize`].
    pub fn new(parent: ModRef, w: Mask, lring: RingRef, proj: &[usize]) -> Result<Self> {
        let torsion: Vec<usize> = (0..parent.size())
            .filter(|&x| vanishes_in_localization(&*parent, x, w))
            .collect();
        let mut section = vec![usize::MAX; lring.order()];
        for (r, &img) in proj.iter().enumerate() {
            if section[img] == usize::MAX {
                section[img] = r;
            }
        }
        let subq = SubquotientModule::new(parent, None, &torsion)?;
        Ok(LocalizedModule { subq, lring, section })
    }
}

impl RMod for LocalizedModule {
    fn ring(&self) -> &RingRef {
        &self.lring
    }

    fn size(&self) -> usize {
        self.subq.size()
    }

    fn add(&self, x: usize, y: usize) -> usize {
        self.subq.add(x, y)
    }

    fn smul(&self, r: usize, x: usize) -> usize {
        let lift = self.section[r];
        self.subq
            .label_of_parent(self.subq.parent().smul(lift, self.subq.rep(x)))
    }

    fn describe(&self, x: usize) -> String {
        self.subq.describe(x)
    }
}

/// A finitely presented module, `coker` of an `s x t` matrix of ring
/// elements given by its columns.
#[derive(Clone)]
pub struct FinModule {
    pub ring: RingRef,
    pub gens: usize,
    pub cols: Vec<Vec<usize>>,
    pres: Arc<PresModule>,
}

impl FinModule {
    pub fn new(ring: RingRef, gens: usize, cols: Vec<Vec<usize>>) -> Result<Self> {
        let pres = Arc::new(PresModule::new(ring.clone(), gens, &cols)?);
        Ok(FinModule { ring, gens, cols, pres })
    }

    pub fn zero(ring: RingRef) -> Result<Self> {
        FinModule::new(ring, 0, Vec::new())
    }

    pub fn free(ring: RingRef, rank: usize) -> Result<Self> {
        FinModule::new(ring, rank, Vec::new())
    }

    /// `R / I` for an ideal mask, presented by a small generating set of `I`.
    pub fn cyclic_quotient(ring: RingRef, ideal: Mask) -> Result<Self> {
        let gens = ring.minimal_generators(ideal);
        let cols = gens.into_iter().map(|g| vec![g]).collect();
        FinModule::new(ring, 1, cols)
    }

    pub fn explicit(&self) -> ModRef {
        self.pres.clone()
    }

    pub fn pres(&self) -> &PresModule {
        &self.pres
    }

    pub fn size(&self) -> usize {
        self.pres.size()
    }

    fn check_same_ring(&self, other: &FinModule) -> Result<()> {
        if *self.ring != *other.ring {
            return Err(Error::BaseRingMismatch(
                self.ring.name().into(),
                other.ring.name().into(),
            ));
        }
        Ok(())
    }

    /// `M ⊗ N` via the block presentation of the two presentations.
    pub fn tensor(&self, other: &FinModule) -> Result<FinModule> {
        self.check_same_ring(other)?;
        let (s1, s2) = (self.gens, other.gens);
        let s = s1 * s2;
        let pos = |i: usize, j: usize| i * s2 + j;
        let mut cols = Vec::new();
        for a in &self.cols {
            for j in 0..s2 {
                let mut c = vec![0usize; s];
                for i in 0..s1 {
                    c[pos(i, j)] = a[i];
                }
                cols.push(c);
            }
        }
        for b in &other.cols {
            for i in 0..s1 {
                let mut c = vec![0usize; s];
                for j in 0..s2 {
                    c[pos(i, j)] = b[j];
                }
                cols.push(c);
            }
        }
        FinModule::new(self.ring.clone(), s, cols)
    }

    /// Base change of the presentation along a ring map.
    pub fn base_change(&self, hom: &RingHom) -> Result<FinModule> {
        debug_assert!(*hom.source == *self.ring);
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|&a| hom.apply(a)).collect())
            .collect();
        FinModule::new(hom.target.clone(), self.gens, cols)
    }

    /// The pure tensor `l ⊗ m` as an element of the tensor module.
    pub fn pure_tensor(
        &self,
        other: &FinModule,
        tensor: &FinModule,
        l: usize,
        m: usize,
    ) -> usize {
        let lv = self.pres.rep_vector(l);
        let mv = other.pres.rep_vector(m);
        let mut v = vec![0usize; self.gens * other.gens];
        for (i, &li) in lv.iter().enumerate() {
            for (j, &mj) in mv.iter().enumerate() {
                v[i * other.gens + j] = self.ring.mul(li, mj);
            }
        }
        tensor.pres.project(&v)
    }
}

/// `Hom(L, M)`: tuples of images of `L`'s generators that satisfy its
/// relations, as a submodule of `M^s`.
pub struct HomModule {
    pub tuples: Arc<TupleModule>,
    pub module: SubquotientModule,
}

pub fn hom_module(l: &FinModule, m: ModRef) -> Result<HomModule> {
    if **m.ring() != *l.ring {
        return Err(Error::BaseRingMismatch(l.ring.name().into(), m.ring().name().into()));
    }
    let tuples = Arc::new(TupleModule::new(m.clone(), l.gens)?);
    let satisfies = |x: usize| -> bool {
        let images = tuples.components(x);
        l.cols.iter().all(|c| {
            let mut acc = 0usize;
            for (i, &a) in c.iter().enumerate() {
                acc = m.add(acc, m.smul(a, images[i]));
            }
            acc == 0
        })
    };
    let members: Vec<usize> = (0..tuples.size()).filter(|&x| satisfies(x)).collect();
    let module = SubquotientModule::new(tuples.clone(), Some(members), &[])?;
    Ok(HomModule { tuples, module })
}

/// `Tor_1(L, M)` computed from a two-step resolution of `L`: the kernel of
/// `A ⊗ M : M^t -> M^s` modulo the image of the syzygies of `A`.
pub struct TorModule {
    pub module: SubquotientModule,
}

pub fn tor1(l: &FinModule, m: ModRef) -> Result<TorModule> {
    let ring = m.ring().clone();
    if *ring != *l.ring {
        return Err(Error::BaseRingMismatch(l.ring.name().into(), ring.name().into()));
    }
    let t = l.cols.len();
    let n = ring.order();
    let tuples = Arc::new(TupleModule::new(m.clone(), t)?);

    // Image of a tuple under A ⊗ M, as a vector in M^s.
    let image = |x: usize| -> Vec<usize> {
        let comps = tuples.components(x);
        let mut out = vec![0usize; l.gens];
        for (j, c) in l.cols.iter().enumerate() {
            for (i, &a) in c.iter().enumerate() {
                out[i] = m.add(out[i], m.smul(a, comps[j]));
            }
        }
        out
    };
    let kernel: Vec<usize> = (0..tuples.size())
        .filter(|&x| image(x).iter().all(|&v| v == 0))
        .collect();

    // First syzygies of A in R^t.
    let free_t = n
        .checked_pow(t as u32)
        .filter(|&f| f <= FREE_CAP)
        .ok_or_else(|| Error::SearchSpace("syzygy enumeration".into()))?;
    let mut syz = Vec::new();
    for idx in 0..free_t {
        let v = decode(idx, n, t);
        let mut out = vec![0usize; l.gens];
        let mut zero = true;
        for (j, c) in l.cols.iter().enumerate() {
            for (i, &a) in c.iter().enumerate() {
                out[i] = ring.add(out[i], ring.mul(a, v[j]));
            }
        }
        for &o in &out {
            if o != 0 {
                zero = false;
            }
        }
        if zero {
            syz.push(v);
        }
    }

    // Image of the syzygies tensored with M.
    let mut w_gens = Vec::new();
    for v in &syz {
        for me in 0..m.size() {
            let tup: Vec<usize> = v.iter().map(|&r| m.smul(r, me)).collect();
            let id = tuples.from_components(&tup);
            if id != 0 && !w_gens.contains(&id) {
                w_gens.push(id);
            }
        }
    }
    let module = SubquotientModule::new(tuples, Some(kernel), &w_gens)?;
    Ok(TorModule { module })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::ring::FiniteRing;

    fn ring(n: usize) -> RingRef {
        Arc::new(FiniteRing::zmod(n).unwrap())
    }

    #[test]
    fn cyclic_quotient_sizes() {
        let r = ring(4);
        let m = FinModule::cyclic_quotient(r.clone(), r.principal_ideal(2)).unwrap();
        assert_eq!(m.size(), 2);
        let free = FinModule::free(r, 2).unwrap();
        assert_eq!(free.size(), 16);
    }

    #[test]
    fn coprime_cyclics_tensor_to_zero() {
        let r = ring(6);
        let a = FinModule::cyclic_quotient(r.clone(), r.principal_ideal(2)).unwrap();
        let b = FinModule::cyclic_quotient(r.clone(), r.principal_ideal(3)).unwrap();
        assert_eq!(a.tensor(&b).unwrap().size(), 1);
        assert_eq!(a.tensor(&a).unwrap().size(), a.size());
    }

    #[test]
    fn tor_of_z4_halves_is_order_two() {
        let r = ring(4);
        let l = FinModule::cyclic_quotient(r.clone(), r.principal_ideal(2)).unwrap();
        let t = tor1(&l, l.explicit()).unwrap();
        assert_eq!(t.module.size(), 2);
    }

    #[test]
    fn tor_with_free_vanishes() {
        let r = ring(6);
        let l = FinModule::cyclic_quotient(r.clone(), r.principal_ideal(2)).unwrap();
        let free = FinModule::free(r, 1).unwrap();
        assert_eq!(tor1(&l, free.explicit()).unwrap().module.size(), 1);
    }

    #[test]
    fn hom_from_ring_recovers_module() {
        let r = ring(4);
        let free = FinModule::free(r.clone(), 1).unwrap();
        let m = FinModule::cyclic_quotient(r.clone(), r.principal_ideal(2)).unwrap();
        let h = hom_module(&free, m.explicit()).unwrap();
        assert_eq!(h.module.size(), m.size());
    }

    #[test]
    fn hom_respects_annihilators() {
        // Hom(Z/4 / (2), Z/4) = elements killed by 2 = {0, 2}: order 2.
        let r = ring(4);
        let l = FinModule::cyclic_quotient(r.clone(), r.principal_ideal(2)).unwrap();
        let free = FinModule::free(r, 1).unwrap();
        let h = hom_module(&l, free.explicit()).unwrap();
        assert_eq!(h.module.size(), 2);
    }

    #[test]
    fn ann_of_generator_matches_presentation() {
        let r = ring(12);
        let m = FinModule::cyclic_quotient(r.clone(), r.principal_ideal(4)).unwrap();
        let e = m.explicit();
        let gen = m.pres().project(&[1]);
        assert_eq!(ann_mask(&*e, gen), r.principal_ideal(4));
    }

    #[test]
    fn subquotient_of_z12() {
        let r = ring(12);
        let free = FinModule::free(r.clone(), 1).unwrap();
        let e = free.explicit();
        // Submodule (4) of Z/12 has order 3; quotient by it order 4.
        let members = module_span(&*e, &[4]);
        assert_eq!(members.len(), 3);
        let sub = SubquotientModule::new(e.clone(), Some(members), &[]).unwrap();
        assert_eq!(sub.size(), 3);
        let quot = SubquotientModule::new(e, None, &[4]).unwrap();
        assert_eq!(quot.size(), 4);
        assert_eq!(quot.smul(2, quot.label_of_parent(2)), quot.label_of_parent(4));
    }

    #[test]
    fn localized_module_kills_torsion() {
        let r = ring(6);
        let p = r.principal_ideal(2);
        let w = r.full_mask() & !p;
        let (lr, proj) = r.localize(w).unwrap();
        let free = FinModule::free(r.clone(), 1).unwrap();
        let mp = LocalizedModule::new(free.explicit(), w, Arc::new(lr), &proj).unwrap();
        // Z/6 localized away from (3): only the 2-part survives.
        assert_eq!(mp.size(), 2);
    }

    #[test]
    fn restricted_scalars_act_through_the_map() {
        let z12 = ring(12);
        let z4 = ring(4);
        let map = (0..12).map(|a| a % 4).collect();
        let h = RingHom::new("pi", z12, z4.clone(), map).unwrap();
        let m = FinModule::free(z4, 1).unwrap();
        let res = RestrictedModule::new(m.explicit(), h);
        assert_eq!(res.smul(5, 1), 1);
        assert_eq!(res.smul(6, 1), 2);
    }

    #[test]
    fn distinct_anns_of_z12() {
        let r = ring(12);
        let free = FinModule::free(r.clone(), 1).unwrap();
        // One annihilator per divisor of 12.
        assert_eq!(distinct_anns(&*free.explicit()).len(), 6);
    }
}
