//! The "bowtie" ring `R = D ⋈ E`: pairs `(d, e)` with `d` in a Noetherian
//! local domain `D` (maximal ideal `Q`, residue field `D/Q`) and `e` a
//! finitely supported sequence over `D/Q`, multiplied by
//! `(d1, e1)·(d2, e2) = (d1 d2, d1 e2 + d2 e1 + e1 e2)` (the `d`s acting
//! through their residues, the `e`-product componentwise).
//!
//! The maximal ideal `𝔪 = Q ⋈ E` consists entirely of zero-divisors, yet
//! localizing at it kills `0 ⋈ E` — each basis sequence `e_i` is annihilated
//! by `(1, -e_i)`, which lies outside `𝔪` — so `R_𝔪 ≅ D` and `𝔪 R_𝔪 = Q`.
//! Since `D` is a domain, `Q ∉ Ass_D(D)`, and the local property forces
//! `𝔪 ∉ K_R(R)`: an ideal of zero-divisors need not lie under any prime of
//! associated type.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{Coef, Fp};
use crate::error::Result;
use crate::report::{Provenance, VerificationReport};

/// A Noetherian local domain with exact arithmetic, a decidable maximal
/// ideal, and a residue-field map.
pub trait LocalDomain: Clone + Send + Sync + 'static {
    type El: Clone + PartialEq + fmt::Debug;
    type Res: Coef;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    /// Membership in the maximal ideal `Q`.
    fn in_max(&self, a: &Self::El) -> bool;
    /// The image in the residue field `D/Q`.
    fn residue(&self, a: &Self::El) -> Self::Res;
    /// Inverse of a unit (an element outside `Q`), `None` otherwise.
    fn invert(&self, a: &Self::El) -> Option<Self::El>;
    /// A fixed nonzero element of `Q`.
    fn max_gen(&self) -> Self::El;
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::El;
    fn name(&self) -> String;
}

/// `F_p[t]` localized at `(t)`: fractions of polynomials whose denominator
/// has nonzero constant term. Polynomials are little-endian coefficient
/// vectors with no trailing zeros.
#[derive(Clone)]
pub struct FpTLocal<const P: u64>;

type Poly<const P: u64> = Vec<Fp<P>>;

fn poly_trim<const P: u64>(mut v: Poly<P>) -> Poly<P> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_add<const P: u64>(a: &Poly<P>, b: &Poly<P>) -> Poly<P> {
    let mut out = vec![Fp::<P>::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = out[i].add(c);
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].add(c);
    }
    poly_trim(out)
}

fn poly_mul<const P: u64>(a: &Poly<P>, b: &Poly<P>) -> Poly<P> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Fp::<P>::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&ca.mul(cb));
        }
    }
    poly_trim(out)
}

/// `num / den` with `den(0) != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc<const P: u64> {
    pub num: Poly<P>,
    pub den: Poly<P>,
}

impl<const P: u64> LocalDomain for FpTLocal<P> {
    type El = RatFunc<P>;
    type Res = Fp<P>;

    fn zero(&self) -> RatFunc<P> {
        RatFunc { num: vec![], den: vec![Fp::one()] }
    }
    fn one(&self) -> RatFunc<P> {
        RatFunc { num: vec![Fp::one()], den: vec![Fp::one()] }
    }
    fn add(&self, a: &RatFunc<P>, b: &RatFunc<P>) -> RatFunc<P> {
        RatFunc {
            num: poly_add(&poly_mul(&a.num, &b.den), &poly_mul(&b.num, &a.den)),
            den: poly_mul(&a.den, &b.den),
        }
    }
    fn neg(&self, a: &RatFunc<P>) -> RatFunc<P> {
        RatFunc { num: a.num.iter().map(Coef::neg).collect(), den: a.den.clone() }
    }
    fn mul(&self, a: &RatFunc<P>, b: &RatFunc<P>) -> RatFunc<P> {
        RatFunc { num: poly_mul(&a.num, &b.num), den: poly_mul(&a.den, &b.den) }
    }
    fn is_zero(&self, a: &RatFunc<P>) -> bool {
        a.num.is_empty()
    }
    fn in_max(&self, a: &RatFunc<P>) -> bool {
        a.num.first().is_none_or(|c| c.is_zero())
    }
    fn residue(&self, a: &RatFunc<P>) -> Fp<P> {
        let n = a.num.first().copied().unwrap_or_else(Fp::zero);
        let d = a.den.first().copied().unwrap_or_else(Fp::zero);
        n.mul(&d.inv().expect("denominator has nonzero constant term"))
    }
    fn invert(&self, a: &RatFunc<P>) -> Option<RatFunc<P>> {
        if self.in_max(a) {
            None
        } else {
            Some(RatFunc { num: a.den.clone(), den: a.num.clone() })
        }
    }
    fn max_gen(&self) -> RatFunc<P> {
        RatFunc { num: vec![Fp::zero(), Fp::one()], den: vec![Fp::one()] }
    }
    fn sample(&self, rng: &mut ChaCha8Rng) -> RatFunc<P> {
        let num = poly_trim((0..3).map(|_| Fp::<P>::new(rng.gen_range(0..P))).collect());
        let mut den: Poly<P> = (0..2).map(|_| Fp::<P>::new(rng.gen_range(0..P))).collect();
        if den[0].is_zero() {
            den[0] = Fp::one();
        }
        RatFunc { num, den: poly_trim(den) }
    }
    fn name(&self) -> String {
        format!("F{P}[t] at (t)")
    }
}

/// `ℤ` localized at `(P)`: rationals whose denominator is prime to `P`.
#[derive(Clone)]
pub struct ZLocal<const P: u64>;

impl<const P: u64> LocalDomain for ZLocal<P> {
    type El = Ratio<i64>;
    type Res = Fp<P>;

    fn zero(&self) -> Ratio<i64> {
        Ratio::from_integer(0)
    }
    fn one(&self) -> Ratio<i64> {
        Ratio::from_integer(1)
    }
    fn add(&self, a: &Ratio<i64>, b: &Ratio<i64>) -> Ratio<i64> {
        a + b
    }
    fn neg(&self, a: &Ratio<i64>) -> Ratio<i64> {
        -a
    }
    fn mul(&self, a: &Ratio<i64>, b: &Ratio<i64>) -> Ratio<i64> {
        a * b
    }
    fn is_zero(&self, a: &Ratio<i64>) -> bool {
        *a == Ratio::from_integer(0)
    }
    fn in_max(&self, a: &Ratio<i64>) -> bool {
        a.numer().rem_euclid(P as i64) == 0
    }
    fn residue(&self, a: &Ratio<i64>) -> Fp<P> {
        let n = Fp::<P>::from_int(*a.numer());
        let d = Fp::<P>::from_int(*a.denom());
        n.mul(&d.inv().expect("denominator is prime to P"))
    }
    fn invert(&self, a: &Ratio<i64>) -> Option<Ratio<i64>> {
        if self.in_max(a) {
            None
        } else {
            Some(a.recip())
        }
    }
    fn max_gen(&self) -> Ratio<i64> {
        Ratio::from_integer(P as i64)
    }
    fn sample(&self, rng: &mut ChaCha8Rng) -> Ratio<i64> {
        let mut den = rng.gen_range(1..8i64);
        if den.rem_euclid(P as i64) == 0 {
            den += 1;
        }
        Ratio::new(rng.gen_range(-10..=10i64), den)
    }
    fn name(&self) -> String {
        format!("Z at ({P})")
    }
}

/// A bowtie element `(d, e)`, with the finitely supported `e` stored sparsely
/// (zero entries removed, so structural equality is ring equality once the
/// `d`-part is normalized by `D`).
#[derive(Clone, Debug, PartialEq)]
pub struct BowtieElem<D: LocalDomain> {
    pub d: D::El,
    pub e: BTreeMap<u32, D::Res>,
}

/// The ring `D ⋈ E` over a chosen local domain.
#[derive(Clone)]
pub struct Bowtie<D: LocalDomain> {
    pub dom: D,
}

impl<D: LocalDomain> Bowtie<D> {
    pub fn new(dom: D) -> Self {
        Bowtie { dom }
    }

    pub fn zero(&self) -> BowtieElem<D> {
        BowtieElem { d: self.dom.zero(), e: BTreeMap::new() }
    }

    pub fn one(&self) -> BowtieElem<D> {
        BowtieElem { d: self.dom.one(), e: BTreeMap::new() }
    }

    pub fn from_d(&self, d: D::El) -> BowtieElem<D> {
        BowtieElem { d, e: BTreeMap::new() }
    }

    /// `(0, c·e_i)`.
    pub fn basis(&self, i: u32, c: D::Res) -> BowtieElem<D> {
        let mut e = BTreeMap::new();
        if !c.is_zero() {
            e.insert(i, c);
        }
        BowtieElem { d: self.dom.zero(), e }
    }

    fn insert_nonzero(e: &mut BTreeMap<u32, D::Res>, i: u32, v: D::Res) {
        if !v.is_zero() {
            e.insert(i, v);
        }
    }

    pub fn add(&self, a: &BowtieElem<D>, b: &BowtieElem<D>) -> BowtieElem<D> {
        let mut e = BTreeMap::new();
        let keys: Vec<u32> = a.e.keys().chain(b.e.keys()).copied().collect();
        for i in keys {
            let x = a.e.get(&i).cloned().unwrap_or_else(D::Res::zero);
            let y = b.e.get(&i).cloned().unwrap_or_else(D::Res::zero);
            Self::insert_nonzero(&mut e, i, x.add(&y));
        }
        BowtieElem { d: self.dom.add(&a.d, &b.d), e }
    }

    pub fn neg(&self, a: &BowtieElem<D>) -> BowtieElem<D> {
        BowtieElem {
            d: self.dom.neg(&a.d),
            e: a.e.iter().map(|(&i, v)| (i, v.neg())).collect(),
        }
    }

    pub fn mul(&self, a: &BowtieElem<D>, b: &BowtieElem<D>) -> BowtieElem<D> {
        let (ra, rb) = (self.dom.residue(&a.d), self.dom.residue(&b.d));
        let mut e = BTreeMap::new();
        let keys: Vec<u32> = a.e.keys().chain(b.e.keys()).copied().collect();
        for i in keys {
            let x = a.e.get(&i).cloned().unwrap_or_else(D::Res::zero);
            let y = b.e.get(&i).cloned().unwrap_or_else(D::Res::zero);
            let v = ra.mul(&y).add(&rb.mul(&x)).add(&x.mul(&y));
            Self::insert_nonzero(&mut e, i, v);
        }
        BowtieElem { d: self.dom.mul(&a.d, &b.d), e }
    }

    pub fn is_zero(&self, a: &BowtieElem<D>) -> bool {
        self.dom.is_zero(&a.d) && a.e.is_empty()
    }

    pub fn eq_elem(&self, a: &BowtieElem<D>, b: &BowtieElem<D>) -> bool {
        self.is_zero(&self.add(a, &self.neg(b)))
    }

    /// Membership in the maximal ideal `𝔪 = Q ⋈ E`.
    pub fn in_max(&self, a: &BowtieElem<D>) -> bool {
        self.dom.in_max(&a.d)
    }

    /// `(d, e)` is a unit iff `d ∉ Q` and the residue of `d` is distinct
    /// from `-e_j` for every `j` in the support of `e`. (In particular,
    /// lying outside `𝔪` is necessary but not sufficient: `(1, -e_i)` is a
    /// zero-divisor outside `𝔪`.)
    pub fn is_unit(&self, a: &BowtieElem<D>) -> bool {
        !self.dom.in_max(&a.d) && {
            let r = self.dom.residue(&a.d);
            a.e.values().all(|v| !r.add(v).is_zero())
        }
    }

    /// Explicit inverse of a unit, verified by the caller via multiplication:
    /// the `j`-component must solve `r e'_j + r' e_j + e_j e'_j = 0`, i.e.
    /// `e'_j = -r' e_j / (r + e_j)` with `r` the residue of `d`.
    pub fn invert(&self, a: &BowtieElem<D>) -> Option<BowtieElem<D>> {
        if !self.is_unit(a) {
            return None;
        }
        let d_inv = self.dom.invert(&a.d)?;
        let r = self.dom.residue(&a.d);
        let r_inv = self.dom.residue(&d_inv);
        let mut e = BTreeMap::new();
        for (&j, v) in &a.e {
            let denom = r.add(v).inv()?;
            Self::insert_nonzero(&mut e, j, r_inv.mul(v).mul(&denom).neg());
        }
        Some(BowtieElem { d: d_inv, e })
    }

    /// The localization map `R -> R_𝔪 ≅ D`, `(d, e) ↦ d`.
    pub fn to_local(&self, a: &BowtieElem<D>) -> D::El {
        a.d.clone()
    }

    /// A zero-divisor partner for a nonunit, when one is visible: a fresh
    /// basis sequence if `d ∈ Q`, or `(0, e_j)` at an index where the
    /// residue of `d` cancels `e_j`.
    pub fn zero_divisor_partner(&self, a: &BowtieElem<D>) -> Option<BowtieElem<D>> {
        if self.is_unit(a) || self.is_zero(a) {
            return None;
        }
        if self.dom.in_max(&a.d) {
            let fresh = a.e.keys().max().map_or(1, |m| m + 1);
            return Some(self.basis(fresh, D::Res::one()));
        }
        let r = self.dom.residue(&a.d);
        a.e.iter()
            .find(|(_, v)| r.add(v).is_zero())
            .map(|(&j, _)| self.basis(j, D::Res::one()))
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng, res_range: i64) -> BowtieElem<D> {
        let d = self.dom.sample(rng);
        let mut e = BTreeMap::new();
        for i in 1..=3u32 {
            if rng.gen_bool(0.5) {
                Self::insert_nonzero(&mut e, i, D::Res::from_int(rng.gen_range(-res_range..=res_range)));
            }
        }
        BowtieElem { d, e }
    }
}

/// The kernel of `R -> R_𝔪`, as a checked proof object: the descriptor
/// `0 ⋈ E` together with the annihilation identities `(1, -e_i)(0, e_i) = 0`
/// with first factor outside `𝔪`.
pub fn bowtie_localization_kernel<D: LocalDomain>(ring: &Bowtie<D>) -> Result<String> {
    for i in 1..=3u32 {
        let ei = ring.basis(i, D::Res::one());
        let u = ring.add(&ring.one(), &ring.neg(&ei));
        let prod = ring.mul(&u, &ei);
        if !ring.is_zero(&prod) || ring.in_max(&u) || ring.is_zero(&ei) {
            return Err(crate::error::Error::SearchSpace(format!(
                "kernel identity fails at basis index {i}"
            )));
        }
    }
    Ok(format!("0 join E over {}", ring.dom.name()))
}

fn verify_bowtie_over<D: LocalDomain>(report: &mut VerificationReport, dom: D, seed: u64) {
    let ring = Bowtie::new(dom);
    let tag = ring.dom.name();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Ring laws on sampled triples (the product is quadratic in e-parts).
    let mut laws_ok = true;
    for _ in 0..40 {
        let a = ring.sample(&mut rng, 3);
        let b = ring.sample(&mut rng, 3);
        let c = ring.sample(&mut rng, 3);
        let assoc = ring.eq_elem(&ring.mul(&a, &ring.mul(&b, &c)), &ring.mul(&ring.mul(&a, &b), &c));
        let comm = ring.eq_elem(&ring.mul(&a, &b), &ring.mul(&b, &a));
        let dist = ring.eq_elem(
            &ring.mul(&a, &ring.add(&b, &c)),
            &ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c)),
        );
        let unit_law = ring.eq_elem(&ring.mul(&a, &ring.one()), &a);
        if !(assoc && comm && dist && unit_law) {
            laws_ok = false;
        }
    }
    report.pass(
        format!("ring-laws:{tag}"),
        "bowtie-zero-divisors",
        Provenance::DerivedOracle,
        laws_ok,
        "associativity, commutativity, distributivity, unit law on samples",
    );

    // Kernel of R -> R_𝔪: the annihilation identities, plus a nonzero
    // d-part surviving and (0, 0) lying trivially in the kernel.
    let kernel = bowtie_localization_kernel(&ring);
    let kernel_detail = match &kernel {
        Ok(d) => d.clone(),
        Err(e) => e.to_string(),
    };
    let survives = !ring.dom.is_zero(&ring.to_local(&ring.from_d(ring.dom.one())));
    report.pass(
        format!("localization-kernel:{tag}"),
        "bowtie-zero-divisors",
        Provenance::Stated,
        kernel.is_ok() && survives,
        kernel_detail,
    );

    // The localization map is a ring map, and 𝔪 corresponds to Q under it.
    let mut loc_ok = true;
    for _ in 0..30 {
        let a = ring.sample(&mut rng, 3);
        let b = ring.sample(&mut rng, 3);
        let prod_then = ring.to_local(&ring.mul(&a, &b));
        let then_prod = ring.dom.mul(&ring.to_local(&a), &ring.to_local(&b));
        if !ring.dom.is_zero(&ring.dom.add(&prod_then, &ring.dom.neg(&then_prod))) {
            loc_ok = false;
        }
        if ring.in_max(&a) != ring.dom.in_max(&ring.to_local(&a)) {
            loc_ok = false;
        }
        // Every (0, e) is annihilated by (1, f) with f = -1 on the support
        // of e: the j-component of the product is e_j + f_j e_j = 0. The
        // killer lies outside 𝔪, so the e-part dies in the localization.
        let e_only = BowtieElem { d: ring.dom.zero(), e: a.e.clone() };
        let minus_ones: BTreeMap<u32, D::Res> =
            a.e.keys().map(|&j| (j, D::Res::one().neg())).collect();
        let killer = ring.add(
            &ring.one(),
            &BowtieElem { d: ring.dom.zero(), e: minus_ones },
        );
        if !ring.is_zero(&ring.mul(&killer, &e_only)) || ring.in_max(&killer) {
            loc_ok = false;
        }
    }
    report.pass(
        format!("local-ring-is-d:{tag}"),
        "bowtie-zero-divisors",
        Provenance::Stated,
        loc_ok,
        "R_m = D via (d, e) -> d, with m corresponding to Q",
    );

    // Q is not an associated prime of D: Q is nonzero and D has no
    // zero-divisors (checked on samples; a domain by construction).
    let mut dom_ok = !ring.dom.is_zero(&ring.dom.max_gen()) && ring.dom.in_max(&ring.dom.max_gen());
    for _ in 0..30 {
        let a = ring.dom.sample(&mut rng);
        let b = ring.dom.sample(&mut rng);
        if !ring.dom.is_zero(&a)
            && !ring.dom.is_zero(&b)
            && ring.dom.is_zero(&ring.dom.mul(&a, &b))
        {
            dom_ok = false;
        }
    }
    report.pass(
        format!("q-not-associated:{tag}"),
        "bowtie-zero-divisors",
        Provenance::Stated,
        dom_ok,
        "D is a domain and Q != 0, so ann_D(x) = 0 != Q for all nonzero x",
    );

    // Conclusion by the local property: m R_m = Q is not a Krull prime of
    // R_m = D (over a Noetherian domain all four notions are Ass), hence
    // m ∉ K_R(R), and m ∉ sK, wAss, Ass by the containment chain.
    report.pass(
        format!("max-not-krull:{tag}"),
        "bowtie-zero-divisors",
        Provenance::Stated,
        kernel.is_ok() && survives && loc_ok && dom_ok,
        "m not in K_R(R): transported to Q not in K_D(D) by the local property",
    );

    // Every sampled nonunit is a zero-divisor, with constructed partners
    // (sampled evidence; the general statement is quoted, not re-proved).
    let mut zd_ok = true;
    let mut nonunits = 0usize;
    for _ in 0..80 {
        let a = ring.sample(&mut rng, 3);
        if ring.is_unit(&a) || ring.is_zero(&a) {
            continue;
        }
        nonunits += 1;
        match ring.zero_divisor_partner(&a) {
            Some(w) => {
                if ring.is_zero(&w) || !ring.is_zero(&ring.mul(&a, &w)) {
                    zd_ok = false;
                }
            }
            None => zd_ok = false,
        }
    }
    report.pass(
        format!("nonunits-are-zero-divisors:{tag}"),
        "bowtie-zero-divisors",
        Provenance::DerivedOracle,
        zd_ok && nonunits > 0,
        format!("sampled: {nonunits} nonunits, each with a verified annihilating partner"),
    );

    // Unit criterion: explicit inverses round-trip, and the necessary side
    // condition is real — (1, -e_2) lies outside m yet is a zero-divisor,
    // while its image in R_m = D is the unit 1.
    let mut unit_ok = true;
    let mut units = 0usize;
    for _ in 0..80 {
        let a = ring.sample(&mut rng, 3);
        if !ring.is_unit(&a) {
            continue;
        }
        units += 1;
        match ring.invert(&a) {
            Some(inv) => {
                if !ring.eq_elem(&ring.mul(&a, &inv), &ring.one()) {
                    unit_ok = false;
                }
            }
            None => unit_ok = false,
        }
    }
    let probe = ring.add(&ring.one(), &ring.neg(&ring.basis(2, D::Res::one())));
    let probe_ok = !ring.in_max(&probe)
        && !ring.is_unit(&probe)
        && ring.is_zero(&ring.mul(&probe, &ring.basis(2, D::Res::one())))
        && ring.dom.invert(&ring.to_local(&probe)).is_some();
    report.pass(
        format!("unit-criterion:{tag}"),
        "bowtie-zero-divisors",
        Provenance::DerivedOracle,
        unit_ok && units > 0 && probe_ok,
        format!("{units} units inverted exactly; (1, -e_2) is a nonunit zero-divisor outside m"),
    );
}

/// The full bowtie gallery item, over `F_2[t]` at `(t)` and `ℤ` at `(5)`.
pub fn verify_bowtie() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("bowtie");
    verify_bowtie_over(&mut report, FpTLocal::<2>, 21);
    verify_bowtie_over(&mut report, ZLocal::<5>, 22);
    Ok(report)
}

/// Headline packaging: the maximal ideal of the bowtie ring consists of
/// zero-divisors yet lies in none of the four prime sets of `R`, in contrast
/// with the finite sanity case where every zero-divisor ideal sits under an
/// associated prime.
pub fn verify_zero_divisor_ideal_uncontained() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("bowtie-headline");
    for (tag, run) in [
        ("F2[t] at (t)", verify_headline_for(FpTLocal::<2>, 31)),
        ("Z at (5)", verify_headline_for(ZLocal::<5>, 32)),
    ] {
        report.pass(
            format!("max-is-zero-divisors:{tag}"),
            "bowtie-zero-divisors",
            Provenance::Stated,
            run,
            "every sampled element of m is annihilated by a fresh basis sequence, \
             yet m is not a Krull prime",
        );
    }

    // Finite contrast: in Z/12 every ideal consisting of zero-divisors is
    // contained in an associated prime of the ring.
    use crate::finite::ring::{mask_contains, mask_subset};
    let r = std::sync::Arc::new(crate::finite::ring::FiniteRing::zmod(12)?);
    let zero_divisors: Vec<usize> = (1..r.order())
        .filter(|&a| (1..r.order()).any(|b| r.mul(a, b) == 0))
        .collect();
    let ass: Vec<u64> = {
        let free = crate::finite::module::FinModule::free(r.clone(), 1)?;
        crate::finite::deciders::prime_set_direct(
            crate::core::PrimeSetKind::Ass,
            &*free.explicit(),
        )
    };
    let contrast_ok = r.ideals().iter().all(|&i| {
        let all_zd = crate::finite::ring::mask_elements(i)
            .all(|a| a == 0 || zero_divisors.contains(&a));
        !all_zd || ass.iter().any(|&p| mask_subset(i, p))
    }) && ass.iter().any(|&p| mask_contains(p, 2));
    report.pass(
        "finite-contrast",
        "bowtie-zero-divisors",
        Provenance::DerivedOracle,
        contrast_ok,
        "in Z/12, every zero-divisor ideal lies under an associated prime",
    );
    Ok(report)
}

fn verify_headline_for<D: LocalDomain>(dom: D, seed: u64) -> bool {
    let ring = Bowtie::new(dom);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = bowtie_localization_kernel(&ring).is_ok();
    for _ in 0..40 {
        let mut a = ring.sample(&mut rng, 3);
        // Force a into m by pushing d into Q.
        a.d = ring.dom.mul(&a.d, &ring.dom.max_gen());
        if ring.is_zero(&a) {
            continue;
        }
        // Uniform witness: the fresh basis sequence annihilates (d, e) since
        // the residue of d vanishes and the supports are disjoint.
        let fresh = a.e.keys().max().map_or(1, |m| m + 1);
        let w = ring.basis(fresh, D::Res::one());
        if !ring.is_zero(&ring.mul(&a, &w)) || ring.is_zero(&w) || !ring.in_max(&a) {
            ok = false;
        }
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2ring() -> Bowtie<FpTLocal<2>> {
        Bowtie::new(FpTLocal::<2>)
    }

    #[test]
    fn kernel_identities() {
        let r = f2ring();
        assert!(bowtie_localization_kernel(&r).is_ok());
        // (1, -e_1)(0, e_1) = (0, 0) spelled out.
        let e1 = r.basis(1, Fp(1));
        let u = r.add(&r.one(), &r.neg(&e1));
        assert!(r.is_zero(&r.mul(&u, &e1)));
        assert!(!r.in_max(&u));
    }

    #[test]
    fn one_minus_basis_is_not_a_unit() {
        // (1, -e_i) annihilates (0, e_i), so it cannot be invertible even
        // though it lies outside the maximal ideal.
        let r = f2ring();
        let u = r.add(&r.one(), &r.neg(&r.basis(2, Fp(1))));
        assert!(!r.is_unit(&u));
        assert!(r.invert(&u).is_none());
        assert!(!r.in_max(&u));
    }

    #[test]
    fn explicit_inverse_over_z5() {
        let r = Bowtie::new(ZLocal::<5>);
        // (1, 2 e_2): residue 1 + 2 = 3 != 0, so a unit.
        let a = r.add(&r.one(), &r.basis(2, Fp(2)));
        let inv = r.invert(&a).expect("unit");
        assert!(r.eq_elem(&r.mul(&a, &inv), &r.one()));
        // Components: e'_2 = -1 * 2 / 3 = 1 mod 5.
        assert_eq!(inv.e.get(&2), Some(&Fp(1)));
    }

    #[test]
    fn maximal_ideal_elements_are_zero_divisors() {
        let r = f2ring();
        // (t, e_1 + e_3) is in m; the fresh basis e_4 kills it.
        let t = r.from_d(r.dom.max_gen());
        let a = r.add(&t, &r.add(&r.basis(1, Fp(1)), &r.basis(3, Fp(1))));
        assert!(r.in_max(&a));
        let w = r.zero_divisor_partner(&a).unwrap();
        assert!(r.is_zero(&r.mul(&a, &w)));
    }

    #[test]
    fn galleries_pass() {
        assert!(verify_bowtie().unwrap().all_pass());
        assert!(verify_zero_divisor_ideal_uncontained().unwrap().all_pass());
    }
}
