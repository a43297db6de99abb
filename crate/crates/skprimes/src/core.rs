//! Capability contracts for rings and modules, and the generic deciders for
//! the four prime-set notions.
//!
//! Everything downstream (finite rings, valuation domains, the bespoke
//! constructions) either instantiates these contracts or provides a
//! closed-form decider that is cross-checked against them.

use serde::Serialize;

use crate::error::{Error, Result};

/// The four prime-set notions. The declaration order gives
/// `Ass < WAss < StrongKrull < Krull`, matching the containment chain of the
/// sets they name: every associated prime is weakly associated, every weakly
/// associated prime is a strong Krull prime, and every strong Krull prime is
/// a Krull prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PrimeSetKind {
    Ass,
    WAss,
    StrongKrull,
    Krull,
}

impl PrimeSetKind {
    pub const ALL: [PrimeSetKind; 4] = [
        PrimeSetKind::Ass,
        PrimeSetKind::WAss,
        PrimeSetKind::StrongKrull,
        PrimeSetKind::Krull,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PrimeSetKind::Ass => "Ass",
            PrimeSetKind::WAss => "wAss",
            PrimeSetKind::StrongKrull => "sK",
            PrimeSetKind::Krull => "K",
        }
    }
}

/// Three-valued decision result for semi-decidable membership predicates.
///
/// `Proved` carries a checkable witness and `Refuted` a checkable
/// certificate; `Unknown` records which search bound was exhausted, so that
/// bounded search can never masquerade as refutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Proved(W),
    Refuted(Certificate),
    Unknown(SearchBound),
}

impl<W> Verdict<W> {
    pub fn is_proved(&self) -> bool {
        matches!(self, Verdict::Proved(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Proved(w) => Verdict::Proved(f(w)),
            Verdict::Refuted(c) => Verdict::Refuted(c),
            Verdict::Unknown(b) => Verdict::Unknown(b),
        }
    }
}

/// Why a membership claim is false. The `counterexample` names the finitely
/// generated ideal (or element) that admits no witness, and `exhaustiveness`
/// tags the argument that the failed search really was exhaustive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub counterexample: String,
    pub exhaustiveness: String,
}

impl Certificate {
    pub fn new(counterexample: impl Into<String>, exhaustiveness: impl Into<String>) -> Self {
        Certificate {
            counterexample: counterexample.into(),
            exhaustiveness: exhaustiveness.into(),
        }
    }
}

/// Descriptor of the bound a search exhausted without deciding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchBound(pub String);

impl SearchBound {
    pub fn new(desc: impl Into<String>) -> Self {
        SearchBound(desc.into())
    }
}

/// Capability record of a ring: ideal membership, finitely generated subideal
/// enumeration, minimal primes, and (optionally) a Spec enumerator.
///
/// Ideals and primes are opaque handles; all predicates must be deterministic
/// functions of their inputs. Enumerators return `None` when the capability
/// is absent, which deciders surface as [`Error::CapabilityMissing`].
pub trait RingContext {
    type Ideal: Clone;
    type Prime: Clone + PartialEq;

    fn ideal_subset(&self, a: &Self::Ideal, b: &Self::Ideal) -> bool;
    fn prime_as_ideal(&self, p: &Self::Prime) -> Self::Ideal;
    fn is_unit_ideal(&self, i: &Self::Ideal) -> bool;

    /// All finitely generated subideals of `p`, each listed once.
    fn fg_subideals(&self, p: &Self::Prime) -> Option<Vec<Self::Ideal>>;

    /// Principal ideals `(a)` for the elements `a` of `p`, each listed once.
    fn principal_subideals(&self, p: &Self::Prime) -> Option<Vec<Self::Ideal>>;

    /// Is `p` minimal among the primes containing `i`?
    fn minimal_over(&self, p: &Self::Prime, i: &Self::Ideal) -> bool;

    /// The prime spectrum in canonical order, each prime exactly once.
    fn spec(&self) -> Option<Vec<Self::Prime>>;

    fn prime_subset(&self, p: &Self::Prime, q: &Self::Prime) -> bool;

    fn describe_ideal(&self, i: &Self::Ideal) -> String;
    fn describe_prime(&self, p: &Self::Prime) -> String;
}

/// Capability record of a module over a [`RingContext`]: element enumeration,
/// zero test, and annihilators.
pub trait ModuleContext {
    type Ring: RingContext;
    type Elem: Clone;

    fn ring(&self) -> &Self::Ring;

    /// Every element of the module, or `None` when enumeration is impossible.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn is_zero_elem(&self, z: &Self::Elem) -> bool;

    /// `ann(z)` as an ideal of the ambient ring; `ann(0) = R`.
    fn ann(&self, z: &Self::Elem) -> <Self::Ring as RingContext>::Ideal;

    fn describe_elem(&self, z: &Self::Elem) -> String;

    /// Is the image of `x` zero in the localization at `p`? `None` when no
    /// localization constructor is available.
    fn vanishes_at(&self, _x: &Self::Elem, _p: &<Self::Ring as RingContext>::Prime) -> Option<bool> {
        None
    }
}

type PrimeOf<M> = <<M as ModuleContext>::Ring as RingContext>::Prime;
type IdealOf<M> = <<M as ModuleContext>::Ring as RingContext>::Ideal;

/// A proved membership: the module element whose annihilator does the job,
/// together with the containments that were re-verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipWitness<E> {
    pub element: E,
    pub rechecked: bool,
}

fn reject_unit_prime<M: ModuleContext>(m: &M, p: &PrimeOf<M>) -> Result<()> {
    let ring = m.ring();
    if ring.is_unit_ideal(&ring.prime_as_ideal(p)) {
        return Err(Error::Precondition(format!(
            "the unit ideal {} is not a prime",
            ring.describe_prime(p)
        )));
    }
    Ok(())
}

fn enumerate<M: ModuleContext>(m: &M) -> Result<Vec<M::Elem>> {
    m.elements()
        .ok_or_else(|| Error::CapabilityMissing("module element enumeration".into()))
}

/// Recheck `lower ⊆ ann(z) ⊆ p` through the ring's own ideal-membership
/// capability. Mandatory before any `Proved` verdict is emitted, so that
/// closed-form shortcuts in specialized deciders cannot smuggle in a wrong
/// witness.
pub fn verify_witness<M: ModuleContext>(
    m: &M,
    lower: Option<&IdealOf<M>>,
    z: &M::Elem,
    p: &PrimeOf<M>,
) -> bool {
    let ring = m.ring();
    let ann = m.ann(z);
    let upper_ok = ring.ideal_subset(&ann, &ring.prime_as_ideal(p));
    let lower_ok = lower.map_or(true, |i| ring.ideal_subset(i, &ann));
    !m.is_zero_elem(z) && upper_ok && lower_ok
}

/// Is `p = ann(z)` for some element `z` of `m`?
pub fn is_associated<M: ModuleContext>(
    p: &PrimeOf<M>,
    m: &M,
) -> Result<Verdict<MembershipWitness<M::Elem>>> {
    reject_unit_prime(m, p)?;
    let ring = m.ring();
    let p_ideal = ring.prime_as_ideal(p);
    for z in enumerate(m)? {
        let ann = m.ann(&z);
        if ring.ideal_subset(&ann, &p_ideal) && ring.ideal_subset(&p_ideal, &ann) {
            let rechecked = verify_witness(m, Some(&p_ideal), &z, p);
            debug_assert!(rechecked);
            return Ok(Verdict::Proved(MembershipWitness { element: z, rechecked }));
        }
    }
    Ok(Verdict::Refuted(Certificate::new(
        format!("no element has annihilator {}", ring.describe_prime(p)),
        "annihilators of all module elements enumerated",
    )))
}

/// Is `p` minimal over `ann(z)` for some element `z` of `m`?
pub fn is_weakly_associated<M: ModuleContext>(
    p: &PrimeOf<M>,
    m: &M,
) -> Result<Verdict<MembershipWitness<M::Elem>>> {
    reject_unit_prime(m, p)?;
    let ring = m.ring();
    for z in enumerate(m)? {
        if m.is_zero_elem(&z) {
            continue;
        }
        let ann = m.ann(&z);
        if ring.minimal_over(p, &ann) {
            let rechecked = verify_witness(m, None, &z, p);
            debug_assert!(rechecked);
            return Ok(Verdict::Proved(MembershipWitness { element: z, rechecked }));
        }
    }
    Ok(Verdict::Refuted(Certificate::new(
        format!(
            "{} is not minimal over any element annihilator",
            ring.describe_prime(p)
        ),
        "annihilators of all module elements enumerated",
    )))
}

fn has_witness_between<M: ModuleContext>(
    m: &M,
    elems: &[M::Elem],
    lower: &IdealOf<M>,
    p_ideal: &IdealOf<M>,
) -> Option<M::Elem> {
    let ring = m.ring();
    elems
        .iter()
        .find(|z| {
            let ann = m.ann(z);
            ring.ideal_subset(lower, &ann) && ring.ideal_subset(&ann, p_ideal)
        })
        .cloned()
}

/// Does every single element `a ∈ p` admit `z` with `a ∈ ann(z) ⊆ p`?
pub fn is_krull<M: ModuleContext>(
    p: &PrimeOf<M>,
    m: &M,
) -> Result<Verdict<Vec<MembershipWitness<M::Elem>>>> {
    reject_unit_prime(m, p)?;
    let ring = m.ring();
    let p_ideal = ring.prime_as_ideal(p);
    let singles = ring
        .principal_subideals(p)
        .ok_or_else(|| Error::CapabilityMissing("element enumeration for the prime".into()))?;
    let elems = enumerate(m)?;
    let mut witnesses = Vec::new();
    for a in singles {
        match has_witness_between(m, &elems, &a, &p_ideal) {
            Some(z) => {
                let rechecked = verify_witness(m, Some(&a), &z, p);
                debug_assert!(rechecked);
                witnesses.push(MembershipWitness { element: z, rechecked });
            }
            None => {
                return Ok(Verdict::Refuted(Certificate::new(
                    format!(
                        "element generating {} admits no annihilator inside {}",
                        ring.describe_ideal(&a),
                        ring.describe_prime(p)
                    ),
                    "all module elements enumerated",
                )))
            }
        }
    }
    Ok(Verdict::Proved(witnesses))
}

/// Does every finitely generated ideal `I ⊆ p` admit `z` with
/// `I ⊆ ann(z) ⊆ p`?
pub fn is_strong_krull<M: ModuleContext>(
    p: &PrimeOf<M>,
    m: &M,
) -> Result<Verdict<Vec<MembershipWitness<M::Elem>>>> {
    reject_unit_prime(m, p)?;
    let ring = m.ring();
    let p_ideal = ring.prime_as_ideal(p);
    let subideals = ring
        .fg_subideals(p)
        .ok_or_else(|| Error::CapabilityMissing("f.g. subideal enumeration for the prime".into()))?;
    let elems = enumerate(m)?;
    let mut witnesses = Vec::new();
    for i in subideals {
        match has_witness_between(m, &elems, &i, &p_ideal) {
            Some(z) => {
                let rechecked = verify_witness(m, Some(&i), &z, p);
                debug_assert!(rechecked);
                witnesses.push(MembershipWitness { element: z, rechecked });
            }
            None => {
                return Ok(Verdict::Refuted(Certificate::new(
                    format!(
                        "f.g. ideal {} admits no annihilator inside {}",
                        ring.describe_ideal(&i),
                        ring.describe_prime(p)
                    ),
                    "all f.g. subideals and all module elements enumerated",
                )))
            }
        }
    }
    Ok(Verdict::Proved(witnesses))
}

/// Decide membership of `p` in the `kind` prime set of `m`.
pub fn membership<M: ModuleContext>(
    kind: PrimeSetKind,
    p: &PrimeOf<M>,
    m: &M,
) -> Result<Verdict<()>> {
    Ok(match kind {
        PrimeSetKind::Ass => is_associated(p, m)?.map(|_| ()),
        PrimeSetKind::WAss => is_weakly_associated(p, m)?.map(|_| ()),
        PrimeSetKind::Krull => is_krull(p, m)?.map(|_| ()),
        PrimeSetKind::StrongKrull => is_strong_krull(p, m)?.map(|_| ()),
    })
}

/// The full `kind` prime set of `m`, in the ring's canonical Spec order.
///
/// Propagates an [`Error::PartialUnknown`] listing the undecided primes when
/// any membership comes back `Unknown`.
pub fn prime_set<M: ModuleContext>(kind: PrimeSetKind, m: &M) -> Result<Vec<PrimeOf<M>>> {
    let ring = m.ring();
    let spec = ring
        .spec()
        .ok_or_else(|| Error::CapabilityMissing("Spec enumeration".into()))?;
    let mut members = Vec::new();
    let mut undecided = Vec::new();
    for p in spec {
        match membership(kind, &p, m)? {
            Verdict::Proved(_) => members.push(p),
            Verdict::Refuted(_) => {}
            Verdict::Unknown(_) => undecided.push(ring.describe_prime(&p)),
        }
    }
    if !undecided.is_empty() {
        return Err(Error::PartialUnknown(undecided));
    }
    Ok(members)
}

/// The inclusion-maximal members of a set of primes.
pub fn maximal_elements<R: RingContext>(ring: &R, set: &[R::Prime]) -> Vec<R::Prime> {
    set.iter()
        .filter(|p| {
            !set.iter()
                .any(|q| ring.prime_subset(p, q) && !ring.prime_subset(q, p))
        })
        .cloned()
        .collect()
}

/// Outcome of the three-way local vanishing equivalence for one element:
/// `x = 0` iff `x/1 = 0` in `M_p` for all strong Krull primes `p` iff
/// `x/1 = 0` in `M_P` for all maximal such `P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalVanishing {
    pub is_zero: bool,
    pub vanishes_at_all_sk: bool,
    pub vanishes_at_maximal_sk: bool,
    pub violated: Vec<String>,
}

impl LocalVanishing {
    pub fn consistent(&self) -> bool {
        self.violated.is_empty()
    }
}

/// Check the local vanishing criterion for a single element `x` of `m`.
pub fn local_vanishing_check<M: ModuleContext>(x: &M::Elem, m: &M) -> Result<LocalVanishing> {
    let ring = m.ring();
    let sk = prime_set(PrimeSetKind::StrongKrull, m)?;
    let maximal = maximal_elements(ring, &sk);
    let vanish = |primes: &[PrimeOf<M>]| -> Result<bool> {
        for p in primes {
            let v = m
                .vanishes_at(x, p)
                .ok_or_else(|| Error::CapabilityMissing("localization constructor".into()))?;
            if !v {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let is_zero = m.is_zero_elem(x);
    let at_sk = vanish(&sk)?;
    let at_max = vanish(&maximal)?;
    let mut violated = Vec::new();
    // Each pairwise implication of the equivalence, reported separately.
    if is_zero && !at_sk {
        violated.push("x = 0 but x/1 != 0 at some strong Krull prime".into());
    }
    if at_sk && !at_max {
        violated.push("vanishing at all sK primes but not at a maximal one".into());
    }
    if at_max && !is_zero {
        violated.push("vanishing at all maximal sK primes but x != 0".into());
    }
    Ok(LocalVanishing {
        is_zero,
        vanishes_at_all_sk: at_sk,
        vanishes_at_maximal_sk: at_max,
        violated,
    })
}
