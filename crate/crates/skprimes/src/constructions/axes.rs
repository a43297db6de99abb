//! The "axes" ring: `K[x_1, x_2, ...]` modulo the relations `x_i x_j = 0`
//! for `i != j`, localized at the ideal generated by all the variables.
//!
//! The result is a reduced, non-Noetherian local ring `R` with maximal ideal
//! `𝔪 = (x_1, x_2, ...)`. Its other primes are the `p_i` generated by the
//! variables `x_j`, `j != i` (this classification is adopted from the source
//! construction, not re-derived). Because `ann(x_k) = p_k`, any finitely
//! generated subideal of `𝔪` is annihilated by a variable with index above
//! its support, so `𝔪` is a strong Krull prime of `R` despite not being
//! minimal over any proper subideal.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{Coef, Fp};
use crate::error::{Error, Result};
use crate::report::{Provenance, VerificationReport};

/// `c_0 + Σ_i g_i(x_i)` with each `g_i` univariate, `g_i(0) = 0`, finitely
/// many nonzero. Canonical form: no trailing zero coefficients, no empty
/// parts — so structural equality is ring equality.
#[derive(Clone, PartialEq, Debug)]
pub struct AxesPoly<F: Coef> {
    pub c0: F,
    /// `parts[&i][d]` is the coefficient of `x_i^{d+1}`.
    pub parts: BTreeMap<u32, Vec<F>>,
}

impl<F: Coef> AxesPoly<F> {
    pub fn constant(c: F) -> Self {
        AxesPoly { c0: c, parts: BTreeMap::new() }
    }

    pub fn zero() -> Self {
        Self::constant(F::zero())
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// The monomial `c * x_i^d`, `d >= 1`.
    pub fn monomial(i: u32, d: usize, c: F) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() && d >= 1 {
            let mut coeffs = vec![F::zero(); d];
            coeffs[d - 1] = c;
            p.parts.insert(i, coeffs);
        }
        p
    }

    fn normalize(&mut self) {
        self.parts.retain(|_, g| {
            while g.last().is_some_and(|c| c.is_zero()) {
                g.pop();
            }
            !g.is_empty()
        });
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.parts.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut parts = self.parts.clone();
        for (&i, g) in &o.parts {
            let e = parts.entry(i).or_default();
            if e.len() < g.len() {
                e.resize(g.len(), F::zero());
            }
            for (d, c) in g.iter().enumerate() {
                e[d] = e[d].add(c);
            }
        }
        let mut out = AxesPoly { c0: self.c0.add(&o.c0), parts };
        out.normalize();
        out
    }

    pub fn neg(&self) -> Self {
        AxesPoly {
            c0: self.c0.neg(),
            parts: self
                .parts
                .iter()
                .map(|(&i, g)| (i, g.iter().map(F::neg).collect()))
                .collect(),
        }
    }

    /// Product under `x_i x_j = 0` for `i != j`: cross-variable terms vanish,
    /// so the product is `c0 d0 + Σ_i (c0 h_i + d0 g_i + g_i h_i)`.
    pub fn mul(&self, o: &Self) -> Self {
        let mut parts: BTreeMap<u32, Vec<F>> = BTreeMap::new();
        let indices: Vec<u32> = self.parts.keys().chain(o.parts.keys()).copied().collect();
        for i in indices {
            let g = self.parts.get(&i).cloned().unwrap_or_default();
            let h = o.parts.get(&i).cloned().unwrap_or_default();
            // (x * g)(x * h) has x-degree offsets: scalar parts first.
            let mut acc = vec![F::zero(); (g.len() + h.len()).max(g.len()).max(h.len()) + 1];
            for (d, c) in h.iter().enumerate() {
                acc[d] = acc[d].add(&self.c0.mul(c));
            }
            for (d, c) in g.iter().enumerate() {
                acc[d] = acc[d].add(&o.c0.mul(c));
            }
            // g_i h_i: coefficient of x^{a+1} times x^{b+1} lands at x^{a+b+2},
            // i.e. index a + b + 1 in the shifted vector.
            for (a, ca) in g.iter().enumerate() {
                for (b, cb) in h.iter().enumerate() {
                    let idx = a + b + 1;
                    if acc.len() <= idx {
                        acc.resize(idx + 1, F::zero());
                    }
                    acc[idx] = acc[idx].add(&ca.mul(cb));
                }
            }
            parts.insert(i, acc);
        }
        let mut out = AxesPoly { c0: self.c0.mul(&o.c0), parts };
        out.normalize();
        out
    }

    /// Variable indices with a nonzero part.
    pub fn support(&self) -> Vec<u32> {
        self.parts.keys().copied().collect()
    }
}

impl<F: Coef> fmt::Display for AxesPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.c0)?;
        for (i, g) in &self.parts {
            write!(f, " + x{i}*{g:?}")?;
        }
        Ok(())
    }
}

/// An element of the localization: `f / g` with `g` having nonzero constant
/// term (hence a unit of the local ring). Denominators are regular in the
/// base ring, so equality is exact cross-multiplication.
#[derive(Clone, Debug)]
pub struct AxesElement<F: Coef> {
    pub num: AxesPoly<F>,
    pub den: AxesPoly<F>,
}

impl<F: Coef> AxesElement<F> {
    pub fn new(num: AxesPoly<F>, den: AxesPoly<F>) -> Result<Self> {
        if den.c0.is_zero() {
            return Err(Error::Precondition(
                "denominator must have nonzero constant term".into(),
            ));
        }
        Ok(AxesElement { num, den })
    }

    pub fn from_poly(num: AxesPoly<F>) -> Self {
        AxesElement { num, den: AxesPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eq_elem(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    pub fn add(&self, o: &Self) -> Self {
        AxesElement {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        AxesElement { num: self.num.mul(&o.num), den: self.den.mul(&o.den) }
    }

    /// In the maximal ideal `𝔪` iff the numerator has zero constant term.
    pub fn in_max(&self) -> bool {
        self.num.c0.is_zero()
    }

    /// In `p_i` (generated by the `x_j`, `j != i`) iff the numerator has
    /// zero constant term and no `x_i` part.
    pub fn in_p(&self, i: u32) -> bool {
        self.in_max() && !self.num.parts.contains_key(&i)
    }

    /// Inverse of a unit (numerator constant term nonzero).
    pub fn invert(&self) -> Result<Self> {
        AxesElement::new(self.den.clone(), self.num.clone())
    }
}

/// The smallest index `k` exceeding every variable index in the generators,
/// with the verification that `x_k` annihilates each generator and that
/// `ann(x_k) = p_k ⊆ 𝔪`. This is the strong-Krull witness for the finitely
/// generated subideal `I ⊆ 𝔪`.
pub fn axes_sk_witness<F: Coef>(gens: &[AxesElement<F>]) -> Result<u32> {
    for g in gens {
        if !g.in_max() {
            return Err(Error::Precondition(
                "strong-Krull witness needs generators inside the maximal ideal".into(),
            ));
        }
    }
    let k = gens
        .iter()
        .flat_map(|g| g.num.support())
        .max()
        .map_or(1, |m| m + 1);
    let xk = AxesElement::from_poly(AxesPoly::monomial(k, 1, F::one()));
    for g in gens {
        if !xk.mul(g).is_zero() {
            return Err(Error::SearchSpace(format!(
                "witness x{k} fails to annihilate a generator"
            )));
        }
    }
    // ann(x_k) = p_k ⊆ 𝔪: sanity-check the inclusion on x_k itself.
    if xk.is_zero() || !xk.in_max() || xk.in_p(k) {
        return Err(Error::SearchSpace("witness variable is degenerate".into()));
    }
    Ok(k)
}

fn sample_polys<F: Coef>(rng: &mut ChaCha8Rng, max_var: u32, max_deg: usize) -> AxesPoly<F> {
    let mut p = AxesPoly::constant(F::from_int(rng.gen_range(-2..=2)));
    for i in 1..=max_var {
        if rng.gen_bool(0.5) {
            for d in 1..=max_deg {
                if rng.gen_bool(0.6) {
                    p = p.add(&AxesPoly::monomial(i, d, F::from_int(rng.gen_range(-2..=2))));
                }
            }
        }
    }
    p
}

fn verify_axes_over<F: Coef>(report: &mut VerificationReport, seed: u64) {
    let tag = F::label();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Exhaustive generator pool: all monomials x_i^d with i <= 4, d <= 2,
    // and the mixed sums x_i + x_j^2.
    let mut pool: Vec<AxesElement<F>> = Vec::new();
    for i in 1..=4u32 {
        for d in 1..=2usize {
            pool.push(AxesElement::from_poly(AxesPoly::monomial(i, d, F::one())));
        }
    }
    for i in 1..=4u32 {
        for j in 1..=4u32 {
            if i != j {
                pool.push(AxesElement::from_poly(
                    AxesPoly::monomial(i, 1, F::one()).add(&AxesPoly::monomial(j, 2, F::one())),
                ));
            }
        }
    }

    // All ideals on one or two pool generators, plus seeded random ideals
    // with up to three generators and a unit denominator.
    let mut ideals: Vec<Vec<AxesElement<F>>> = vec![vec![]];
    for (a, ga) in pool.iter().enumerate() {
        ideals.push(vec![ga.clone()]);
        for gb in pool.iter().skip(a + 1) {
            ideals.push(vec![ga.clone(), gb.clone()]);
        }
    }
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let mut gens = Vec::new();
        for _ in 0..n {
            let mut num = sample_polys::<F>(&mut rng, 4, 2);
            num.c0 = F::zero();
            let mut den = sample_polys::<F>(&mut rng, 4, 2);
            if den.c0.is_zero() {
                den.c0 = F::one();
            }
            gens.push(AxesElement::new(num, den).unwrap());
        }
        ideals.push(gens);
    }

    let mut wit_ok = true;
    let mut checked = 0usize;
    for gens in &ideals {
        match axes_sk_witness(gens) {
            Ok(k) => {
                checked += 1;
                // Independent recheck of the witness: x_k kills every
                // generator and every element of ann(x_k) lies in 𝔪.
                let xk = AxesElement::<F>::from_poly(AxesPoly::monomial(k, 1, F::one()));
                for g in gens {
                    if !xk.mul(g).is_zero() {
                        wit_ok = false;
                    }
                    if g.num.support().iter().any(|&i| i >= k) {
                        wit_ok = false;
                    }
                }
            }
            Err(_) => wit_ok = false,
        }
    }
    report.pass(
        format!("max-in-sk:{tag}"),
        "axes-nonminimal-sk",
        Provenance::Stated,
        wit_ok && checked == ideals.len(),
        format!("{checked} f.g. subideals of m, each annihilated by a fresh variable"),
    );

    // The witness examples from the contract.
    let ex1 = vec![
        AxesElement::<F>::from_poly(
            AxesPoly::monomial(1, 1, F::one()).add(&AxesPoly::monomial(2, 2, F::one())),
        ),
        AxesElement::from_poly(AxesPoly::monomial(3, 1, F::one())),
    ];
    let ex2 = vec![AxesElement::<F>::from_poly(AxesPoly::monomial(7, 1, F::one()))];
    report.pass(
        format!("witness-indices:{tag}"),
        "axes-nonminimal-sk",
        Provenance::Stated,
        axes_sk_witness(&ex1).ok() == Some(4)
            && axes_sk_witness(&ex2).ok() == Some(8)
            && axes_sk_witness::<F>(&[]).ok() == Some(1),
        "(x1 + x2^2, x3) -> x4; (x7) -> x8; () -> x1",
    );

    // Reduced: squares (and cubes) of sampled nonzero elements are nonzero.
    let mut reduced_ok = true;
    for _ in 0..60 {
        let p = sample_polys::<F>(&mut rng, 4, 2);
        if p.is_zero() {
            continue;
        }
        let sq = p.mul(&p);
        if sq.is_zero() || sq.mul(&p).is_zero() {
            reduced_ok = false;
        }
    }
    report.pass(
        format!("reduced:{tag}"),
        "axes-nonminimal-sk",
        Provenance::Stated,
        reduced_ok,
        "no sampled nonzero element squares or cubes to zero",
    );

    // Local: an element outside 𝔪 has an explicit inverse; an element of 𝔪
    // does not (its products keep a zero constant term).
    let mut local_ok = true;
    for _ in 0..40 {
        let num = sample_polys::<F>(&mut rng, 4, 2);
        let mut den = sample_polys::<F>(&mut rng, 4, 2);
        if den.c0.is_zero() {
            den.c0 = F::one();
        }
        let e = AxesElement::new(num, den).unwrap();
        if e.is_zero() {
            continue;
        }
        if e.in_max() {
            // Every multiple stays in 𝔪, so no inverse exists.
            let probe = AxesElement::from_poly(sample_polys::<F>(&mut rng, 4, 2));
            if !e.mul(&probe).in_max() {
                local_ok = false;
            }
        } else {
            let inv = e.invert().unwrap();
            if !e.mul(&inv).eq_elem(&AxesElement::from_poly(AxesPoly::one())) {
                local_ok = false;
            }
        }
    }
    report.pass(
        format!("local:{tag}"),
        "axes-nonminimal-sk",
        Provenance::Stated,
        local_ok,
        "units are exactly the elements outside m (explicit inverses)",
    );

    // 𝔪 is not minimal: each p_i is strictly below it, witnessed by x_i.
    let mut strict_ok = true;
    for i in 1..=4u32 {
        let xi = AxesElement::<F>::from_poly(AxesPoly::monomial(i, 1, F::one()));
        if !(xi.in_max() && !xi.in_p(i)) {
            strict_ok = false;
        }
        // and x_j (j != i) is in p_i, so p_i is a nonzero prime below m.
        let j = if i == 1 { 2 } else { 1 };
        let xj = AxesElement::<F>::from_poly(AxesPoly::monomial(j, 1, F::one()));
        if !xj.in_p(i) {
            strict_ok = false;
        }
    }
    report.pass(
        format!("max-not-minimal:{tag}"),
        "axes-nonminimal-sk",
        Provenance::Trivial,
        strict_ok,
        "x_i separates p_i from m for i = 1..4",
    );

    // Normal-form confluence: multiplication is associative and commutative
    // on random triples, with structurally identical canonical results.
    let mut conf_ok = true;
    for _ in 0..30 {
        let a = sample_polys::<F>(&mut rng, 4, 2);
        let b = sample_polys::<F>(&mut rng, 4, 2);
        let c = sample_polys::<F>(&mut rng, 4, 2);
        if a.mul(&b) != b.mul(&a)
            || a.mul(&b.mul(&c)) != a.mul(&b).mul(&c)
            || a.mul(&b.add(&c)) != a.mul(&b).add(&a.mul(&c))
        {
            conf_ok = false;
        }
    }
    report.pass(
        format!("normal-form-confluent:{tag}"),
        "axes-nonminimal-sk",
        Provenance::DerivedOracle,
        conf_ok,
        "canonical forms agree across reduction orders on random triples",
    );
}

/// The full axes-ring gallery item, run over `F_2`, `F_3`, and `ℚ`. The
/// prime classification `{p_i} ∪ {𝔪}` is adopted from the construction's
/// source rather than re-derived; membership tests are support-based.
pub fn verify_axes() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("axes");
    verify_axes_over::<Fp<2>>(&mut report, 11);
    verify_axes_over::<Fp<3>>(&mut report, 12);
    verify_axes_over::<Ratio<i64>>(&mut report, 13);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P2 = AxesPoly<Fp<2>>;

    #[test]
    fn cross_terms_vanish() {
        let x1 = P2::monomial(1, 1, Fp(1));
        let x2 = P2::monomial(2, 1, Fp(1));
        assert!(x1.mul(&x2).is_zero());
        assert!(!x1.mul(&x1).is_zero());
    }

    #[test]
    fn univariate_parts_multiply_as_polynomials() {
        // (1 + x1)(1 + x1) = 1 + 2 x1 + x1^2 = 1 + x1^2 over F2.
        let e = P2::one().add(&P2::monomial(1, 1, Fp(1)));
        let sq = e.mul(&e);
        assert_eq!(sq, P2::one().add(&P2::monomial(1, 2, Fp(1))));
    }

    #[test]
    fn witness_examples() {
        let gens = vec![
            AxesElement::<Fp<2>>::from_poly(
                P2::monomial(1, 1, Fp(1)).add(&P2::monomial(2, 2, Fp(1))),
            ),
            AxesElement::from_poly(P2::monomial(3, 1, Fp(1))),
        ];
        assert_eq!(axes_sk_witness(&gens).unwrap(), 4);
        let single = vec![AxesElement::<Fp<2>>::from_poly(P2::monomial(7, 1, Fp(1)))];
        assert_eq!(axes_sk_witness(&single).unwrap(), 8);
        assert_eq!(axes_sk_witness::<Fp<2>>(&[]).unwrap(), 1);
    }

    #[test]
    fn witness_rejects_units() {
        let unit = vec![AxesElement::<Fp<2>>::from_poly(P2::one())];
        assert!(axes_sk_witness(&unit).is_err());
    }

    #[test]
    fn annihilator_of_variable_is_p() {
        // ann(x2) contains x1 and x3 but not x2.
        let x2 = AxesElement::<Fp<2>>::from_poly(P2::monomial(2, 1, Fp(1)));
        for (i, expect_zero) in [(1u32, true), (2, false), (3, true)] {
            let xi = AxesElement::<Fp<2>>::from_poly(P2::monomial(i, 1, Fp(1)));
            assert_eq!(x2.mul(&xi).is_zero(), expect_zero, "x2 * x{i}");
        }
    }

    #[test]
    fn fraction_equality_is_cross_multiplication() {
        // x1 / (1 + x2) equals x1, because x1 x2 = 0.
        let x1 = P2::monomial(1, 1, Fp(1));
        let den = P2::one().add(&P2::monomial(2, 1, Fp(1)));
        let frac = AxesElement::new(x1.clone(), den).unwrap();
        assert!(frac.eq_elem(&AxesElement::from_poly(x1)));
    }

    #[test]
    fn gallery_passes() {
        assert!(verify_axes().unwrap().all_pass());
    }
}
