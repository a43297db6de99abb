//! Registry of the mathematical claims the galleries verify.
//!
//! Every [`crate::report::ReportEntry`] references one of these ids, so a
//! report line can always be resolved to the statement it checks.

pub const CLAIMS: &[(&str, &str)] = &[
    (
        "chain-containment",
        "Ass(M) is contained in wAss(M), which is contained in sK(M), which is contained in K(M), for every module M",
    ),
    (
        "prime-quotient",
        "for each of the four notions, the prime set of R/p is exactly {p}",
    ),
    (
        "containment-respected",
        "a submodule inclusion L in M gives an inclusion of prime sets for each of the four notions",
    ),
    (
        "short-exact-sequence",
        "for Ass, wAss and sK, the prime set of M lies in the union of those of a submodule L and of M/L",
    ),
    (
        "nonvanishing",
        "for wAss, K and sK, the prime set of M is empty exactly when M = 0",
    ),
    (
        "local-property",
        "p lies in the prime set of M exactly when pR_p lies in the prime set of M_p, for wAss, K and sK",
    ),
    (
        "generalized-local-property",
        "localizing at a multiplicative set W keeps exactly the primes avoiding W, for wAss, K and sK",
    ),
    (
        "sk-maximality",
        "every strong Krull prime of M lies under a maximal element of sK(M)",
    ),
    (
        "wass-no-maximal",
        "over the valuation domain with value group a countable lexicographic sum of Z, wAss(V/aV) has no maximal element and excludes the maximal ideal, while sK(V/aV) contains it",
    ),
    (
        "local-vanishing",
        "x = 0 iff x/1 = 0 in M_p for all p in sK(M) iff x/1 = 0 in M_P for all maximal elements P of sK(M)",
    ),
    (
        "noetherian-collapse",
        "over a Noetherian ring the four prime sets of a finitely generated module coincide",
    ),
    (
        "flat-criteria",
        "for M with M tensor Q flat over Q: flatness of M is equivalent to each of: sK(L tensor M) in sK(L) for all L; torsion-freeness of L tensor M for torsion-free L; of I tensor M; and of Tor_1(R/I, M), for all f.g. ideals I",
    ),
    (
        "faithful-flat-criteria",
        "M is faithfully flat iff M is flat and sK(L tensor M) = sK(L) for every simple module L",
    ),
    (
        "idempotent-prime-gap",
        "over a local ring whose primes are all idempotent, the residue field satisfies the prime-ideal torsion conditions yet is not flat, so f.g. ideals cannot be replaced by primes in the flatness criteria",
    ),
    (
        "base-change-containment",
        "for a ring map R -> S, an R-module L and an R-flat S-module M, sK_S(L tensor M) contains the union of sK_S(M/pM) over p in sK_R(L)",
    ),
    (
        "base-change-equality",
        "with R Noetherian and L finitely generated, the base-change containment is an equality with the union over Ass_R(L)",
    ),
    (
        "base-change-minimal",
        "with R Noetherian, the two sides of the base-change formula have the same minimal elements",
    ),
    (
        "base-change-inc",
        "with R Noetherian and the ring map satisfying incomparability, the base-change formula is an equality",
    ),
    (
        "base-change-strict",
        "over the valuation pair with value groups Q and Q lex-plus-Q, the base-change containment is strict: the left side is {q, m} and the right side is {q}",
    ),
    (
        "flat-quotient-primes",
        "for flat M and prime p with M/pM nonzero, sK(M/pM) = Ass(M/pM) = {p}",
    ),
    (
        "direct-sum-failure",
        "sK does not respect countable direct sums: the maximal ideal lies in sK of the sum of the localizations but in none of the summands, and the base-change formula fails with L = R = S",
    ),
    (
        "krull-equals-sk-bezout",
        "over a valuation (or any Bezout) domain, Krull primes and strong Krull primes of every module agree",
    ),
    (
        "axes-nonminimal-sk",
        "the axes ring is reduced and local, yet its maximal ideal is a strong Krull prime of the ring despite not being minimal",
    ),
    (
        "bowtie-zero-divisors",
        "in the bowtie ring, the maximal ideal consists of zero-divisors yet is not a Krull prime of the ring, so not every ideal of zero-divisors lies under an associated-type prime",
    ),
    (
        "content-axioms",
        "the coefficient-ideal content map on R[X] satisfies the four content-algebra axioms, including Dedekind-Mertens",
    ),
    (
        "content-prime-extension",
        "for p prime in R, pS is prime in S = R[X]",
    ),
    (
        "content-sk-transfer",
        "for a content algebra S over R and ideal a, sK_S(S/aS) consists exactly of the extensions pS for p in sK_R(R/a)",
    ),
    (
        "dedekind-mertens-bound",
        "the Dedekind-Mertens exponent for (f, g) is at most deg(g) + 1 on the exhaustive sweep (observational bound)",
    ),
    (
        "content-unit-factor",
        "c(fg) = c(f) whenever c(g) is the unit ideal",
    ),
    (
        "content-localization",
        "content transports through localization at unit-content polynomials: c(f/w) = c(f) extended",
    ),
    (
        "perfect-closure-transfer",
        "for regular F_p[x], sK over the perfect closure of L tensor the closure equals the union of sK of the closure mod q over q in Ass(L), including the W-localized variant after avoidance filtering",
    ),
    (
        "perfect-closure-roots",
        "the perfect closure adjoins unique p-power roots: root and Frobenius are mutually inverse on it",
    ),
    (
        "perfect-closure-inc",
        "Spec of the perfect closure maps bijectively onto Spec of the base by contraction, so the inclusion satisfies incomparability",
    ),
    (
        "hom-support-formula",
        "for finitely presented L, sK(Hom(L, M)) = Supp(L) intersected with sK(M)",
    ),
    (
        "hom-base-change-formula",
        "for a ring map R -> S, finitely presented L over R and an S-module M, sK_S(Hom_R(L, M)) is the preimage of Supp_R(L) intersected with sK_S(M)",
    ),
    (
        "hom-tensor-adjunction",
        "Hom(L tensor R/I, M) and Hom(L, Hom(R/I, M)) have the same cardinality",
    ),
    (
        "oracle-consistency",
        "the generic capability-record deciders and the direct definition-unrolling deciders compute identical prime sets",
    ),
    (
        "valuation-colon",
        "in a valuation domain, (aV : b) is principal with value a - b when b divides a, and the unit ideal otherwise",
    ),
    (
        "valuation-closed-form",
        "the closed-form valuation deciders agree with a bounded direct definitional search over principal subideals",
    ),
    (
        "witness-soundness",
        "every Proved verdict carries a witness z that re-verifies: I in ann(z) in p under independent ideal-membership checks",
    ),
    (
        "report-determinism",
        "re-running a scenario with identical flags and seed produces byte-identical machine-readable output",
    ),
];

pub fn lookup(id: &str) -> Option<&'static str> {
    CLAIMS.iter().find(|(k, _)| *k == id).map(|(_, v)| *v)
}
