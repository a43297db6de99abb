//! An exact-arithmetic laboratory for the four classical generalizations of
//! associated primes — associated, weakly associated, Krull, and strong Krull —
//! over ring classes where their membership predicates are decidable.
//!
//! The crate is organized around a small set of decidable "galleries":
//!
//! * [`finite`] — fully enumerated finite commutative rings and finitely
//!   presented modules; the brute-force ground truth, since all four notions
//!   collapse over a Noetherian ring.
//! * [`valuation`] — valuation domains driven entirely by their ordered value
//!   groups, with closed-form prime-set deciders.
//! * [`constructions`] — two bespoke non-Noetherian rings (the axes ring and
//!   the bowtie ring) with exact annihilator queries.
//! * [`content`] — content maps on polynomial rings over finite base rings
//!   and the Dedekind–Mertens machinery.
//! * [`perfect`] — the perfect closure of `F_p[x]` as a tower of p-th root
//!   adjunctions with Bézout ideal arithmetic.
//!
//! [`core`] holds the ring/module capability contracts and generic deciders;
//! [`report`] the structured verification records that every gallery emits.

pub mod claims;
pub mod constructions;
pub mod content;
pub mod core;
pub mod error;
pub mod finite;
pub mod gallery;
pub mod perfect;
pub mod report;
pub mod valuation;

pub use crate::core::{PrimeSetKind, Verdict};
pub use crate::error::Error;
pub use crate::report::{ReportEntry, Status, VerificationReport};
