//! The standing catalog of finite rings, module families and ring maps the
//! verification sweeps run over.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::finite::module::FinModule;
use crate::finite::parser::parse_ring;
use crate::finite::ring::{FiniteRing, RingHom, RingRef};

/// Rings of order at most 16: cyclic, field, nilpotent-variable and product
/// examples.
pub fn ring_catalog() -> Vec<RingRef> {
    let exprs = [
        "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/8", "Z/9", "Z/12", "Z/16", "F4",
        "F2[u]/(u^2)", "F3[u]/(u^2)", "F2[u,v]/(u^2,uv,v^2)", "F2[u]/(u^3)",
        "Z/2 x Z/2", "Z/4 x Z/3", "Z/2 x F4", "Z/4 x Z/4",
    ];
    exprs
        .iter()
        .map(|e| Arc::new(parse_ring(e).expect("catalog ring must parse")))
        .collect()
}

/// The subset of the catalog small enough for exhaustive module sweeps.
pub fn small_ring_catalog() -> Vec<RingRef> {
    ring_catalog()
        .into_iter()
        .filter(|r| r.order() <= 8)
        .collect()
}

fn canonical_cols(mut cols: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    cols.retain(|c| c.iter().any(|&a| a != 0));
    cols.sort();
    cols.dedup();
    cols
}

/// Modules presented by at most `max_s` generators and `max_t` relations.
/// Exhaustive (after canonicalizing presentations) when the sweep fits under
/// the budget, otherwise at least `min_samples` seeded samples.
pub fn module_family(
    ring: &RingRef,
    max_s: usize,
    max_t: usize,
    seed: u64,
    min_samples: usize,
) -> Result<Vec<FinModule>> {
    let n = ring.order();
    let mut presentations: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
    let exhaustive_count: usize = (0..=max_s)
        .map(|s| {
            (0..=max_t)
                .map(|t| n.pow((s * t) as u32))
                .sum::<usize>()
        })
        .sum();
    if exhaustive_count <= 10_000 {
        for s in 0..=max_s {
            for t in 0..=max_t {
                let total = n.pow((s * t) as u32);
                for code in 0..total {
                    let mut c = code;
                    let mut cols = Vec::with_capacity(t);
                    for _ in 0..t {
                        let mut col = Vec::with_capacity(s);
                        for _ in 0..s {
                            col.push(c % n);
                            c /= n;
                        }
                        cols.push(col);
                    }
                    presentations.push((s, canonical_cols(cols)));
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while presentations.len() < min_samples {
            let s = rng.gen_range(1..=max_s);
            let t = rng.gen_range(0..=max_t);
            let cols: Vec<Vec<usize>> = (0..t)
                .map(|_| (0..s).map(|_| rng.gen_range(0..n)).collect())
                .collect();
            presentations.push((s, canonical_cols(cols)));
        }
    }
    presentations.sort();
    presentations.dedup();
    presentations
        .into_iter()
        .map(|(s, cols)| FinModule::new(ring.clone(), s, cols))
        .collect()
}

fn find_by_name(ring: &FiniteRing, name: &str) -> Option<usize> {
    (0..ring.order()).find(|&i| ring.elem_name(i) == name)
}

/// The unique ring map out of `Z/n` (or any ring whose elements are the
/// additive multiples of 1 named by their multiplier).
pub fn hom_from_one(name: &str, source: RingRef, target: RingRef) -> Result<RingHom> {
    let map: Vec<usize> = (0..source.order())
        .map(|a| {
            // a = a * 1 in Z/n under its canonical numbering.
            let mut img = 0;
            for _ in 0..a {
                img = target.add(img, 1);
            }
            img
        })
        .collect();
    RingHom::new(name, source, target, map)
}

/// Every unital ring map between two small rings, found by brute force.
pub fn all_homs(source: &RingRef, target: &RingRef) -> Vec<RingHom> {
    let (ns, nt) = (source.order(), target.order());
    if nt.pow(ns as u32) > 100_000 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let total = nt.pow(ns as u32);
    for code in 0..total {
        let mut c = code;
        let map: Vec<usize> = (0..ns)
            .map(|_| {
                let v = c % nt;
                c /= nt;
                v
            })
            .collect();
        if let Ok(h) = RingHom::new(
            format!("{}->{}#{}", source.name(), target.name(), out.len()),
            source.clone(),
            target.clone(),
            map,
        ) {
            out.push(h);
        }
    }
    out
}

/// The ring maps the base-change and Hom-formula sweeps run over.
pub fn hom_catalog() -> Vec<RingHom> {
    let z12: RingRef = Arc::new(parse_ring("Z/12").unwrap());
    let z4: RingRef = Arc::new(parse_ring("Z/4").unwrap());
    let z6: RingRef = Arc::new(parse_ring("Z/6").unwrap());
    let z2: RingRef = Arc::new(parse_ring("Z/2").unwrap());
    let f2: RingRef = Arc::new(parse_ring("F2").unwrap());
    let f4: RingRef = Arc::new(parse_ring("F4").unwrap());
    let z4xz3: RingRef = Arc::new(parse_ring("Z/4 x Z/3").unwrap());
    let f2u: RingRef = Arc::new(parse_ring("F2[u]/(u^2)").unwrap());
    let z2xz2: RingRef = Arc::new(parse_ring("Z/2 x Z/2").unwrap());

    let mut homs = vec![
        RingHom::identity(z12.clone()),
        hom_from_one("Z/12->Z/4", z12.clone(), z4.clone()).unwrap(),
        hom_from_one("Z/12->Z/6", z12.clone(), z6).unwrap(),
        hom_from_one("Z/12->Z/4xZ/3", z12, z4xz3).unwrap(),
        hom_from_one("Z/4->Z/2", z4, z2.clone()).unwrap(),
        hom_from_one("F2->F4", f2.clone(), f4).unwrap(),
    ];
    // F2[u]/(u^2) -> F2, u -> 0.
    {
        // c0 + c1 u maps to c0, i.e. to 0 exactly when the element squares
        // to 0.
        let map: Vec<usize> = (0..f2u.order())
            .map(|a| usize::from(f2u.mul(a, a) != 0))
            .collect();
        homs.push(RingHom::new("F2[u]/(u^2)->F2", f2u.clone(), f2, map).unwrap());
    }
    // Diagonal Z/2 -> Z/2 x Z/2, found by element names.
    {
        let map: Vec<usize> = (0..z2.order())
            .map(|a| {
                let nm = format!("({},{})", z2.elem_name(a), z2.elem_name(a));
                find_by_name(&z2xz2, &nm).expect("diagonal image must exist")
            })
            .collect();
        homs.push(RingHom::new("Z/2->Z/2xZ/2 diagonal", z2, z2xz2, map).unwrap());
    }
    homs
}
