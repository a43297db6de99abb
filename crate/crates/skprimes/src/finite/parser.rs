//! The textual ring-expression grammar:
//!
//! ```text
//! ring := atom | ring "x" ring
//! atom := "Z/" int | "F" q | "F" q "[" vars "]/(" rels ")"
//! ```
//!
//! with `q` in {2, 3, 4} and monomial relations only, e.g.
//! `F2[u,v]/(u^2,uv,v^2)` or `Z/4 x Z/3`.

use crate::error::{Error, Result};
use crate::finite::ring::{FiniteRing, ORDER_CAP};

pub fn parse_ring(expr: &str) -> Result<FiniteRing> {
    let mut p = Parser { src: expr.as_bytes(), pos: 0 };
    let ring = p.ring()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(ring)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a variable name"));
        }
        Ok(String::from_utf8(self.src[start..self.pos].to_vec()).unwrap())
    }

    fn ring(&mut self) -> Result<FiniteRing> {
        let mut acc = self.atom()?;
        while self.peek() == Some(b'x') {
            self.pos += 1;
            let rhs = self.atom()?;
            acc = FiniteRing::product(&acc, &rhs)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<FiniteRing> {
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                self.eat(b'/')?;
                let n = self.int()?;
                if n == 0 || n > ORDER_CAP {
                    return Err(Error::OrderCap { order: n, cap: ORDER_CAP });
                }
                FiniteRing::zmod(n)
            }
            Some(b'F') => {
                self.pos += 1;
                let q = self.int()?;
                if !matches!(q, 2 | 3 | 4) {
                    return Err(self.err("field size must be 2, 3 or 4"));
                }
                if self.peek() == Some(b'[') {
                    self.pos += 1;
                    let mut vars = vec![self.ident()?];
                    while self.peek() == Some(b',') {
                        self.pos += 1;
                        vars.push(self.ident()?);
                    }
                    self.eat(b']')?;
                    self.eat(b'/')?;
                    self.eat(b'(')?;
                    let mut rels = vec![self.monomial(&vars)?];
                    while self.peek() == Some(b',') {
                        self.pos += 1;
                        rels.push(self.monomial(&vars)?);
                    }
                    self.eat(b')')?;
                    monomial_quotient(q, &vars, &rels)
                } else {
                    FiniteRing::galois_field(q)
                }
            }
            _ => Err(self.err("expected 'Z/n', 'Fq' or 'Fq[...]/(...)'")),
        }
    }

    /// A monomial over the given variables, e.g. `u^2`, `uv`, `u*v^3`.
    fn monomial(&mut self, vars: &[String]) -> Result<Vec<usize>> {
        let mut exps = vec![0usize; vars.len()];
        loop {
            let name = self.ident()?;
            // Allow juxtaposed single-letter variables like `uv`.
            let parts: Vec<String> = if vars.contains(&name) {
                vec![name]
            } else if name.chars().all(|c| vars.contains(&c.to_string())) {
                name.chars().map(|c| c.to_string()).collect()
            } else {
                return Err(self.err(&format!("unknown variable '{name}'")));
            };
            let last = parts.len() - 1;
            for (i, v) in parts.iter().enumerate() {
                let vi = vars.iter().position(|w| w == v).unwrap();
                let e = if i == last && self.peek_raw() == Some(b'^') {
                    self.pos += 1;
                    self.int()?
                } else {
                    1
                };
                exps[vi] += e;
            }
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(c) if c.is_ascii_alphabetic() => {}
                _ => break,
            }
        }
        Ok(exps)
    }

    fn peek_raw(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }
}

fn divides(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `F_q[vars]/(monomial relations)`, as a table ring. The quotient must be
/// finite and of order at most the cap.
pub fn monomial_quotient(q: usize, vars: &[String], rels: &[Vec<usize>]) -> Result<FiniteRing> {
    let field = FiniteRing::galois_field(q)?;
    // Basis: monomials not divisible by any relation monomial, found by BFS.
    let mut basis: Vec<Vec<usize>> = vec![vec![0; vars.len()]];
    let mut frontier = basis.clone();
    let max_basis = 7; // q^7 already exceeds the order cap for q = 2
    while let Some(m) = frontier.pop() {
        for v in 0..vars.len() {
            let mut next = m.clone();
            next[v] += 1;
            if rels.iter().any(|r| divides(r, &next)) || basis.contains(&next) {
                continue;
            }
            if basis.len() >= max_basis {
                return Err(Error::OrderCap { order: usize::MAX, cap: ORDER_CAP });
            }
            basis.push(next.clone());
            frontier.push(next);
        }
    }
    basis.sort();
    let b = basis.len();
    let order = q.checked_pow(b as u32).ok_or(Error::OrderCap { order: usize::MAX, cap: ORDER_CAP })?;
    if order > ORDER_CAP {
        return Err(Error::OrderCap { order, cap: ORDER_CAP });
    }

    // Elements are coefficient vectors over the basis, encoded base q.
    let decode = |mut e: usize| -> Vec<usize> {
        let mut c = vec![0usize; b];
        for ci in c.iter_mut() {
            *ci = e % q;
            e /= q;
        }
        c
    };
    let encode = |c: &[usize]| -> usize { c.iter().rev().fold(0, |acc, &ci| acc * q + ci) };

    let mono_name = |m: &[usize]| -> String {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    vars[i].clone()
                } else {
                    format!("{}^{e}", vars[i])
                }
            })
            .collect();
        parts.join("*")
    };
    let names: Vec<String> = (0..order)
        .map(|e| {
            let c = decode(e);
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, &ci)| ci != 0)
                .map(|(i, &ci)| {
                    let m = mono_name(&basis[i]);
                    if m.is_empty() {
                        field.elem_name(ci).to_string()
                    } else if ci == 1 {
                        m
                    } else {
                        format!("{}*{m}", field.elem_name(ci))
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join("+")
            }
        })
        .collect();

    // Product of basis monomials: index into the basis, or None when the
    // product is reducible (hence zero).
    let mut prod: Vec<Option<usize>> = vec![None; b * b];
    for i in 0..b {
        for j in 0..b {
            let sum: Vec<usize> = basis[i].iter().zip(&basis[j]).map(|(x, y)| x + y).collect();
            if !rels.iter().any(|r| divides(r, &sum)) {
                prod[i * b + j] = basis.iter().position(|m| *m == sum);
                debug_assert!(prod[i * b + j].is_some());
            }
        }
    }

    let add = |x: usize, y: usize| -> usize {
        let (cx, cy) = (decode(x), decode(y));
        let c: Vec<usize> = cx.iter().zip(&cy).map(|(&a, &b2)| field.add(a, b2)).collect();
        encode(&c)
    };
    let mul = |x: usize, y: usize| -> usize {
        let (cx, cy) = (decode(x), decode(y));
        let mut c = vec![0usize; b];
        for (i, &ci) in cx.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            for (j, &cj) in cy.iter().enumerate() {
                if cj == 0 {
                    continue;
                }
                if let Some(k) = prod[i * b + j] {
                    c[k] = field.add(c[k], field.mul(ci, cj));
                }
            }
        }
        encode(&c)
    };

    let rel_names: Vec<String> = rels.iter().map(|r| mono_name(r)).collect();
    let one_pos = basis.iter().position(|m| m.iter().all(|&e| e == 0)).unwrap();
    let one = {
        let mut c = vec![0usize; b];
        c[one_pos] = 1;
        encode(&c)
    };
    FiniteRing::from_tables(
        format!("F{q}[{}]/({})", vars.join(","), rel_names.join(",")),
        names,
        &add,
        &mul,
        0,
        one,
    )
}
