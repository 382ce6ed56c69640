//! Formal polynomials in polytope symbols, evaluated multilinearly by mixed volumes.
//!
//! A degree-`n` monomial `P_1 ⋯ P_n` evaluates to `MV(P_1, …, P_n)`; formal
//! differences are expanded first, and monomials of other degrees are ignored.
//! Generating-function factors use `X/(1+X) = X − X² + X³ − …`.

use crate::arith::*;
use crate::error::{Error, Result};
use crate::polytope::{mixed_volume_rat, Polytope};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

/// Monomial as sorted `(symbol, exponent)` pairs.
pub type Monomial = Vec<(String, usize)>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VirtualExpr {
    terms: BTreeMap<Monomial, Rat>,
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut m: BTreeMap<String, usize> = a.iter().cloned().collect();
    for (s, e) in b {
        *m.entry(s.clone()).or_insert(0) += e;
    }
    m.into_iter().collect()
}

fn mono_degree(m: &Monomial) -> usize {
    m.iter().map(|(_, e)| e).sum()
}

impl VirtualExpr {
    pub fn zero() -> VirtualExpr {
        VirtualExpr::default()
    }

    pub fn constant(c: Rat) -> VirtualExpr {
        let mut e = VirtualExpr::zero();
        if !c.is_zero() {
            e.terms.insert(vec![], c);
        }
        e
    }

    pub fn symbol(name: &str) -> VirtualExpr {
        let mut e = VirtualExpr::zero();
        e.terms.insert(vec![(name.to_string(), 1)], Rat::one());
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> VirtualExpr {
        let mut out = VirtualExpr::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Product with every monomial of total degree above `max_deg` dropped.
    pub fn mul_truncated(&self, other: &VirtualExpr, max_deg: usize) -> VirtualExpr {
        let mut out = VirtualExpr::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if mono_degree(a) + mono_degree(b) > max_deg {
                    continue;
                }
                out.add_term(mono_mul(a, b), x * y);
            }
        }
        out
    }

    pub fn pow_truncated(&self, k: usize, max_deg: usize) -> VirtualExpr {
        let mut out = VirtualExpr::constant(Rat::one());
        for _ in 0..k {
            out = out.mul_truncated(self, max_deg);
        }
        out
    }

    /// Homogeneous component of degree `n`.
    pub fn degree_part(&self, n: usize) -> VirtualExpr {
        VirtualExpr {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| mono_degree(m) == n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `X/(1+X)` expanded up to degree `max_deg`.
    pub fn frac(x: &VirtualExpr, max_deg: usize) -> VirtualExpr {
        let mut out = VirtualExpr::zero();
        let mut power = VirtualExpr::constant(Rat::one());
        for j in 1..=max_deg {
            power = power.mul_truncated(x, max_deg);
            let sign = if j % 2 == 1 { Rat::one() } else { -Rat::one() };
            out = out + power.scale(&sign);
        }
        out
    }

    /// `e_n(X_1, …, X_k) = (−1)^{n−k} Σ_{d_1+…+d_k = n, d_i > 0} X_1^{d_1} ⋯ X_k^{d_k}`.
    pub fn e_n(xs: &[VirtualExpr], n: usize) -> VirtualExpr {
        let k = xs.len();
        if k == 0 || k > n {
            return VirtualExpr::zero();
        }
        let mut out = VirtualExpr::zero();
        for comp in compositions(n, k) {
            let mut term = VirtualExpr::constant(Rat::one());
            for (x, &d) in xs.iter().zip(&comp) {
                term = term.mul_truncated(&x.pow_truncated(d, n), n);
            }
            out = out + term;
        }
        if (n - k) % 2 == 1 {
            out = -out;
        }
        out
    }

    pub fn symbols(&self) -> Vec<String> {
        let mut s: Vec<String> = self.terms.keys().flat_map(|m| m.iter().map(|(x, _)| x.clone())).collect();
        s.sort();
        s.dedup();
        s
    }
}

/// All compositions of `n` into `k` positive parts.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    if n < k {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 1..=n - (k - 1) {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl Add for VirtualExpr {
    type Output = VirtualExpr;
    fn add(mut self, rhs: VirtualExpr) -> VirtualExpr {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for VirtualExpr {
    type Output = VirtualExpr;
    fn sub(self, rhs: VirtualExpr) -> VirtualExpr {
        self + (-rhs)
    }
}

impl Neg for VirtualExpr {
    type Output = VirtualExpr;
    fn neg(self) -> VirtualExpr {
        self.scale(&-Rat::one())
    }
}

impl Mul for VirtualExpr {
    type Output = VirtualExpr;
    fn mul(self, rhs: VirtualExpr) -> VirtualExpr {
        self.mul_truncated(&rhs, usize::MAX)
    }
}

/// Symbol-to-polytope binding with a mixed-volume cache.
#[derive(Debug, Default)]
pub struct Evaluator {
    binding: HashMap<String, Polytope>,
    cache: HashMap<Monomial, Rat>,
}

impl Evaluator {
    pub fn new() -> Evaluator {
        Evaluator::default()
    }

    pub fn bind(&mut self, name: &str, p: Polytope) -> &mut Self {
        self.binding.insert(name.to_string(), p);
        self.cache.clear();
        self
    }

    /// Σ over degree-`n` monomials of coefficient × mixed volume.
    pub fn evaluate(&mut self, e: &VirtualExpr, n: usize) -> Result<Rat> {
        for s in e.symbols() {
            if !self.binding.contains_key(&s) {
                return Err(Error::UnboundSymbol(s));
            }
        }
        let mut total = Rat::zero();
        for (m, c) in e.degree_part(n).terms {
            let mv = match self.cache.get(&m) {
                Some(v) => v.clone(),
                None => {
                    let polys: Vec<&Polytope> = m
                        .iter()
                        .flat_map(|(s, k)| std::iter::repeat(&self.binding[s]).take(*k))
                        .collect();
                    let v = mixed_volume_rat(&polys)?;
                    self.cache.insert(m.clone(), v.clone());
                    v
                }
            };
            total += c * mv;
        }
        Ok(total)
    }
}

/// One-shot evaluation.
pub fn evaluate_virtual(e: &VirtualExpr, binding: &[(&str, &Polytope)], n: usize) -> Result<Rat> {
    let mut ev = Evaluator::new();
    for (s, p) in binding {
        ev.bind(s, (*p).clone());
    }
    ev.evaluate(e, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::support::SupportSet;

    fn hull_of(dim: usize, pts: &[&[i64]]) -> Polytope {
        Polytope::hull(&SupportSet::from_i64(dim, pts).unwrap())
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(compositions(4, 2).len(), 3);
        assert_eq!(compositions(5, 3).len(), 6);
        assert_eq!(compositions(6, 3).len(), 10);
        assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
        for c in compositions(7, 4) {
            assert_eq!(c.iter().sum::<usize>(), 7);
            assert!(c.iter().all(|&x| x > 0));
        }
    }

    #[test]
    fn evaluation_examples() {
        let a = VirtualExpr::symbol("A");
        let h = VirtualExpr::symbol("H");
        let expr = a.clone() * (h.clone() - a.clone());
        let sq = hull_of(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let seg = hull_of(2, &[&[1, 0], &[1, 2]]);
        assert_eq!(evaluate_virtual(&expr, &[("A", &sq), ("H", &seg)], 2).unwrap(), rat(0));

        let t = hull_of(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]);
        let th = hull_of(2, &[&[1, 0], &[3, 0], &[2, 1], &[1, 1]]);
        assert_eq!(evaluate_virtual(&expr, &[("A", &t), ("H", &th)], 2).unwrap(), rat(1));

        let gf = VirtualExpr::frac(&a, 2);
        assert_eq!(evaluate_virtual(&gf, &[("A", &sq)], 2).unwrap(), rat(-2));
    }

    #[test]
    fn e_n_matches_generating_function() {
        let a = VirtualExpr::symbol("A");
        let b = VirtualExpr::symbol("B");
        for n in 1..6 {
            let gf = VirtualExpr::frac(&a, n).mul_truncated(&VirtualExpr::frac(&b, n), n);
            assert_eq!(gf.degree_part(n), VirtualExpr::e_n(&[a.clone(), b.clone()], n));
        }
    }

    #[test]
    fn unbound_symbol() {
        let e = VirtualExpr::symbol("Q");
        assert_eq!(evaluate_virtual(&e, &[], 1), Err(Error::UnboundSymbol("Q".into())));
    }
}
