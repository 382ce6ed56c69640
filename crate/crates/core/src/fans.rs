//! Rational cones, normal fans, weighted fans and their stable intersection.
//!
//! Cones are kept in a canonical form (primitive rays orthogonal to the lineality
//! space, HNF bases for the lineality space and the defining equations), so equal
//! cones compare equal and fans serialize byte-stably.

use crate::arith::*;
use crate::error::{Error, Result};
use crate::lattice::{saturation, smith_normal_form};
use crate::polytope::{mixed_volume, Polytope};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    ambient_dim: usize,
    dim: usize,
    /// Primitive extreme rays of the pointed part, orthogonal to the lineality space.
    pub rays: Vec<IntVec>,
    /// HNF basis of the lineality lattice.
    pub lineality: Vec<IntVec>,
    /// Facet inequalities `a · x ≥ 0`, `a` taken inside the linear span.
    pub inequalities: Vec<IntVec>,
    /// HNF basis of the equations `a · x = 0` of the linear span.
    pub equations: Vec<IntVec>,
}

fn integerize(v: &[Rat]) -> IntVec {
    primitive(v)
}

/// Orthogonal projection of `v` onto the orthogonal complement of `basis`.
fn project_out(v: &[Rat], basis: &[RatVec]) -> RatVec {
    if basis.is_empty() {
        return v.to_vec();
    }
    // solve Gram system for coefficients of the component in span(basis)
    let k = basis.len();
    let gram: Vec<RatVec> = (0..k)
        .map(|i| (0..k).map(|j| dot_rat(&basis[i], &basis[j])).collect())
        .collect();
    let rhs: RatVec = basis.iter().map(|b| dot_rat(b, v)).collect();
    let ginv = inverse(&gram).expect("independent basis");
    let coef: RatVec = (0..k).map(|i| dot_rat(&ginv[i], &rhs)).collect();
    let mut out = v.to_vec();
    for (c, b) in coef.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(b) {
            *o -= c * x;
        }
    }
    out
}

fn rat_rows(v: &[IntVec]) -> Vec<RatVec> {
    v.iter().map(|r| to_rat(r)).collect()
}

/// All `k`-subsets of `0..n`.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

impl Cone {
    /// Cone generated by `rays` plus the linear space spanned by `lineality`.
    pub fn from_generators(n: usize, rays: &[IntVec], lineality: &[IntVec]) -> Cone {
        let lin_basis = saturation(lineality, n);
        let lin_rat = rat_rows(&lin_basis);
        // canonical rays: project out lineality, drop zeros, dedup
        let mut cand: Vec<IntVec> = rays
            .iter()
            .map(|r| project_out(&to_rat(r), &lin_rat))
            .filter(|r| !is_zero_vec(r))
            .map(|r| integerize(&r))
            .collect();
        cand.sort();
        cand.dedup();
        let mut all: Vec<IntVec> = cand.clone();
        all.extend(lin_basis.iter().cloned());
        let span = saturation(&all, n);
        let dim = span.len();
        let eq_rat = nullspace(&rat_rows(&span), n);
        let eq_int: Vec<IntVec> = eq_rat.iter().map(|v| integerize(v)).collect();
        let equations = saturation(&eq_int, n);
        let pointed_dim = dim - lin_basis.len();
        // If the rays positively span a linear space, it joins the lineality.
        let span_rat = rat_rows(&span);
        let mut ineqs: Vec<IntVec> = Vec::new();
        if pointed_dim > 0 {
            let need = pointed_dim - 1;
            for sub in subsets(cand.len(), need) {
                let mut rows: Vec<RatVec> = sub.iter().map(|&i| to_rat(&cand[i])).collect();
                rows.extend(lin_rat.iter().cloned());
                // a in span(span_rat): a = Σ c_i s_i, constraints rows · a = 0
                let cons: Vec<RatVec> = rows
                    .iter()
                    .map(|r| span_rat.iter().map(|s| dot_rat(r, s)).collect())
                    .collect();
                let ns = nullspace(&cons, span_rat.len());
                if ns.len() != 1 {
                    continue;
                }
                let mut a = vec![Rat::zero(); n];
                for (c, s) in ns[0].iter().zip(&span_rat) {
                    for (x, y) in a.iter_mut().zip(s) {
                        *x += c * y;
                    }
                }
                let vals: Vec<Rat> = cand.iter().map(|r| dot_ir(r, &a)).collect();
                let pos = vals.iter().any(|v| v.is_positive());
                let neg = vals.iter().any(|v| v.is_negative());
                if pos && neg {
                    continue;
                }
                if !pos && !neg {
                    continue;
                }
                let a = if neg { a.iter().map(|x| -x).collect::<RatVec>() } else { a };
                ineqs.push(integerize(&a));
            }
            ineqs.sort();
            ineqs.dedup();
        }
        // Extreme rays only: a ray is extreme if it lies on pointed_dim - 1 independent facets.
        let rays: Vec<IntVec> = if pointed_dim <= 1 {
            cand
        } else {
            cand.into_iter()
                .filter(|r| {
                    let tight: Vec<RatVec> = ineqs
                        .iter()
                        .filter(|a| dot_int(a, r).is_zero())
                        .map(|a| to_rat(a))
                        .collect();
                    let mut rows = tight;
                    rows.extend(eq_rat.iter().cloned());
                    rows.extend(lin_rat.iter().cloned());
                    rank(&rows) == n - 1
                })
                .collect()
        };
        Cone { ambient_dim: n, dim, rays, lineality: lin_basis, inequalities: ineqs, equations }
    }

    /// Cone `{x : a·x ≥ 0 for a in ineqs, e·x = 0 for e in eqs}`.
    pub fn from_hrep(n: usize, ineqs: &[IntVec], eqs: &[IntVec]) -> Cone {
        let a_rat = rat_rows(ineqs);
        let e_rat = rat_rows(eqs);
        let mut both = a_rat.clone();
        both.extend(e_rat.iter().cloned());
        let lin: Vec<IntVec> = nullspace(&both, n).iter().map(|v| integerize(v)).collect();
        let lin_rat = rat_rows(&lin);
        let mut wcons = e_rat.clone();
        wcons.extend(lin_rat.iter().cloned());
        let w = nullspace(&wcons, n);
        let d = w.len();
        // inequalities in W-coordinates
        let aw: Vec<RatVec> = a_rat
            .iter()
            .map(|a| w.iter().map(|b| dot_rat(a, b)).collect())
            .collect();
        let feasible = |y: &RatVec| aw.iter().all(|r| !dot_rat(r, y).is_negative());
        let to_x = |y: &RatVec| -> IntVec {
            let mut x = vec![Rat::zero(); n];
            for (c, b) in y.iter().zip(&w) {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += c * bi;
                }
            }
            integerize(&x)
        };
        let mut rays: Vec<IntVec> = Vec::new();
        if d == 1 {
            for s in [1i64, -1] {
                let y = vec![rat(s)];
                if feasible(&y) {
                    rays.push(to_x(&y));
                }
            }
        } else if d > 1 {
            for sub in subsets(aw.len(), d - 1) {
                let rows: Vec<RatVec> = sub.iter().map(|&i| aw[i].clone()).collect();
                let ns = nullspace(&rows, d);
                if ns.len() != 1 {
                    continue;
                }
                for s in [1i64, -1] {
                    let y = scale_rat(&ns[0], &rat(s));
                    if feasible(&y) {
                        rays.push(to_x(&y));
                    }
                }
            }
        }
        Cone::from_generators(n, &rays, &lin)
    }

    /// The whole space `R^n`.
    pub fn whole_space(n: usize) -> Cone {
        let basis: Vec<IntVec> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
            .collect();
        Cone::from_generators(n, &[], &basis)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis (HNF) of the saturated lattice of the linear span.
    pub fn span_lattice(&self) -> Vec<IntVec> {
        let mut all = self.rays.clone();
        all.extend(self.lineality.iter().cloned());
        saturation(&all, self.ambient_dim)
    }

    pub fn relint_point(&self) -> RatVec {
        let mut p = vec![Rat::zero(); self.ambient_dim];
        for r in &self.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += Rat::from_integer(y.clone());
            }
        }
        p
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|e| dot_ir(e, x).is_zero())
            && self.inequalities.iter().all(|a| !dot_ir(a, x).is_negative())
    }

    /// Generators: rays, plus both signs of every lineality basis vector.
    pub fn generators(&self) -> Vec<IntVec> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(l.iter().map(|x| -x).collect());
        }
        g
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains(&to_rat(g)))
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        let mut ineqs = self.inequalities.clone();
        ineqs.extend(other.inequalities.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Cone::from_hrep(self.ambient_dim, &ineqs, &eqs)
    }

    /// Codimension-one faces.
    pub fn facets(&self) -> Vec<Cone> {
        self.inequalities
            .iter()
            .map(|a| {
                let mut eqs = self.equations.clone();
                eqs.push(a.clone());
                Cone::from_hrep(self.ambient_dim, &self.inequalities, &eqs)
            })
            .collect()
    }

    /// Inequalities vanishing on the face `face`.
    fn tight_inequalities(&self, face: &Cone) -> Vec<IntVec> {
        let p = face.relint_point();
        self.inequalities.iter().filter(|a| dot_ir(a, &p).is_zero()).cloned().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedFan {
    ambient_dim: usize,
    dim: usize,
    cells: Vec<(Cone, Int)>,
}

impl WeightedFan {
    /// Merges identical cones, drops zero weights, sorts cells canonically.
    pub fn new(ambient_dim: usize, dim: usize, cells: Vec<(Cone, Int)>) -> WeightedFan {
        let mut m: BTreeMap<(Vec<IntVec>, Vec<IntVec>), (Cone, Int)> = BTreeMap::new();
        for (c, w) in cells {
            debug_assert_eq!(c.dim(), dim, "cell of wrong dimension");
            let key = (c.rays.clone(), c.lineality.clone());
            let e = m.entry(key).or_insert_with(|| (c, Int::zero()));
            e.1 += w;
        }
        let cells = m.into_values().filter(|(_, w)| !w.is_zero()).collect();
        WeightedFan { ambient_dim, dim, cells }
    }

    pub fn whole_space(n: usize) -> WeightedFan {
        WeightedFan::new(n, n, vec![(Cone::whole_space(n), Int::one())])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &[(Cone, Int)] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Sum of the weights (the degree, for zero-dimensional fans).
    pub fn total_weight(&self) -> Int {
        self.cells.iter().map(|(_, w)| w.clone()).sum()
    }

    pub fn scale(&self, k: &Int) -> WeightedFan {
        WeightedFan::new(
            self.ambient_dim,
            self.dim,
            self.cells.iter().map(|(c, w)| (c.clone(), w * k)).collect(),
        )
    }

    /// Cell-wise sum; both fans must be supported on cells of one common subdivision.
    pub fn add(&self, other: &WeightedFan) -> Result<WeightedFan> {
        if self.ambient_dim != other.ambient_dim || self.dim != other.dim {
            return Err(Error::DimensionMismatch("fans of different dimensions".into()));
        }
        let mut cells = self.cells.clone();
        cells.extend(other.cells.iter().cloned());
        Ok(WeightedFan::new(self.ambient_dim, self.dim, cells))
    }

    /// Balancing around every codimension-one face of the cells.
    pub fn is_balanced(&self) -> bool {
        if self.dim == 0 {
            return true;
        }
        let n = self.ambient_dim;
        let mut around: BTreeMap<(Vec<IntVec>, Vec<IntVec>), (Cone, Vec<IntVec>)> = BTreeMap::new();
        for (c, w) in &self.cells {
            for tau in c.facets() {
                let key = (tau.rays.clone(), tau.lineality.clone());
                let entry = around.entry(key).or_insert_with(|| (tau.clone(), vec![]));
                // primitive generator of the cell modulo the face, scaled by weight
                let proj = crate::lattice::projection_killing(&tau.span_lattice(), n);
                let u = primitive_int(&proj.apply_linear(&integerize(&c.relint_point())));
                entry.1.push(u.iter().map(|x| x * w).collect());
            }
        }
        around.values().all(|(_, vs)| {
            let mut s = vec![Int::zero(); vs[0].len()];
            for v in vs {
                for (x, y) in s.iter_mut().zip(v) {
                    *x += y;
                }
            }
            s.iter().all(|x| x.is_zero())
        })
    }
}

/// Normal cone of a face (given by vertex indices) of a polytope.
pub fn normal_cone(p: &Polytope, face_vertices: &[usize]) -> Cone {
    let rays: Vec<IntVec> = p
        .facets()
        .iter()
        .zip(p.facet_incidence())
        .filter(|(_, inc)| face_vertices.iter().all(|v| inc.binary_search(v).is_ok()))
        .map(|(f, _)| f.normal.clone())
        .collect();
    Cone::from_generators(p.ambient_dim(), &rays, &p.span().equations)
}

/// The normal fan: one cone per face.
#[derive(Debug, Clone)]
pub struct NormalFan {
    ambient_dim: usize,
    /// `(face vertex indices, face dimension, cone)`.
    pub cones: Vec<(Vec<usize>, usize, Cone)>,
}

impl NormalFan {
    /// Cones of a given dimension with weight 1.
    pub fn skeleton(&self, k: usize) -> WeightedFan {
        let cells = self
            .cones
            .iter()
            .filter(|(_, _, c)| c.dim() == k)
            .map(|(_, _, c)| (c.clone(), Int::one()))
            .collect();
        WeightedFan::new(self.ambient_dim, k, cells)
    }

    /// Maximal cones (normal cones of vertices) with weight 1.
    pub fn maximal(&self) -> WeightedFan {
        self.skeleton(self.ambient_dim)
    }
}

pub fn normal_fan(p: &Polytope) -> NormalFan {
    let cones = p
        .faces()
        .iter()
        .map(|f| (f.vertices.clone(), f.dim, normal_cone(p, &f.vertices)))
        .collect();
    NormalFan { ambient_dim: p.ambient_dim(), cones }
}

/// Tropical class of `P` in the ring of fans: the codimension-`k` product `P_1 ⋯ P_k` of
/// tropical hypersurfaces, with weights `MV(P_1^ρ, …, P_k^ρ)` on the codimension-`k` cones
/// of the common refinement of the normal fans of `refine` (which must contain the factors).
pub fn tropical_product(factors: &[&Polytope], refine: &[&Polytope]) -> Result<WeightedFan> {
    let k = factors.len();
    let n = refine
        .first()
        .or(factors.first())
        .map(|p| p.ambient_dim())
        .ok_or_else(|| Error::DimensionMismatch("no polytopes".into()))?;
    if k > n {
        return Err(Error::DimensionMismatch(format!("codimension {k} in dimension {n}")));
    }
    if k == 0 {
        return Ok(WeightedFan::whole_space(n));
    }
    let mut sum = refine.first().copied().unwrap_or(factors[0]).clone();
    for p in refine.iter().skip(1).chain(factors.iter()) {
        sum = crate::polytope::minkowski_sum(&sum, p);
    }
    let mut cells = Vec::new();
    for f in sum.faces().iter().filter(|f| f.dim == k) {
        let cone = normal_cone(&sum, &f.vertices);
        let p = integerize_or_zero(&cone.relint_point());
        let faces: Vec<Polytope> = factors.iter().map(|q| q.face(&p)).collect();
        let refs: Vec<&Polytope> = faces.iter().collect();
        let w = mixed_volume(&refs)?;
        if !w.is_zero() {
            cells.push((cone, w));
        }
    }
    Ok(WeightedFan::new(n, n - k, cells))
}

fn integerize_or_zero(v: &[Rat]) -> IntVec {
    if is_zero_vec(v) {
        vec![Int::zero(); v.len()]
    } else {
        integerize(v)
    }
}

/// Tropical hypersurface `[P]`: edge-dual cones weighted by lattice edge length.
pub fn tropical_fan(p: &Polytope) -> Result<WeightedFan> {
    tropical_product(&[p], &[p])
}

/// Integer combination `Σ c_j · Π_i P_{j,i}` of products of tropical hypersurfaces, all of
/// the same codimension, evaluated on the common refinement of every polytope involved.
pub fn tropical_combination(terms: &[(Int, Vec<&Polytope>)]) -> Result<WeightedFan> {
    let mut all: Vec<&Polytope> = Vec::new();
    for (_, fs) in terms {
        for p in fs {
            if !all.iter().any(|q| *q == *p) {
                all.push(p);
            }
        }
    }
    let mut out: Option<WeightedFan> = None;
    for (c, fs) in terms {
        let f = tropical_product(fs, &all)?.scale(c);
        out = Some(match out {
            None => f,
            Some(acc) => acc.add(&f)?,
        });
    }
    out.ok_or_else(|| Error::DimensionMismatch("empty combination".into()))
}

fn lattice_index(rows: &[IntVec], n: usize) -> Int {
    let snf = smith_normal_form(rows, n);
    snf.diag.iter().fold(Int::one(), |a, d| a * d)
}

/// Stable intersection by the fan displacement rule with the infinitesimal displacement
/// vector `(1, δ, δ², …)`.
pub fn stable_intersection(f: &WeightedFan, g: &WeightedFan) -> Result<WeightedFan> {
    let n = f.ambient_dim;
    if g.ambient_dim != n {
        return Err(Error::DimensionMismatch("ambient dimensions differ".into()));
    }
    if f.dim + g.dim < n {
        return Err(Error::DimensionMismatch("codimensions exceed the ambient dimension".into()));
    }
    let m = f.dim + g.dim - n;
    let mut cells: Vec<(Cone, Int)> = Vec::new();
    for (s, ws) in &f.cells {
        let ls = s.span_lattice();
        for (t, wt) in &g.cells {
            let lt = t.span_lattice();
            let mut both = ls.clone();
            both.extend(lt.iter().cloned());
            if rank_int(&both) != n {
                continue;
            }
            let rho = s.intersect(t);
            if rho.dim() != m {
                continue;
            }
            if !displaced_meet(s, t, &rho, &ls, &lt) {
                continue;
            }
            let w = ws * wt * lattice_index(&both, n);
            cells.push((rho, w));
        }
    }
    Ok(WeightedFan::new(n, m, cells))
}

/// Whether `σ ∩ (τ + εv) ≠ ∅` near `ρ` for infinitesimal `ε` and `v = (1, δ, δ², …)`.
fn displaced_meet(s: &Cone, t: &Cone, rho: &Cone, ls: &[IntVec], lt: &[IntVec]) -> bool {
    let n = s.ambient_dim();
    let mut rows: Vec<RatVec> = rat_rows(ls);
    rows.extend(lt.iter().map(|r| to_rat(r).iter().map(|x| -x).collect::<RatVec>()));
    // decomposition e_j = s_j - t_j with s_j in lin σ, t_j in lin τ
    let mut s_parts: Vec<RatVec> = Vec::with_capacity(n);
    let mut t_parts: Vec<RatVec> = Vec::with_capacity(n);
    for j in 0..n {
        let e: RatVec = (0..n).map(|i| if i == j { Rat::one() } else { Rat::zero() }).collect();
        let c = solve_combination(&rows, &e).expect("transversal spans");
        let mut sj = vec![Rat::zero(); n];
        for (ci, r) in c[..ls.len()].iter().zip(ls) {
            for (x, y) in sj.iter_mut().zip(r) {
                *x += ci * Rat::from_integer(y.clone());
            }
        }
        let tj = sub_rat(&sj, &e);
        s_parts.push(sj);
        t_parts.push(tj);
    }
    let lex_sign_ok = |a: &IntVec, parts: &[RatVec]| -> bool {
        for part in parts {
            let v = dot_ir(a, part);
            if !v.is_zero() {
                return v.is_positive();
            }
        }
        true
    };
    s.tight_inequalities(rho).iter().all(|a| lex_sign_ok(a, &s_parts))
        && t.tight_inequalities(rho).iter().all(|a| lex_sign_ok(a, &t_parts))
}

/// True iff every nonzero cell of `f` lies in a cone of the normal fan of `p` whose
/// dimension is at most `dim f`.
pub fn is_compatible(p: &Polytope, f: &WeightedFan) -> bool {
    let n = p.ambient_dim();
    f.cells.iter().filter(|(_, w)| !w.is_zero()).all(|(c, _)| {
        let q = c.relint_point();
        let face = p.face_indices_rat(&q);
        let fv = p.sub_polytope(&face);
        if n - fv.dim() > f.dim {
            return false;
        }
        c.generators().iter().all(|g| {
            let gf = p.face_indices(g);
            face.iter().all(|v| gf.contains(v))
        })
    })
}
