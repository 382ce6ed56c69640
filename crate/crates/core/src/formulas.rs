//! Euler characteristics, tropical fans and irreducibility tests for complete
//! intersections, plus the two mixed-volume localization identities.

use crate::arith::*;
use crate::error::{Error, Result};
use crate::fans::{is_compatible, normal_cone, tropical_combination, WeightedFan};
use crate::incremental::{
    anti_value, blinders, check_incremental, condition_star, hat_incremental, horizontal_edges, involution,
};
use crate::lattice::{projection_killing, saturation, LatticeProjection};
use crate::polytope::{face_volume, lattice_volume, minkowski_sum, mixed_volume, mixed_volume_rat, shiftable_into_interior, Polytope};
use crate::support::SupportSet;
use crate::toric::{face_lattice, is_reflexive, link_region_volume};
use crate::virtual_expr::{Evaluator, VirtualExpr};
use num_traits::{One, Zero};

fn sym(s: &str) -> VirtualExpr {
    VirtualExpr::symbol(s)
}

fn whole(r: Rat) -> Result<Int> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NotLattice)
    }
}

fn evaluate(e: &VirtualExpr, binding: &[(&str, &Polytope)], n: usize) -> Result<Int> {
    let mut ev = Evaluator::new();
    for (s, p) in binding {
        ev.bind(s, (*p).clone());
    }
    whole(ev.evaluate(e, n)?)
}

fn check_dims(polys: &[&Polytope], n: usize) -> Result<()> {
    if polys.iter().any(|p| p.ambient_dim() != n) {
        return Err(Error::DimensionMismatch(format!("expected polytopes in dimension {n}")));
    }
    Ok(())
}

/// `e_n(A_1, …, A_k)`: the Euler characteristic of a generic complete intersection.
pub fn euler_bkk(polys: &[&Polytope], n: usize) -> Result<Int> {
    if polys.is_empty() {
        return Err(Error::InvalidInput("no supports".into()));
    }
    check_dims(polys, n)?;
    let names: Vec<String> = (0..polys.len()).map(|i| format!("P{i}")).collect();
    let xs: Vec<VirtualExpr> = names.iter().map(|s| sym(s)).collect();
    let binding: Vec<(&str, &Polytope)> = names.iter().map(|s| s.as_str()).zip(polys.iter().copied()).collect();
    evaluate(&VirtualExpr::e_n(&xs, n), &binding, n)
}

/// Degree-`n` part of `Π X_i/(1+X_i)` with `X_i = A_i − A_{i−1}` and `A_0` a point.
pub fn euler_incremental_chain(chain: &[&Polytope]) -> Result<Int> {
    let n = chain.first().ok_or_else(|| Error::InvalidInput("empty chain".into()))?.ambient_dim();
    check_dims(chain, n)?;
    let names: Vec<String> = (0..chain.len()).map(|i| format!("P{i}")).collect();
    let mut gf = VirtualExpr::constant(Rat::one());
    for i in 0..chain.len() {
        let mut x = sym(&names[i]);
        if i > 0 {
            x = x - sym(&names[i - 1]);
        }
        gf = gf.mul_truncated(&VirtualExpr::frac(&x, n), n);
    }
    let binding: Vec<(&str, &Polytope)> = names.iter().map(|s| s.as_str()).zip(chain.iter().copied()).collect();
    evaluate(&gf, &binding, n)
}

/// `e_n(A, X − A)` for a two-step chain with incremental `X`.
fn e_pair(a: &Polytope, x: &Polytope, n: usize) -> Result<Int> {
    let expr = VirtualExpr::e_n(&[sym("A"), sym("X") - sym("A")], n);
    evaluate(&expr, &[("A", a), ("X", x)], n)
}

#[derive(Debug, Clone)]
pub struct CriticalCISummary {
    pub support: SupportSet,
    pub axis: usize,
    pub hat: Polytope,
    /// Generating function `A/(1+A) · (Â−A)/(1+Â−A)`.
    pub euler_gf: Int,
    /// `e(A, Â−A)`.
    pub euler_e: Int,
    /// `e(A,A) − Σ_b (e(A,A) − e(A, Â_(b) − A))`.
    pub euler_local: Int,
    /// `[A]·([Â] − [A])`; `None` below dimension 2.
    pub tropical: Option<WeightedFan>,
    pub irreducible_sufficient: bool,
    pub calabi_yau_sufficient: bool,
    /// Milnor numbers are taken to be zero.
    pub smoothness_assumed: bool,
}

impl CriticalCISummary {
    pub fn eulers_agree(&self) -> bool {
        self.euler_gf == self.euler_e && self.euler_e == self.euler_local
    }
}

/// Local form `e(A,A) − Σ_b (e(A,A) − e(A, Â_(b) − A))` over the pieces differing from `2A`.
pub fn critical_euler_local(a: &SupportSet, axis: usize) -> Result<Int> {
    let inc = hat_incremental(a, axis)?;
    let p = Polytope::hull(a);
    let n = a.dim();
    let base = e_pair(&p, &p.scale(&rat(2)), n)?;
    let mut total = base.clone();
    for (_, piece) in &inc.contributing {
        total -= &base - e_pair(&p, piece, n)?;
    }
    Ok(total)
}

/// Critical locus `{f = ∂f/∂x_axis = 0}`.
pub fn critical_ci_summary(a: &SupportSet, axis: usize) -> Result<CriticalCISummary> {
    let inc = hat_incremental(a, axis)?;
    let n = a.dim();
    let p = Polytope::hull(a);
    let hat = inc.hat.clone();
    let euler_gf = euler_incremental_chain(&[&p, &hat])?;
    let euler_e = e_pair(&p, &hat, n)?;
    let euler_local = critical_euler_local(a, axis)?;
    let tropical = if n >= 2 {
        Some(tropical_combination(&[(int(1), vec![&p, &hat]), (int(-1), vec![&p, &p])])?)
    } else {
        None
    };
    let irreducible_sufficient = shiftable_into_interior(&p, &hat).is_some();
    let reflexive = hat.is_full_dim() && is_reflexive(&hat)?;
    let calabi_yau_sufficient = reflexive && tropical.as_ref().is_some_and(|t| is_compatible(&hat, t));
    Ok(CriticalCISummary {
        support: a.clone(),
        axis,
        hat,
        euler_gf,
        euler_e,
        euler_local,
        tropical,
        irreducible_sufficient,
        calabi_yau_sufficient,
        smoothness_assumed: true,
    })
}

/// Projection along the antiinvariant direction `e_1 − e_2`.
pub fn diagonal_projection(n: usize) -> LatticeProjection {
    let mut v = vec![Int::zero(); n];
    v[0] = Int::one();
    v[1] = -Int::one();
    projection_killing(&[v], n)
}

fn project(p: &Polytope, proj: &LatticeProjection) -> Polytope {
    p.image(|v| proj.apply_rat(v))
}

/// Outputs for the symmetric complete intersection `f(x_1,x_2,…) = f(x_2,x_1,…) = 0`.
/// Fields wrapped in `Option` are `None` when condition (*) fails.
#[derive(Debug, Clone)]
pub struct SymmetricCISummary {
    pub support: SupportSet,
    pub denominator: Int,
    pub check: Polytope,
    /// `Ǎ ⊖ d_A·𝓘`.
    pub reduced: Polytope,
    pub condition_star: bool,
    /// `e(A, Ǎ − d_A𝓘 − A)` for the proper part.
    pub euler_proper: Option<Int>,
    /// `e(𝓘, A, Ǎ − d_A𝓘 − A)` for each diagonal component.
    pub euler_diagonal: Option<Int>,
    /// `e_{n−1}(pA, pǍ − pA)`, the same number through the projection.
    pub euler_diagonal_projected: Option<Int>,
    /// `[A]·([Ǎ] − d_A[𝓘] − [A])`.
    pub tropical_proper: Option<WeightedFan>,
    /// `[pA]·([pǍ] − [pA])`.
    pub tropical_diagonal: Option<WeightedFan>,
    pub irreducible_proper: Option<bool>,
    pub calabi_yau_proper: bool,
    pub irreducible_diagonal: Option<bool>,
    pub calabi_yau_diagonal: bool,
    pub smoothness_assumed: bool,
}

fn reflexive_or_false(p: &Polytope) -> Result<bool> {
    Ok(p.is_full_dim() && p.is_lattice() && is_reflexive(p)?)
}

pub fn symmetric_ci_summary(a: &SupportSet) -> Result<SymmetricCISummary> {
    let si = check_incremental(a)?;
    let star = condition_star(a)?;
    let n = a.dim();
    let p = Polytope::hull(a);
    let d = Rat::from_integer(si.denominator.clone());
    let proper_expr = |k: usize| {
        let x = sym("C") - sym("I").scale(&d) - sym("A");
        if k == 3 {
            VirtualExpr::e_n(&[sym("I"), sym("A"), x], n)
        } else {
            VirtualExpr::e_n(&[sym("A"), x], n)
        }
    };
    let binding = [("A", &p), ("C", &si.check), ("I", &si.segment)];
    let proj = diagonal_projection(n);
    let pa = Polytope::hull(&proj.apply_set(a));
    let pc = project(&si.check, &proj);

    let tropical_proper = if n >= 2 {
        Some(tropical_combination(&[
            (int(1), vec![&p, &si.check]),
            (-si.denominator.clone(), vec![&p, &si.segment]),
            (int(-1), vec![&p, &p]),
        ])?)
    } else {
        None
    };
    let tropical_diagonal = if n >= 3 {
        Some(tropical_combination(&[(int(1), vec![&pa, &pc]), (int(-1), vec![&pa, &pa])])?)
    } else {
        None
    };
    let calabi_yau_proper = reflexive_or_false(&si.reduced)?;
    let calabi_yau_diagonal = reflexive_or_false(&pc)?;

    let (euler_proper, euler_diagonal, euler_diagonal_projected, irreducible_proper, irreducible_diagonal) = if star {
        let shifted = minkowski_sum(&p, &si.segment.scale(&d));
        (
            Some(evaluate(&proper_expr(2), &binding, n)?),
            Some(evaluate(&proper_expr(3), &binding, n)?),
            Some(e_pair(&pa, &pc, n - 1)?),
            Some(shiftable_into_interior(&shifted, &si.check).is_some()),
            Some(shiftable_into_interior(&pa, &pc).is_some()),
        )
    } else {
        (None, None, None, None, None)
    };
    Ok(SymmetricCISummary {
        support: a.clone(),
        denominator: si.denominator.clone(),
        check: si.check,
        reduced: si.reduced,
        condition_star: star,
        euler_proper,
        euler_diagonal,
        euler_diagonal_projected,
        tropical_proper,
        tropical_diagonal,
        irreducible_proper,
        calabi_yau_proper,
        irreducible_diagonal,
        calabi_yau_diagonal,
        smoothness_assumed: true,
    })
}

/// `e_{n−1}(pA,pA) − Σ_b (e_{n−1}(pA,pA) − e_{n−1}(pA, pǍ_(b) − pA))`.
pub fn symmetric_diagonal_local(a: &SupportSet) -> Result<Int> {
    let si = check_incremental(a)?;
    let n = a.dim();
    let proj = diagonal_projection(n);
    let pa = Polytope::hull(&proj.apply_set(a));
    let base = e_pair(&pa, &pa.scale(&rat(2)), n - 1)?;
    let mut total = base.clone();
    for piece in si.pieces.values() {
        total -= &base - e_pair(&pa, &project(piece, &proj), n - 1)?;
    }
    Ok(total)
}

/// `e(A, IA − d_A𝓘) − Σ_b (e(A, IA − d_A𝓘) − e(A, Ǎ_(b) − d_A𝓘 − A))`.
pub fn symmetric_proper_local(a: &SupportSet) -> Result<Int> {
    let si = check_incremental(a)?;
    let n = a.dim();
    let p = Polytope::hull(a);
    let ip = p.image(|v| {
        let mut w = v.clone();
        w.swap(0, 1);
        w
    });
    let d = Rat::from_integer(si.denominator.clone());
    let expr = |big: &str| VirtualExpr::e_n(&[sym("A"), sym(big) - sym("I").scale(&d) - sym("A")], n);
    let ev = |q: &Polytope| evaluate(&expr("Q"), &[("A", &p), ("I", &si.segment), ("Q", q)], n);
    let base = ev(&minkowski_sum(&p, &ip))?;
    let mut total = base.clone();
    for piece in si.pieces.values() {
        total -= &base - ev(piece)?;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkFormula {
    Critical,
    SymmetricDiagonal,
    SymmetricProper,
}

fn lattice_length(e: &SupportSet) -> Result<Int> {
    face_volume(&Polytope::hull(e))
}

fn points_on(a: &SupportSet, face: &Polytope) -> SupportSet {
    a.filter(|x| face.contains(&to_rat(x))).expect("face contains vertices of the set")
}

/// The three-dimensional expressions through link polygons of edges.
pub fn link_formulas_n3(a: &SupportSet, which: LinkFormula) -> Result<Int> {
    if a.dim() != 3 {
        return Err(Error::DimensionMismatch("link formulas are for supports in Z^3".into()));
    }
    match which {
        LinkFormula::Critical if !Polytope::hull(a).is_full_dim() => Err(Error::NotFullDim),
        LinkFormula::Critical => link_critical(a, 0),
        LinkFormula::SymmetricDiagonal => link_diagonal(a),
        LinkFormula::SymmetricProper => link_proper(a),
    }
}

/// Negation of `Σ_{b extreme} MV(A, A∖H_b, (A+A)∖H_b) − 2 Vol A − Σ_{horizontal E} Vol E · Vol[A ∩ H_b/E]`;
/// the sign matches `e_3` of two sets.
fn link_critical(a: &SupportSet, axis: usize) -> Result<Int> {
    let vals = a.coordinate_values(axis);
    if vals.len() < 2 {
        return Err(Error::DegenerateAxis);
    }
    let (lo, hi) = (vals[0].clone(), vals[vals.len() - 1].clone());
    let p = Polytope::hull(a);
    let aa = a.sum(a);
    let mut total = -int(2) * face_volume(&p)?;
    for b in [&lo, &hi] {
        let rest = Polytope::hull(&a.filter(|x| &x[axis] != b).expect("two levels"));
        let two_b = b * int(2);
        let rest2 = Polytope::hull(&aa.filter(|x| x[axis] != two_b).expect("two levels"));
        total += mixed_volume(&[&p, &rest, &rest2])?;
    }
    for e in horizontal_edges(a, axis) {
        let b = e.points()[0][axis].clone();
        if b == lo || b == hi {
            continue;
        }
        let rest = a.filter(|x| x[axis] != b).expect("interior level");
        total -= lattice_length(&e)? * whole(link_region_volume(a, &rest, &e)?)?;
    }
    Ok(-total)
}

/// `Vol pA − Σ_blinders Vol pE · Vol[pA − p(A ∖ {d=b})/pE]`, lengths in the quotient lattice.
fn link_diagonal(a: &SupportSet) -> Result<Int> {
    let proj = diagonal_projection(3);
    let pa = proj.apply_set(a);
    let pa_hull = Polytope::hull(&pa);
    let mut total = if pa_hull.is_full_dim() { lattice_volume(&pa_hull)? } else { Int::zero() };
    for e in blinders(a) {
        let b = anti_value(&e.points()[0]);
        let rest = proj.apply_set(&a.filter(|x| anti_value(x) != b).ok_or(Error::DenominatorUndefined)?);
        let pe = points_on(&pa, &Polytope::hull(&proj.apply_set(&e)));
        total -= lattice_length(&pe)? * whole(link_region_volume(&pa, &rest, &pe)?)?;
    }
    Ok(total)
}

/// `e(A, IA − d_A𝓘) + Σ_blinders (Vol E · Vol[(A+IA) − Ǎ_(b)/E+IE]
///   − 2d_A · Vol pE · Vol[p(A+IA) − pǍ_(b)/p(E+IE)])`, `b` the value of `d` on `E`.
fn link_proper(a: &SupportSet) -> Result<Int> {
    let si = check_incremental(a)?;
    let p = Polytope::hull(a);
    let ia = a.map(3, |x| involution(x));
    let sum = a.sum(&ia);
    let proj = diagonal_projection(3);
    let psum = proj.apply_set(&sum);
    let d = Rat::from_integer(si.denominator.clone());
    let expr = VirtualExpr::e_n(&[sym("A"), sym("B") - sym("I").scale(&d)], 3);
    let mut total = evaluate(&expr, &[("A", &p), ("B", &Polytope::hull(&ia)), ("I", &si.segment)], 3)?;
    for e in blinders(a) {
        let b = anti_value(&e.points()[0]);
        let part = a.filter(|x| anti_value(x) != b).ok_or(Error::DenominatorUndefined)?.sum(&ia);
        let piece = part.union(&part.map(3, |x| involution(x)));
        let ie = e.map(3, |x| involution(x));
        let edge = e.sum(&ie);
        let face = points_on(&sum, &Polytope::hull(&edge));
        total += lattice_length(&e)? * whole(link_region_volume(&sum, &piece, &face)?)?;
        let pface = points_on(&psum, &Polytope::hull(&proj.apply_set(&edge)));
        let pe = proj.apply_set(&e);
        let link = whole(link_region_volume(&psum, &proj.apply_set(&piece), &pface)?)?;
        total -= int(2) * &si.denominator * lattice_length(&pe)? * link;
    }
    Ok(total)
}

/// Outcome of the search for a subfamily squeezed into a low-dimensional subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Irreducible,
    /// `q = subset.len()` supports fit, up to shifts, in the `q`-dimensional saturated
    /// subspace spanned by `subspace`, with lattice mixed volume `mixed_volume > 1` there:
    /// the variety splits into that many pieces.
    Reducible { subset: Vec<usize>, subspace: Vec<IntVec>, mixed_volume: Int },
    /// The supports in `subset` span a subspace of dimension below `subset.len()`:
    /// the generic system has no solutions.
    Empty { subset: Vec<usize> },
}

fn differences(a: &SupportSet) -> Vec<IntVec> {
    let p0 = &a.points()[0];
    a.points()[1..].iter().map(|p| sub_int(p, p0)).collect()
}

pub fn irreducibility_bkk(sets: &[&SupportSet]) -> Result<IrreducibilityVerdict> {
    let n = sets.first().ok_or_else(|| Error::InvalidInput("no supports".into()))?.dim();
    if sets.iter().any(|s| s.dim() != n) {
        return Err(Error::DimensionMismatch("supports of different dimensions".into()));
    }
    let k = sets.len();
    let mut witness = None;
    for q in 1..=k.min(n.saturating_sub(1)) {
        for subset in crate::fans::subsets(k, q) {
            let dirs: Vec<IntVec> = subset.iter().flat_map(|&j| differences(sets[j])).collect();
            let basis = saturation(&dirs, n);
            if basis.len() < q {
                return Ok(IrreducibilityVerdict::Empty { subset });
            }
            if basis.len() > q || witness.is_some() {
                continue;
            }
            let rows: Vec<RatVec> = basis.iter().map(|b| to_rat(b)).collect();
            let local: Vec<Polytope> = subset
                .iter()
                .map(|&j| {
                    let mut pts = vec![vec![Rat::zero(); q]];
                    pts.extend(differences(sets[j]).iter().map(|v| solve_combination(&rows, &to_rat(v)).expect("in span")));
                    Polytope::from_points(&pts)
                })
                .collect();
            let refs: Vec<&Polytope> = local.iter().collect();
            let mv = mixed_volume(&refs)?;
            if mv > Int::one() {
                witness = Some(IrreducibilityVerdict::Reducible { subset, subspace: basis, mixed_volume: mv });
            }
        }
    }
    Ok(witness.unwrap_or(IrreducibilityVerdict::Irreducible))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocVolReport {
    /// `k`-dimensional faces of `A_0` with no point of `A`.
    pub faces: Vec<SupportSet>,
    /// `A_0^{n−k} A_1⋯A_k − A^{n−k} A_1⋯A_k`.
    pub lhs: Int,
    /// `Σ_Q A_0^{n−k} A_1⋯A_k − A_Q^{n−k} A_1⋯A_k`.
    pub middle: Int,
    /// `Σ_Q A_0^{n−k} A_1^Q⋯A_k^Q − A_Q^{n−k} A_1^Q⋯A_k^Q`.
    pub rhs: Int,
    /// `Σ_Q (A_1^Q⋯A_k^Q) · Vol_Z[A_0 − A/Q]`.
    pub link: Int,
}

impl LocVolReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.middle && self.middle == self.rhs && self.rhs == self.link
    }
}

fn mv_with_power(base: &Polytope, power: usize, rest: &[&Polytope]) -> Result<Int> {
    let mut polys: Vec<&Polytope> = std::iter::repeat(base).take(power).collect();
    polys.extend_from_slice(rest);
    mixed_volume(&polys)
}

fn same_normal_fan(p: &Polytope, q: &Polytope) -> bool {
    let s = minkowski_sum(p, q);
    s.faces().len() == p.faces().len() && s.faces().len() == q.faces().len()
}

/// Face of `p` maximizing a relative interior covector of the normal cone of `q ⊂ base`.
fn corresponding_face(base: &Polytope, q: &SupportSet, p: &Polytope) -> Polytope {
    let qhull = Polytope::hull(q);
    let idx: Vec<usize> = (0..base.vertices().len()).filter(|&i| qhull.contains(&base.vertices()[i])).collect();
    let l = normal_cone(base, &idx).relint_point();
    p.face_rat(&l)
}

/// Lattice mixed volume of `k` polytopes parallel to the `k`-dimensional face `q`.
fn mixed_volume_along(q: &SupportSet, polys: &[Polytope]) -> Result<Int> {
    let basis = saturation(&differences(q), q.dim());
    let rows: Vec<RatVec> = basis.iter().map(|b| to_rat(b)).collect();
    let local: Vec<Polytope> = polys
        .iter()
        .map(|p| {
            let v0 = p.vertices()[0].clone();
            let pts: Vec<RatVec> = p
                .vertices()
                .iter()
                .map(|v| solve_combination(&rows, &sub_rat(v, &v0)).expect("parallel to the face"))
                .collect();
            Polytope::from_points(&pts)
        })
        .collect();
    if local.is_empty() {
        return Ok(Int::one());
    }
    let refs: Vec<&Polytope> = local.iter().collect();
    mixed_volume(&refs)
}

/// Both sides of the volume localization identity for `A ⊂ A_0` and `A_1, …, A_k`
/// compatible with `A_0`.
pub fn locvol(a0: &SupportSet, a: &SupportSet, others: &[&SupportSet]) -> Result<LocVolReport> {
    let n = a0.dim();
    let k = others.len();
    if !a.is_subset(a0) || k >= n || others.iter().any(|s| s.dim() != n) {
        return Err(Error::InvalidInput("need A ⊂ A_0 and fewer than n further sets".into()));
    }
    let p0 = Polytope::hull(a0);
    if !p0.is_full_dim() {
        return Err(Error::NotFullDim);
    }
    let hulls: Vec<Polytope> = others.iter().map(|s| Polytope::hull(s)).collect();
    if hulls.iter().any(|h| !same_normal_fan(&p0, h)) {
        return Err(Error::HypothesisViolated("the sets are not compatible".into()));
    }
    let removed_faces: Vec<(SupportSet, usize)> = face_lattice(a0)
        .faces
        .into_iter()
        .zip(face_lattice(a0).dims)
        .filter(|(f, _)| f.points().iter().all(|x| !a.contains(x)))
        .collect();
    if removed_faces.iter().any(|(_, d)| *d > k) {
        return Err(Error::HypothesisViolated(format!("A_0 ∖ A contains a face of dimension above {k}")));
    }
    let faces: Vec<SupportSet> = removed_faces.into_iter().filter(|(_, d)| *d == k).map(|(f, _)| f).collect();
    let pa = Polytope::hull(a);
    let refs: Vec<&Polytope> = hulls.iter().collect();
    let top = mv_with_power(&p0, n - k, &refs)?;
    let lhs = &top - mv_with_power(&pa, n - k, &refs)?;
    let verts = p0.vertex_set().ok_or(Error::NotLattice)?;
    let (mut middle, mut rhs, mut link) = (Int::zero(), Int::zero(), Int::zero());
    for q in &faces {
        let aq = verts.filter(|v| !q.contains(v)).map_or(a.clone(), |s| s.union(a));
        let paq = Polytope::hull(&aq);
        middle += &top - mv_with_power(&paq, n - k, &refs)?;
        let qfaces: Vec<Polytope> = hulls.iter().map(|h| corresponding_face(&p0, q, h)).collect();
        let qrefs: Vec<&Polytope> = qfaces.iter().collect();
        rhs += mv_with_power(&p0, n - k, &qrefs)? - mv_with_power(&paq, n - k, &qrefs)?;
        link += mixed_volume_along(q, &qfaces)? * whole(link_region_volume(a0, a, q)?)?;
    }
    Ok(LocVolReport { faces, lhs, middle, rhs, link })
}

#[derive(Debug, Clone)]
pub struct LocMvReport {
    /// `B_i^λ` for each connected component `λ`.
    pub components: Vec<Vec<Polytope>>,
    /// `MV(A) − MV(B)`.
    pub lhs: Rat,
    /// `Σ_λ MV(A) − MV(B^λ)`.
    pub rhs: Rat,
}

impl LocMvReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn support_tuple(polys: &[&Polytope], l: &[Rat]) -> Vec<Rat> {
    polys.iter().map(|p| p.support_value_rat(l)).collect()
}

/// Mixed volume localization over the connected components of the set of covectors where
/// the support functions of `B_i ⊆ A_i` differ from those of `A_i`.
pub fn locmv(a: &[&Polytope], b: &[&Polytope]) -> Result<LocMvReport> {
    let n = a.first().ok_or_else(|| Error::InvalidInput("no polytopes".into()))?.ambient_dim();
    if a.len() != n || b.len() != n {
        return Err(Error::DimensionMismatch(format!("need {n} polytopes on each side")));
    }
    check_dims(a, n)?;
    check_dims(b, n)?;
    for (p, q) in a.iter().zip(b) {
        if q.vertices().iter().any(|v| !p.contains(v)) {
            return Err(Error::HypothesisViolated("B_i must lie in A_i".into()));
        }
    }
    let mut s = a[0].clone();
    for p in a[1..].iter().chain(b.iter()) {
        s = minkowski_sum(&s, p);
    }
    let nv = s.vertices().len();
    let covectors: Vec<RatVec> = (0..nv).map(|i| normal_cone(&s, &[i]).relint_point()).collect();
    let differs = |l: &[Rat]| support_tuple(a, l) != support_tuple(b, l);
    let node: Vec<bool> = covectors.iter().map(|l| differs(l)).collect();
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for (i, j) in s.edges() {
        if node[i] && node[j] && differs(&normal_cone(&s, &[i, j]).relint_point()) {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    let mut roots: Vec<usize> = (0..nv).filter(|&i| node[i]).map(|i| find(&mut parent, i)).collect();
    roots.sort();
    roots.dedup();

    let mv_a = mixed_volume_rat(a)?;
    let lhs = &mv_a - mixed_volume_rat(b)?;
    let mut rhs = Rat::zero();
    let mut components = Vec::new();
    for root in roots {
        let inside: Vec<bool> = (0..nv).map(|v| node[v] && find(&mut parent, v) == root).collect();
        let mut pieces = Vec::with_capacity(n);
        for i in 0..n {
            let chosen = |v: usize| if inside[v] { b[i] } else { a[i] };
            let pts: Vec<RatVec> = (0..nv)
                .map(|v| {
                    let f = chosen(v).face_rat(&covectors[v]);
                    f.vertices()[0].clone()
                })
                .collect();
            let piece = Polytope::from_points(&pts);
            for v in 0..nv {
                let cone = normal_cone(&s, &[v]);
                let target = &pts[v];
                let ok = cone.generators().iter().all(|g| {
                    let g = to_rat(g);
                    piece.support_value_rat(&g) == dot_rat(target, &g)
                });
                if !ok {
                    return Err(Error::HypothesisViolated("a localized polytope B_i^λ does not exist".into()));
                }
            }
            pieces.push(piece);
        }
        let refs: Vec<&Polytope> = pieces.iter().collect();
        rhs += &mv_a - mixed_volume_rat(&refs)?;
        components.push(pieces);
    }
    Ok(LocMvReport { components, lhs, rhs })
}
