//! Critical and symmetric incremental polytopes, blinders, condition (*), and support
//! sequences of engineered systems.

use crate::arith::*;
use crate::error::{Error, Result};
use crate::lattice::denominator_of_values;
use crate::polytope::{minkowski_diff, minkowski_sum, Polytope};
use crate::support::SupportSet;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalIncremental {
    pub support: SupportSet,
    pub axis: usize,
    pub hat: Polytope,
    /// Values `b` of the axis coordinate on `A+A` with `Â_(b) ≠ conv(A+A)`, with `Â_(b)`.
    pub contributing: Vec<(Int, Polytope)>,
}

fn axis_values(a: &SupportSet, axis: usize) -> Result<Vec<Int>> {
    if axis >= a.dim() {
        return Err(Error::InvalidInput(format!("axis {} out of range", axis + 1)));
    }
    let vals = a.coordinate_values(axis);
    if vals.len() < 2 {
        return Err(Error::DegenerateAxis);
    }
    Ok(vals)
}

/// `conv((A+A) ∖ H_b)` for every `b` in the axis range of `A+A`.
pub fn hat_pieces(a: &SupportSet, axis: usize) -> Result<Vec<(Int, Polytope)>> {
    axis_values(a, axis)?;
    let aa = a.sum(a);
    Ok(aa
        .coordinate_values(axis)
        .into_iter()
        .map(|b| {
            let rest = aa.filter(|p| p[axis] != b).expect("axis non-constant");
            (b, Polytope::hull(&rest))
        })
        .collect())
}

/// `Â = ∩_b conv((A+A) ∖ H_b)`, `H_b` the hyperplane where the axis coordinate is `b`.
pub fn hat_incremental(a: &SupportSet, axis: usize) -> Result<CriticalIncremental> {
    let pieces = hat_pieces(a, axis)?;
    let full = Polytope::hull(&a.sum(a));
    let contributing: Vec<(Int, Polytope)> = pieces.into_iter().filter(|(_, p)| *p != full).collect();
    let mut hat = full;
    for (_, p) in &contributing {
        hat = hat.intersect(p).ok_or(Error::EmptyResult)?;
    }
    Ok(CriticalIncremental { support: a.clone(), axis, hat, contributing })
}

/// Both sides of `Â^γ = hat(A^γ)`.
#[derive(Debug, Clone)]
pub struct HatFaceCheck {
    pub hat_face: Polytope,
    /// `None` when the axis coordinate is constant on `A^γ` and the right side is undefined.
    pub face_hat: Option<Polytope>,
}

impl HatFaceCheck {
    pub fn holds(&self) -> Option<bool> {
        self.face_hat.as_ref().map(|f| *f == self.hat_face)
    }
}

pub fn hat_face_identity(a: &SupportSet, l: &[Int], axis: usize) -> Result<HatFaceCheck> {
    if l.iter().all(|x| x.is_zero()) {
        return Err(Error::InvalidInput("zero covector".into()));
    }
    let hat = hat_incremental(a, axis)?.hat;
    let hat_face = hat.face(l);
    let value = a.values(l).into_iter().max().expect("nonempty");
    let face = a.filter(|p| dot_int(l, p) == value).expect("nonempty");
    let face_hat = match hat_incremental(&face, axis) {
        Ok(h) => Some(h.hat),
        Err(Error::DegenerateAxis) => None,
        Err(e) => return Err(e),
    };
    Ok(HatFaceCheck { hat_face, face_hat })
}

/// Swap of the first two coordinates.
pub fn involution(p: &[Int]) -> IntVec {
    let mut q = p.to_vec();
    q.swap(0, 1);
    q
}

/// `d = x_1 − x_2`.
pub fn anti_value(p: &[Int]) -> Int {
    &p[0] - &p[1]
}

/// The segment `conv{e_1, e_2}`.
pub fn anti_segment(n: usize) -> Polytope {
    let mut e1 = vec![Int::zero(); n];
    let mut e2 = vec![Int::zero(); n];
    e1[0] = Int::one();
    e2[1] = Int::one();
    Polytope::from_int_points(&[e1, e2])
}

fn swap_set(a: &SupportSet) -> SupportSet {
    a.map(a.dim(), |p| involution(p))
}

/// Gcd of the pairwise differences of `d` on `A`.
pub fn denominator(a: &SupportSet) -> Result<Int> {
    if a.dim() < 2 {
        return Err(Error::DimensionMismatch("the involution needs two coordinates".into()));
    }
    let vals: Vec<Int> = a.points().iter().map(|p| anti_value(p)).collect();
    denominator_of_values(&vals).ok_or(Error::DenominatorUndefined)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricIncremental {
    pub support: SupportSet,
    pub denominator: Int,
    pub check: Polytope,
    /// `Ǎ_(b)` for every value `b` of `d` on `A`; other `b` give `conv(A+IA)`.
    pub pieces: BTreeMap<Int, Polytope>,
    pub segment: Polytope,
    /// `Ǎ ⊖ d_A·𝓘`.
    pub reduced: Polytope,
}

pub fn check_incremental(a: &SupportSet) -> Result<SymmetricIncremental> {
    let d_a = denominator(a)?;
    let n = a.dim();
    let ia = swap_set(a);
    let sum = a.sum(&ia);
    let rest = sum.filter(|p| !anti_value(p).is_zero()).ok_or(Error::DenominatorUndefined)?;
    let check = Polytope::hull(&rest);
    let mut pieces = BTreeMap::new();
    for b in a.points().iter().map(|p| anti_value(p)) {
        if pieces.contains_key(&b) {
            continue;
        }
        let part = a.filter(|p| anti_value(p) != b).ok_or(Error::DenominatorUndefined)?;
        let s = part.sum(&ia);
        pieces.insert(b, Polytope::hull(&s.union(&swap_set(&s))));
    }
    let segment = anti_segment(n);
    let reduced = minkowski_diff(&check, &segment.scale(&Rat::from_integer(d_a.clone())))?;
    Ok(SymmetricIncremental { support: a.clone(), denominator: d_a, check, pieces, segment, reduced })
}

impl SymmetricIncremental {
    /// `reduced + d_A·𝓘 == Ǎ`.
    pub fn summand_holds(&self) -> bool {
        minkowski_sum(&self.reduced, &self.segment.scale(&Rat::from_integer(self.denominator.clone())))
            == self.check
    }
}

/// Points of `A` lying on the edge `(i, j)` of `conv A`.
fn edge_points(a: &SupportSet, p: &Polytope, i: usize, j: usize) -> SupportSet {
    let e = p.sub_polytope(&[i, j]);
    a.filter(|x| e.contains(&to_rat(x))).expect("edge contains its endpoints")
}

/// Edges `E` of `A` inside a plane `{d = b}` with `E + IE` an edge of `A + IA`.
/// Edges along the antiinvariant direction also sum to edges but are not blinders.
pub fn blinders(a: &SupportSet) -> Vec<SupportSet> {
    if a.dim() < 2 {
        return vec![];
    }
    let p = Polytope::hull(a);
    let big = Polytope::hull(&a.sum(&swap_set(a)));
    let big_edges: Vec<Polytope> = big.edges().iter().map(|&(i, j)| big.sub_polytope(&[i, j])).collect();
    p.edges()
        .into_iter()
        .filter_map(|(i, j)| {
            let (u, w) = (&p.vertices()[i], &p.vertices()[j]);
            if &u[0] - &u[1] != &w[0] - &w[1] {
                return None;
            }
            let e = p.sub_polytope(&[i, j]);
            let ie = e.image(|v| {
                let mut w = v.clone();
                w.swap(0, 1);
                w
            });
            let s = minkowski_sum(&e, &ie);
            if s.dim() == 1 && big_edges.contains(&s) {
                Some(edge_points(a, &p, i, j))
            } else {
                None
            }
        })
        .collect()
}

/// Edges of `A` on which the axis coordinate is constant.
pub fn horizontal_edges(a: &SupportSet, axis: usize) -> Vec<SupportSet> {
    let p = Polytope::hull(a);
    p.edges()
        .into_iter()
        .filter(|&(i, j)| p.vertices()[i][axis] == p.vertices()[j][axis])
        .map(|(i, j)| edge_points(a, &p, i, j))
        .collect()
}

/// For every symmetric face `Γ = IΓ` of `Ǎ` with `dim Γ > 2`, the denominator of
/// `Γ ∩ (A+IA) ∖ {d=0}` equals `d_A`.
pub fn condition_star(a: &SupportSet) -> Result<bool> {
    let si = check_incremental(a)?;
    let pts = a.sum(&swap_set(a)).filter(|p| !anti_value(p).is_zero()).expect("nonempty");
    let check = &si.check;
    for f in check.faces().iter().filter(|f| f.dim > 2) {
        let face = check.sub_polytope(&f.vertices);
        let swapped = face.image(|v| {
            let mut w = v.clone();
            w.swap(0, 1);
            w
        });
        if swapped != face {
            continue;
        }
        let vals: Vec<Int> = pts
            .points()
            .iter()
            .filter(|p| face.contains(&to_rat(p)))
            .map(|p| anti_value(p))
            .collect();
        if denominator_of_values(&vals).as_ref() != Some(&si.denominator) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSequence {
    pub support: SupportSet,
    pub vectors: Vec<RatVec>,
    pub l: IntVec,
    pub phi: Vec<Int>,
}

/// The derivative pair: `v_1` all ones, `v_2` the axis exponents.
pub fn derivative_pair(a: &SupportSet, axis: usize) -> Vec<RatVec> {
    vec![
        vec![Rat::one(); a.len()],
        a.points().iter().map(|p| Rat::from_integer(p[axis].clone())).collect(),
    ]
}

/// Whether `φ` is `l`-linearly independent: for every `c`, the `v_i` with `φ(i) ≥ c`
/// restricted to `A_{≥c}` are linearly independent.
pub fn is_l_independent(a: &SupportSet, v: &[RatVec], l: &[Int], phi: &[Int]) -> bool {
    let lv = a.values(l);
    let Some(hi) = phi.iter().max() else { return true };
    let lo = lv.iter().chain(phi.iter()).min().expect("nonempty").clone();
    let mut c = lo;
    while &c <= hi {
        let cols: Vec<usize> = (0..a.len()).filter(|&i| lv[i] >= c).collect();
        let rows: Vec<RatVec> = phi
            .iter()
            .zip(v)
            .filter(|(p, _)| **p >= c)
            .map(|(_, vi)| cols.iter().map(|&i| vi[i].clone()).collect())
            .collect();
        if rank(&rows) != rows.len() {
            return false;
        }
        c += 1;
    }
    true
}

/// The unique `l`-support sequence, built one index at a time by a downward search.
pub fn support_sequence(a: &SupportSet, v: &[RatVec], l: &[Int]) -> Result<SupportSequence> {
    if l.len() != a.dim() {
        return Err(Error::WrongLength { expected: a.dim(), got: l.len() });
    }
    if l.iter().all(|x| x.is_zero()) {
        return Err(Error::InvalidInput("zero covector".into()));
    }
    if v.iter().any(|vi| vi.len() != a.len()) {
        return Err(Error::WrongLength { expected: a.len(), got: v.iter().map(|x| x.len()).find(|&x| x != a.len()).unwrap_or(0) });
    }
    if rank(v) != v.len() {
        return Err(Error::DependentVectors);
    }
    let lv = a.values(l);
    let floor = lv.iter().min().expect("nonempty").clone();
    let mut phi: Vec<Int> = Vec::with_capacity(v.len());
    for vi in v {
        let mut c = (0..a.len())
            .filter(|&i| !vi[i].is_zero())
            .map(|i| lv[i].clone())
            .max()
            .expect("nonzero vector");
        loop {
            phi.push(c.clone());
            if c <= floor || is_l_independent(a, &v[..phi.len()], l, &phi) {
                break;
            }
            phi.pop();
            c -= 1;
        }
    }
    Ok(SupportSequence { support: a.clone(), vectors: v.to_vec(), l: l.to_vec(), phi })
}

/// Primitive integer covectors with entries in `[−r, r]`.
pub fn primitive_rays(n: usize, r: i64) -> Vec<IntVec> {
    let side = (2 * r + 1) as usize;
    let mut out = Vec::new();
    for mut idx in 0..side.pow(n as u32) {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(int((idx % side) as i64 - r));
            idx /= side;
        }
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        if gcd_all(v.iter()).is_one() {
            out.push(v);
        }
    }
    out
}

#[derive(Debug, Clone)]
pub enum IncrementalVerdict {
    /// Support function equals the partial sums on every sample ray.
    Polytope(Polytope),
    /// No polytope: on `ray`, the best candidate's support is below the partial sum.
    None { ray: IntVec },
}

/// Tests, for every `j`, whether `l ↦ φ_l(1)+…+φ_l(j)` is the support function of a
/// polytope on the given rays. The rays must positively span.
pub fn detect_incrementals(a: &SupportSet, v: &[RatVec], rays: &[IntVec]) -> Result<Vec<IncrementalVerdict>> {
    let seqs: Vec<Vec<Int>> = rays
        .iter()
        .map(|l| support_sequence(a, v, l).map(|s| s.phi))
        .collect::<Result<_>>()?;
    Ok((0..v.len())
        .map(|j| {
            let g: Vec<Int> = seqs.iter().map(|phi| phi[..=j].iter().sum()).collect();
            polytope_from_support_values(a.dim(), rays, &g)
        })
        .collect())
}

/// The polytope `{x : l·x ≤ g(l)}` over the sample rays, accepted only if its support
/// function reproduces every `g(l)` and it is bounded.
pub fn polytope_from_support_values(n: usize, rays: &[IntVec], g: &[Int]) -> IncrementalVerdict {
    // bounding box large enough to contain every vertex of a bounded H-polytope
    let max_ray = rays.iter().flat_map(|r| r.iter().map(|x| x.abs())).max().unwrap_or_else(Int::one);
    let bound: Int = (g.iter().map(|x| x.abs()).sum::<Int>() + 1) * factorial(n) * max_ray.pow(n as u32);
    let corners: Vec<RatVec> = (0..(1usize << n))
        .map(|mask| {
            (0..n)
                .map(|i| Rat::from_integer(if mask >> i & 1 == 1 { bound.clone() } else { -bound.clone() }))
                .collect()
        })
        .collect();
    let mut p = Some(Polytope::from_points(&corners));
    for (l, gl) in rays.iter().zip(g) {
        p = p.and_then(|q| q.clip(&to_rat(l), &Rat::from_integer(gl.clone())));
    }
    let Some(p) = p else {
        return IncrementalVerdict::None { ray: rays[0].clone() };
    };
    if let Some((l, _)) = rays.iter().zip(g).find(|(l, gl)| p.support_value(l) != Rat::from_integer((*gl).clone())) {
        return IncrementalVerdict::None { ray: l.clone() };
    }
    let edge = Rat::from_integer(bound);
    if p.vertices().iter().any(|x| x.iter().any(|c| c.abs() == edge)) {
        return IncrementalVerdict::None { ray: rays[0].clone() };
    }
    IncrementalVerdict::Polytope(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(dim: usize, pts: &[&[i64]]) -> SupportSet {
        SupportSet::from_i64(dim, pts).unwrap()
    }

    fn hull_of(dim: usize, pts: &[&[i64]]) -> Polytope {
        Polytope::hull(&set(dim, pts))
    }

    #[test]
    fn hat_examples() {
        let h = hat_incremental(&set(1, &[&[0], &[1], &[2]]), 0).unwrap();
        assert_eq!(h.hat, hull_of(1, &[&[1], &[3]]));
        let sq = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(hat_incremental(&sq, 0).unwrap().hat, hull_of(2, &[&[1, 0], &[1, 2]]));
        let t = set(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]);
        assert_eq!(
            hat_incremental(&t, 0).unwrap().hat,
            hull_of(2, &[&[1, 0], &[3, 0], &[2, 1], &[1, 1]])
        );
        let flat = set(2, &[&[1, 0], &[1, 3]]);
        assert_eq!(hat_incremental(&flat, 0), Err(Error::DegenerateAxis));
    }

    #[test]
    fn hat_face_examples() {
        let sq = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let c = hat_face_identity(&sq, &ivec(&[0, 1]), 0).unwrap();
        assert_eq!(c.holds(), Some(true));
        assert_eq!(c.hat_face, hull_of(2, &[&[1, 2]]));
        let a = set(1, &[&[0], &[1], &[2]]);
        let c = hat_face_identity(&a, &ivec(&[1]), 0).unwrap();
        assert_eq!(c.hat_face, hull_of(1, &[&[3]]));
        assert_eq!(c.holds(), None);
    }

    #[test]
    fn check_examples() {
        let s = check_incremental(&set(2, &[&[0, 0], &[2, 0]])).unwrap();
        assert_eq!(s.denominator, int(2));
        assert_eq!(s.check, hull_of(2, &[&[2, 0], &[0, 2]]));
        assert_eq!(s.reduced.dim(), 0);
        assert!(s.summand_holds());
        let s = check_incremental(&set(2, &[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(s.denominator, int(1));
        assert_eq!(s.check, hull_of(2, &[&[1, 0], &[2, 0], &[0, 2], &[0, 1]]));
        assert_eq!(s.reduced, hull_of(2, &[&[0, 0], &[1, 0], &[0, 1]]));
        assert_eq!(
            check_incremental(&set(2, &[&[0, 0], &[1, 1]])),
            Err(Error::DenominatorUndefined)
        );
    }

    #[test]
    fn blinder_examples() {
        let a = set(3, &[&[0, 0, 0], &[1, 1, 1], &[1, 0, 0]]);
        assert_eq!(blinders(&a), vec![set(3, &[&[0, 0, 0], &[1, 1, 1]])]);
        let t = set(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]);
        assert!(blinders(&t).is_empty());
        let sq = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let h = horizontal_edges(&sq, 0);
        assert_eq!(h, vec![set(2, &[&[0, 0], &[0, 1]]), set(2, &[&[1, 0], &[1, 1]])]);
    }

    #[test]
    fn condition_star_vacuous() {
        assert!(condition_star(&set(2, &[&[0, 0], &[2, 0]])).unwrap());
        assert!(condition_star(&set(2, &[&[0, 0], &[1, 0], &[0, 1]])).unwrap());
    }

    #[test]
    fn support_sequence_examples() {
        let a = set(1, &[&[0], &[1], &[2]]);
        let v = derivative_pair(&a, 0);
        assert_eq!(support_sequence(&a, &v, &ivec(&[1])).unwrap().phi, vec![int(2), int(1)]);
        assert_eq!(support_sequence(&a, &v, &ivec(&[-1])).unwrap().phi, vec![int(0), int(-1)]);
        let b = set(1, &[&[0], &[1]]);
        let v = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        assert_eq!(support_sequence(&b, &v, &ivec(&[1])).unwrap().phi, vec![int(0), int(1)]);
        let dep = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert_eq!(support_sequence(&b, &dep, &ivec(&[1])), Err(Error::DependentVectors));
    }

    #[test]
    fn detect_examples() {
        let rays = primitive_rays(1, 1);
        let a = set(1, &[&[0], &[1], &[2]]);
        let r = detect_incrementals(&a, &derivative_pair(&a, 0), &rays).unwrap();
        match (&r[0], &r[1]) {
            (IncrementalVerdict::Polytope(p), IncrementalVerdict::Polytope(q)) => {
                assert_eq!(*p, hull_of(1, &[&[0], &[2]]));
                assert_eq!(*q, hull_of(1, &[&[1], &[3]]));
            }
            other => panic!("unexpected {other:?}"),
        }
        let sq = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let r = detect_incrementals(&sq, &derivative_pair(&sq, 0), &primitive_rays(2, 2)).unwrap();
        match &r[1] {
            IncrementalVerdict::Polytope(q) => assert_eq!(*q, hull_of(2, &[&[1, 0], &[1, 2]])),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_convex_values_rejected() {
        let rays = primitive_rays(2, 1);
        // support function of the unit square, with one value pushed above convexity
        let mut g: Vec<Int> = rays
            .iter()
            .map(|l| l.iter().map(|x| if x.is_positive() { x.clone() } else { Int::zero() }).sum())
            .collect();
        assert!(matches!(polytope_from_support_values(2, &rays, &g), IncrementalVerdict::Polytope(_)));
        let diag = rays.iter().position(|l| *l == ivec(&[1, 1])).unwrap();
        g[diag] += 1;
        match polytope_from_support_values(2, &rays, &g) {
            IncrementalVerdict::None { ray } => assert_eq!(ray, ivec(&[1, 1])),
            other => panic!("unexpected {other:?}"),
        }
    }

    /// Largest `Σ_{t∈T} l(t)` over column sets `T` on which `v` restricts to a basis.
    fn max_basis_weight(a: &SupportSet, v: &[RatVec], l: &[Int]) -> Int {
        let lv = a.values(l);
        crate::fans::subsets(a.len(), v.len())
            .into_iter()
            .filter(|t| {
                let rows: Vec<RatVec> = v.iter().map(|r| t.iter().map(|&i| r[i].clone()).collect()).collect();
                rank(&rows) == v.len()
            })
            .map(|t| t.iter().map(|&i| lv[i].clone()).sum())
            .max()
            .unwrap()
    }

    fn small_set(n: usize) -> impl Strategy<Value = SupportSet> {
        prop::collection::vec(prop::collection::vec(0i64..4, n), 3..7)
            .prop_map(move |pts| SupportSet::from_points_dedup(n, pts.iter().map(|p| ivec(p)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn hat_is_lattice_and_min_of_pieces(a in small_set(2), l in prop::collection::vec(-3i64..4, 2)) {
            prop_assume!(a.coordinate_values(0).len() > 1);
            let h = hat_incremental(&a, 0).unwrap();
            prop_assert!(h.hat.is_lattice());
            let l = ivec(&l);
            prop_assume!(l.iter().any(|x| !x.is_zero()));
            let min = hat_pieces(&a, 0).unwrap().iter().map(|(_, p)| p.support_value(&l)).min().unwrap();
            prop_assert_eq!(h.hat.support_value(&l), min);
        }

        #[test]
        fn bridge_to_hat(a in small_set(2), l in prop::collection::vec(-4i64..5, 2)) {
            prop_assume!(a.coordinate_values(0).len() > 1);
            let l = ivec(&l);
            prop_assume!(l.iter().any(|x| !x.is_zero()));
            let h = hat_incremental(&a, 0).unwrap().hat;
            let s = support_sequence(&a, &derivative_pair(&a, 0), &l).unwrap();
            prop_assert_eq!(Rat::from_integer(s.phi[0].clone()), Polytope::hull(&a).support_value(&l));
            prop_assert_eq!(Rat::from_integer(&s.phi[0] + &s.phi[1]), h.support_value(&l));
        }

        #[test]
        fn check_summand_and_min(a in small_set(3), l in prop::collection::vec(-3i64..4, 3)) {
            let Ok(s) = check_incremental(&a) else { return Ok(()) };
            prop_assert!(s.summand_holds());
            let l = ivec(&l);
            prop_assume!(l.iter().any(|x| !x.is_zero()));
            let min = s.pieces.values().map(|p| p.support_value(&l)).min().unwrap();
            prop_assert_eq!(s.check.support_value(&l), min);
        }

        #[test]
        fn sequence_unchanged_by_unitriangular_mix(
            a in small_set(2),
            l in prop::collection::vec(-3i64..4, 2),
            t in -5i64..6,
        ) {
            prop_assume!(a.coordinate_values(0).len() > 1);
            let l = ivec(&l);
            prop_assume!(l.iter().any(|x| !x.is_zero()));
            let v = derivative_pair(&a, 0);
            let mixed = vec![v[0].clone(), add_rat(&v[1], &scale_rat(&v[0], &rat(t)))];
            let s = support_sequence(&a, &v, &l).unwrap();
            let m = support_sequence(&a, &mixed, &l).unwrap();
            prop_assert_eq!(s.phi, m.phi);
        }

        #[test]
        fn partial_sums_are_max_basis_weights(
            a in small_set(2),
            v in prop::collection::vec(prop::collection::vec(-2i64..3, 8), 3),
            l in prop::collection::vec(-3i64..4, 2),
        ) {
            let v: Vec<RatVec> = v.iter().map(|r| r[..a.len().min(8)].iter().map(|x| rat(*x)).collect()).collect();
            prop_assume!(a.len() >= 3 && rank(&v) == 3);
            let l = ivec(&l);
            prop_assume!(l.iter().any(|x| !x.is_zero()));
            let phi = support_sequence(&a, &v, &l).unwrap().phi;
            for j in 1..=3 {
                prop_assert_eq!(phi[..j].iter().sum::<Int>(), max_basis_weight(&a, &v[..j], &l));
            }
        }

        #[test]
        fn planar_sets_have_no_blinders(a in small_set(2)) {
            prop_assume!(Polytope::hull(&a).dim() == 2);
            prop_assert!(blinders(&a).is_empty());
        }
    }
}
