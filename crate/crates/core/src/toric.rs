//! Face lattices of support sets, link polytope volumes, multiplicities `c` and Euler
//! obstructions `e = c⁻¹`, and reflexivity.

use crate::arith::*;
use crate::error::{Error, Result};
use crate::lattice::{normalize_to_span, projection_killing_points};
use crate::polytope::Polytope;
use crate::support::SupportSet;
use num_traits::{One, Signed, Zero};

/// Faces of `conv A` intersected with `A`, ordered by dimension then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    pub support: SupportSet,
    pub faces: Vec<SupportSet>,
    pub dims: Vec<usize>,
}

impl FaceLattice {
    pub fn index_of(&self, b: &SupportSet) -> Option<usize> {
        self.faces.iter().position(|f| f == b)
    }

    /// Index of `A` itself.
    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }
}

pub fn face_lattice(a: &SupportSet) -> FaceLattice {
    let p = Polytope::hull(a);
    let mut faces: Vec<(usize, SupportSet)> = p
        .faces()
        .iter()
        .map(|f| {
            let poly = p.sub_polytope(&f.vertices);
            (f.dim, a.filter(|x| poly.contains(&to_rat(x))).expect("face has vertices"))
        })
        .collect();
    faces.sort();
    let (dims, faces) = faces.into_iter().unzip();
    FaceLattice { support: a.clone(), faces, dims }
}

/// Lattice volume of the non-convex region `[A − B/Q] = C ∖ (conv pB + C)`, where `p`
/// sends the face `Q` of `A` to the origin and `C = R₊ · conv pA`.
///
/// The region is cut off by `l ≤ λ`, `l` a functional positive on `C ∖ 0` and `λ`
/// beyond every vertex of `conv pB`, and measured as a difference of two polytopes.
pub fn link_region_volume(a: &SupportSet, b: &SupportSet, q: &SupportSet) -> Result<Rat> {
    if !q.is_subset(a) || !b.is_subset(a) {
        return Err(Error::NotAFace);
    }
    let (local_a, span) = normalize_to_span(a);
    let to_local = |s: &SupportSet| {
        SupportSet::from_points_dedup(
            span.dim(),
            s.points().iter().map(|x| to_int(&span.local(&to_rat(x))).expect("lattice point")).collect(),
        )
    };
    let (lb, lq) = (to_local(b), to_local(q));
    let m = span.dim();
    let hull = Polytope::hull(&local_a);
    let qpoly = Polytope::hull(&lq);
    let qidx: Vec<usize> = (0..hull.vertices().len()).filter(|&i| qpoly.contains(&hull.vertices()[i])).collect();
    let face = hull
        .faces()
        .iter()
        .find(|f| f.vertices == qidx)
        .filter(|f| f.dim < m)
        .ok_or(Error::NotAFace)?;
    if hull.sub_polytope(&face.vertices) != qpoly || local_a.filter(|x| qpoly.contains(&to_rat(x))).as_ref() != Some(&lq) {
        return Err(Error::NotAFace);
    }
    // γ supports Q: the sum of the normals of the facets through Q
    let mut gamma = vec![Int::zero(); m];
    for fi in &face.facets {
        for (g, x) in gamma.iter_mut().zip(&hull.facets()[*fi].normal) {
            *g += x;
        }
    }
    let proj = projection_killing_points(lq.points(), m);
    let rows: Vec<RatVec> = proj.matrix.iter().map(|r| to_rat(r)).collect();
    let gt = solve_combination(&rows, &to_rat(&gamma)).expect("γ is constant on Q");
    let l: RatVec = gt.iter().map(|x| -x).collect();
    let pa: Vec<RatVec> = local_a.points().iter().map(|x| to_rat(&proj.apply(x))).collect();
    let pb: Vec<RatVec> = lb.points().iter().map(|x| to_rat(&proj.apply(x))).collect();
    if pb.is_empty() {
        return Err(Error::InvalidInput("empty removal set".into()));
    }
    let lam = pb.iter().map(|y| dot_rat(&l, y)).max().expect("nonempty") + Rat::one();
    let dirs: Vec<(RatVec, Rat)> = pa
        .iter()
        .map(|y| (y.clone(), dot_rat(&l, y)))
        .filter(|(_, v)| v.is_positive())
        .collect();
    let d = proj.target_dim();
    let mut cone_pts = vec![vec![Rat::zero(); d]];
    cone_pts.extend(dirs.iter().map(|(y, v)| scale_rat(y, &(&lam / v))));
    let mut shifted = pb.clone();
    for bpt in &pb {
        let room = &lam - dot_rat(&l, bpt);
        shifted.extend(dirs.iter().map(|(y, v)| add_rat(bpt, &scale_rat(y, &(&room / v)))));
    }
    let c = Polytope::from_points(&cone_pts);
    let s = Polytope::from_points(&shifted);
    Ok(c.full_volume() - s.full_volume())
}

/// Multiplicity `c^B_A = Vol_Z [A ∩ B / B]` for a proper face `B` of `A`.
pub fn link_volume(a: &SupportSet, b: &SupportSet) -> Result<Int> {
    let lat = face_lattice(a);
    let idx = lat.index_of(b).ok_or(Error::NotAFace)?;
    if idx == lat.top() {
        return Err(Error::NotAFace);
    }
    let rest = a.filter(|x| !b.contains(x)).ok_or(Error::NotAFace)?;
    let v = link_region_volume(a, &rest, b)?;
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}

/// Multiplicities `c[B′][B]` and Euler obstructions `e = c⁻¹`, indexed by the face lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionTable {
    pub lattice: FaceLattice,
    pub c: Vec<Vec<Int>>,
    pub e: Vec<Vec<Int>>,
}

impl ObstructionTable {
    /// `e^B_A` for the whole set `A`.
    pub fn e_top(&self, b: usize) -> &Int {
        &self.e[b][self.lattice.top()]
    }

    pub fn c_top(&self, b: usize) -> &Int {
        &self.c[b][self.lattice.top()]
    }
}

pub fn euler_obstructions(a: &SupportSet) -> Result<ObstructionTable> {
    let lattice = face_lattice(a);
    let k = lattice.faces.len();
    let mut c = vec![vec![Int::zero(); k]; k];
    for j in 0..k {
        c[j][j] = Int::one();
        let big = &lattice.faces[j];
        let sub = face_lattice(big);
        for (i, small) in lattice.faces.iter().enumerate() {
            if i == j || !small.is_subset(big) {
                continue;
            }
            if sub.index_of(small).is_some() {
                c[i][j] = link_volume(big, small)?;
            }
        }
    }
    // faces are sorted by dimension, so c is upper unitriangular
    let mut e = vec![vec![Int::zero(); k]; k];
    for j in 0..k {
        e[j][j] = Int::one();
        for i in (0..j).rev() {
            let s: Int = (i + 1..=j).map(|t| &c[i][t] * &e[t][j]).sum();
            e[i][j] = -s;
        }
    }
    Ok(ObstructionTable { lattice, c, e })
}

/// An interior lattice point `t` with every facet of `P − t` at lattice distance one.
pub fn reflexive_origin(p: &Polytope) -> Result<Option<IntVec>> {
    if !p.is_full_dim() {
        return Err(Error::NotFullDim);
    }
    if !p.is_lattice() {
        return Ok(None);
    }
    Ok(p.relative_interior_lattice_points().into_iter().find(|t| {
        let t = to_rat(t);
        p.facets().iter().all(|f| &f.offset - dot_ir(&f.normal, &t) == Rat::one())
    }))
}

pub fn is_reflexive(p: &Polytope) -> Result<bool> {
    Ok(reflexive_origin(p)?.is_some())
}
