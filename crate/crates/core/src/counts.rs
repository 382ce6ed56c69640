//! Critical point counts of generic polynomials as Euler-obstruction weighted face volumes,
//! the face recursion as an independent path, and algebraic degrees via the Cayley trick.

use crate::arith::*;
use crate::error::{Error, Result};
use crate::lattice::{hermite_rows, smith_normal_form};
use crate::polytope::{face_volume, Polytope};
use crate::support::SupportSet;
use crate::toric::{euler_obstructions, face_lattice, link_volume};
use num_traits::{One, Zero};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// Critical points of the first coordinate on `{f = 0}`.
    S1,
    /// Critical points of `f`.
    Df,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContributingFace {
    pub face: SupportSet,
    pub e: Int,
    pub volume: Int,
}

/// Count for generic coefficients; `saturation_index` is the index of the lattice the
/// support generates in its saturation (the count is for the saturated coordinates).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub support: SupportSet,
    pub mode: CountMode,
    pub count: Int,
    pub contributing_faces: Vec<ContributingFace>,
    pub saturation_index: Int,
}

/// Coordinates of `vectors` in an HNF basis of the lattice they generate, plus its index.
pub(crate) fn recoordinatize(vectors: &[IntVec], n: usize) -> (Vec<IntVec>, Vec<IntVec>, Int) {
    let basis = hermite_rows(vectors);
    let index = smith_normal_form(vectors, n).diag.iter().fold(Int::one(), |a, d| a * d);
    let rows: Vec<RatVec> = basis.iter().map(|b| to_rat(b)).collect();
    let coords = vectors
        .iter()
        .map(|v| {
            let c = solve_combination(&rows, &to_rat(v)).expect("vector in its own lattice");
            to_int(&c).expect("integral coordinates")
        })
        .collect();
    (basis, coords, index)
}

/// Sum of `e^Γ_A · Vol Γ` over faces passing `keep` (which sees the face in local coordinates).
fn face_sum<F: Fn(&SupportSet) -> bool>(
    local: &SupportSet,
    back: &HashMap<IntVec, IntVec>,
    original_dim: usize,
    keep: F,
) -> Result<(Int, Vec<ContributingFace>)> {
    let table = euler_obstructions(local)?;
    let mut count = Int::zero();
    let mut faces = Vec::new();
    for (i, face) in table.lattice.faces.iter().enumerate() {
        if !keep(face) {
            continue;
        }
        let e = table.e_top(i).clone();
        let volume = face_volume(&Polytope::hull(face))?;
        count += &e * &volume;
        let orig = SupportSet::from_points_dedup(original_dim, face.points().iter().map(|p| back[p].clone()).collect());
        faces.push(ContributingFace { face: orig, e, volume });
    }
    Ok((count, faces))
}

fn directions(face: &SupportSet) -> Vec<RatVec> {
    let p0 = &face.points()[0];
    face.points()[1..].iter().map(|p| to_rat(&sub_int(p, p0))).collect()
}

fn in_linear_span(dirs: &[RatVec], w: &[Rat]) -> bool {
    let mut with = dirs.to_vec();
    with.push(w.to_vec());
    rank(&with) == rank(dirs)
}

/// Whether the affine span of `face` contains the origin.
fn span_contains_origin(face: &SupportSet) -> bool {
    let dirs = directions(face);
    let neg: RatVec = face.points()[0].iter().map(|x| -Rat::from_integer(x.clone())).collect();
    in_linear_span(&dirs, &neg)
}

/// Critical points of the `axis` coordinate on `{f = 0}`: faces whose span contains `e_axis`.
pub fn count_s1_axis(a: &SupportSet, axis: usize) -> Result<CountResult> {
    let n = a.dim();
    if axis >= n {
        return Err(Error::InvalidInput(format!("axis {} out of range", axis + 1)));
    }
    let p0 = a.points()[0].clone();
    let diffs: Vec<IntVec> = a.points().iter().map(|p| sub_int(p, &p0)).collect();
    let (basis, coords, index) = recoordinatize(&diffs, n);
    let r = basis.len();
    let local = SupportSet::from_points_dedup(r, coords.clone());
    let back: HashMap<IntVec, IntVec> = coords.into_iter().zip(a.points().iter().cloned()).collect();
    let mut e = vec![Rat::zero(); n];
    e[axis] = Rat::one();
    let rows: Vec<RatVec> = basis.iter().map(|b| to_rat(b)).collect();
    let w = solve_combination(&rows, &e);
    let (count, contributing_faces) = match (&w, r) {
        (Some(w), r) if r > 0 => face_sum(&local, &back, n, |f| in_linear_span(&directions(f), w))?,
        _ => (Int::zero(), vec![]),
    };
    Ok(CountResult { support: a.clone(), mode: CountMode::S1, count, contributing_faces, saturation_index: index })
}

pub fn count_s1(a: &SupportSet) -> Result<CountResult> {
    count_s1_axis(a, 0)
}

/// Support in coordinates of the lattice it generates, the map back, and the index.
fn df_coordinates(a: &SupportSet) -> Result<(SupportSet, HashMap<IntVec, IntVec>, Int)> {
    if a.contains_origin() {
        return Err(Error::ContainsOrigin);
    }
    let (basis, coords, index) = recoordinatize(a.points(), a.dim());
    let local = SupportSet::from_points_dedup(basis.len(), coords.clone());
    let back = coords.into_iter().zip(a.points().iter().cloned()).collect();
    Ok((local, back, index))
}

/// Critical points of `f`: faces whose affine span contains the origin.
pub fn count_df(a: &SupportSet) -> Result<CountResult> {
    let (local, back, index) = df_coordinates(a)?;
    let (count, contributing_faces) = face_sum(&local, &back, a.dim(), span_contains_origin)?;
    Ok(CountResult { support: a.clone(), mode: CountMode::Df, count, contributing_faces, saturation_index: index })
}

/// `♯B = Vol B − Σ c^{B′}_B · ♯B′` over proper faces `B′` whose span contains the origin.
pub fn count_df_recursive(a: &SupportSet) -> Result<Int> {
    let (local, _, _) = df_coordinates(a)?;
    let mut memo: HashMap<SupportSet, Int> = HashMap::new();
    sharp(&local, &mut memo)
}

fn sharp(b: &SupportSet, memo: &mut HashMap<SupportSet, Int>) -> Result<Int> {
    if let Some(v) = memo.get(b) {
        return Ok(v.clone());
    }
    let value = if !span_contains_origin(b) {
        Int::zero()
    } else {
        let mut v = face_volume(&Polytope::hull(b))?;
        let lat = face_lattice(b);
        for face in &lat.faces[..lat.top()] {
            if span_contains_origin(face) {
                v -= link_volume(b, face)? * sharp(face, memo)?;
            }
        }
        v
    };
    memo.insert(b.clone(), value.clone());
    Ok(value)
}

/// `A_0 * ⋯ * A_k = ∪_i e_i × A_i ⊂ Z^k × Z^n` with `e_0 = 0`.
pub fn cayley_support(sets: &[&SupportSet]) -> Result<SupportSet> {
    if sets.len() < 2 {
        return Err(Error::InvalidInput("the Cayley trick needs at least two sets".into()));
    }
    let n = sets[0].dim();
    if sets.iter().any(|s| s.dim() != n) {
        return Err(Error::DimensionMismatch("supports of different dimensions".into()));
    }
    let k = sets.len() - 1;
    let mut pts = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        for p in s.points() {
            let mut q = vec![Int::zero(); k];
            if i > 0 {
                q[i - 1] = Int::one();
            }
            q.extend(p.iter().cloned());
            pts.push(q);
        }
    }
    Ok(SupportSet::from_points_dedup(k + n, pts))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicDegree {
    pub cayley: SupportSet,
    /// The constant term of `f_0` sits at the origin and does not affect critical points.
    pub origin_removed: bool,
    pub result: CountResult,
}

/// Number of critical points of the Lagrange function `f_0 + Σ λ_i f_i`.
pub fn algebraic_degree(sets: &[&SupportSet]) -> Result<AlgebraicDegree> {
    let cayley = cayley_support(sets)?;
    let origin_removed = cayley.contains_origin();
    let trimmed = if origin_removed {
        cayley.filter(|p| p.iter().any(|x| !x.is_zero())).ok_or(Error::EmptySupport)?
    } else {
        cayley.clone()
    };
    let result = count_df(&trimmed)?;
    Ok(AlgebraicDegree { cayley, origin_removed, result })
}
