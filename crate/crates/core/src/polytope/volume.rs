//! Lattice volumes, mixed volumes and the Ehrhart cross-check.
//!
//! Two conventions coexist. [`lattice_volume`] gives a point volume 0, which is what
//! mixed-volume bookkeeping needs. [`face_volume`] gives a point volume 1, the value a
//! vertex contributes to face sums in critical-point counts.

use super::Polytope;
use crate::arith::*;
use crate::error::{Error, Result};
use crate::lattice::saturation;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

impl Polytope {
    /// Pulling triangulation into top-dimensional simplices (vertex index lists).
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        let faces = self.faces();
        let index: HashMap<&Vec<usize>, usize> =
            faces.iter().enumerate().map(|(i, f)| (&f.vertices, i)).collect();
        let mut memo: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
        let top = index[&(0..self.vertices().len()).collect::<Vec<_>>()];
        triangulate_face(self, top, &mut memo)
    }

    /// `dim! ·` Euclidean volume measured in the lattice of the affine span.
    /// A point has relative volume 1.
    pub fn relative_volume(&self) -> Rat {
        self.volume
            .get_or_init(|| {
                let r = self.dim();
                if r == 0 {
                    return Rat::one();
                }
                let lv = self.local_vertices();
                let mut total = Rat::zero();
                for s in self.triangulation() {
                    let m: Vec<RatVec> = s[1..].iter().map(|&v| sub_rat(&lv[v], &lv[s[0]])).collect();
                    total += det(m).abs();
                }
                total
            })
            .clone()
    }

    /// Volume in the ambient lattice; zero unless full-dimensional.
    pub fn full_volume(&self) -> Rat {
        if self.is_full_dim() {
            self.relative_volume()
        } else {
            Rat::zero()
        }
    }
}

fn triangulate_face(p: &Polytope, f: usize, memo: &mut HashMap<usize, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    if let Some(t) = memo.get(&f) {
        return t.clone();
    }
    let faces = p.faces();
    let face = &faces[f];
    let out = if face.dim == 0 {
        vec![face.vertices.clone()]
    } else {
        let apex = face.vertices[0];
        let mut out = Vec::new();
        for (g, sub) in faces.iter().enumerate() {
            if sub.dim + 1 != face.dim
                || sub.vertices.contains(&apex)
                || !sub.vertices.iter().all(|v| face.vertices.binary_search(v).is_ok())
            {
                continue;
            }
            for mut s in triangulate_face(p, g, memo) {
                s.insert(0, apex);
                out.push(s);
            }
        }
        out
    };
    memo.insert(f, out.clone());
    out
}

/// Lattice volume `Vol_Z` in the lattice of the polytope's own affine span.
/// Points get volume 0 (mixed-volume convention).
pub fn lattice_volume(p: &Polytope) -> Result<Int> {
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    if p.dim() == 0 {
        return Ok(Int::zero());
    }
    Ok(p.relative_volume().to_integer())
}

/// Lattice volume for face sums: a vertex counts 1.
pub fn face_volume(p: &Polytope) -> Result<Int> {
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    Ok(p.relative_volume().to_integer())
}

/// Mixed volume of lattice polytopes, normalized so that `MV(P,…,P) = Vol_Z P`.
///
/// With `k` polytopes in `Z^n`, `k < n`, the polytopes must be translatable into a
/// common `k`-plane; the mixed volume is then taken in that plane's lattice (and is 0
/// when they fit in a smaller plane).
pub fn mixed_volume(polys: &[&Polytope]) -> Result<Int> {
    if polys.iter().any(|p| !p.is_lattice()) {
        return Err(Error::NotLattice);
    }
    let mv = mixed_volume_rat(polys)?;
    debug_assert!(mv.is_integer());
    Ok(mv.to_integer())
}

/// Rational-valued mixed volume (for polytopes with rational vertices).
pub fn mixed_volume_rat(polys: &[&Polytope]) -> Result<Rat> {
    let k = polys.len();
    if k == 0 {
        return Err(Error::DimensionMismatch("no polytopes".into()));
    }
    let n = polys[0].ambient_dim();
    if polys.iter().any(|p| p.ambient_dim() != n) {
        return Err(Error::DimensionMismatch("ambient dimensions differ".into()));
    }
    if k > n {
        return Err(Error::DimensionMismatch(format!("{k} polytopes in dimension {n}")));
    }
    let dirs: Vec<IntVec> = polys.iter().flat_map(|p| p.span().directions.iter().cloned()).collect();
    let lat = saturation(&dirs, n);
    let q = lat.len();
    if q < k {
        return Ok(Rat::zero());
    }
    if q > k {
        return Err(Error::DimensionMismatch(format!(
            "{k} polytopes span a {q}-dimensional direction space"
        )));
    }
    if k < n {
        // move every polytope into coordinates of the common k-dimensional lattice
        let local: Vec<Polytope> = polys
            .iter()
            .map(|p| {
                let base = p.vertices()[0].clone();
                p.image(|v| lattice_coords(&lat, &sub_rat(v, &base)))
            })
            .collect();
        let refs: Vec<&Polytope> = local.iter().collect();
        return mixed_volume_full(&refs);
    }
    mixed_volume_full(polys)
}

/// Coordinates of a vector lying in the span of `basis` (HNF rows).
fn lattice_coords(basis: &[IntVec], v: &[Rat]) -> RatVec {
    let rows: Vec<RatVec> = basis.iter().map(|b| to_rat(b)).collect();
    solve_combination(&rows, v).expect("vector in span")
}

fn mixed_volume_full(polys: &[&Polytope]) -> Result<Rat> {
    let n = polys.len();
    if polys.iter().all(|p| *p == polys[0]) {
        return Ok(polys[0].full_volume());
    }
    // Minkowski sums over all nonempty subsets, built incrementally by bitmask.
    let mut sums: Vec<Option<Polytope>> = vec![None; 1 << n];
    let mut total = Rat::zero();
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let s = if rest == 0 {
            polys[low].clone()
        } else {
            super::minkowski_sum(sums[rest].as_ref().expect("built"), polys[low])
        };
        let size = mask.count_ones() as usize;
        let v = s.full_volume();
        if (n - size) % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
        sums[mask] = Some(s);
    }
    Ok(total / Rat::from_integer(factorial(n)))
}

/// Lattice point counts of the dilates `t·P`, `t = 0..=dim`.
pub fn ehrhart_counts(p: &Polytope) -> Result<Vec<Int>> {
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    let d = p.dim();
    Ok((0..=d)
        .map(|t| {
            if t == 0 {
                Int::one()
            } else {
                Int::from(p.scale(&rat(t as i64)).lattice_points().len())
            }
        })
        .collect())
}

/// `Vol_Z` from the leading Ehrhart coefficient: the `d`-th finite difference of the
/// counts of the dilates `0..=d`. Points give 0 (the constant term 1 is the count itself).
pub fn ehrhart_volume(p: &Polytope) -> Result<Int> {
    let counts = ehrhart_counts(p)?;
    let d = p.dim();
    if d == 0 {
        return Ok(Int::zero());
    }
    let mut total = Int::zero();
    for (j, c) in counts.iter().enumerate() {
        let term = binomial(d, j) * c;
        if (d - j) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::support::SupportSet;

    fn hull_of(dim: usize, pts: &[&[i64]]) -> Polytope {
        Polytope::hull(&SupportSet::from_i64(dim, pts).unwrap())
    }

    #[test]
    fn volume_examples() {
        let sq = hull_of(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(lattice_volume(&sq).unwrap(), int(2));
        let tri = hull_of(2, &[&[1, 0], &[2, 0], &[0, 1]]);
        assert_eq!(lattice_volume(&tri).unwrap(), int(1));
        let seg = hull_of(2, &[&[0, 0], &[1, 1]]);
        assert_eq!(lattice_volume(&seg).unwrap(), int(1));
        let pt = hull_of(2, &[&[3, 1]]);
        assert_eq!(lattice_volume(&pt).unwrap(), int(0));
        assert_eq!(face_volume(&pt).unwrap(), int(1));
    }

    #[test]
    fn ehrhart_examples() {
        let sq = hull_of(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(ehrhart_volume(&sq).unwrap(), int(2));
        let big = hull_of(2, &[&[0, 0], &[3, 0], &[0, 3]]);
        assert_eq!(ehrhart_volume(&big).unwrap(), int(9));
        let pt = hull_of(2, &[&[0, 0]]);
        assert_eq!(ehrhart_volume(&pt).unwrap(), int(0));
        let seg = hull_of(3, &[&[0, 0, 0], &[2, 2, 0]]);
        assert_eq!(ehrhart_volume(&seg).unwrap(), int(2));
    }

    #[test]
    fn mixed_volume_examples() {
        let sq = hull_of(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(mixed_volume(&[&sq, &sq]).unwrap(), int(2));
        let vseg = hull_of(2, &[&[1, 0], &[1, 2]]);
        assert_eq!(mixed_volume(&[&sq, &vseg]).unwrap(), int(2));
        let s1 = hull_of(2, &[&[0, 0], &[2, 0]]);
        let s2 = hull_of(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(mixed_volume(&[&s1, &s2]).unwrap(), int(4));
        assert_eq!(mixed_volume(&[&s1, &s1]).unwrap(), int(0));
    }

    #[test]
    fn mixed_volume_in_a_plane() {
        let a = hull_of(3, &[&[0, 0, 5], &[2, 0, 5]]);
        assert_eq!(mixed_volume(&[&a]).unwrap(), int(2));
        let b = hull_of(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let c = hull_of(3, &[&[0, 0, 1], &[0, 2, 1]]);
        assert_eq!(mixed_volume(&[&b, &c]).unwrap(), int(2));
        let d = hull_of(3, &[&[0, 0, 0], &[0, 0, 1]]);
        assert!(mixed_volume(&[&b, &d]).is_err());
    }
}
