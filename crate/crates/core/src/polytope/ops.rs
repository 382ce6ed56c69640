//! Support data and Minkowski algebra.

use super::Polytope;
use crate::arith::*;
use crate::error::{Error, Result};
use crate::support::SupportSet;

/// Highest and second highest values of a covector on a point set, with their argmax sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportData {
    pub value: Int,
    pub face: SupportSet,
    second: Option<(Int, SupportSet)>,
}

impl SupportData {
    pub fn second_value(&self) -> Result<&Int> {
        self.second.as_ref().map(|s| &s.0).ok_or(Error::SecondValueUndefined)
    }

    pub fn second_face(&self) -> Result<&SupportSet> {
        self.second.as_ref().map(|s| &s.1).ok_or(Error::SecondValueUndefined)
    }
}

/// `A(l)`, `A^l`, and (when `l` is not constant on `A`) `Ā(l)`, `Ā^l`.
pub fn support_data(a: &SupportSet, l: &[Int]) -> Result<SupportData> {
    if l.len() != a.dim() {
        return Err(Error::DimensionMismatch("covector length".into()));
    }
    if l.iter().all(|x| x == &Int::from(0)) {
        return Err(Error::InvalidInput("zero covector".into()));
    }
    let vals = a.values(l);
    let value = vals.iter().max().expect("nonempty").clone();
    let face = a.filter(|p| dot_int(l, p) == value).expect("argmax nonempty");
    let second = vals.iter().filter(|v| **v < value).max().cloned().map(|s| {
        let f = a.filter(|p| dot_int(l, p) == s).expect("nonempty");
        (s, f)
    });
    Ok(SupportData { value, face, second })
}

pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Polytope {
    assert_eq!(p.ambient_dim(), q.ambient_dim(), "ambient dimensions differ");
    let mut pts = Vec::with_capacity(p.vertices().len() * q.vertices().len());
    for a in p.vertices() {
        for b in q.vertices() {
            pts.push(add_rat(a, b));
        }
    }
    Polytope::from_points(&pts)
}

/// `{x : x + Q ⊆ P}`.
pub fn minkowski_diff(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimensionMismatch("ambient dimensions differ".into()));
    }
    let q0 = q.vertices()[0].clone();
    for (e, _) in p.equations() {
        let vals: Vec<Rat> = q.vertices().iter().map(|v| dot_ir(&e, v)).collect();
        if vals.iter().any(|v| v != &vals[0]) {
            return Err(Error::EmptyResult);
        }
    }
    let neg: RatVec = q0.iter().map(|x| -x).collect();
    let mut cur = p.translate(&neg);
    for f in p.facets() {
        let bound = &f.offset - q.support_value(&f.normal);
        cur = cur.clip(&to_rat(&f.normal), &bound).ok_or(Error::EmptyResult)?;
    }
    Ok(cur)
}

/// A translation `t` with `A + t` inside the interior of `B`, if one exists.
/// Never exists when `B` is not full-dimensional.
pub fn shiftable_into_interior(a: &Polytope, b: &Polytope) -> Option<RatVec> {
    if !b.is_full_dim() || a.ambient_dim() != b.ambient_dim() {
        return None;
    }
    let d = minkowski_diff(b, a).ok()?;
    if d.is_full_dim() {
        Some(d.relint_point())
    } else {
        None
    }
}

impl Polytope {
    /// Vertices as a support set when they are all integral.
    pub fn vertex_set(&self) -> Option<SupportSet> {
        self.lattice_vertices()
            .map(|v| SupportSet::from_points_dedup(self.ambient_dim(), v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hull_of(dim: usize, pts: &[&[i64]]) -> Polytope {
        Polytope::hull(&SupportSet::from_i64(dim, pts).unwrap())
    }

    fn set(dim: usize, pts: &[&[i64]]) -> SupportSet {
        SupportSet::from_i64(dim, pts).unwrap()
    }

    #[test]
    fn support_data_examples() {
        let a = set(1, &[&[0], &[1], &[2]]);
        let s = support_data(&a, &ivec(&[1])).unwrap();
        assert_eq!(s.value, int(2));
        assert_eq!(s.face, set(1, &[&[2]]));
        assert_eq!(s.second_value().unwrap(), &int(1));
        assert_eq!(s.second_face().unwrap(), &set(1, &[&[1]]));

        let sq = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let s = support_data(&sq, &ivec(&[1, 1])).unwrap();
        assert_eq!(s.value, int(2));
        assert_eq!(s.second_face().unwrap(), &set(2, &[&[1, 0], &[0, 1]]));

        let pt = set(2, &[&[0, 0]]);
        let s = support_data(&pt, &ivec(&[1, 0])).unwrap();
        assert_eq!(s.value, int(0));
        assert_eq!(s.second_value(), Err(Error::SecondValueUndefined));
    }

    #[test]
    fn minkowski_examples() {
        let sq = hull_of(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let sq2 = hull_of(2, &[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
        assert_eq!(minkowski_sum(&sq, &sq), sq2);
        assert_eq!(minkowski_diff(&sq2, &sq).unwrap(), sq);
        let trap = hull_of(2, &[&[2, 0], &[0, 2], &[0, 1], &[1, 0]]);
        let seg = hull_of(2, &[&[1, 0], &[0, 1]]);
        let tri = hull_of(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(minkowski_diff(&trap, &seg).unwrap(), tri);
        assert_eq!(minkowski_diff(&sq, &sq2), Err(Error::EmptyResult));
    }

    #[test]
    fn interior_shift_examples() {
        let sq = hull_of(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let big = hull_of(2, &[&[-1, -1], &[2, -1], &[-1, 2], &[2, 2]]);
        let t = shiftable_into_interior(&sq, &big).unwrap();
        assert!(sq.translate(&t).vertices().iter().all(|v| {
            big.facets().iter().all(|f| dot_ir(&f.normal, v) < f.offset)
        }));
        let seg = hull_of(2, &[&[1, 0], &[1, 2]]);
        assert!(shiftable_into_interior(&sq, &seg).is_none());
        let a = hull_of(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]);
        let hat = hull_of(2, &[&[1, 0], &[3, 0], &[2, 1], &[1, 1]]);
        assert!(shiftable_into_interior(&a, &hat).is_none());
    }
}
