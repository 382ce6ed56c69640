//! Finite support sets of lattice points.

use crate::arith::*;
use crate::error::{Error, Result};
use num_traits::Zero;

/// Sorted, duplicate-free, nonempty set of points of `Z^dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportSet {
    dim: usize,
    points: Vec<IntVec>,
}

impl SupportSet {
    /// Validating constructor: rejects empty input, wrong lengths and duplicates.
    pub fn new(dim: usize, points: Vec<IntVec>) -> Result<SupportSet> {
        if points.is_empty() {
            return Err(Error::EmptySupport);
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::WrongLength { expected: dim, got: p.len() });
        }
        let n = points.len();
        let mut points = points;
        points.sort();
        points.dedup();
        if points.len() != n {
            return Err(Error::DuplicatePoint);
        }
        Ok(SupportSet { dim, points })
    }

    /// Builds a set from points that may repeat. Panics on empty input.
    pub fn from_points_dedup(dim: usize, mut points: Vec<IntVec>) -> SupportSet {
        assert!(!points.is_empty(), "support set must be nonempty");
        points.sort();
        points.dedup();
        SupportSet { dim, points }
    }

    pub fn from_i64(dim: usize, pts: &[&[i64]]) -> Result<SupportSet> {
        SupportSet::new(dim, pts.iter().map(|p| ivec(p)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[IntVec] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[Int]) -> bool {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }

    pub fn rat_points(&self) -> Vec<RatVec> {
        self.points.iter().map(|p| to_rat(p)).collect()
    }

    /// Minkowski sum of point sets.
    pub fn sum(&self, other: &SupportSet) -> SupportSet {
        let mut pts = Vec::with_capacity(self.len() * other.len());
        for p in &self.points {
            for q in &other.points {
                pts.push(add_int(p, q));
            }
        }
        SupportSet::from_points_dedup(self.dim, pts)
    }

    /// Points satisfying `keep`, or `None` if nothing remains.
    pub fn filter<F: Fn(&IntVec) -> bool>(&self, keep: F) -> Option<SupportSet> {
        let pts: Vec<IntVec> = self.points.iter().filter(|p| keep(p)).cloned().collect();
        if pts.is_empty() {
            None
        } else {
            Some(SupportSet { dim: self.dim, points: pts })
        }
    }

    pub fn map<F: Fn(&IntVec) -> IntVec>(&self, dim: usize, f: F) -> SupportSet {
        SupportSet::from_points_dedup(dim, self.points.iter().map(f).collect())
    }

    pub fn translate(&self, v: &[Int]) -> SupportSet {
        self.map(self.dim, |p| add_int(p, v))
    }

    pub fn union(&self, other: &SupportSet) -> SupportSet {
        let mut pts = self.points.clone();
        pts.extend(other.points.iter().cloned());
        SupportSet::from_points_dedup(self.dim, pts)
    }

    pub fn is_subset(&self, other: &SupportSet) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    pub fn contains_origin(&self) -> bool {
        self.points.iter().any(|p| p.iter().all(|x| x.is_zero()))
    }

    /// Values of coordinate `axis` (0-based) over the set.
    pub fn coordinate_values(&self, axis: usize) -> Vec<Int> {
        let mut v: Vec<Int> = self.points.iter().map(|p| p[axis].clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Values of an integer covector over the set.
    pub fn values(&self, l: &[Int]) -> Vec<Int> {
        self.points.iter().map(|p| dot_int(l, p)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert_eq!(SupportSet::new(2, vec![]), Err(Error::EmptySupport));
        assert_eq!(
            SupportSet::from_i64(2, &[&[0, 0], &[0, 0]]),
            Err(Error::DuplicatePoint)
        );
        assert!(matches!(
            SupportSet::from_i64(2, &[&[0, 0, 1]]),
            Err(Error::WrongLength { .. })
        ));
    }

    #[test]
    fn minkowski_sum_of_sets() {
        let a = SupportSet::from_i64(1, &[&[0], &[1], &[2]]).unwrap();
        assert_eq!(a.sum(&a).len(), 5);
    }
}
