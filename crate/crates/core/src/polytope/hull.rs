//! Beneath-beyond convex hull of a full-dimensional rational point configuration.

use crate::arith::*;
use std::collections::{BTreeMap, HashMap};

pub(crate) struct HullResult {
    /// Indices of the extreme points.
    pub vertices: Vec<usize>,
    /// For every facet, the indices of the extreme points on it.
    pub facets: Vec<Vec<usize>>,
}

struct Simplex {
    verts: Vec<usize>,
    normal: IntVec,
    offset: Rat,
}

/// Primitive normal of the hyperplane through `pts` (r points in `Q^r`), oriented so
/// that `interior` lies strictly below.
fn hyperplane(pts: &[&RatVec], interior: &RatVec) -> (IntVec, Rat) {
    let r = interior.len();
    let diffs: Vec<RatVec> = pts[1..].iter().map(|p| sub_rat(p, pts[0])).collect();
    let ns = nullspace(&diffs, r);
    debug_assert_eq!(ns.len(), 1, "degenerate facet");
    let mut n = primitive(&ns[0]);
    let mut off = dot_ir(&n, pts[0]);
    if dot_ir(&n, interior) > off {
        n = n.iter().map(|x| -x).collect();
        off = -off;
    }
    (n, off)
}

/// `pts` must affinely span `Q^r` with `r = pts[0].len() ≥ 1` and be duplicate-free.
pub(crate) fn hull_full_dim(pts: &[RatVec]) -> HullResult {
    let r = pts[0].len();
    if r == 1 {
        let (mut lo, mut hi) = (0, 0);
        for (i, p) in pts.iter().enumerate() {
            if p[0] < pts[lo][0] {
                lo = i;
            }
            if p[0] > pts[hi][0] {
                hi = i;
            }
        }
        return HullResult { vertices: vec![lo, hi], facets: vec![vec![lo], vec![hi]] };
    }

    // initial simplex
    let mut simplex = vec![0usize];
    let mut diffs: Vec<RatVec> = Vec::new();
    for (i, p) in pts.iter().enumerate().skip(1) {
        if simplex.len() == r + 1 {
            break;
        }
        let mut trial = diffs.clone();
        trial.push(sub_rat(p, &pts[0]));
        if rank(&trial) == trial.len() {
            diffs = trial;
            simplex.push(i);
        }
    }
    assert_eq!(simplex.len(), r + 1, "points do not span");
    let simplex_pts: Vec<RatVec> = simplex.iter().map(|&i| pts[i].clone()).collect();
    let interior = centroid(&simplex_pts);

    let mut facets: Vec<Simplex> = Vec::new();
    for skip in 0..=r {
        let verts: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .map(|(_, &v)| v)
            .collect();
        let refs: Vec<&RatVec> = verts.iter().map(|&v| &pts[v]).collect();
        let (normal, offset) = hyperplane(&refs, &interior);
        let mut verts = verts;
        verts.sort_unstable();
        facets.push(Simplex { verts, normal, offset });
    }

    for (i, p) in pts.iter().enumerate() {
        if simplex.contains(&i) {
            continue;
        }
        let visible: Vec<bool> = facets.iter().map(|f| dot_ir(&f.normal, p) > f.offset).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for (f, _) in facets.iter().zip(&visible).filter(|(_, &v)| v) {
            for k in 0..f.verts.len() {
                let mut ridge = f.verts.clone();
                ridge.remove(k);
                *ridges.entry(ridge).or_insert(0) += 1;
            }
        }
        let mut kept: Vec<Simplex> = facets
            .into_iter()
            .zip(visible)
            .filter(|(_, v)| !v)
            .map(|(f, _)| f)
            .collect();
        let mut horizon: Vec<Vec<usize>> =
            ridges.into_iter().filter(|(_, c)| *c == 1).map(|(k, _)| k).collect();
        horizon.sort();
        for ridge in horizon {
            let mut verts = ridge;
            verts.push(i);
            let refs: Vec<&RatVec> = verts.iter().map(|&v| &pts[v]).collect();
            let (normal, offset) = hyperplane(&refs, &interior);
            verts.sort_unstable();
            kept.push(Simplex { verts, normal, offset });
        }
        facets = kept;
    }

    // merge coplanar simplices into true facets
    let mut planes: BTreeMap<(IntVec, Rat), ()> = BTreeMap::new();
    let mut used: Vec<usize> = Vec::new();
    for f in &facets {
        planes.insert((f.normal.clone(), f.offset.clone()), ());
        used.extend(f.verts.iter().copied());
    }
    used.sort_unstable();
    used.dedup();
    let planes: Vec<(IntVec, Rat)> = planes.into_keys().collect();
    let on: Vec<Vec<usize>> = planes
        .iter()
        .map(|(n, o)| used.iter().copied().filter(|&v| &dot_ir(n, &pts[v]) == o).collect())
        .collect();
    let vertices: Vec<usize> = used
        .iter()
        .copied()
        .filter(|&v| {
            let normals: Vec<RatVec> = planes
                .iter()
                .zip(&on)
                .filter(|(_, s)| s.contains(&v))
                .map(|((n, _), _)| to_rat(n))
                .collect();
            rank(&normals) == r
        })
        .collect();
    let facets = on
        .into_iter()
        .map(|s| s.into_iter().filter(|v| vertices.contains(v)).collect())
        .collect();
    HullResult { vertices, facets }
}
