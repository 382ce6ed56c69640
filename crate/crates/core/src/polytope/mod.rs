//! Exact convex polytopes with paired vertex and facet descriptions.
//!
//! Every polytope lives in its own saturated affine span. Hull computations,
//! triangulations and volumes run in the lattice coordinates of that span, so
//! volumes of lower-dimensional polytopes are always lattice-normalized.

mod hull;
mod ops;
mod volume;

pub use ops::{minkowski_diff, minkowski_sum, shiftable_into_interior, support_data, SupportData};
pub use volume::{
    ehrhart_counts, ehrhart_volume, face_volume, lattice_volume, mixed_volume, mixed_volume_rat,
};

use crate::arith::*;
use crate::lattice::AffineSpan;
use crate::support::SupportSet;
use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

/// Inequality `normal · x ≤ offset` with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: IntVec,
    pub offset: Rat,
}

/// A face as a set of vertex indices of its polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub dim: usize,
    /// Indices of the facets containing the face.
    pub facets: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<RatVec>,
    span: AffineSpan,
    local_vertices: Vec<RatVec>,
    local_facets: Vec<(IntVec, Rat)>,
    incidence: Vec<Vec<usize>>,
    facets: Vec<Facet>,
    faces: OnceLock<Vec<Face>>,
    volume: OnceLock<Rat>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl Polytope {
    /// Convex hull of a support set.
    pub fn hull(a: &SupportSet) -> Polytope {
        Polytope::from_points(&a.rat_points())
    }

    pub fn from_int_points(points: &[IntVec]) -> Polytope {
        let pts: Vec<RatVec> = points.iter().map(|p| to_rat(p)).collect();
        Polytope::from_points(&pts)
    }

    /// Convex hull of a nonempty list of rational points.
    pub fn from_points(points: &[RatVec]) -> Polytope {
        assert!(!points.is_empty(), "hull of an empty set");
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let span = AffineSpan::of_points(&pts);
        let r = span.dim();
        if r == 0 {
            return Polytope::assemble(pts, Vec::new());
        }
        let local: Vec<RatVec> = pts.iter().map(|p| span.local(p)).collect();
        let res = hull::hull_full_dim(&local);
        let mut verts: Vec<usize> = res.vertices.clone();
        verts.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let vertices: Vec<RatVec> = verts.iter().map(|&v| pts[v].clone()).collect();
        let facets: Vec<Vec<usize>> = res
            .facets
            .iter()
            .map(|f| {
                let mut s: Vec<usize> = f.iter().map(|v| pos[v]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        Polytope::assemble(vertices, facets)
    }

    /// Builds the polytope from sorted vertices and facet-vertex incidences.
    fn assemble(vertices: Vec<RatVec>, incidence: Vec<Vec<usize>>) -> Polytope {
        let n = vertices[0].len();
        let span = AffineSpan::of_points(&vertices);
        let r = span.dim();
        let local_vertices: Vec<RatVec> = vertices.iter().map(|v| span.local(v)).collect();
        let mut local_facets = Vec::with_capacity(incidence.len());
        let mut facets = Vec::with_capacity(incidence.len());
        if r > 0 {
            let inner = centroid(&local_vertices);
            for inc in &incidence {
                let p0 = &local_vertices[inc[0]];
                let diffs: Vec<RatVec> =
                    inc[1..].iter().map(|&v| sub_rat(&local_vertices[v], p0)).collect();
                let ns = nullspace(&diffs, r);
                assert_eq!(ns.len(), 1, "facet of wrong dimension");
                let mut c = primitive(&ns[0]);
                let mut o = dot_ir(&c, p0);
                if dot_ir(&c, &inner) > o {
                    c = c.iter().map(|x| -x).collect();
                    o = -o;
                }
                let normal = span.pullback(&c);
                let offset = &o + dot_ir(&normal, &span.base);
                local_facets.push((c, o));
                facets.push(Facet { normal, offset });
            }
        }
        Polytope {
            ambient_dim: n,
            vertices,
            span,
            local_vertices,
            local_facets,
            incidence,
            facets,
            faces: OnceLock::new(),
            volume: OnceLock::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn is_full_dim(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    /// Facet inequalities in ambient coordinates; together with the span equations they
    /// cut out the polytope.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Vertex indices on each facet.
    pub fn facet_incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    pub fn span(&self) -> &AffineSpan {
        &self.span
    }

    pub(crate) fn local_vertices(&self) -> &[RatVec] {
        &self.local_vertices
    }

    /// Span equations as `(e, value)` meaning `e · x = value`.
    pub fn equations(&self) -> Vec<(IntVec, Rat)> {
        self.span
            .equations
            .iter()
            .cloned()
            .zip(self.span.equation_values())
            .collect()
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(|v| v.iter().all(|x| x.is_integer()))
    }

    pub fn lattice_vertices(&self) -> Option<Vec<IntVec>> {
        self.vertices.iter().map(|v| to_int(v)).collect()
    }

    pub fn support_value(&self, l: &[Int]) -> Rat {
        self.vertices.iter().map(|v| dot_ir(l, v)).max().expect("nonempty")
    }

    pub fn support_value_rat(&self, l: &[Rat]) -> Rat {
        self.vertices.iter().map(|v| dot_rat(l, v)).max().expect("nonempty")
    }

    /// Indices of the vertices maximizing `l`.
    pub fn face_indices(&self, l: &[Int]) -> Vec<usize> {
        let h = self.support_value(l);
        (0..self.vertices.len()).filter(|&i| dot_ir(l, &self.vertices[i]) == h).collect()
    }

    pub fn face_indices_rat(&self, l: &[Rat]) -> Vec<usize> {
        let h = self.support_value_rat(l);
        (0..self.vertices.len()).filter(|&i| dot_rat(l, &self.vertices[i]) == h).collect()
    }

    /// Support face `P^l`.
    pub fn face(&self, l: &[Int]) -> Polytope {
        self.sub_polytope(&self.face_indices(l))
    }

    pub fn face_rat(&self, l: &[Rat]) -> Polytope {
        self.sub_polytope(&self.face_indices_rat(l))
    }

    pub fn sub_polytope(&self, idx: &[usize]) -> Polytope {
        let pts: Vec<RatVec> = idx.iter().map(|&i| self.vertices[i].clone()).collect();
        Polytope::from_points(&pts)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.span.contains(x) && self.facets.iter().all(|f| dot_ir(&f.normal, x) <= f.offset)
    }

    /// Point in the relative interior.
    pub fn relint_point(&self) -> RatVec {
        centroid(&self.vertices)
    }

    pub fn translate(&self, t: &[Rat]) -> Polytope {
        let pts: Vec<RatVec> = self.vertices.iter().map(|v| add_rat(v, t)).collect();
        Polytope::from_points(&pts)
    }

    pub fn scale(&self, k: &Rat) -> Polytope {
        let pts: Vec<RatVec> = self.vertices.iter().map(|v| scale_rat(v, k)).collect();
        Polytope::from_points(&pts)
    }

    /// Image under a map of rational points (affine maps keep it a polytope).
    pub fn image<F: Fn(&RatVec) -> RatVec>(&self, f: F) -> Polytope {
        let pts: Vec<RatVec> = self.vertices.iter().map(f).collect();
        Polytope::from_points(&pts)
    }

    /// All nonempty faces, including the polytope itself, sorted by dimension.
    pub fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| self.compute_faces())
    }

    fn face_dim(&self, facets: &[usize]) -> usize {
        let normals: Vec<RatVec> = facets.iter().map(|&f| to_rat(&self.local_facets[f].0)).collect();
        self.dim() - rank(&normals)
    }

    fn compute_faces(&self) -> Vec<Face> {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let top = Face { vertices: all, dim: self.dim(), facets: vec![] };
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(top.vertices.clone());
        let mut out = vec![top];
        let mut k = 0;
        while k < out.len() {
            let cur = out[k].vertices.clone();
            k += 1;
            for f in &self.incidence {
                let inter: Vec<usize> = cur.iter().copied().filter(|v| f.binary_search(v).is_ok()).collect();
                if inter.is_empty() || inter.len() == cur.len() {
                    continue;
                }
                let containing: Vec<usize> = (0..self.incidence.len())
                    .filter(|&g| inter.iter().all(|v| self.incidence[g].binary_search(v).is_ok()))
                    .collect();
                let closed: Vec<usize> = (0..self.vertices.len())
                    .filter(|v| containing.iter().all(|&g| self.incidence[g].binary_search(v).is_ok()))
                    .collect();
                if seen.insert(closed.clone()) {
                    let dim = self.face_dim(&containing);
                    out.push(Face { vertices: closed, dim, facets: containing });
                }
            }
        }
        out.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        out
    }

    /// Faces of a given dimension.
    pub fn faces_of_dim(&self, d: usize) -> Vec<&Face> {
        self.faces().iter().filter(|f| f.dim == d).collect()
    }

    /// Edges as pairs of vertex indices.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces_of_dim(1)
            .into_iter()
            .map(|f| (f.vertices[0], f.vertices[1]))
            .collect()
    }

    /// Intersection with the halfspace `a · x ≤ beta`; `None` if empty.
    pub fn clip(&self, a: &[Rat], beta: &Rat) -> Option<Polytope> {
        let vals: Vec<Rat> = self.vertices.iter().map(|v| dot_rat(a, v) - beta).collect();
        let zero = Rat::from_integer(Int::from(0));
        if vals.iter().all(|v| v <= &zero) {
            return Some(self.clone());
        }
        if vals.iter().all(|v| v > &zero) {
            return None;
        }
        let mut pts: Vec<RatVec> = self
            .vertices
            .iter()
            .zip(&vals)
            .filter(|(_, v)| *v <= &zero)
            .map(|(p, _)| p.clone())
            .collect();
        for (i, j) in self.edges() {
            let (vi, vj) = (&vals[i], &vals[j]);
            if (vi < &zero && vj > &zero) || (vi > &zero && vj < &zero) {
                let t = vi / (vi - vj);
                let d = sub_rat(&self.vertices[j], &self.vertices[i]);
                pts.push(add_rat(&self.vertices[i], &scale_rat(&d, &t)));
            }
        }
        Some(Polytope::from_points(&pts))
    }

    /// Intersection with the hyperplane `a · x = beta`.
    pub fn clip_equal(&self, a: &[Rat], beta: &Rat) -> Option<Polytope> {
        let neg: RatVec = a.iter().map(|x| -x).collect();
        self.clip(a, beta)?.clip(&neg, &-beta)
    }

    /// Intersection of two polytopes in the same ambient space.
    pub fn intersect(&self, other: &Polytope) -> Option<Polytope> {
        let mut cur = self.clone();
        for (e, v) in other.equations() {
            cur = cur.clip_equal(&to_rat(&e), &v)?;
        }
        for f in other.facets() {
            cur = cur.clip(&to_rat(&f.normal), &f.offset)?;
        }
        Some(cur)
    }

    /// Lattice points (integer points of the ambient lattice) in the polytope.
    pub fn lattice_points(&self) -> Vec<IntVec> {
        let n = self.ambient_dim;
        let lo: IntVec = (0..n)
            .map(|i| self.vertices.iter().map(|v| v[i].clone()).min().unwrap().ceil().to_integer())
            .collect();
        let hi: IntVec = (0..n)
            .map(|i| self.vertices.iter().map(|v| v[i].clone()).max().unwrap().floor().to_integer())
            .collect();
        let mut out = Vec::new();
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return out;
        }
        let mut cur = lo.clone();
        loop {
            if self.contains(&to_rat(&cur)) {
                out.push(cur.clone());
            }
            let mut k = 0;
            loop {
                if k == n {
                    return out;
                }
                if cur[k] < hi[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = lo[k].clone();
                k += 1;
            }
        }
    }

    /// Lattice points strictly inside the relative interior.
    pub fn relative_interior_lattice_points(&self) -> Vec<IntVec> {
        self.lattice_points()
            .into_iter()
            .filter(|p| {
                let x = to_rat(p);
                self.facets.iter().all(|f| dot_ir(&f.normal, &x) < f.offset)
            })
            .collect()
    }
}
