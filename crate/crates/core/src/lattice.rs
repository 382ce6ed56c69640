//! Integer lattice linear algebra built on a single Smith normal form routine.
//!
//! Saturations, projections killing a sublattice and coordinates on affine spans
//! all come out of the unimodular transforms produced by [`smith_normal_form`].

use crate::arith::*;
use crate::support::SupportSet;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type LatticePoint = IntVec;

/// `u · m · v = diag` with `u`, `v` unimodular. `v_inv` is the inverse of `v`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diag: Vec<Int>,
    pub u: Vec<IntVec>,
    pub v: Vec<IntVec>,
    pub v_inv: Vec<IntVec>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

fn identity(n: usize) -> Vec<IntVec> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect()
}

struct SnfWork {
    a: Vec<IntVec>,
    u: Vec<IntVec>,
    v: Vec<IntVec>,
    v_inv: Vec<IntVec>,
}

impl SnfWork {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }
    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut() {
            r.swap(i, j);
        }
        for r in self.v.iter_mut() {
            r.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }
    // row_i -= q * row_t
    fn row_op(&mut self, i: usize, t: usize, q: &Int) {
        let rt = self.a[t].clone();
        for (x, y) in self.a[i].iter_mut().zip(&rt) {
            *x -= q * y;
        }
        let ut = self.u[t].clone();
        for (x, y) in self.u[i].iter_mut().zip(&ut) {
            *x -= q * y;
        }
    }
    // col_j -= q * col_t
    fn col_op(&mut self, j: usize, t: usize, q: &Int) {
        for r in self.a.iter_mut() {
            let y = r[t].clone();
            r[j] -= q * y;
        }
        for r in self.v.iter_mut() {
            let y = r[t].clone();
            r[j] -= q * y;
        }
        let rj = self.v_inv[j].clone();
        for (x, y) in self.v_inv[t].iter_mut().zip(&rj) {
            *x += q * y;
        }
    }
}

/// Smith normal form of an integer matrix with `ncols` columns.
pub fn smith_normal_form(m: &[IntVec], ncols: usize) -> SmithForm {
    let rows = m.len();
    let mut w = SnfWork {
        a: m.to_vec(),
        u: identity(rows),
        v: identity(ncols),
        v_inv: identity(ncols),
    };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(ncols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..ncols {
                if !w.a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.row_op(i, t, &q);
                    if !w.a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..ncols {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.col_op(j, t, &q);
                    if !w.a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // move the smallest remainder into the pivot and repeat
                let mut best: Option<(usize, bool)> = None;
                let mut best_abs = w.a[t][t].abs();
                for i in t + 1..rows {
                    if !w.a[i][t].is_zero() && w.a[i][t].abs() < best_abs {
                        best_abs = w.a[i][t].abs();
                        best = Some((i, true));
                    }
                }
                for j in t + 1..ncols {
                    if !w.a[t][j].is_zero() && w.a[t][j].abs() < best_abs {
                        best_abs = w.a[t][j].abs();
                        best = Some((j, false));
                    }
                }
                match best {
                    Some((i, true)) => w.swap_rows(t, i),
                    Some((j, false)) => w.swap_cols(t, j),
                    None => {}
                }
                continue;
            }
            let p = w.a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..ncols).any(|j| !(&w.a[i][j] % &p).is_zero()));
            match bad {
                Some(i) => {
                    let minus_one = -Int::one();
                    w.row_op(t, i, &minus_one);
                }
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            for x in w.a[t].iter_mut() {
                *x = -x.clone();
            }
            for x in w.u[t].iter_mut() {
                *x = -x.clone();
            }
        }
        diag.push(w.a[t][t].clone());
        t += 1;
    }
    SmithForm { diag, u: w.u, v: w.v, v_inv: w.v_inv }
}

/// Row-style Hermite normal form; zero rows are dropped.
pub fn hermite_rows(m: &[IntVec]) -> Vec<IntVec> {
    let mut a: Vec<IntVec> = m.to_vec();
    if a.is_empty() {
        return a;
    }
    let ncols = a[0].len();
    let mut row = 0;
    for col in 0..ncols {
        if row == a.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in row..a.len() {
                if !a[i][col].is_zero() && best.map_or(true, |b| a[i][col].abs() < a[b][col].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap(row, b);
            let mut clean = true;
            for i in row + 1..a.len() {
                if !a[i][col].is_zero() {
                    let q = a[i][col].div_floor(&a[row][col]);
                    let pr = a[row].clone();
                    for (x, y) in a[i].iter_mut().zip(&pr) {
                        *x -= &q * y;
                    }
                    if !a[i][col].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if row < a.len() && !a[row][col].is_zero() {
            if a[row][col].is_negative() {
                for x in a[row].iter_mut() {
                    *x = -x.clone();
                }
            }
            let pr = a[row].clone();
            for i in 0..row {
                let q = a[i][col].div_floor(&pr[col]);
                if !q.is_zero() {
                    for (x, y) in a[i].iter_mut().zip(&pr) {
                        *x -= &q * y;
                    }
                }
            }
            row += 1;
        }
    }
    a.truncate(row);
    a.retain(|r| r.iter().any(|x| !x.is_zero()));
    a
}

/// Saturated lattice of the rational span of `vectors`: (HNF basis, lattice index of the
/// sublattice generated by `vectors` inside its saturation, SNF transform).
fn saturate(vectors: &[IntVec], n: usize) -> (Vec<IntVec>, Int, SmithForm) {
    let snf = smith_normal_form(vectors, n);
    let r = snf.rank();
    let w0: Vec<IntVec> = snf.v_inv[..r].to_vec();
    let basis = hermite_rows(&w0);
    let index = snf.diag.iter().fold(Int::one(), |acc, d| acc * d);
    (basis, index, snf)
}

/// Saturated lattice basis (HNF) of the span of the given integer vectors.
pub fn saturation(vectors: &[IntVec], n: usize) -> Vec<IntVec> {
    saturate(vectors, n).0
}

/// Saturated affine span with integral lattice coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSpan {
    pub ambient_dim: usize,
    pub base: RatVec,
    /// HNF basis of the saturated direction lattice.
    pub directions: Vec<IntVec>,
    /// Integer `n × dim` matrix `T` with `directions · T = I`.
    coord_map: Vec<IntVec>,
    /// Rows `e` with `e · x = e · base` cutting out the span; HNF, unimodular complement.
    pub equations: Vec<IntVec>,
    /// Index of the lattice generated by the point differences inside the saturation.
    pub index: Int,
}

impl AffineSpan {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    /// Span of rational points.
    pub fn of_points(points: &[RatVec]) -> AffineSpan {
        let n = points[0].len();
        let base = points[0].clone();
        let diffs: Vec<IntVec> = points[1..]
            .iter()
            .map(|p| {
                let d = sub_rat(p, &base);
                let l = lcm_denoms(&d);
                d.iter()
                    .map(|x| (x * Rat::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect();
        Self::from_diffs(base, &diffs, n)
    }

    fn from_diffs(base: RatVec, diffs: &[IntVec], n: usize) -> AffineSpan {
        let (directions, index, snf) = saturate(diffs, n);
        let r = directions.len();
        // V_r: first r columns of V
        let v_r: Vec<IntVec> = snf.v.iter().map(|row| row[..r].to_vec()).collect();
        let coord_map = if r == 0 {
            vec![vec![]; n]
        } else {
            // H = W · V_r is unimodular, T = V_r · H^{-1}
            let h: Vec<RatVec> = directions
                .iter()
                .map(|w| (0..r).map(|j| Rat::from_integer(dot_int(w, &column(&v_r, j)))).collect())
                .collect();
            let hinv = inverse(&h).expect("unimodular");
            v_r.iter()
                .map(|row| {
                    (0..r)
                        .map(|j| {
                            let mut s = Rat::zero();
                            for (k, x) in row.iter().enumerate() {
                                s += &hinv[k][j] * Rat::from_integer(x.clone());
                            }
                            s.to_integer()
                        })
                        .collect()
                })
                .collect()
        };
        let comp: Vec<IntVec> = (r..n).map(|j| column(&snf.v, j)).collect();
        let equations = hermite_rows(&comp);
        AffineSpan { ambient_dim: n, base, directions, coord_map, equations, index }
    }

    /// Lattice coordinates of a point of the span relative to `base`.
    pub fn local(&self, x: &[Rat]) -> RatVec {
        let d = sub_rat(x, &self.base);
        (0..self.dim())
            .map(|j| {
                let mut s = Rat::zero();
                for (i, xi) in d.iter().enumerate() {
                    if !xi.is_zero() && !self.coord_map[i][j].is_zero() {
                        s += xi * Rat::from_integer(self.coord_map[i][j].clone());
                    }
                }
                s
            })
            .collect()
    }

    pub fn embed(&self, y: &[Rat]) -> RatVec {
        let mut x = self.base.clone();
        for (c, w) in y.iter().zip(&self.directions) {
            if c.is_zero() {
                continue;
            }
            for (xi, wi) in x.iter_mut().zip(w) {
                *xi += c * Rat::from_integer(wi.clone());
            }
        }
        x
    }

    /// Pull back a local covector to an ambient primitive-preserving covector.
    pub fn pullback(&self, c: &[Int]) -> IntVec {
        self.coord_map.iter().map(|row| dot_int(row, c)).collect()
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        let d = sub_rat(x, &self.base);
        self.equations.iter().all(|e| dot_ir(e, &d).is_zero())
    }

    /// Values `e · base` of the defining equations.
    pub fn equation_values(&self) -> Vec<Rat> {
        self.equations.iter().map(|e| dot_ir(e, &self.base)).collect()
    }

    pub fn base_point(&self) -> Option<LatticePoint> {
        to_int(&self.base)
    }
}

fn column(m: &[IntVec], j: usize) -> IntVec {
    m.iter().map(|r| r[j].clone()).collect()
}

/// Affine surjection `x ↦ matrix · (x − offset)` onto `Z^rows`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeProjection {
    pub matrix: Vec<IntVec>,
    pub offset: IntVec,
    pub source_dim: usize,
}

impl LatticeProjection {
    pub fn target_dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, x: &[Int]) -> IntVec {
        let d = sub_int(x, &self.offset);
        self.matrix.iter().map(|r| dot_int(r, &d)).collect()
    }

    pub fn apply_rat(&self, x: &[Rat]) -> RatVec {
        let d = sub_rat(x, &to_rat(&self.offset));
        self.matrix.iter().map(|r| dot_ir(r, &d)).collect()
    }

    /// Linear part applied to a direction vector.
    pub fn apply_linear(&self, x: &[Int]) -> IntVec {
        self.matrix.iter().map(|r| dot_int(r, x)).collect()
    }

    pub fn apply_set(&self, a: &SupportSet) -> SupportSet {
        SupportSet::from_points_dedup(
            self.target_dim(),
            a.points().iter().map(|p| self.apply(p)).collect(),
        )
    }

    /// Surjectivity check through the Smith form of the matrix.
    pub fn is_surjective(&self) -> bool {
        let snf = smith_normal_form(&self.matrix, self.source_dim);
        snf.rank() == self.target_dim() && snf.diag.iter().all(|d| d.is_one())
    }
}

/// Saturated affine span of a support set.
pub fn affine_span(a: &SupportSet) -> AffineSpan {
    let pts = a.points();
    let base = pts[0].clone();
    let diffs: Vec<IntVec> = pts[1..].iter().map(|p| sub_int(p, &base)).collect();
    AffineSpan::from_diffs(to_rat(&base), &diffs, a.dim())
}

/// Surjection `Z^n → Z^{n−r}` whose kernel is the saturation of the span of `b`.
pub fn projection_killing(b: &[IntVec], n: usize) -> LatticeProjection {
    let (_, _, snf) = saturate(b, n);
    let r = snf.rank();
    let comp: Vec<IntVec> = (r..n).map(|j| column(&snf.v, j)).collect();
    LatticeProjection { matrix: hermite_rows(&comp), offset: vec![Int::zero(); n], source_dim: n }
}

/// Affine surjection sending the points of `b` to the origin, killing their affine span.
pub fn projection_killing_points(b: &[IntVec], n: usize) -> LatticeProjection {
    let base = b[0].clone();
    let diffs: Vec<IntVec> = b[1..].iter().map(|p| sub_int(p, &base)).collect();
    let mut p = projection_killing(&diffs, n);
    p.offset = base;
    p
}

/// Coordinates of `a` in a lattice basis of its own affine span.
pub fn normalize_to_span(a: &SupportSet) -> (SupportSet, AffineSpan) {
    let span = affine_span(a);
    let pts: Vec<IntVec> = a
        .points()
        .iter()
        .map(|p| to_int(&span.local(&to_rat(p))).expect("lattice coordinates"))
        .collect();
    (SupportSet::from_points_dedup(span.dim(), pts), span)
}

/// Greatest common divisor of the pairwise differences of integer values; `None` if all equal.
pub fn denominator_of_values(values: &[Int]) -> Option<Int> {
    let first = values.first()?;
    let g = values.iter().fold(Int::zero(), |g, v| g.gcd(&(v - first)));
    if g.is_zero() {
        None
    } else {
        Some(g)
    }
}
