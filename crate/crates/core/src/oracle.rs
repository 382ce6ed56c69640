//! Brute-force root counts for sparse systems in one and two variables, used to check
//! the combinatorial counts on small examples.
//!
//! Everything is exact. A count is only reported when the elimination is clean
//! (nonzero, squarefree resultant) and two independent runs agree; otherwise the
//! caller gets `OracleInconclusive` and should resample.

use crate::arith::*;
use crate::counts::recoordinatize;
use crate::error::{Error, Result};
use crate::support::SupportSet;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

const COEFF_BOUND: i64 = 1_000_000;

/// A Laurent polynomial with rational coefficients; the zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientAssignment {
    pub dim: usize,
    pub coeffs: BTreeMap<IntVec, Rat>,
    pub seed: u64,
}

impl CoefficientAssignment {
    pub fn new(dim: usize, terms: impl IntoIterator<Item = (IntVec, Rat)>, seed: u64) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (p, c) in terms {
            if p.len() != dim {
                return Err(Error::WrongLength { expected: dim, got: p.len() });
            }
            if !c.is_zero() && coeffs.insert(p, c).is_some() {
                return Err(Error::DuplicatePoint);
            }
        }
        Ok(CoefficientAssignment { dim, coeffs, seed })
    }

    pub fn support(&self) -> Result<SupportSet> {
        SupportSet::new(self.dim, self.coeffs.keys().cloned().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, p: &[Int]) -> Rat {
        self.coeffs.get(p).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        let mut s = Rat::zero();
        for (p, c) in &self.coeffs {
            let mut t = c.clone();
            for (xi, e) in x.iter().zip(p) {
                t *= pow_rat(xi, e);
            }
            s += t;
        }
        s
    }
}

fn pow_rat(x: &Rat, e: &Int) -> Rat {
    let k: i32 = i32::try_from(e).expect("exponent fits in i32");
    x.pow(k)
}

/// Deterministic nonzero coefficients `±p/q` with `1 ≤ p, q ≤ 10^6`.
pub fn sample(a: &SupportSet, seed: u64) -> CoefficientAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs = a
        .points()
        .iter()
        .map(|p| {
            let num = rng.gen_range(1..=COEFF_BOUND);
            let den = rng.gen_range(1..=COEFF_BOUND);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            (p.clone(), Rat::new(int(sign * num), int(den)))
        })
        .collect();
    CoefficientAssignment { dim: a.dim(), coeffs, seed }
}

/// Partial derivative along `axis`.
pub fn derivative(f: &CoefficientAssignment, axis: usize) -> CoefficientAssignment {
    let coeffs = f
        .coeffs
        .iter()
        .filter(|(p, _)| !p[axis].is_zero())
        .map(|(p, c)| {
            let mut q = p.clone();
            q[axis] -= 1;
            (q, c * Rat::from_integer(p[axis].clone()))
        })
        .collect();
    CoefficientAssignment { dim: f.dim, coeffs, seed: f.seed }
}

/// Coefficient-wise product with `weights`, listed in the sorted order of the support.
pub fn weighted(f: &CoefficientAssignment, weights: &[Int]) -> Result<CoefficientAssignment> {
    if weights.len() != f.coeffs.len() {
        return Err(Error::InvalidInput(format!("{} weights for {} terms", weights.len(), f.coeffs.len())));
    }
    let coeffs = f
        .coeffs
        .iter()
        .zip(weights)
        .filter(|(_, w)| !w.is_zero())
        .map(|((p, c), w)| (p.clone(), c * Rat::from_integer(w.clone())))
        .collect();
    Ok(CoefficientAssignment { dim: f.dim, coeffs, seed: f.seed })
}

fn inconclusive(why: &str) -> Error {
    Error::OracleInconclusive(why.into())
}

/// Dense univariate polynomials over Q, lowest degree first, no trailing zeros.
mod upoly {
    use super::*;

    pub type Poly = Vec<Rat>;

    pub fn trim(mut p: Poly) -> Poly {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    pub fn deg(p: &Poly) -> Option<usize> {
        p.len().checked_sub(1)
    }

    pub fn eval(p: &Poly, x: &Rat) -> Rat {
        p.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn diff(p: &Poly) -> Poly {
        trim(p.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64)).collect())
    }

    pub fn divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
        let db = deg(b).expect("division by zero polynomial");
        let mut r = a.clone();
        let mut q = vec![Rat::zero(); a.len().saturating_sub(db)];
        let lead = b[db].clone();
        while let Some(dr) = deg(&r) {
            if dr < db {
                break;
            }
            let c = &r[dr] / &lead;
            for (i, bi) in b.iter().enumerate() {
                r[dr - db + i] -= &c * bi;
            }
            q[dr - db] = c;
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn monic(p: Poly) -> Poly {
        match p.last().cloned() {
            Some(l) => p.into_iter().map(|c| c / &l).collect(),
            None => p,
        }
    }

    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = divrem(&a, &b).1;
            a = b;
            b = r;
        }
        monic(a)
    }

    /// Divides out every irreducible factor `p` shares with `h`.
    pub fn strip(mut p: Poly, h: &Poly) -> Poly {
        loop {
            let g = gcd(&p, h);
            if deg(&g).unwrap_or(0) == 0 {
                return p;
            }
            p = divrem(&p, &g).0;
        }
    }

    pub fn is_squarefree(p: &Poly) -> bool {
        deg(&gcd(p, &diff(p))).unwrap_or(0) == 0
    }

    /// Newton interpolation through `(xs[i], ys[i])`.
    pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> Poly {
        let n = xs.len();
        let mut dd = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        let mut p: Poly = Vec::new();
        for i in (0..n).rev() {
            // p = p * (x - xs[i]) + dd[i]
            let mut q = vec![Rat::zero(); p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                q[k + 1] += c;
                q[k] -= c * &xs[i];
            }
            q[0] += &dd[i];
            p = trim(q);
        }
        p
    }
}

use upoly::Poly;

/// Nonzero univariate Laurent polynomial as `x^shift · p(x)` with `p(0) ≠ 0`.
fn univariate(terms: &BTreeMap<Int, Rat>) -> Poly {
    let lo = terms.keys().next().expect("nonzero polynomial").clone();
    let hi = terms.keys().next_back().unwrap();
    let len = usize::try_from(&(hi - &lo)).unwrap() + 1;
    let mut p = vec![Rat::zero(); len];
    for (e, c) in terms {
        p[usize::try_from(&(e - &lo)).unwrap()] = c.clone();
    }
    p
}

fn one_variable(f: &CoefficientAssignment) -> Result<Poly> {
    if f.dim != 1 {
        return Err(Error::DimensionMismatch(format!("expected 1 variable, got {}", f.dim)));
    }
    if f.is_zero() {
        return Err(inconclusive("zero polynomial"));
    }
    Ok(univariate(&f.coeffs.iter().map(|(p, c)| (p[0].clone(), c.clone())).collect()))
}

/// Number of roots of `f` in `C^*`.
pub fn count_roots_1d(f: &CoefficientAssignment) -> Result<usize> {
    let p = one_variable(f)?;
    if !upoly::is_squarefree(&p) {
        return Err(inconclusive("repeated root"));
    }
    Ok(upoly::deg(&p).unwrap())
}

/// Number of distinct common roots of `f` and `g` in `C^*`.
pub fn count_common_roots_1d(f: &CoefficientAssignment, g: &CoefficientAssignment) -> Result<usize> {
    let (p, q) = (one_variable(f)?, one_variable(g)?);
    let h = upoly::gcd(&p, &q);
    let sqfree = upoly::divrem(&h, &upoly::gcd(&h, &upoly::diff(&h))).0;
    Ok(upoly::deg(&sqfree).unwrap_or(0))
}

/// Unimodular exponent maps tried in turn for the elimination.
const COORDINATE_CHANGES: [[[i64; 2]; 2]; 7] = [
    [[1, 0], [0, 1]],
    [[0, 1], [1, 0]],
    [[1, 0], [1, 1]],
    [[1, 0], [-1, 1]],
    [[1, 1], [0, 1]],
    [[2, 1], [1, 1]],
    [[1, 2], [1, 1]],
];

type Terms2 = Vec<([Int; 2], Rat)>;

/// Number of isolated common roots of `f` and `g` in `(C^*)^2`.
///
/// Supports in parallel lines are handled directly (generically no roots). Otherwise the
/// system is rewritten in coordinates of the lattice its supports generate, and the count
/// there is multiplied by the index of that lattice.
pub fn count_roots_2d(f: &CoefficientAssignment, g: &CoefficientAssignment) -> Result<usize> {
    if f.dim != 2 || g.dim != 2 {
        return Err(Error::DimensionMismatch("expected 2 variables".into()));
    }
    if f.is_zero() || g.is_zero() {
        return Err(inconclusive("zero polynomial"));
    }
    if f.coeffs.len() == 1 || g.coeffs.len() == 1 {
        return Ok(0);
    }
    let base_f = f.coeffs.keys().next().unwrap().clone();
    let base_g = g.coeffs.keys().next().unwrap().clone();
    let diffs: Vec<IntVec> = f
        .coeffs
        .keys()
        .map(|p| sub_int(p, &base_f))
        .chain(g.coeffs.keys().map(|p| sub_int(p, &base_g)))
        .filter(|v| v.iter().any(|c| !c.is_zero()))
        .collect();
    let (basis, coords, index) = recoordinatize(&diffs, 2);
    let mut coords = coords.into_iter();
    // bases come first in sorted order, so the remaining points line up with `diffs`
    let mut local = |h: &CoefficientAssignment| -> Vec<(IntVec, Rat)> {
        h.coeffs
            .values()
            .enumerate()
            .map(|(i, c)| (if i == 0 { vec![Int::zero(); basis.len()] } else { coords.next().unwrap() }, c.clone()))
            .collect()
    };
    let lf = local(f);
    let lg = local(g);
    if basis.len() < 2 {
        // both are polynomials in one monomial; a shared root gives a curve
        let pf = univariate(&lf.iter().map(|(p, c)| (p[0].clone(), c.clone())).collect());
        let pg = univariate(&lg.iter().map(|(p, c)| (p[0].clone(), c.clone())).collect());
        return if upoly::deg(&upoly::gcd(&pf, &pg)).unwrap_or(0) == 0 {
            Ok(0)
        } else {
            Err(inconclusive("common factor in one monomial: roots are not isolated"))
        };
    }
    let to2 = |v: Vec<(IntVec, Rat)>| -> Terms2 {
        v.into_iter().map(|(p, c)| ([p[0].clone(), p[1].clone()], c)).collect()
    };
    let (tf, tg) = (to2(lf), to2(lg));
    // a clean elimination is exact on its own; a second one in other coordinates confirms it
    let mut found: Option<usize> = None;
    let mut last = inconclusive("no usable coordinates");
    for m in COORDINATE_CHANGES {
        let (mf, mg) = (change(&tf, m), change(&tg, m));
        if y_span(&mf) == 0 || y_span(&mg) == 0 {
            continue;
        }
        match (eliminate(&mf, &mg), found) {
            (Ok(c), None) => found = Some(c),
            (Ok(c), Some(prev)) if c == prev => return Ok(c * usize_index(&index)?),
            (Ok(_), Some(_)) => return Err(inconclusive("eliminations in different coordinates disagree")),
            (Err(e), _) => last = e,
        }
    }
    Err(last)
}

fn usize_index(index: &Int) -> Result<usize> {
    usize::try_from(index).map_err(|_| inconclusive("lattice index too large"))
}

fn change(t: &Terms2, m: [[i64; 2]; 2]) -> Terms2 {
    t.iter()
        .map(|(p, c)| {
            let q = [&p[0] * m[0][0] + &p[1] * m[0][1], &p[0] * m[1][0] + &p[1] * m[1][1]];
            (q, c.clone())
        })
        .collect()
}

fn y_span(t: &Terms2) -> usize {
    let lo = t.iter().map(|(p, _)| &p[1]).min().unwrap();
    let hi = t.iter().map(|(p, _)| &p[1]).max().unwrap();
    usize::try_from(&(hi - lo)).unwrap()
}

/// Coefficients in `y`, each a polynomial in `x`, after clearing Laurent denominators.
fn as_poly_in_y(t: &Terms2) -> Vec<Poly> {
    let lo_x = t.iter().map(|(p, _)| &p[0]).min().unwrap();
    let lo_y = t.iter().map(|(p, _)| &p[1]).min().unwrap();
    let mut rows: Vec<Poly> = vec![Vec::new(); y_span(t) + 1];
    for (p, c) in t {
        let j = usize::try_from(&(&p[1] - lo_y)).unwrap();
        let i = usize::try_from(&(&p[0] - lo_x)).unwrap();
        if rows[j].len() <= i {
            rows[j].resize(i + 1, Rat::zero());
        }
        rows[j][i] = c.clone();
    }
    rows
}

fn sylvester(f: &[Rat], g: &[Rat]) -> Rat {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut r = vec![Rat::zero(); size];
        for (k, c) in f.iter().rev().enumerate() {
            r[i + k] = c.clone();
        }
        rows.push(r);
    }
    for i in 0..m {
        let mut r = vec![Rat::zero(); size];
        for (k, c) in g.iter().rev().enumerate() {
            r[i + k] = c.clone();
        }
        rows.push(r);
    }
    det(rows)
}

/// Eliminates `y`, cleans the resultant and counts its roots in `C^*`.
fn eliminate(f: &Terms2, g: &Terms2) -> Result<usize> {
    let (rf, rg) = (as_poly_in_y(f), as_poly_in_y(g));
    let (m, n) = (rf.len() - 1, rg.len() - 1);
    let degx = |rows: &[Poly]| rows.iter().map(|r| r.len().saturating_sub(1)).max().unwrap();
    let bound = n * degx(&rf) + m * degx(&rg);
    let xs: Vec<Rat> = (1..=bound as i64 + 1).map(rat).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|x| {
            let fx: Vec<Rat> = rf.iter().map(|r| upoly::eval(r, x)).collect();
            let gx: Vec<Rat> = rg.iter().map(|r| upoly::eval(r, x)).collect();
            sylvester(&fx, &gx)
        })
        .collect();
    let mut res = upoly::interpolate(&xs, &ys);
    if res.is_empty() {
        return Err(inconclusive("resultant vanishes identically"));
    }
    let x: Poly = vec![Rat::zero(), Rat::one()];
    for h in [&rf[m], &rg[n], &rf[0], &rg[0], &x] {
        res = upoly::strip(res, &upoly::trim(h.clone()));
    }
    if !upoly::is_squarefree(&res) {
        return Err(inconclusive("cleaned resultant has a repeated factor"));
    }
    Ok(upoly::deg(&res).unwrap_or(0))
}

/// Which equations a critical count refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleMode {
    /// All partial derivatives vanish.
    Df,
    /// `f` and its partials along axes `2..n`.
    S1,
    /// `f` and its partial along axis 1.
    S1Cci,
}

fn critical_once(a: &SupportSet, mode: OracleMode, seed: u64) -> Result<usize> {
    let f = sample(a, seed);
    match (a.dim(), mode) {
        (1, OracleMode::Df) => count_roots_1d(&derivative(&f, 0)),
        (1, OracleMode::S1) => count_roots_1d(&f),
        (1, OracleMode::S1Cci) => count_common_roots_1d(&f, &derivative(&f, 0)),
        (2, OracleMode::Df) => count_roots_2d(&derivative(&f, 0), &derivative(&f, 1)),
        (2, OracleMode::S1) => count_roots_2d(&f, &derivative(&f, 1)),
        (2, OracleMode::S1Cci) => count_roots_2d(&f, &derivative(&f, 0)),
        (n, _) => Err(Error::InvalidInput(format!("oracle handles 1 or 2 variables, got {n}"))),
    }
}

/// Critical count for generic coefficients: samples `seed` and `seed + 1` must agree,
/// `seed + 2` breaks a tie.
pub fn count_critical_oracle(a: &SupportSet, mode: OracleMode, seed: u64) -> Result<Int> {
    if !(1..=2).contains(&a.dim()) {
        return Err(Error::InvalidInput(format!("oracle handles 1 or 2 variables, got {}", a.dim())));
    }
    let first = critical_once(a, mode, seed);
    let second = critical_once(a, mode, seed.wrapping_add(1));
    if let (Ok(x), Ok(y)) = (&first, &second) {
        if x == y {
            return Ok(Int::from(*x));
        }
    }
    let third = critical_once(a, mode, seed.wrapping_add(2))?;
    if [&first, &second].iter().any(|r| matches!(r, Ok(v) if *v == third)) {
        return Ok(Int::from(third));
    }
    Err(inconclusive("samples disagree"))
}

/// Root count of a generic pair with the given supports, under the same agreement rule.
pub fn count_roots_generic(a: &SupportSet, b: &SupportSet, seed: u64) -> Result<Int> {
    let once = |s: u64| count_roots_2d(&sample(a, s), &sample(b, s.wrapping_add(1_000_003)));
    let first = once(seed);
    let second = once(seed.wrapping_add(1));
    if let (Ok(x), Ok(y)) = (&first, &second) {
        if x == y {
            return Ok(Int::from(*x));
        }
    }
    let third = once(seed.wrapping_add(2))?;
    if [&first, &second].iter().any(|r| matches!(r, Ok(v) if *v == third)) {
        return Ok(Int::from(third));
    }
    Err(inconclusive("samples disagree"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::{count_df, count_s1_axis};
    use crate::polytope::{mixed_volume, Polytope};
    use proptest::prelude::*;

    fn set(dim: usize, pts: &[&[i64]]) -> SupportSet {
        SupportSet::from_i64(dim, pts).unwrap()
    }

    fn poly(dim: usize, terms: &[(&[i64], i64)]) -> CoefficientAssignment {
        CoefficientAssignment::new(dim, terms.iter().map(|(p, c)| (ivec(p), rat(*c))), 0).unwrap()
    }

    #[test]
    fn sampling_is_deterministic_and_nonzero() {
        let a = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[3, 2]]);
        assert_eq!(sample(&a, 5), sample(&a, 5));
        assert_ne!(sample(&a, 5).coeffs, sample(&a, 6).coeffs);
        let bound = rat(COEFF_BOUND);
        for seed in 0..50 {
            for c in sample(&a, seed).coeffs.values() {
                assert!(!c.is_zero());
                assert!(c.numer().magnitude() <= bound.numer().magnitude());
                assert!(c.denom() <= bound.numer());
            }
        }
    }

    #[test]
    fn derivative_and_weights() {
        let f = poly(1, &[(&[0], 3), (&[1], 5), (&[2], 7)]);
        let d = derivative(&f, 0);
        assert_eq!(d.support().unwrap(), set(1, &[&[0], &[1]]));
        assert_eq!((d.coefficient(&ivec(&[0])), d.coefficient(&ivec(&[1]))), (rat(5), rat(14)));
        assert_eq!(weighted(&f, &[int(1), int(1), int(1)]).unwrap(), f);
        let g = weighted(&f, &[int(0), int(1), int(2)]).unwrap();
        assert_eq!(g.coeffs.len(), 2);
        assert_eq!(g.coefficient(&ivec(&[2])), rat(14));
        assert!(weighted(&f, &[int(1)]).is_err());
    }

    #[test]
    fn one_variable_counts() {
        let f = sample(&set(1, &[&[0], &[1], &[2]]), 3);
        assert_eq!(count_roots_1d(&f).unwrap(), 2);
        // (x - 1)^2
        let sq = poly(1, &[(&[0], 1), (&[1], -2), (&[2], 1)]);
        assert!(matches!(count_roots_1d(&sq), Err(Error::OracleInconclusive(_))));
        assert_eq!(count_roots_1d(&poly(1, &[(&[-3], 2)])).unwrap(), 0);
        // x^2 - 1 and x - 1 meet once
        let a = poly(1, &[(&[0], -1), (&[2], 1)]);
        let b = poly(1, &[(&[0], -1), (&[1], 1)]);
        assert_eq!(count_common_roots_1d(&a, &b).unwrap(), 1);
    }

    #[test]
    fn unit_squares_meet_twice() {
        let sq = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(count_roots_2d(&sample(&sq, 1), &sample(&sq, 2)).unwrap(), 2);
        assert_eq!(count_roots_generic(&sq, &sq, 9).unwrap(), int(2));
    }

    #[test]
    fn explicit_elimination() {
        // f = 1 + 3x + 2x² + y, f_x = 3 + 4x: one common root at x = -3/4
        let f = poly(2, &[(&[0, 0], 1), (&[1, 0], 3), (&[2, 0], 2), (&[0, 1], 1)]);
        assert_eq!(count_roots_2d(&f, &derivative(&f, 0)).unwrap(), 1);
        let a = set(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]);
        assert_eq!(count_critical_oracle(&a, OracleMode::S1Cci, 4).unwrap(), int(1));
    }

    #[test]
    fn sublattice_supports() {
        // both in x and y², roots come in pairs ±y
        let a = set(2, &[&[0, 0], &[1, 0], &[0, 2], &[1, 2]]);
        assert_eq!(count_roots_generic(&a, &a, 1).unwrap(), int(4));
        let pa = Polytope::hull(&a);
        assert_eq!(mixed_volume(&[&pa, &pa]).unwrap(), int(4));
    }

    #[test]
    fn parallel_supports() {
        let a = set(2, &[&[0, 0], &[1, 1], &[3, 3]]);
        let b = set(2, &[&[1, 0], &[2, 1]]);
        assert_eq!(count_roots_generic(&a, &b, 2).unwrap(), int(0));
        // shared factor along the same monomial: a whole curve of roots
        let f = poly(2, &[(&[0, 0], -1), (&[1, 1], 1)]);
        let g = poly(2, &[(&[0, 0], -1), (&[2, 2], 1)]);
        assert!(matches!(count_roots_2d(&f, &g), Err(Error::OracleInconclusive(_))));
    }

    #[test]
    fn split_support() {
        // f in x only, g generic: roots of f times the y-width of g
        let a = set(2, &[&[0, 0], &[1, 0], &[3, 0]]);
        let b = set(2, &[&[0, 0], &[1, 0], &[0, 2], &[2, 1]]);
        assert_eq!(count_roots_generic(&a, &b, 3).unwrap(), int(3 * 2));
    }

    #[test]
    fn critical_examples() {
        assert_eq!(count_critical_oracle(&set(1, &[&[1], &[2], &[4]]), OracleMode::Df, 0).unwrap(), int(3));
        let sq = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(count_critical_oracle(&sq, OracleMode::S1, 0).unwrap(), int(0));
        let t = set(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(count_critical_oracle(&t, OracleMode::Df, 0).unwrap(), int(1));
        assert!(count_critical_oracle(&set(3, &[&[0, 0, 1]]), OracleMode::Df, 0).is_err());
    }

    fn full_dim_set() -> impl Strategy<Value = SupportSet> {
        prop::collection::vec(prop::collection::vec(0i64..4, 2), 3..6)
            .prop_map(|pts| SupportSet::from_points_dedup(2, pts.iter().map(|p| ivec(p)).collect()))
            .prop_filter("full-dimensional", |a| Polytope::hull(a).is_full_dim())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn bkk_matches_mixed_volume(a in full_dim_set(), b in full_dim_set(), seed in 0u64..1000) {
            let mv = mixed_volume(&[&Polytope::hull(&a), &Polytope::hull(&b)]).unwrap();
            prop_assert_eq!(count_roots_generic(&a, &b, seed).unwrap(), mv);
        }

        #[test]
        fn counts_match_oracle(a in full_dim_set(), seed in 0u64..1000) {
            let s = count_s1_axis(&a, 0).unwrap();
            prop_assert_eq!(count_critical_oracle(&a, OracleMode::S1, seed).unwrap(), s.count * s.saturation_index);
            let c = count_s1_axis(&a, 1).unwrap();
            prop_assert_eq!(count_critical_oracle(&a, OracleMode::S1Cci, seed).unwrap(), c.count * c.saturation_index);
            if let Ok(d) = count_df(&a) {
                prop_assert_eq!(count_critical_oracle(&a, OracleMode::Df, seed).unwrap(), d.count * d.saturation_index);
            }
        }

        #[test]
        fn seed_independent(a in full_dim_set(), s in 0u64..1000, t in 0u64..1000) {
            prop_assert_eq!(
                count_critical_oracle(&a, OracleMode::S1, s).unwrap(),
                count_critical_oracle(&a, OracleMode::S1, t).unwrap()
            );
        }
    }
}
