//! Exact integer and rational helpers: vectors, ranks, null spaces, determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IntVec = Vec<Int>;
pub type RatVec = Vec<Rat>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn ivec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn to_rat(v: &[Int]) -> RatVec {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Returns the integer vector if every entry is integral.
pub fn to_int(v: &[Rat]) -> Option<IntVec> {
    v.iter()
        .map(|x| if x.is_integer() { Some(x.to_integer()) } else { None })
        .collect()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    let mut s = Int::zero();
    for (x, y) in a.iter().zip(b) {
        s += x * y;
    }
    s
}

/// Integer covector applied to a rational point.
pub fn dot_ir(a: &[Int], b: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += y * x;
        }
    }
    s
}

pub fn sub_rat(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_rat(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_int(a: &[Int], b: &[Int]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_int(a: &[Int], b: &[Int]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_rat(a: &[Rat], s: &Rat) -> RatVec {
    a.iter().map(|x| x * s).collect()
}

pub fn gcd_all<'a, I: IntoIterator<Item = &'a Int>>(it: I) -> Int {
    let mut g = Int::zero();
    for x in it {
        g = g.gcd(x);
    }
    g
}

pub fn lcm_denoms(v: &[Rat]) -> Int {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    l
}

/// Scales a nonzero rational vector to the primitive integer vector with the same direction.
pub fn primitive(v: &[Rat]) -> IntVec {
    let l = lcm_denoms(v);
    let iv: IntVec = v.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    primitive_int(&iv)
}

pub fn primitive_int(v: &[Int]) -> IntVec {
    let g = gcd_all(v.iter());
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [RatVec]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[RatVec]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub fn rank_int(rows: &[IntVec]) -> usize {
    let m: Vec<RatVec> = rows.iter().map(|r| to_rat(r)).collect();
    rank(&m)
}

/// Basis of `{x : rows · x = 0}` in `Q^ncols`.
pub fn nullspace(rows: &[RatVec], ncols: usize) -> Vec<RatVec> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

/// A particular solution of `x · rows = target` (x a row-combination of `rows`), if any.
pub fn solve_combination(rows: &[RatVec], target: &[Rat]) -> Option<RatVec> {
    let k = rows.len();
    let n = target.len();
    // Columns of the system are the rows; unknowns are coefficients.
    let mut aug: Vec<RatVec> = (0..n)
        .map(|j| {
            let mut r: RatVec = (0..k).map(|i| rows[i][j].clone()).collect();
            r.push(target[j].clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Rat::zero(); k];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug[i][k].clone();
    }
    Some(x)
}

/// Determinant over the rationals (Gaussian elimination).
pub fn det(mut m: Vec<RatVec>) -> Rat {
    let n = m.len();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let piv = m[c][c].clone();
        d *= &piv;
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &piv;
            let (top, bottom) = m.split_at_mut(i);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }
    d
}

/// Fraction-free determinant of an integer matrix.
pub fn det_int(mut m: Vec<IntVec>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Int::zero();
            };
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Inverse of a square rational matrix, if invertible.
pub fn inverse(m: &[RatVec]) -> Option<Vec<RatVec>> {
    let n = m.len();
    let mut aug: Vec<RatVec> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * Int::from(k))
}

pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut r = Int::one();
    for i in 0..k {
        r = r * Int::from(n - i) / Int::from(i + 1);
    }
    r
}

pub fn abs_rat(x: &Rat) -> Rat {
    x.abs()
}

/// Lexicographic comparison of rational vectors.
pub fn cmp_lex(a: &[Rat], b: &[Rat]) -> std::cmp::Ordering {
    a.cmp(b)
}

pub fn centroid(points: &[RatVec]) -> RatVec {
    let n = points[0].len();
    let mut c = vec![Rat::zero(); n];
    for p in points {
        for (x, y) in c.iter_mut().zip(p) {
            *x += y;
        }
    }
    let k = Rat::from_integer(Int::from(points.len()));
    c.iter().map(|x| x / &k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[i64]) -> RatVec {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn determinants_agree() {
        let m = vec![ivec(&[2, 1, 0]), ivec(&[1, 3, 1]), ivec(&[0, 1, 4])];
        let r: Vec<RatVec> = m.iter().map(|r| to_rat(r)).collect();
        assert_eq!(det_int(m), int(18));
        assert_eq!(det(r), rat(18));
    }

    #[test]
    fn nullspace_of_line() {
        let ns = nullspace(&[rv(&[1, 1, 0])], 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(dot_rat(&v, &rv(&[1, 1, 0])).is_zero());
        }
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![Rat::new(int(2), int(3)), Rat::new(int(-4), int(3))];
        assert_eq!(primitive(&v), ivec(&[1, -2]));
    }

    #[test]
    fn solve_combination_finds_coefficients() {
        let rows = vec![rv(&[1, 0, 1]), rv(&[0, 1, 1])];
        let x = solve_combination(&rows, &rv(&[2, 3, 5])).unwrap();
        assert_eq!(x, rv(&[2, 3]));
        assert!(solve_combination(&rows, &rv(&[1, 1, 0])).is_none());
    }
}
