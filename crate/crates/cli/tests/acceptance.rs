//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --offline -p bkkit-cli --test acceptance -- --nocapture --test-threads=1`.

use bkkit::arith::{int, rat};
use bkkit::counts::{count_df, count_df_recursive, count_s1};
use bkkit::fans::{is_compatible, tropical_combination};
use bkkit::formulas::*;
use bkkit::incremental::*;
use bkkit::oracle::{count_critical_oracle, count_roots_2d, count_roots_generic, sample, OracleMode};
use bkkit::polytope::{ehrhart_volume, lattice_volume, minkowski_sum, mixed_volume};
use bkkit::toric::euler_obstructions;
use bkkit::{Error, Int, Polytope, SupportSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

mod common;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn criterion(n: u32, name: &str, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    match body() {
        Ok(detail) => println!("criterion {n:>2}: PASS  {name} ({detail}; {:.1?})", start.elapsed()),
        Err(why) => {
            println!("criterion {n:>2}: FAIL  {name} ({why})");
            panic!("criterion {n} failed: {why}");
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_set(r: &mut ChaCha8Rng, n: usize, max_points: usize, hi: i64) -> SupportSet {
    let k = r.gen_range(2..=max_points);
    let pts = (0..k).map(|_| (0..n).map(|_| int(r.gen_range(0..=hi))).collect()).collect();
    SupportSet::from_points_dedup(n, pts)
}

fn random_full_dim(r: &mut ChaCha8Rng, n: usize, max_points: usize, hi: i64) -> SupportSet {
    loop {
        let a = random_set(r, n, max_points, hi);
        if Polytope::hull(&a).is_full_dim() {
            return a;
        }
    }
}

fn random_covector(r: &mut ChaCha8Rng, n: usize, hi: i64) -> Vec<Int> {
    loop {
        let l: Vec<Int> = (0..n).map(|_| int(r.gen_range(-hi..=hi))).collect();
        if l.iter().any(|x| *x != int(0)) {
            return l;
        }
    }
}

fn set(dim: usize, pts: &[&[i64]]) -> SupportSet {
    SupportSet::from_i64(dim, pts).unwrap()
}

fn err(e: Error) -> String {
    e.to_string()
}

#[test]
fn criterion_01_volume_and_mixed_volume() {
    criterion(1, "volume/MV consistency", || {
        let mut r = rng(1);
        for i in 0..100 {
            let n = if i < 50 { 2 } else { 3 };
            let p = Polytope::hull(&random_full_dim(&mut r, n, 8, 4));
            let q = Polytope::hull(&random_full_dim(&mut r, n, 8, 4));
            let s = Polytope::hull(&random_full_dim(&mut r, n, 8, 4));
            let vol = lattice_volume(&p).map_err(err)?;
            ensure!(vol == ehrhart_volume(&p).map_err(err)?, "instance {i}: lattice vs Ehrhart volume");
            let mut diag = vec![&p; n];
            ensure!(mixed_volume(&diag).map_err(err)? == vol, "instance {i}: diagonal");
            let mut tuple = vec![&p, &q, &s];
            tuple.truncate(n);
            let mv = mixed_volume(&tuple).map_err(err)?;
            let mut rev = tuple.clone();
            rev.reverse();
            ensure!(mixed_volume(&rev).map_err(err)? == mv, "instance {i}: symmetry");
            let pq = minkowski_sum(&p, &q);
            let mut lin = tuple.clone();
            lin[0] = &pq;
            let mut other = tuple.clone();
            other[0] = &q;
            ensure!(
                mixed_volume(&lin).map_err(err)? == &mv + mixed_volume(&other).map_err(err)?,
                "instance {i}: multilinearity"
            );
            let bigger = Polytope::from_int_points(
                &p.lattice_vertices().unwrap().into_iter().chain(std::iter::once(vec![int(5); n])).collect::<Vec<_>>(),
            );
            let mut mono = tuple.clone();
            mono[0] = &bigger;
            ensure!(mixed_volume(&mono).map_err(err)? >= mv, "instance {i}: monotonicity");
            diag[0] = &bigger;
            ensure!(mixed_volume(&diag).map_err(err)? >= vol, "instance {i}: monotonicity on the diagonal");
        }
        Ok("100 polytopes, 50 in Z^2 and 50 in Z^3".into())
    });
}

#[test]
fn criterion_02_bkk_oracle() {
    criterion(2, "BKK vs oracle root count", || {
        let mut r = rng(2);
        let mut abstained = 0;
        for i in 0..30u64 {
            let a = random_full_dim(&mut r, 2, 5, 3);
            let b = random_full_dim(&mut r, 2, 5, 3);
            let (pa, pb) = (Polytope::hull(&a), Polytope::hull(&b));
            let bkk = euler_bkk(&[&pa, &pb], 2).map_err(err)?;
            if count_roots_2d(&sample(&a, 10 * i), &sample(&b, 10 * i + 5)).is_err() {
                abstained += 1;
            }
            let roots = count_roots_generic(&a, &b, 100 * i).map_err(err)?;
            ensure!(bkk == roots, "pair {i}: euler_bkk {bkk} vs oracle {roots}");
        }
        ensure!(abstained * 5 < 30, "abstention rate {abstained}/30");
        Ok(format!("30 pairs, {abstained} first-sample abstentions"))
    });
}

fn three_ways(a: &SupportSet) -> Result<Option<Int>, String> {
    match critical_ci_summary(a, 0) {
        Ok(s) if s.eulers_agree() => Ok(Some(s.euler_e)),
        Ok(s) => Err(format!("{:?}: {} / {} / {}", a.points(), s.euler_gf, s.euler_e, s.euler_local)),
        Err(Error::DegenerateAxis) => Ok(None),
        Err(e) => Err(err(e)),
    }
}

#[test]
fn criterion_03_critical_triple_identity() {
    criterion(3, "critical CI triple identity", || {
        let mut r = rng(3);
        let (mut two, mut three) = (0, 0);
        while two < 100 {
            let a = random_set(&mut r, 2, 6, 3);
            if three_ways(&a)?.is_some() {
                two += 1;
            }
        }
        while three < 50 {
            let a = random_set(&mut r, 3, 5, 2);
            if three_ways(&a)?.is_some() {
                three += 1;
            }
        }
        let sq = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        ensure!(three_ways(&sq)? == Some(int(0)), "unit square");
        let t = set(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]);
        ensure!(three_ways(&t)? == Some(int(1)), "T-shape");
        let oracle = count_critical_oracle(&t, OracleMode::S1Cci, 11).map_err(err)?;
        ensure!(oracle == int(1), "oracle on T-shape gave {oracle}");
        Ok("100 sets in Z^2, 50 in Z^3, fixed cases 0 and 1".into())
    })
}

#[test]
fn criterion_04_hat_structure() {
    criterion(4, "critical incremental polytope structure", || {
        let mut r = rng(4);
        let (mut done, mut defined) = (0, 0);
        while done < 50 {
            let a = random_set(&mut r, 3, 5, 2);
            let h = match hat_incremental(&a, 0) {
                Ok(h) => h.hat,
                Err(Error::DegenerateAxis) => continue,
                Err(e) => return Err(err(e)),
            };
            ensure!(h.is_lattice(), "{:?}: non-lattice vertex", a.points());
            for _ in 0..20 {
                let l = random_covector(&mut r, 3, 3);
                let c = hat_face_identity(&a, &l, 0).map_err(err)?;
                ensure!(c.holds() != Some(false), "{:?}: face identity fails at {:?}", a.points(), l);
                defined += c.holds().is_some() as usize;
            }
            let p = Polytope::hull(&a);
            let fan = tropical_combination(&[(int(1), vec![&p, &h]), (int(-1), vec![&p, &p])]).map_err(err)?;
            ensure!(is_compatible(&h, &fan), "{:?}: not compatible", a.points());
            done += 1;
        }
        Ok(format!("50 sets, {defined}/1000 face checks with a defined right side"))
    })
}

#[test]
fn criterion_05_critical_counts() {
    criterion(5, "critical counts, formula vs recursion vs oracle", || {
        let mut r = rng(5);
        let mut done = 0;
        while done < 100 {
            let a = random_set(&mut r, if done < 50 { 2 } else { 3 }, 6, 3);
            if a.contains_origin() {
                continue;
            }
            let d = count_df(&a).map_err(err)?;
            let rec = count_df_recursive(&a).map_err(err)?;
            ensure!(d.count == rec, "{:?}: {} vs recursive {}", a.points(), d.count, rec);
            done += 1;
        }
        let mut oracle_done = 0;
        while oracle_done < 30 {
            let n = if oracle_done < 10 { 1 } else { 2 };
            let a = random_full_dim(&mut r, n, 5, 3);
            if a.contains_origin() || a.len() < 2 {
                continue;
            }
            let d = count_df(&a).map_err(err)?;
            let rec = count_df_recursive(&a).map_err(err)?;
            let o = count_critical_oracle(&a, OracleMode::Df, 1000 + oracle_done).map_err(err)?;
            ensure!(&d.count * &d.saturation_index == o, "{:?}: formula {} vs oracle {}", a.points(), d.count, o);
            ensure!(&rec * &d.saturation_index == o, "{:?}: recursion {} vs oracle {}", a.points(), rec, o);
            oracle_done += 1;
        }
        let fixed = [
            (count_df(&set(2, &[&[1, 0], &[0, 1], &[1, 1]])).map_err(err)?.count, 1),
            (count_df(&set(2, &[&[1, 0], &[2, 0], &[0, 1]])).map_err(err)?.count, 0),
            (count_df(&set(1, &[&[1], &[2], &[4]])).map_err(err)?.count, 3),
            (count_s1(&set(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).map_err(err)?.count, 0),
        ];
        for (i, (got, want)) in fixed.iter().enumerate() {
            ensure!(*got == int(*want), "fixed case {i}: {got} instead of {want}");
        }
        Ok("100 recursion checks, 30 oracle checks, 4 fixed cases".into())
    })
}

#[test]
fn criterion_06_support_sequence_bridge() {
    criterion(6, "support sequence vs incremental polytope", || {
        let mut r = rng(6);
        for n in [2, 3] {
            let mut done = 0;
            while done < 50 {
                let a = random_set(&mut r, n, 6, 3);
                let Ok(h) = hat_incremental(&a, 0) else { continue };
                let p = Polytope::hull(&a);
                let v = derivative_pair(&a, 0);
                for _ in 0..200 {
                    let l = primitive(random_covector(&mut r, n, 5));
                    let phi = support_sequence(&a, &v, &l).map_err(err)?.phi;
                    ensure!(rat_of(&phi[0]) == p.support_value(&l), "{:?} at {:?}: first entry", a.points(), l);
                    ensure!(
                        rat_of(&(&phi[0] + &phi[1])) == h.hat.support_value(&l),
                        "{:?} at {:?}: partial sum",
                        a.points(),
                        l
                    );
                }
                done += 1;
            }
        }
        Ok("50 sets each in Z^2 and Z^3, 200 covectors per set".into())
    })
}

fn primitive(l: Vec<Int>) -> Vec<Int> {
    bkkit::arith::primitive_int(&l)
}

fn rat_of(x: &Int) -> bkkit::Rat {
    bkkit::Rat::from_integer(x.clone())
}

#[test]
fn criterion_07_symmetric_suite() {
    criterion(7, "symmetric incremental suite", || {
        let s = check_incremental(&set(2, &[&[0, 0], &[2, 0]])).map_err(err)?;
        ensure!(s.denominator == int(2), "denominator {}", s.denominator);
        ensure!(s.check == Polytope::hull(&set(2, &[&[2, 0], &[0, 2]])), "check polytope {:?}", s.check.vertices());
        let s = check_incremental(&set(2, &[&[0, 0], &[1, 0], &[0, 1]])).map_err(err)?;
        ensure!(s.reduced == Polytope::hull(&set(2, &[&[0, 0], &[1, 0], &[0, 1]])), "reduced polytope");
        for pts in [&[&[0i64, 0][..], &[2, 0]][..], &[&[0, 0], &[1, 0], &[0, 1]], &[&[0, 0], &[2, 0], &[0, 2]]] {
            let s = symmetric_ci_summary(&set(2, pts)).map_err(err)?;
            ensure!(s.euler_proper == Some(int(0)), "{pts:?}: proper Euler {:?}", s.euler_proper);
        }
        let mut r = rng(7);
        let mut done = 0;
        while done < 30 {
            let a = random_set(&mut r, 3, 6, 2);
            if denominator(&a).is_err() || !condition_star(&a).map_err(err)? {
                continue;
            }
            let s = symmetric_ci_summary(&a).map_err(err)?;
            let diag = link_formulas_n3(&a, LinkFormula::SymmetricDiagonal).map_err(err)?;
            let prop = link_formulas_n3(&a, LinkFormula::SymmetricProper).map_err(err)?;
            ensure!(
                Some(diag.clone()) == s.euler_diagonal && diag == symmetric_diagonal_local(&a).map_err(err)?,
                "{:?}: diagonal component",
                a.points()
            );
            ensure!(
                Some(prop.clone()) == s.euler_proper && prop == symmetric_proper_local(&a).map_err(err)?,
                "{:?}: proper component",
                a.points()
            );
            done += 1;
        }
        let b = set(3, &[&[0, 0, 0], &[1, 1, 1], &[1, 0, 0]]);
        ensure!(blinders(&b) == vec![set(3, &[&[0, 0, 0], &[1, 1, 1]])], "blinder example");
        for _ in 0..50 {
            let a = random_set(&mut r, 2, 6, 3);
            ensure!(blinders(&a).is_empty(), "{:?}: planar blinder", a.points());
        }
        Ok("fixed cases, 30 admissible sets in Z^3, blinders".into())
    })
}

#[test]
fn criterion_08_obstructions() {
    criterion(8, "multiplicities and Euler obstructions", || {
        let t = euler_obstructions(&set(1, &[&[0], &[1], &[3]])).map_err(err)?;
        let at = |p: i64| t.lattice.index_of(&set(1, &[&[p]])).unwrap();
        let (c0, c3) = (t.c_top(at(0)).clone(), t.c_top(at(3)).clone());
        let (e0, e3) = (t.e_top(at(0)).clone(), t.e_top(at(3)).clone());
        ensure!((c0.clone(), c3.clone()) == (int(1), int(2)), "c = ({c0}, {c3})");
        ensure!((e0.clone(), e3.clone()) == (int(-1), int(-2)), "e = ({e0}, {e3})");
        let mut r = rng(8);
        for _ in 0..50 {
            let a = random_set(&mut r, 3, 6, 3);
            let t = euler_obstructions(&a).map_err(err)?;
            let k = t.c.len();
            for i in 0..k {
                for j in 0..k {
                    let s: Int = (0..k).map(|m| &t.c[i][m] * &t.e[m][j]).sum();
                    ensure!(s == int((i == j) as i64), "{:?}: c·e not the identity", a.points());
                }
            }
        }
        Ok("fixed case and 50 random sets in Z^3".into())
    })
}

#[test]
fn criterion_09_localization() {
    criterion(9, "localization identities", || {
        let mut r = rng(9);
        let mut vol_done = 0;
        let mut attempts = 0;
        while vol_done < 20 {
            attempts += 1;
            ensure!(attempts < 2000, "could not build locvol instances");
            let n = if vol_done < 10 { 2 } else { 3 };
            let a0 = random_full_dim(&mut r, n, 8, 3);
            let k = r.gen_range(1..n);
            // drop every point of a face of dimension k
            let l = random_covector(&mut r, n, 3);
            let top = a0.values(&l).into_iter().max().unwrap();
            let face = a0.filter(|p| bkkit::arith::dot_int(&l, p) == top).unwrap();
            if Polytope::hull(&face).dim() != k {
                continue;
            }
            let Some(a) = a0.filter(|p| !face.contains(p)) else { continue };
            let doubled = a0.sum(&a0);
            let others: Vec<&SupportSet> = (0..k).map(|i| if i % 2 == 0 { &a0 } else { &doubled }).collect();
            let rep = locvol(&a0, &a, &others).map_err(err)?;
            ensure!(rep.holds(), "locvol on {:?} minus {:?}: {:?}", a0.points(), face.points(), rep);
            vol_done += 1;
        }
        let mut mv_done = 0;
        attempts = 0;
        while mv_done < 20 {
            attempts += 1;
            ensure!(attempts < 2000, "could not build locmv instances");
            let n = if mv_done < 14 { 2 } else { 3 };
            let p = Polytope::hull(&random_full_dim(&mut r, n, 6, 3));
            let factors = [int(1), int(2), int(1)];
            let a: Vec<Polytope> = (0..n).map(|i| p.scale(&rat_of(&factors[i])).translate(&vec![rat(i as i64); n])).collect();
            let l = random_covector(&mut r, n, 7);
            let mut truncated = Vec::new();
            for ai in &a {
                let corner = ai.face(&l);
                if corner.dim() != 0 {
                    break;
                }
                let v = corner.lattice_vertices().unwrap().remove(0);
                let pts: Vec<_> = ai.lattice_points().into_iter().filter(|x| *x != v).collect();
                truncated.push(Polytope::from_int_points(&pts));
            }
            if truncated.len() != n || truncated.iter().any(|b| !b.is_full_dim()) {
                continue;
            }
            let ar: Vec<&Polytope> = a.iter().collect();
            let br: Vec<&Polytope> = truncated.iter().collect();
            match locmv(&ar, &br) {
                Ok(rep) => ensure!(rep.holds(), "locmv: {} vs {}", rep.lhs, rep.rhs),
                Err(Error::HypothesisViolated(_)) => continue,
                Err(e) => return Err(err(e)),
            }
            mv_done += 1;
        }
        Ok("20 locvol and 20 locmv instances".into())
    })
}

#[test]
fn criterion_10_cli_golden() {
    criterion(10, "CLI golden outputs", || {
        let failed = common::check_all();
        ensure!(failed.is_empty(), "mismatched cases: {failed:?}");
        for c in &common::CASES {
            let (_, out) = common::run(c.args);
            let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| format!("{}: {e}", c.name))?;
            ensure!(v["assumptions"].is_array(), "{}: no assumptions list", c.name);
            ensure!(v.get("result").is_some() != v.get("error").is_some(), "{}: bad envelope", c.name);
        }
        for code in [2, 3, 4] {
            ensure!(common::CASES.iter().any(|c| c.exit == code), "no case exits with {code}");
        }
        Ok(format!("{} commands byte-identical", common::CASES.len()))
    })
}
