use crate::json::{self, Malformed};
use bkkit::counts::{algebraic_degree, count_df, count_df_recursive, count_s1_axis, ContributingFace, CountResult};
use bkkit::fans::is_compatible;
use bkkit::formulas::*;
use bkkit::incremental::{blinders, check_incremental, condition_star, hat_incremental, support_sequence};
use bkkit::oracle::{count_critical_oracle, count_roots_1d, count_roots_generic, sample, OracleMode};
use bkkit::polytope::{lattice_volume, mixed_volume};
use bkkit::toric::{euler_obstructions, is_reflexive, reflexive_origin};
use bkkit::{Error, Polytope, Rat, SupportSet};
use serde_json::{json, Map, Value};

pub const GENERIC: &str = "generic coefficients";
pub const SMOOTH: &str = "smoothness assumed: Milnor term 0";
pub const FRAC: &str = "generating functions expanded as X/(1+X)";
pub const VOLUME: &str = "Vol_Z: the unit lattice simplex has volume 1";
pub const MIXED: &str = "mixed volume normalized so that MV(P,...,P) = Vol_Z P";
pub const SUFFICIENT: &str = "irreducibility and Calabi-Yau flags are sufficient conditions, not criteria";
pub const SATURATED: &str = "count taken in the lattice the support generates; multiply by saturation_index for the original torus";

/// Anything that stops a command.
#[derive(Debug)]
pub enum Failure {
    Malformed(String),
    Math(Error),
}

impl From<Malformed> for Failure {
    fn from(m: Malformed) -> Self {
        Failure::Malformed(m.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

pub type Outcome = Result<Output, Failure>;

/// Result value, extra top-level keys, and assumptions.
pub struct Output {
    pub result: Value,
    pub extra: Map<String, Value>,
    pub assumptions: Vec<&'static str>,
}

impl Output {
    fn new(result: Value, assumptions: &[&'static str]) -> Output {
        Output { result, extra: Map::new(), assumptions: assumptions.to_vec() }
    }

    fn with(mut self, key: &str, v: Value) -> Output {
        self.extra.insert(key.into(), v);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CountKind {
    S1,
    Df,
    S1cci,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TropicalKind {
    Critical,
    Symmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleKind {
    Roots,
    Critical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Identity {
    Locmv,
    Locvol,
    Th0cci,
    Answerlink3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Reflexive,
    Compatible,
    Irreducible,
    ConditionStar,
    Blinders,
}

fn need(sets: &[SupportSet], min: usize, max: Option<usize>) -> Result<(), Failure> {
    let ok = sets.len() >= min && max.is_none_or(|m| sets.len() <= m);
    if ok {
        return Ok(());
    }
    let want = match max {
        Some(m) if m == min => format!("{min}"),
        Some(m) => format!("{min} to {m}"),
        None => format!("at least {min}"),
    };
    Err(Failure::Malformed(format!("expected {want} input files, got {}", sets.len())))
}

fn hulls(sets: &[SupportSet]) -> Vec<Polytope> {
    sets.iter().map(Polytope::hull).collect()
}

fn axis_index(axis: usize, a: &SupportSet) -> Result<usize, Failure> {
    if axis == 0 || axis > a.dim() {
        return Err(Failure::Malformed(format!("--axis must be between 1 and {}", a.dim())));
    }
    Ok(axis - 1)
}

pub fn volume(sets: &[SupportSet]) -> Outcome {
    need(sets, 1, Some(1))?;
    let p = Polytope::hull(&sets[0]);
    Ok(Output::new(json::int(&lattice_volume(&p)?), &[VOLUME, "volume taken in the affine span of the polytope"])
        .with("polytope", json::polytope(&p)))
}

pub fn mv(sets: &[SupportSet]) -> Outcome {
    need(sets, 1, None)?;
    let ps = hulls(sets);
    let refs: Vec<&Polytope> = ps.iter().collect();
    Ok(Output::new(json::int(&mixed_volume(&refs)?), &[MIXED]))
}

pub fn euler_bkk_cmd(sets: &[SupportSet], n: Option<usize>) -> Outcome {
    need(sets, 1, None)?;
    let ps = hulls(sets);
    let refs: Vec<&Polytope> = ps.iter().collect();
    let n = n.unwrap_or(sets[0].dim());
    Ok(Output::new(json::int(&euler_bkk(&refs, n)?), &[GENERIC, FRAC, MIXED]))
}

pub fn hat(sets: &[SupportSet], axis: usize) -> Outcome {
    need(sets, 1, Some(1))?;
    let h = hat_incremental(&sets[0], axis_index(axis, &sets[0])?)?;
    let pieces: Vec<Value> =
        h.contributing.iter().map(|(b, p)| json!({ "b": json::int(b), "piece": json::polytope(p) })).collect();
    Ok(Output::new(json::polytope(&h.hat), &[]).with("contributing", Value::Array(pieces)))
}

pub fn check_incr(sets: &[SupportSet]) -> Outcome {
    need(sets, 1, Some(1))?;
    let s = check_incremental(&sets[0])?;
    let pieces: Vec<Value> =
        s.pieces.iter().map(|(b, p)| json!({ "b": json::int(b), "piece": json::polytope(p) })).collect();
    Ok(Output::new(
        json!({
            "denominator": json::int(&s.denominator),
            "check": json::polytope(&s.check),
            "reduced": json::polytope(&s.reduced),
            "summand_holds": s.summand_holds(),
        }),
        &[],
    )
    .with("pieces", Value::Array(pieces)))
}

pub fn critical_ci(sets: &[SupportSet], axis: usize) -> Outcome {
    need(sets, 1, Some(1))?;
    let s = critical_ci_summary(&sets[0], axis_index(axis, &sets[0])?)?;
    Ok(Output::new(
        json!({
            "hat": json::polytope(&s.hat),
            "euler_gf": json::int(&s.euler_gf),
            "euler_e": json::int(&s.euler_e),
            "euler_local": json::int(&s.euler_local),
            "eulers_agree": s.eulers_agree(),
            "tropical": json::opt(&s.tropical, json::fan),
            "irreducible_sufficient": s.irreducible_sufficient,
            "calabi_yau_sufficient": s.calabi_yau_sufficient,
        }),
        &[GENERIC, SMOOTH, FRAC, SUFFICIENT],
    ))
}

pub fn symmetric_ci(sets: &[SupportSet]) -> Outcome {
    need(sets, 1, Some(1))?;
    let s = symmetric_ci_summary(&sets[0])?;
    let mut assumptions = vec![GENERIC, SMOOTH, FRAC, SUFFICIENT];
    if !s.condition_star {
        assumptions.push("condition (*) fails: Euler characteristics and irreducibility not computed");
    }
    Ok(Output::new(
        json!({
            "denominator": json::int(&s.denominator),
            "check": json::polytope(&s.check),
            "reduced": json::polytope(&s.reduced),
            "condition_star": s.condition_star,
            "euler_proper": json::opt(&s.euler_proper, json::int),
            "euler_diagonal": json::opt(&s.euler_diagonal, json::int),
            "euler_diagonal_projected": json::opt(&s.euler_diagonal_projected, json::int),
            "tropical_proper": json::opt(&s.tropical_proper, json::fan),
            "tropical_diagonal": json::opt(&s.tropical_diagonal, json::fan),
            "irreducible_proper": s.irreducible_proper,
            "irreducible_diagonal": s.irreducible_diagonal,
            "calabi_yau_proper": s.calabi_yau_proper,
            "calabi_yau_diagonal": s.calabi_yau_diagonal,
        }),
        &assumptions,
    ))
}

fn faces_json(faces: &[ContributingFace]) -> Value {
    Value::Array(
        faces
            .iter()
            .map(|f| json!({ "face": json::support(&f.face)["points"], "e": json::int(&f.e), "volume": json::int(&f.volume) }))
            .collect(),
    )
}

fn count_output(r: CountResult) -> Output {
    Output::new(json::int(&r.count), &[GENERIC, SATURATED])
        .with("contributing_faces", faces_json(&r.contributing_faces))
        .with("saturation_index", json::int(&r.saturation_index))
}

pub fn count(sets: &[SupportSet], mode: CountKind, recursive: bool, axis: usize) -> Outcome {
    need(sets, 1, Some(1))?;
    let a = &sets[0];
    if recursive {
        if mode != CountKind::Df {
            return Err(Failure::Malformed("--recursive applies to --mode df only".into()));
        }
        return Ok(Output::new(json::int(&count_df_recursive(a)?), &[GENERIC, SATURATED]));
    }
    match mode {
        CountKind::S1 => Ok(count_output(count_s1_axis(a, axis_index(axis, a)?)?)),
        CountKind::Df => Ok(count_output(count_df(a)?)),
        CountKind::S1cci => {
            let s = critical_ci_summary(a, axis_index(axis, a)?)?;
            Ok(Output::new(json::int(&s.euler_e), &[GENERIC, SMOOTH, FRAC, "Euler characteristic of {f = df/dx_axis = 0}; a point count when n = 2"]))
        }
    }
}

pub fn algebraic_degree_cmd(sets: &[SupportSet]) -> Outcome {
    need(sets, 2, None)?;
    let refs: Vec<&SupportSet> = sets.iter().collect();
    let d = algebraic_degree(&refs)?;
    let mut out = count_output(d.result).with("cayley", json::support(&d.cayley)).with("origin_removed", json!(d.origin_removed));
    out.assumptions.push("critical points of the Lagrange function on the Cayley support");
    Ok(out)
}

pub fn obstructions(sets: &[SupportSet]) -> Outcome {
    need(sets, 1, Some(1))?;
    let t = euler_obstructions(&sets[0])?;
    let faces: Vec<Value> = t
        .lattice
        .faces
        .iter()
        .enumerate()
        .map(|(i, f)| {
            json!({
                "face": json::support(f)["points"],
                "dim": t.lattice.dims[i],
                "c": json::int(t.c_top(i)),
                "e": json::int(t.e_top(i)),
            })
        })
        .collect();
    Ok(Output::new(Value::Array(faces), &["multiplicities and obstructions of the whole set along each face"]))
}

/// `vectors` lists one row per vector, entries aligned with the points as sorted in the output.
pub fn support_seq(sets: &[SupportSet], vectors: &Value, l: &str) -> Outcome {
    need(sets, 1, Some(1))?;
    let a = &sets[0];
    let rows = vectors
        .get("vectors")
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::Malformed("vector file needs a `vectors` array".into()))?;
    let v: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Malformed("vectors must be arrays".into()))?
                .iter()
                .map(json::parse_rat)
                .collect::<Result<Vec<Rat>, Malformed>>()
        })
        .collect::<Result<_, _>>()?;
    let l = json::parse_int_list(l)?;
    let s = support_sequence(a, &v, &l)?;
    Ok(Output::new(Value::Array(s.phi.iter().map(json::int).collect()), &["vector entries follow the sorted order of the support points"])
        .with("points", json::support(a)["points"].clone()))
}

pub fn tropical(sets: &[SupportSet], kind: TropicalKind, axis: usize) -> Outcome {
    need(sets, 1, Some(1))?;
    let a = &sets[0];
    match kind {
        TropicalKind::Critical => {
            let s = critical_ci_summary(a, axis_index(axis, a)?)?;
            let t = s.tropical.ok_or_else(|| Failure::Math(Error::InvalidInput("tropical fan needs dimension at least 2".into())))?;
            Ok(Output::new(json::fan(&t), &[GENERIC]))
        }
        TropicalKind::Symmetric => {
            let s = symmetric_ci_summary(a)?;
            Ok(Output::new(
                json!({
                    "proper": json::opt(&s.tropical_proper, json::fan),
                    "diagonal": json::opt(&s.tropical_diagonal, json::fan),
                }),
                &[GENERIC],
            ))
        }
    }
}

pub fn check(sets: &[SupportSet], kind: CheckKind, fan: Option<&Value>) -> Outcome {
    match kind {
        CheckKind::Reflexive => {
            need(sets, 1, Some(1))?;
            let p = Polytope::hull(&sets[0]);
            let origin = reflexive_origin(&p)?;
            Ok(Output::new(json!(is_reflexive(&p)?), &[]).with("interior_point", json::opt(&origin, |o| json::point(o))))
        }
        CheckKind::Compatible => {
            need(sets, 1, Some(1))?;
            let f = json::parse_fan(fan.expect("fan file is required by the parser"))?;
            let p = Polytope::hull(&sets[0]);
            if f.ambient_dim() != p.ambient_dim() {
                return Err(Failure::Malformed("fan and polytope live in different dimensions".into()));
            }
            Ok(Output::new(json!(is_compatible(&p, &f)), &[]))
        }
        CheckKind::Irreducible => {
            need(sets, 1, None)?;
            let refs: Vec<&SupportSet> = sets.iter().collect();
            let v = match irreducibility_bkk(&refs)? {
                IrreducibilityVerdict::Irreducible => json!({ "verdict": "irreducible" }),
                IrreducibilityVerdict::Reducible { subset, subspace, mixed_volume } => json!({
                    "verdict": "reducible",
                    "subset": subset.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "subspace": subspace.iter().map(|x| json::point(x)).collect::<Vec<_>>(),
                    "mixed_volume": json::int(&mixed_volume),
                }),
                IrreducibilityVerdict::Empty { subset } => json!({
                    "verdict": "empty",
                    "subset": subset.iter().map(|i| i + 1).collect::<Vec<_>>(),
                }),
            };
            Ok(Output::new(v, &[GENERIC, "input files are numbered from 1"]))
        }
        CheckKind::ConditionStar => {
            need(sets, 1, Some(1))?;
            Ok(Output::new(json!(condition_star(&sets[0])?), &[]))
        }
        CheckKind::Blinders => {
            need(sets, 1, Some(1))?;
            let b: Vec<Value> = blinders(&sets[0]).iter().map(|e| json::support(e)["points"].clone()).collect();
            Ok(Output::new(Value::Array(b), &[]))
        }
    }
}

pub fn oracle(sets: &[SupportSet], kind: OracleKind, system: CountKind, seed: u64) -> Outcome {
    let assumptions = [GENERIC, "random rational coefficients from the seed; two samples must agree"];
    let value = match kind {
        OracleKind::Roots => match sets {
            [a] if a.dim() == 1 => {
                let (x, y) = (count_roots_1d(&sample(a, seed)), count_roots_1d(&sample(a, seed.wrapping_add(1))));
                match (x?, y?) {
                    (x, y) if x == y => bkkit::Int::from(x),
                    _ => return Err(Failure::Math(Error::OracleInconclusive("samples disagree".into()))),
                }
            }
            [a, b] if a.dim() == 2 && b.dim() == 2 => count_roots_generic(a, b, seed)?,
            _ => return Err(Failure::Malformed("roots needs one support in Z or two supports in Z^2".into())),
        },
        OracleKind::Critical => {
            need(sets, 1, Some(1))?;
            let mode = match system {
                CountKind::Df => OracleMode::Df,
                CountKind::S1 => OracleMode::S1,
                CountKind::S1cci => OracleMode::S1Cci,
            };
            count_critical_oracle(&sets[0], mode, seed)?
        }
    };
    Ok(Output::new(json::int(&value), &assumptions))
}

fn value_or_reason(r: bkkit::Result<bkkit::Int>) -> Value {
    match r {
        Ok(v) => json::int(&v),
        Err(e) => json!({ "unavailable": e.reason() }),
    }
}

pub fn identities(sets: &[SupportSet], which: Identity, axis: usize) -> Outcome {
    match which {
        Identity::Locmv => {
            if sets.len() % 2 != 0 || sets.is_empty() {
                return Err(Failure::Malformed("locmv takes A_1..A_n followed by B_1..B_n".into()));
            }
            let ps = hulls(sets);
            let (a, b) = ps.split_at(sets.len() / 2);
            let (a, b): (Vec<&Polytope>, Vec<&Polytope>) = (a.iter().collect(), b.iter().collect());
            let r = locmv(&a, &b)?;
            let comps: Vec<Value> = r.components.iter().map(|c| Value::Array(c.iter().map(json::polytope).collect())).collect();
            Ok(Output::new(json!({ "lhs": json::rat(&r.lhs), "rhs": json::rat(&r.rhs), "holds": r.holds() }), &[MIXED])
                .with("components", Value::Array(comps)))
        }
        Identity::Locvol => {
            need(sets, 2, None)?;
            let others: Vec<&SupportSet> = sets[2..].iter().collect();
            let r = locvol(&sets[0], &sets[1], &others)?;
            Ok(Output::new(
                json!({
                    "lhs": json::int(&r.lhs),
                    "middle": json::int(&r.middle),
                    "rhs": json::int(&r.rhs),
                    "link": json::int(&r.link),
                    "holds": r.holds(),
                }),
                &[MIXED],
            )
            .with("faces", Value::Array(r.faces.iter().map(|f| json::support(f)["points"].clone()).collect())))
        }
        Identity::Th0cci => {
            need(sets, 1, Some(1))?;
            let s = critical_ci_summary(&sets[0], axis_index(axis, &sets[0])?)?;
            Ok(Output::new(
                json!({
                    "euler_gf": json::int(&s.euler_gf),
                    "euler_e": json::int(&s.euler_e),
                    "euler_local": json::int(&s.euler_local),
                    "holds": s.eulers_agree(),
                }),
                &[GENERIC, SMOOTH, FRAC],
            ))
        }
        Identity::Answerlink3 => {
            need(sets, 1, Some(1))?;
            let a = &sets[0];
            if a.dim() != 3 {
                return Err(Failure::Malformed("answerlink3 needs a support in Z^3".into()));
            }
            let crit = critical_ci_summary(a, 0);
            let sym = symmetric_ci_summary(a);
            let general = |f: &dyn Fn(&SymmetricCISummary) -> Option<bkkit::Int>| match &sym {
                Ok(s) => f(s).map_or(json!({ "unavailable": "ConditionStarFails" }), |v| json::int(&v)),
                Err(e) => json!({ "unavailable": e.reason() }),
            };
            Ok(Output::new(
                json!({
                    "critical": {
                        "link": value_or_reason(link_formulas_n3(a, LinkFormula::Critical)),
                        "local": value_or_reason(crit.as_ref().map(|s| s.euler_local.clone()).map_err(Clone::clone)),
                        "general": value_or_reason(crit.as_ref().map(|s| s.euler_e.clone()).map_err(Clone::clone)),
                    },
                    "symmetric_diagonal": {
                        "link": value_or_reason(link_formulas_n3(a, LinkFormula::SymmetricDiagonal)),
                        "local": value_or_reason(symmetric_diagonal_local(a)),
                        "general": general(&|s| s.euler_diagonal.clone()),
                    },
                    "symmetric_proper": {
                        "link": value_or_reason(link_formulas_n3(a, LinkFormula::SymmetricProper)),
                        "local": value_or_reason(symmetric_proper_local(a)),
                        "general": general(&|s| s.euler_proper.clone()),
                    },
                }),
                &[GENERIC, SMOOTH, FRAC, "critical case uses the first axis"],
            ))
        }
    }
}
