//! JSON encoding of supports, polytopes and fans. Integers are decimal strings,
//! rationals `p/q`; vertices, rays and cells are sorted lexicographically.

use bkkit::arith::cmp_lex;
use bkkit::fans::{Cone, WeightedFan};
use bkkit::{Int, IntVec, Polytope, Rat, RatVec, SupportSet};
use serde_json::{json, Map, Value};

/// Input problems; these map to exit code 2.
#[derive(Debug)]
pub struct Malformed(pub String);

impl<E: std::fmt::Display> From<E> for Malformed {
    fn from(e: E) -> Self {
        Malformed(e.to_string())
    }
}

pub fn int(x: &Int) -> Value {
    Value::String(x.to_string())
}

pub fn rat(x: &Rat) -> Value {
    Value::String(x.to_string())
}

pub fn point(p: &[Int]) -> Value {
    Value::Array(p.iter().map(int).collect())
}

pub fn rat_point(p: &[Rat]) -> Value {
    Value::Array(p.iter().map(rat).collect())
}

pub fn support(a: &SupportSet) -> Value {
    json!({ "dim": a.dim(), "points": a.points().iter().map(|p| point(p)).collect::<Vec<_>>() })
}

pub fn polytope(p: &Polytope) -> Value {
    let mut verts: Vec<RatVec> = p.vertices().to_vec();
    verts.sort_by(|a, b| cmp_lex(a, b));
    json!({
        "ambient_dim": p.ambient_dim(),
        "dim": p.dim(),
        "vertices": verts.iter().map(|v| rat_point(v)).collect::<Vec<_>>(),
    })
}

pub fn fan(f: &WeightedFan) -> Value {
    let mut cells: Vec<(Vec<IntVec>, Vec<IntVec>, Int)> = f
        .cells()
        .iter()
        .map(|(c, w)| {
            let mut rays = c.rays.clone();
            rays.sort();
            (rays, c.lineality.clone(), w.clone())
        })
        .collect();
    cells.sort();
    json!({
        "ambient_dim": f.ambient_dim(),
        "dim": f.dim(),
        "cells": cells
            .iter()
            .map(|(r, l, w)| json!({
                "rays": r.iter().map(|x| point(x)).collect::<Vec<_>>(),
                "lineality": l.iter().map(|x| point(x)).collect::<Vec<_>>(),
                "weight": int(w),
            }))
            .collect::<Vec<_>>(),
    })
}

pub fn opt<T>(x: &Option<T>, f: impl Fn(&T) -> Value) -> Value {
    x.as_ref().map_or(Value::Null, f)
}

fn parse_int(v: &Value) -> Result<Int, Malformed> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse()?),
        Value::String(s) => s.trim().parse().map_err(|_| Malformed(format!("not an integer: {s:?}"))),
        other => Err(Malformed(format!("not an integer: {other}"))),
    }
}

pub fn parse_rat(v: &Value) -> Result<Rat, Malformed> {
    match v {
        Value::String(s) if s.contains('/') => {
            let (p, q) = s.split_once('/').unwrap();
            let (p, q): (Int, Int) = (p.trim().parse()?, q.trim().parse()?);
            if q == Int::from(0) {
                return Err(Malformed(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        _ => Ok(Rat::from_integer(parse_int(v)?)),
    }
}

fn parse_vectors(v: &Value, what: &str) -> Result<Vec<IntVec>, Malformed> {
    let rows = v.as_array().ok_or_else(|| Malformed(format!("`{what}` must be an array")))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Malformed(format!("entries of `{what}` must be arrays")))?
                .iter()
                .map(parse_int)
                .collect()
        })
        .collect()
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>, Malformed> {
    v.as_object().ok_or_else(|| Malformed(format!("{what} must be a JSON object")))
}

fn field_usize(o: &Map<String, Value>, key: &str) -> Result<Option<usize>, Malformed> {
    match o.get(key) {
        None => Ok(None),
        Some(v) => v.as_u64().map(|x| Some(x as usize)).ok_or_else(|| Malformed(format!("`{key}` must be a nonnegative integer"))),
    }
}

/// `{"dim": n, "points": [...]}`; `"vertices"` is accepted in place of `"points"` so that
/// emitted polytopes with lattice vertices can be fed back in.
pub fn parse_support(v: &Value) -> Result<SupportSet, Malformed> {
    let o = object(v, "a support file")?;
    let pts = o.get("points").or_else(|| o.get("vertices")).ok_or_else(|| Malformed("missing `points`".into()))?;
    let points = parse_vectors(pts, "points")?;
    let dim = match field_usize(o, "dim")? {
        Some(d) if o.contains_key("points") => d,
        _ => field_usize(o, "ambient_dim")?.or_else(|| points.first().map(|p| p.len())).ok_or_else(|| Malformed("missing `dim`".into()))?,
    };
    if dim == 0 {
        return Err(Malformed("`dim` must be positive".into()));
    }
    Ok(SupportSet::new(dim, points)?)
}

#[cfg(test)]
pub fn parse_polytope(v: &Value) -> Result<Polytope, Malformed> {
    let o = object(v, "a polytope")?;
    let verts = o.get("vertices").and_then(Value::as_array).ok_or_else(|| Malformed("missing `vertices`".into()))?;
    let points: Vec<RatVec> = verts
        .iter()
        .map(|r| r.as_array().ok_or_else(|| Malformed("vertices must be arrays".into()))?.iter().map(parse_rat).collect())
        .collect::<Result<_, _>>()?;
    let n = field_usize(o, "ambient_dim")?.or_else(|| points.first().map(|p| p.len()));
    match n {
        Some(n) if !points.is_empty() && points.iter().all(|p| p.len() == n) => Ok(Polytope::from_points(&points)),
        _ => Err(Malformed("vertices must be nonempty and of equal length".into())),
    }
}

pub fn parse_fan(v: &Value) -> Result<WeightedFan, Malformed> {
    let o = object(v, "a fan")?;
    let n = field_usize(o, "ambient_dim")?.ok_or_else(|| Malformed("missing `ambient_dim`".into()))?;
    let dim = field_usize(o, "dim")?.ok_or_else(|| Malformed("missing `dim`".into()))?;
    let cells = o.get("cells").and_then(Value::as_array).ok_or_else(|| Malformed("missing `cells`".into()))?;
    let mut out = Vec::new();
    for c in cells {
        let c = object(c, "a cell")?;
        let rays = parse_vectors(c.get("rays").unwrap_or(&json!([])), "rays")?;
        let lin = parse_vectors(c.get("lineality").unwrap_or(&json!([])), "lineality")?;
        if rays.iter().chain(&lin).any(|r| r.len() != n) {
            return Err(Malformed("ray of wrong length".into()));
        }
        let cone = Cone::from_generators(n, &rays, &lin);
        if cone.dim() != dim {
            return Err(Malformed(format!("cell of dimension {} in a fan of dimension {dim}", cone.dim())));
        }
        out.push((cone, parse_int(c.get("weight").unwrap_or(&json!("1")))?));
    }
    Ok(WeightedFan::new(n, dim, out))
}

/// Comma-separated integers, e.g. `"1,-2,0"`.
pub fn parse_int_list(s: &str) -> Result<IntVec, Malformed> {
    s.split(',').map(|x| x.trim().parse::<Int>().map_err(|_| Malformed(format!("not an integer: {x:?}")))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use bkkit::fans::normal_fan;

    fn sq() -> SupportSet {
        SupportSet::from_i64(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    #[test]
    fn support_round_trip() {
        let a = sq();
        assert_eq!(parse_support(&support(&a)).unwrap(), a);
        let text = r#"{"dim": 1, "points": [[3], ["-12345678901234567890123"]]}"#;
        let b = parse_support(&serde_json::from_str(text).unwrap()).unwrap();
        assert_eq!(b.points()[0][0].to_string(), "-12345678901234567890123");
    }

    #[test]
    fn polytope_round_trip() {
        let p = Polytope::hull(&sq()).scale(&Rat::new(Int::from(1), Int::from(2)));
        let v = polytope(&p);
        assert_eq!(v["vertices"][1], json!(["0", "1/2"]));
        let back = parse_polytope(&v).unwrap();
        assert_eq!(back, p);
        assert_eq!(polytope(&back), v);
    }

    #[test]
    fn fan_round_trip() {
        let f = normal_fan(&Polytope::hull(&sq())).skeleton(1).scale(&Int::from(3));
        let v = fan(&f);
        let back = parse_fan(&v).unwrap();
        assert_eq!(back, f);
        assert_eq!(fan(&back), v);
    }

    #[test]
    fn malformed_inputs() {
        for text in [
            r#"[1, 2]"#,
            r#"{"dim": 2}"#,
            r#"{"dim": 2, "points": []}"#,
            r#"{"dim": 2, "points": [[0, 0], [0, 0]]}"#,
            r#"{"dim": 2, "points": [[0, 0, 1]]}"#,
            r#"{"dim": 2, "points": [[0, 0.5]]}"#,
        ] {
            assert!(parse_support(&serde_json::from_str(text).unwrap()).is_err(), "{text}");
        }
        assert!(parse_int_list("1,x").is_err());
        assert_eq!(parse_int_list("1, -2").unwrap(), vec![Int::from(1), Int::from(-2)]);
    }
}
