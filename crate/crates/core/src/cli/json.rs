//! JSON encodings. Integers are JSON numbers of arbitrary size; dyadic
//! values are strings in the literal grammar.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::classify::{AutGroup, CensusReport, IsoResult};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::geometry::{AffineMap, Matrix2, Perm, Point};
use crate::hats::{EncodingTriple, Hat, Normalized};

use super::literal::parse_dyadic;

fn int(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn dy(d: &Dyadic) -> Value {
    Value::String(d.to_string())
}

pub fn hat(h: &Hat) -> Value {
    json!({"i": int(h.i()), "j": int(h.j()), "m": int(h.m())})
}

pub fn triple(t: &EncodingTriple) -> Value {
    json!([int(t.i()), int(t.j()), int(t.m())])
}

pub fn matrix(m: &Matrix2) -> Value {
    json!([[dy(&m.a), dy(&m.b)], [dy(&m.c), dy(&m.d)]])
}

pub fn point(p: &Point) -> Value {
    json!([dy(&p.x), dy(&p.y)])
}

pub fn map(perm: &Perm, f: &AffineMap) -> Value {
    json!({
        "perm": perm.label(),
        "linear": matrix(&f.linear),
        "translation": point(&f.translation),
    })
}

pub fn aut(g: &AutGroup) -> Value {
    json!({"aut": {
        "group": g.tag.name(),
        "order": g.tag.order(),
        "witnesses": g.witnesses.iter().map(|(p, f)| map(p, f)).collect::<Vec<_>>(),
    }})
}

pub fn iso(r: &IsoResult) -> Value {
    json!({"iso": {
        "result": r.isomorphic,
        "case": r.case.map(|c| c.letter().to_string()),
        "map": r.witness.as_ref().map(|(p, f)| map(p, f)),
    }})
}

pub fn normalization(n: &Normalized) -> Value {
    json!({
        "roles": n.roles.label(),
        "hat": hat(&n.hat),
        "triple": triple(&n.hat.pointed_canonical()),
        "map": map(&n.roles, &n.map),
    })
}

pub fn census(r: &CensusReport) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            let hist: serde_json::Map<String, Value> = row
                .aut_histogram
                .iter()
                .map(|(t, n)| (t.name().to_string(), json!(n)))
                .collect();
            json!({
                "j": row.j,
                "m": row.m,
                "hats": row.hats,
                "pointed_classes": row.pointed_classes,
                "iso_classes": row.iso_classes,
                "aut": hist,
                "orbit_stabilizer": row.orbit_stabilizer,
            })
        })
        .collect();
    json!({"census": {"rows": rows, "ok": r.ok()}})
}

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed JSON {what}"))
}

fn read_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| bad("integer")),
        _ => Err(bad("integer")),
    }
}

fn read_dyadic(v: &Value) -> Result<Dyadic> {
    v.as_str().ok_or_else(|| bad("dyadic")).and_then(parse_dyadic)
}

pub fn read_hat(v: &Value) -> Result<Hat> {
    let h = v.get("hat").unwrap_or(v);
    let get = |k: &str| h.get(k).ok_or_else(|| bad("hat")).and_then(read_int);
    Hat::new(get("i")?, get("j")?, get("m")?)
}

pub fn read_triple(v: &Value) -> Result<EncodingTriple> {
    let t = v.get("triple").unwrap_or(v);
    match t.as_array().map(Vec::as_slice) {
        Some([i, j, m]) => EncodingTriple::new(read_int(i)?, read_int(j)?, read_int(m)?),
        _ => Err(bad("triple")),
    }
}

pub fn read_matrix(v: &Value) -> Result<Matrix2> {
    let rows = v.as_array().ok_or_else(|| bad("matrix"))?;
    let cells: Vec<Dyadic> = rows
        .iter()
        .flat_map(|r| r.as_array().cloned().unwrap_or_default())
        .map(|c| read_dyadic(&c))
        .collect::<Result<_>>()?;
    match (rows.len(), <[Dyadic; 4]>::try_from(cells)) {
        (2, Ok([a, b, c, d])) => Ok(Matrix2 { a, b, c, d }),
        _ => Err(bad("matrix")),
    }
}

pub fn read_map(v: &Value) -> Result<(Perm, AffineMap)> {
    let perm = v
        .get("perm")
        .and_then(Value::as_str)
        .and_then(Perm::from_label)
        .ok_or_else(|| bad("perm"))?;
    let linear = read_matrix(v.get("linear").ok_or_else(|| bad("map"))?)?;
    let t = v
        .get("translation")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("translation"))?;
    match t.as_slice() {
        [x, y] => Ok((
            perm,
            AffineMap::new(linear, Point::new(read_dyadic(x)?, read_dyadic(y)?)),
        )),
        _ => Err(bad("translation")),
    }
}
