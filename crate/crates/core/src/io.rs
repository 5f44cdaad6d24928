//! JSON encodings.
//!
//! Rationals are strings ("-5/3"); integer JSON numbers are accepted on
//! input. Elements a + bα with b ≠ 0 are objects {"a": .., "b": ..}.
//! Matrices are {"rows", "cols", "entries"}; a bare nested array is accepted.

use serde::Serializer;
use serde_json::{json, Map, Value};

use crate::case1::{Reduction, Vec7};
use crate::case2::PairVec;
use crate::cohomology::{Cocycle, SigmaStructure};
use crate::error::{Error, Result};
use crate::fields::{format_rat, parse_rat, squarefree_part, QuadElem, QuadField, Rat};
use crate::g2rep::TriVector;
use crate::linalg::{Mat, Scalar};

pub fn ser_rat<S: Serializer>(q: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(q))
}

pub fn ser_rat_vec<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rat))
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn rat_to_json(q: &Rat) -> Value {
    Value::String(format_rat(q))
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(crate::fields::int(i)),
            None => parse_rat(&n.to_string()).map_err(|_| parse_err(format!("non-integer number {n}; write rationals as strings"))),
        },
        other => Err(parse_err(format!("expected rational, found {other}"))),
    }
}

/// Scalars with a JSON form.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(ctx: Self::Ctx, v: &Value) -> Result<Self>;
}

impl JsonScalar for Rat {
    fn to_json(&self) -> Value {
        rat_to_json(self)
    }
    fn from_json(_: (), v: &Value) -> Result<Self> {
        rat_from_json(v)
    }
}

impl JsonScalar for QuadElem {
    fn to_json(&self) -> Value {
        match self.to_rat() {
            Some(q) => rat_to_json(&q),
            None => json!({"a": rat_to_json(self.a()), "b": rat_to_json(self.b())}),
        }
    }
    fn from_json(f: QuadField, v: &Value) -> Result<Self> {
        match v {
            Value::Object(o) => {
                let get = |k: &str| o.get(k).map_or(Ok(crate::fields::int(0)), rat_from_json);
                Ok(f.elem(get("a")?, get("b")?))
            }
            other => Ok(f.from_rat(rat_from_json(other)?)),
        }
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("expected array for {what}")))
}

pub fn vec_to_json<T: JsonScalar>(v: &[T]) -> Value {
    Value::Array(v.iter().map(JsonScalar::to_json).collect())
}

pub fn vec_from_json<T: JsonScalar>(ctx: T::Ctx, v: &Value, len: usize) -> Result<Vec<T>> {
    let a = array(v, "vector")?;
    if a.len() != len {
        return Err(parse_err(format!("expected {len} entries, found {}", a.len())));
    }
    a.iter().map(|e| T::from_json(ctx, e)).collect()
}

pub fn vec7_from_json<T: JsonScalar>(ctx: T::Ctx, v: &Value) -> Result<Vec7<T>> {
    Vec7::new(vec_from_json(ctx, v, 7)?)
}

pub fn mat_to_json<T: JsonScalar>(m: &Mat<T>) -> Value {
    let entries: Vec<Value> = (0..m.rows()).map(|i| vec_to_json(m.row(i))).collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries})
}

pub fn mat_from_json<T: JsonScalar>(ctx: T::Ctx, v: &Value) -> Result<Mat<T>> {
    let (rows_v, dims) = match v {
        Value::Object(o) => {
            let e = o.get("entries").ok_or_else(|| parse_err("matrix object needs \"entries\""))?;
            let dim = |k: &str| o.get(k).and_then(Value::as_u64).map(|x| x as usize);
            (e, dim("rows").zip(dim("cols")))
        }
        other => (other, None),
    };
    let rows = array(rows_v, "matrix rows")?;
    let data: Vec<Vec<T>> = rows
        .iter()
        .map(|r| array(r, "matrix row")?.iter().map(|e| T::from_json(ctx, e)).collect())
        .collect::<Result<_>>()?;
    let m = Mat::from_rows(ctx, data).map_err(|_| parse_err("ragged matrix"))?;
    if let Some(d) = dims {
        if d != m.dims() {
            return Err(parse_err(format!("declared {}x{} but entries are {}x{}", d.0, d.1, m.rows(), m.cols())));
        }
    }
    Ok(m)
}

pub fn pair_to_json<T: JsonScalar>(x: &PairVec<T>) -> Value {
    json!({"x1": vec_to_json(&x.x1), "x2": vec_to_json(&x.x2)})
}

pub fn pair_from_json<T: JsonScalar>(ctx: T::Ctx, v: &Value) -> Result<PairVec<T>> {
    let get = |k: &str| v.get(k).ok_or_else(|| parse_err(format!("pair needs \"{k}\"")));
    Ok(PairVec::new(vec7_from_json(ctx, get("x1")?)?, vec7_from_json(ctx, get("x2")?)?))
}

pub fn group2_to_json<T: JsonScalar>(g1: &Mat<T>, g2: &Mat<T>) -> Value {
    json!({"g1": mat_to_json(g1), "g2": mat_to_json(g2)})
}

pub fn group2_from_json<T: JsonScalar>(ctx: T::Ctx, v: &Value) -> Result<(Mat<T>, Mat<T>)> {
    let get = |k: &str| v.get(k).ok_or_else(|| parse_err(format!("group element needs \"{k}\"")));
    let g1 = mat_from_json(ctx, get("g1")?)?;
    let g2 = mat_from_json(ctx, get("g2")?)?;
    if g1.dims() != (7, 7) || g2.dims() != (2, 2) {
        return Err(parse_err("group element needs a 7x7 g1 and a 2x2 g2"));
    }
    Ok((g1, g2))
}

pub fn trivector_to_json<T: JsonScalar>(t: &TriVector<T>) -> Value {
    vec_to_json(t.coords())
}

pub fn trivector_from_json<T: JsonScalar>(ctx: T::Ctx, v: &Value) -> Result<TriVector<T>> {
    TriVector::new(vec_from_json(ctx, v, crate::g2rep::DIM)?)
}

pub fn cocycle_to_json(c: &Cocycle) -> Value {
    let mut o = Map::new();
    o.insert("d".into(), json!(c.structure.field().d()));
    o.insert("structure".into(), json!(c.structure.tag()));
    if let SigmaStructure::Unitary { lambda, .. } = &c.structure {
        o.insert("lambda".into(), vec_to_json(&lambda.diagonal()));
    }
    o.insert("h".into(), mat_to_json(&c.h));
    Value::Object(o)
}

pub fn cocycle_from_json(v: &Value) -> Result<Cocycle> {
    let d = v.get("d").and_then(Value::as_i64).ok_or_else(|| parse_err("cocycle needs integer \"d\""))?;
    let field = QuadField::new(d)?;
    let tag = v.get("structure").and_then(Value::as_str).ok_or_else(|| parse_err("cocycle needs \"structure\""))?;
    let h = mat_from_json(field, v.get("h").ok_or_else(|| parse_err("cocycle needs \"h\""))?)?;
    let structure = match tag {
        "torus" => SigmaStructure::Torus { field },
        "unitary" | "special_unitary" => {
            let lam = match v.get("lambda") {
                Some(l) => {
                    let diag: Vec<Rat> = array(l, "lambda")?.iter().map(rat_from_json).collect::<Result<_>>()?;
                    Mat::diag((), &diag)
                }
                None => return Err(parse_err("unitary cocycle needs \"lambda\"")),
            };
            SigmaStructure::unitary(field, lam, tag == "special_unitary")?
        }
        other => return Err(parse_err(format!("unknown structure {other:?}"))),
    };
    Cocycle::new(structure, h)
}

pub fn reduction_to_json(x: &[Rat], r: &Reduction) -> Result<Value> {
    let delta = crate::case1::delta(x)?;
    let class = squarefree_part(&delta)?;
    Ok(json!({
        "g": mat_to_json(r.g.matrix()),
        "y": vec_to_json(&r.y),
        "delta": rat_to_json(&delta),
        "class": serde_json::to_value(&class).map_err(|e| Error::Invariant(e.to_string()))?,
        "steps": serde_json::to_value(&r.steps).map_err(|e| Error::Invariant(e.to_string()))?,
    }))
}
