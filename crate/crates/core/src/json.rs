//! JSON wire formats.
//!
//! Scalars travel as literal strings in the grammar of
//! [`crate::scalars::parse_literal`]; emitted literals are canonical, so
//! parsing and re-emitting any output reproduces it byte for byte.

use serde_json::{json, Map, Value};

use crate::affine::AffineMap;
use crate::jordan::{JordanBlock, JordanForm, Spectrum};
use crate::matrices::{AnyMatrix, Matrix};
use crate::reversibility::{Mode, ReverserWitness, ReversibilityReport};
use crate::scalars::{format_rational, DivisionRing, Gaussian, Quaternion, Rational, Ring, Scalar};
use crate::{Error, Result};

/// An affine map whose ring is only known at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAffine {
    R(AffineMap<Rational>),
    C(AffineMap<Gaussian>),
    H(AffineMap<Quaternion>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Matrix(AnyMatrix),
    Affine(AnyAffine),
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| bad(format!("invalid JSON: {e}")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.as_object()
        .ok_or_else(|| bad("expected a JSON object"))?
        .get(key)
        .ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn dimension(v: &Value, key: &str) -> Result<usize> {
    let n = field(v, key)?
        .as_u64()
        .ok_or_else(|| bad(format!("{key:?} must be a non-negative integer")))?;
    if n == 0 || n > 4096 {
        return Err(bad(format!("{key:?} = {n} is out of range")));
    }
    Ok(n as usize)
}

fn parse_ring(v: &Value) -> Result<Ring> {
    v.as_str()
        .ok_or_else(|| bad("\"ring\" must be a string"))?
        .parse()
}

fn scalar(v: &Value, ring: Ring) -> Result<Scalar> {
    match v {
        Value::String(s) => Scalar::parse(s, ring),
        Value::Number(n) => match n.as_i64() {
            Some(k) => Scalar::parse(&k.to_string(), ring),
            None => Err(bad(format!(
                "number {n} is not an integer; use a \"p/q\" string"
            ))),
        },
        _ => Err(bad(format!("expected a scalar literal, got {v}"))),
    }
}

fn scalars(v: &Value, ring: Ring) -> Result<Vec<Scalar>> {
    v.as_array()
        .ok_or_else(|| bad("expected an array of scalar literals"))?
        .iter()
        .map(|x| scalar(x, ring))
        .collect()
}

pub fn matrix_from_value(v: &Value) -> Result<AnyMatrix> {
    let ring = parse_ring(field(v, "ring")?)?;
    let rows = dimension(v, "rows")?;
    let cols = dimension(v, "cols")?;
    let entries = field(v, "entries")?
        .as_array()
        .ok_or_else(|| bad("\"entries\" must be an array of rows"))?;
    if entries.len() != rows {
        return Err(Error::ShapeMismatch(format!(
            "{} rows given, \"rows\" says {rows}",
            entries.len()
        )));
    }
    let mut flat = Vec::with_capacity(rows * cols);
    for row in entries {
        let row = scalars(row, ring)?;
        if row.len() != cols {
            return Err(Error::ShapeMismatch(format!(
                "row of length {}, \"cols\" says {cols}",
                row.len()
            )));
        }
        flat.extend(row);
    }
    AnyMatrix::from_scalars(ring, rows, cols, &flat)
}

pub fn matrix_to_value<T: DivisionRing>(m: &Matrix<T>) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                m.row(i)
                    .iter()
                    .map(|x| Value::String(x.to_string()))
                    .collect(),
            )
        })
        .collect();
    json!({
        "ring": T::RING.to_string(),
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

pub fn any_matrix_to_value(m: &AnyMatrix) -> Value {
    match m {
        AnyMatrix::R(m) => matrix_to_value(m),
        AnyMatrix::C(m) => matrix_to_value(m),
        AnyMatrix::H(m) => matrix_to_value(m),
    }
}

fn typed_affine<T: DivisionRing>(linear: Matrix<T>, t: &[Scalar]) -> Result<AffineMap<T>> {
    AffineMap::new(
        linear,
        t.iter().map(Scalar::downcast).collect::<Result<_>>()?,
    )
}

pub fn affine_from_value(v: &Value) -> Result<AnyAffine> {
    let linear = matrix_from_value(field(v, "linear")?)?;
    let t = scalars(field(v, "translation")?, linear.ring())?;
    Ok(match linear {
        AnyMatrix::R(m) => AnyAffine::R(typed_affine(m, &t)?),
        AnyMatrix::C(m) => AnyAffine::C(typed_affine(m, &t)?),
        AnyMatrix::H(m) => AnyAffine::H(typed_affine(m, &t)?),
    })
}

pub fn affine_to_value<T: DivisionRing>(g: &AffineMap<T>) -> Value {
    json!({
        "linear": matrix_to_value(&g.linear),
        "translation": g.translation.iter().map(|x| Value::String(x.to_string())).collect::<Vec<_>>(),
    })
}

pub fn any_affine_to_value(g: &AnyAffine) -> Value {
    match g {
        AnyAffine::R(g) => affine_to_value(g),
        AnyAffine::C(g) => affine_to_value(g),
        AnyAffine::H(g) => affine_to_value(g),
    }
}

impl AnyAffine {
    pub fn ring(&self) -> Ring {
        match self {
            AnyAffine::R(_) => Ring::R,
            AnyAffine::C(_) => Ring::C,
            AnyAffine::H(_) => Ring::H,
        }
    }

    pub fn promote(&self, to: Ring) -> Result<AnyAffine> {
        fn parts<T: DivisionRing>(g: &AffineMap<T>) -> (AnyMatrix, Vec<Scalar>) {
            let m = AnyMatrix::from_scalars(
                T::RING,
                g.dim(),
                g.dim(),
                &g.linear
                    .entries()
                    .iter()
                    .map(DivisionRing::to_scalar)
                    .collect::<Vec<_>>(),
            )
            .expect("well-formed");
            (
                m,
                g.translation.iter().map(DivisionRing::to_scalar).collect(),
            )
        }
        let (m, t) = match self {
            AnyAffine::R(g) => parts(g),
            AnyAffine::C(g) => parts(g),
            AnyAffine::H(g) => parts(g),
        };
        let t: Vec<Scalar> = t.iter().map(|x| x.promote(to)).collect::<Result<_>>()?;
        Ok(match m.promote(to)? {
            AnyMatrix::R(m) => AnyAffine::R(typed_affine(m, &t)?),
            AnyMatrix::C(m) => AnyAffine::C(typed_affine(m, &t)?),
            AnyMatrix::H(m) => AnyAffine::H(typed_affine(m, &t)?),
        })
    }
}

/// A matrix object has `"entries"`, an affine object has `"linear"`.
pub fn input_from_value(v: &Value) -> Result<Input> {
    let obj = v.as_object().ok_or_else(|| bad("expected a JSON object"))?;
    if obj.contains_key("linear") {
        affine_from_value(v).map(Input::Affine)
    } else if obj.contains_key("entries") {
        matrix_from_value(v).map(Input::Matrix)
    } else {
        Err(bad(
            "expected a matrix (\"entries\") or an affine map (\"linear\")",
        ))
    }
}

pub fn parse_input(bytes: &[u8]) -> Result<Input> {
    let text = std::str::from_utf8(bytes).map_err(|_| bad("input is not UTF-8"))?;
    input_from_value(&parse_json(text)?)
}

pub fn input_to_value(input: &Input) -> Value {
    match input {
        Input::Matrix(m) => any_matrix_to_value(m),
        Input::Affine(g) => any_affine_to_value(g),
    }
}

/// `{"eigenvalues": [{"lambda": "1+i", "multiplicity": 2}, …]}` with an
/// optional `"ring"` that must agree with `ring`.
pub fn spectrum_from_value(v: &Value, ring: Ring) -> Result<Spectrum> {
    if let Some(r) = v.as_object().and_then(|o| o.get("ring")) {
        let r = parse_ring(r)?;
        if r != ring {
            return Err(Error::HintMismatch(format!(
                "hint is for ring {r}, input is over {ring}"
            )));
        }
    }
    let list = field(v, "eigenvalues")?
        .as_array()
        .ok_or_else(|| bad("\"eigenvalues\" must be an array"))?;
    let mut eigenvalues = Vec::with_capacity(list.len());
    for e in list {
        let lambda: Gaussian = scalar(field(e, "lambda")?, Ring::C)?.downcast()?;
        let m = field(e, "multiplicity")?
            .as_u64()
            .ok_or_else(|| bad("\"multiplicity\" must be a non-negative integer"))?;
        eigenvalues.push((lambda, m as usize));
    }
    Ok(Spectrum { ring, eigenvalues })
}

pub fn spectrum_to_value(s: &Spectrum) -> Value {
    json!({
        "ring": s.ring.to_string(),
        "eigenvalues": s.eigenvalues.iter().map(|(l, m)| json!({"lambda": l.to_string(), "multiplicity": m})).collect::<Vec<_>>(),
    })
}

pub fn block_to_value(b: &JordanBlock) -> Value {
    match b {
        JordanBlock::Standard { lambda, size } => {
            json!({"kind": "standard", "lambda": lambda.to_string(), "size": size})
        }
        JordanBlock::RealPair { mu, nu, half_size } => json!({
            "kind": "realpair",
            "mu": format_rational(mu),
            "nu": format_rational(nu),
            "half_size": half_size,
        }),
    }
}

pub fn block_from_value(v: &Value) -> Result<JordanBlock> {
    let size = |key: &str| -> Result<usize> {
        field(v, key)?
            .as_u64()
            .map(|k| k as usize)
            .ok_or_else(|| bad(format!("{key:?} must be a non-negative integer")))
    };
    let rational = |key: &str| -> Result<Rational> { scalar(field(v, key)?, Ring::R)?.downcast() };
    match field(v, "kind")?.as_str() {
        Some("standard") => Ok(JordanBlock::Standard {
            lambda: scalar(field(v, "lambda")?, Ring::C)?.downcast()?,
            size: size("size")?,
        }),
        Some("realpair") => Ok(JordanBlock::RealPair {
            mu: rational("mu")?,
            nu: rational("nu")?,
            half_size: size("half_size")?,
        }),
        _ => Err(bad("block \"kind\" must be \"standard\" or \"realpair\"")),
    }
}

pub fn jordan_to_value<T: DivisionRing>(f: &JordanForm<T>) -> Value {
    json!({
        "blocks": f.blocks.iter().map(block_to_value).collect::<Vec<_>>(),
        "S": matrix_to_value(&f.s),
        "J": matrix_to_value(&f.j),
    })
}

fn witness_value<W>(w: &ReverserWitness<W>, key: &str, element: impl Fn(&W) -> Value) -> Value {
    let mut m = Map::new();
    m.insert(key.into(), element(&w.element));
    m.insert("involution".into(), Value::Bool(w.is_involution));
    m.insert("verified".into(), Value::Bool(w.verified));
    Value::Object(m)
}

pub fn matrix_witness_to_value<T: DivisionRing>(w: &ReverserWitness<Matrix<T>>) -> Value {
    witness_value(w, "matrix", matrix_to_value)
}

pub fn affine_witness_to_value<T: DivisionRing>(w: &ReverserWitness<AffineMap<T>>) -> Value {
    witness_value(w, "affine", affine_to_value)
}

fn report_value<W>(
    r: &ReversibilityReport<W>,
    witness: impl Fn(&ReverserWitness<W>) -> Value,
) -> Value {
    let (real, strong) = match r.mode {
        Mode::Group => ("reversible", "strongly_reversible"),
        Mode::Lie => ("ad_real", "strongly_ad_real"),
    };
    let mut m = Map::new();
    m.insert(real.into(), Value::String(r.real.to_string()));
    m.insert(strong.into(), Value::String(r.strong.to_string()));
    m.insert(
        "blocks".into(),
        Value::Array(r.blocks.iter().map(block_to_value).collect()),
    );
    m.insert(
        "pairing".into(),
        Value::Array(
            r.pairing
                .entries
                .iter()
                .map(|e| json!({"blocks": e.indices, "rule": e.rule.describe()}))
                .collect(),
        ),
    );
    m.insert("unmatched".into(), json!(r.pairing.unmatched));
    m.insert(
        "witness".into(),
        r.witness.as_ref().map(witness).unwrap_or(Value::Null),
    );
    Value::Object(m)
}

pub fn matrix_report_to_value<T: DivisionRing>(r: &ReversibilityReport<Matrix<T>>) -> Value {
    report_value(r, matrix_witness_to_value)
}

pub fn affine_report_to_value<T: DivisionRing>(r: &ReversibilityReport<AffineMap<T>>) -> Value {
    report_value(r, affine_witness_to_value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn matrix_round_trip() {
        let text = r#"{"ring":"C","rows":1,"cols":2,"entries":[["3/5+4/5 i","2/4"]]}"#;
        let m = matrix_from_value(&parse_json(text).unwrap()).unwrap();
        let AnyMatrix::C(ref c) = m else { panic!() };
        assert_eq!(*c.get(0, 1), Gaussian::from(rat(1, 2)));
        let out = any_matrix_to_value(&m);
        assert_eq!(out["entries"][0][0], "3/5+4/5i");
        assert_eq!(matrix_from_value(&out).unwrap(), m);
    }

    #[test]
    fn rejects_bad_shapes() {
        let text = r#"{"ring":"R","rows":2,"cols":1,"entries":[["1"]]}"#;
        assert!(matrix_from_value(&parse_json(text).unwrap()).is_err());
        let text = r#"{"ring":"R","rows":1,"cols":1,"entries":[["i"]]}"#;
        assert!(matrix_from_value(&parse_json(text).unwrap()).is_err());
    }

    #[test]
    fn affine_and_hint() {
        let text = r#"{"linear":{"ring":"H","rows":1,"cols":1,"entries":[["1+0i+1j+0k"]]},"translation":["0"]}"#;
        let g = affine_from_value(&parse_json(text).unwrap()).unwrap();
        assert_eq!(g.ring(), Ring::H);
        let out = any_affine_to_value(&g);
        assert_eq!(out["linear"]["entries"][0][0], "1+j");
        let hint = parse_json(r#"{"eigenvalues":[{"lambda":"i","multiplicity":1}]}"#).unwrap();
        let s = spectrum_from_value(&hint, Ring::H).unwrap();
        assert_eq!(s.eigenvalues, vec![(Gaussian::i(), 1)]);
        assert!(spectrum_from_value(&hint, Ring::R).is_ok());
        let hint = parse_json(r#"{"ring":"C","eigenvalues":[]}"#).unwrap();
        assert!(spectrum_from_value(&hint, Ring::R).is_err());
    }

    #[test]
    fn blocks_round_trip() {
        let b = JordanBlock::RealPair {
            mu: rat(3, 5),
            nu: rat(4, 5),
            half_size: 2,
        };
        assert_eq!(block_from_value(&block_to_value(&b)).unwrap(), b);
    }
}
