//! JSON wire formats.
//!
//! Scalars travel as strings (`"3"`, `"-5/2"`, `"inf"`) so that rationals
//! stay exact; readers also accept JSON integers. Subsets are keyed by their
//! 1-based display form, e.g. `"{1,3}"`.
//!
//! | value | shape |
//! |---|---|
//! | tropical polynomial | `{"nvars": 2, "terms": [{"coeff": "0", "exp": [1, 0]}]}` |
//! | classical polynomial | same, `coeff` a field element |
//! | field element | `"5/6"` or `{"puiseux": [["1/2", "3"]]}` (exponent, coefficient) |
//! | vector | `["0", "inf", "2"]` |
//! | matroid | `{"n": 4, "d": 2, "plucker": {"{1,2}": "0"}}`, `∞` entries omitted |
//! | exterior / Clifford element | `{"n": 3, "coeffs": {"{1,3}": "0"}}` |
//!
//! ```
//! use tropical::json;
//!
//! let text = r#"{"n": 3, "d": 2, "plucker": {"{1,2}": "0", "{1,3}": "1", "{2,3}": "0"}}"#;
//! let m = json::matroid_from_json(&serde_json::from_str(text).unwrap()).unwrap();
//! assert!(m.check_vm_axiom().is_ok());
//! assert_eq!(json::matroid_from_json(&json::matroid_to_json(&m)).unwrap(), m);
//! ```

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::clifford::CliffordElem;
use crate::error::{Error, Result};
use crate::exterior::ExtElement;
use crate::field::{FieldElem, Puiseux};
use crate::hypersurface::{HypersurfaceCell, PlanarPiece};
use crate::linalg::{TropMatrix, TropVector};
use crate::matroid::ValuatedMatroid;
use crate::monomial::Exponent;
use crate::polyhedron::AffineConstraint;
use crate::poly::TropPoly;
use crate::scalar::{parse_rational, TropScalar};
use crate::subset::Subset;
use crate::valuation::ClassicalPoly;

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| err(format!("missing field {key:?}")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| err(format!("{what} must be a nonnegative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(format!("{what} must be an array")))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| err(format!("{what} must be an object")))
}

pub fn rational_to_json(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().unwrap().into())),
        _ => Err(err(format!("expected a rational, got {v}"))),
    }
}

pub fn scalar_to_json(s: &TropScalar) -> Value {
    Value::String(s.to_string())
}

pub fn scalar_from_json(v: &Value) -> Result<TropScalar> {
    match v {
        Value::String(s) => s.parse(),
        _ => rational_from_json(v).map(TropScalar::Finite),
    }
}

fn exponent_from_json(v: &Value, nvars: usize) -> Result<Exponent> {
    let e = as_array(v, "exp")?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| err("exponents must be integers")))
        .collect::<Result<Exponent>>()?;
    if e.len() != nvars {
        return Err(Error::LengthMismatch { expected: nvars, got: e.len() });
    }
    Ok(e)
}

pub fn poly_to_json(f: &TropPoly) -> Value {
    let terms: Vec<Value> = f.terms().map(|(e, c)| json!({"coeff": rational_to_json(c), "exp": e})).collect();
    json!({"nvars": f.nvars(), "terms": terms})
}

/// Reads a tropical polynomial. Coefficients must be finite: a term with
/// coefficient `∞` is no term at all and is rejected as a likely mistake.
pub fn poly_from_json(v: &Value) -> Result<TropPoly> {
    let nvars = as_usize(field(v, "nvars")?, "nvars")?;
    let mut terms = Vec::new();
    for t in as_array(field(v, "terms")?, "terms")? {
        let c = scalar_from_json(field(t, "coeff")?)?;
        if c.is_infinite() {
            return Err(err("polynomial coefficients must be finite"));
        }
        terms.push((exponent_from_json(field(t, "exp")?, nvars)?, c));
    }
    Ok(TropPoly::from_terms(nvars, terms))
}

pub fn field_elem_to_json(a: &FieldElem) -> Value {
    match a {
        FieldElem::Rational(r) => rational_to_json(r),
        FieldElem::Puiseux(p) => {
            let terms: Vec<Value> = p.terms().map(|(e, c)| json!([e.to_string(), c.to_string()])).collect();
            json!({ "puiseux": terms })
        }
    }
}

pub fn field_elem_from_json(v: &Value) -> Result<FieldElem> {
    if let Some(terms) = v.get("puiseux") {
        let mut out = Vec::new();
        for t in as_array(terms, "puiseux")? {
            let pair = as_array(t, "puiseux term")?;
            if pair.len() != 2 {
                return Err(err("puiseux terms are [exponent, coefficient] pairs"));
            }
            out.push((rational_from_json(&pair[0])?, rational_from_json(&pair[1])?));
        }
        return Ok(FieldElem::Puiseux(Puiseux::from_terms(out)));
    }
    if let Some(r) = v.get("rat") {
        return rational_from_json(r).map(FieldElem::Rational);
    }
    rational_from_json(v).map(FieldElem::Rational)
}

pub fn classical_poly_to_json(f: &ClassicalPoly) -> Value {
    let terms: Vec<Value> = f.terms().map(|(e, c)| json!({"coeff": field_elem_to_json(c), "exp": e})).collect();
    json!({"nvars": f.nvars(), "terms": terms})
}

pub fn classical_poly_from_json(v: &Value) -> Result<ClassicalPoly> {
    let nvars = as_usize(field(v, "nvars")?, "nvars")?;
    let mut terms = Vec::new();
    for t in as_array(field(v, "terms")?, "terms")? {
        terms.push((exponent_from_json(field(t, "exp")?, nvars)?, field_elem_from_json(field(t, "coeff")?)?));
    }
    ClassicalPoly::from_terms(nvars, terms)
}

/// Reads `{"nvars": n, "generators": [...]}`; a bare array of polynomials
/// is accepted when it is nonempty.
pub fn generators_from_json(v: &Value) -> Result<(usize, Vec<ClassicalPoly>)> {
    let (declared, list) = match v {
        Value::Array(list) => (None, list),
        _ => (
            Some(as_usize(field(v, "nvars")?, "nvars")?),
            as_array(field(v, "generators")?, "generators")?,
        ),
    };
    let gens = list.iter().map(classical_poly_from_json).collect::<Result<Vec<_>>>()?;
    let nvars = match (declared, gens.first()) {
        (Some(n), _) => n,
        (None, Some(g)) => g.nvars(),
        (None, None) => return Err(err("an empty generator list needs an explicit nvars")),
    };
    if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::LengthMismatch { expected: nvars, got: g.nvars() });
    }
    Ok((nvars, gens))
}

pub fn vector_to_json(x: &TropVector) -> Value {
    Value::Array(x.iter().map(scalar_to_json).collect())
}

pub fn vector_from_json(v: &Value) -> Result<TropVector> {
    Ok(TropVector(as_array(v, "vector")?.iter().map(scalar_from_json).collect::<Result<_>>()?))
}

pub fn matrix_to_json(m: &TropMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(scalar_to_json).collect())).collect())
}

pub fn matrix_from_json(v: &Value) -> Result<TropMatrix> {
    let rows = as_array(v, "matrix")?
        .iter()
        .map(|r| as_array(r, "matrix row")?.iter().map(scalar_from_json).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    TropMatrix::from_rows(rows)
}

fn subset_map_to_json<'a>(entries: impl Iterator<Item = (Subset, TropScalar)> + 'a) -> Value {
    let mut map = Map::new();
    for (s, c) in entries.filter(|(_, c)| c.is_finite()) {
        map.insert(s.to_string(), scalar_to_json(&c));
    }
    Value::Object(map)
}

fn subset_map_from_json(v: &Value, what: &str) -> Result<Vec<(Subset, TropScalar)>> {
    as_object(v, what)?
        .iter()
        .map(|(k, c)| Ok((k.parse::<Subset>()?, scalar_from_json(c)?)))
        .collect()
}

pub fn matroid_to_json(m: &ValuatedMatroid) -> Value {
    json!({
        "n": m.ground_size(),
        "d": m.rank(),
        "plucker": subset_map_to_json(m.entries().map(|(s, c)| (s, c.clone()))),
    })
}

/// Reads a Plücker vector; missing subsets are `∞`. The exchange axiom is
/// not checked here.
pub fn matroid_from_json(v: &Value) -> Result<ValuatedMatroid> {
    let n = as_usize(field(v, "n")?, "n")?;
    let d = as_usize(field(v, "d")?, "d")?;
    ValuatedMatroid::from_pairs(n, d, subset_map_from_json(field(v, "plucker")?, "plucker")?)
}

pub fn ext_to_json(p: &ExtElement) -> Value {
    json!({
        "n": p.ground_size(),
        "coeffs": subset_map_to_json(p.terms().map(|(s, c)| (s, TropScalar::Finite(c.clone())))),
    })
}

pub fn ext_from_json(v: &Value) -> Result<ExtElement> {
    let n = as_usize(field(v, "n")?, "n")?;
    ExtElement::from_pairs(n, subset_map_from_json(field(v, "coeffs")?, "coeffs")?)
}

pub fn clifford_to_json(a: &CliffordElem) -> Value {
    json!({
        "n": a.generators(),
        "coeffs": subset_map_to_json(a.terms().map(|(s, c)| (s, TropScalar::Finite(c.clone())))),
    })
}

pub fn clifford_from_json(v: &Value) -> Result<CliffordElem> {
    let n = as_usize(field(v, "n")?, "n")?;
    CliffordElem::from_pairs(n, subset_map_from_json(field(v, "coeffs")?, "coeffs")?)
}

fn constraint_to_json(c: &AffineConstraint) -> Value {
    json!({
        "coeffs": c.coeffs.iter().map(rational_to_json).collect::<Vec<_>>(),
        "rhs": rational_to_json(&c.rhs),
    })
}

fn point_to_json(p: &[BigRational; 2]) -> Value {
    json!([rational_to_json(&p[0]), rational_to_json(&p[1])])
}

/// Plot data for one plane cell: its kind and exact vertices/directions.
pub fn planar_piece_to_json(p: &PlanarPiece) -> Value {
    match p {
        PlanarPiece::Point(a) => json!({"kind": "point", "at": point_to_json(a)}),
        PlanarPiece::Segment(a, b) => json!({"kind": "segment", "from": point_to_json(a), "to": point_to_json(b)}),
        PlanarPiece::Ray { start, direction } => {
            json!({"kind": "ray", "from": point_to_json(start), "direction": point_to_json(direction)})
        }
        PlanarPiece::Line { point, direction } => {
            json!({"kind": "line", "through": point_to_json(point), "direction": point_to_json(direction)})
        }
    }
}

/// A cell as its H-description: `⟨a, x⟩ = b` plus `⟨a_i, x⟩ ≤ b_i`.
pub fn cell_to_json(c: &HypersurfaceCell) -> Value {
    let mut out = json!({
        "pair": [c.pair.0, c.pair.1],
        "equality": constraint_to_json(&c.equality),
        "inequalities": c.inequalities.iter().map(constraint_to_json).collect::<Vec<_>>(),
    });
    if let Some(piece) = c.planar_piece() {
        out["plot"] = planar_piece_to_json(&piece);
    }
    out
}
