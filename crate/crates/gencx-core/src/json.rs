//! JSON encoding of every value the command line reads or writes.
//!
//! Conventions, used repo-wide: a rational is a string `"p/q"` (or `"p"`;
//! bare JSON integers are accepted on input), a Gaussian rational is
//! `{"re": "p/q", "im": "p/q"}` (a bare rational is accepted as a real
//! value), a matrix is an array of row arrays, a subspace is
//! `{"ambient": n, "basis": [[…]], "field": "Q"|"Qi"}`. A Dirac structure is
//! accepted either as `{"v_dim": n, "field": …, "basis": …}` with a `2n×k`
//! column basis or as `{"E": subspace, "eps": matrix}`, and is always
//! emitted in the `(E, ε)` form.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use std::str::FromStr;

use crate::dirac::Dirac;
use crate::exactla::{CRat, Field, FieldTag, Mat, Rat, Subspace};
use crate::gclin::GcStructure;
use crate::gkahler::{BiHermitian, TamedData};
use crate::liecourant::LieAlgebra;

/// Structural problem in otherwise well-formed JSON.
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
#[error("at {path}: {message}")]
pub struct DecodeError {
    pub path: String,
    pub message: String,
}

fn err<T>(path: &str, message: impl Into<String>) -> Result<T, DecodeError> {
    Err(DecodeError { path: path.into(), message: message.into() })
}

pub fn rat_to_value(r: &Rat) -> Value {
    Value::String(r.to_string())
}

pub fn rat_from_value(v: &Value, path: &str) -> Result<Rat, DecodeError> {
    match v {
        Value::String(s) => parse_rat(s.trim(), path),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(BigInt::from(i)))
            } else {
                err(path, "expected an integer; rationals must be strings like \"3/4\"")
            }
        }
        _ => err(path, "expected a rational as a string \"p/q\" or an integer"),
    }
}

fn parse_rat(s: &str, path: &str) -> Result<Rat, DecodeError> {
    let parse_int = |t: &str| -> Result<BigInt, DecodeError> {
        BigInt::from_str(t).map_err(|_| DecodeError {
            path: path.into(),
            message: format!("invalid integer literal {t:?}"),
        })
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let n = parse_int(num)?;
            let d = parse_int(den)?;
            if d == BigInt::from(0) {
                return err(path, "zero denominator");
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

pub fn crat_to_value(z: &CRat) -> Value {
    json!({ "re": z.re.to_string(), "im": z.im.to_string() })
}

pub fn crat_from_value(v: &Value, path: &str) -> Result<CRat, DecodeError> {
    match v {
        Value::Object(map) => {
            let re = map
                .get("re")
                .map(|x| rat_from_value(x, &format!("{path}.re")))
                .transpose()?
                .unwrap_or_else(|| Rat::from_integer(0.into()));
            let im = map
                .get("im")
                .map(|x| rat_from_value(x, &format!("{path}.im")))
                .transpose()?
                .unwrap_or_else(|| Rat::from_integer(0.into()));
            Ok(CRat::new(re, im))
        }
        _ => Ok(CRat::from_rat(rat_from_value(v, path)?)),
    }
}

pub fn mat_q_to_value(m: &Mat<Rat>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| rat_to_value(&m[(i, j)])).collect()))
            .collect(),
    )
}

pub fn mat_qi_to_value(m: &Mat<CRat>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| crat_to_value(&m[(i, j)])).collect()))
            .collect(),
    )
}

fn rows_from_value(v: &Value, path: &str) -> Result<Vec<Vec<Value>>, DecodeError> {
    let Value::Array(rows) = v else {
        return err(path, "expected a matrix as an array of row arrays");
    };
    let mut out = Vec::with_capacity(rows.len());
    let mut width = None;
    for (i, row) in rows.iter().enumerate() {
        let Value::Array(cells) = row else {
            return err(&format!("{path}[{i}]"), "expected a row array");
        };
        if let Some(w) = width {
            if cells.len() != w {
                return err(&format!("{path}[{i}]"), "ragged matrix rows");
            }
        } else {
            width = Some(cells.len());
        }
        out.push(cells.clone());
    }
    Ok(out)
}

pub fn mat_q_from_value(v: &Value, path: &str) -> Result<Mat<Rat>, DecodeError> {
    let rows = rows_from_value(v, path)?;
    let parsed: Result<Vec<Vec<Rat>>, DecodeError> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, cell)| rat_from_value(cell, &format!("{path}[{i}][{j}]")))
                .collect()
        })
        .collect();
    Ok(Mat::from_rows(parsed?))
}

pub fn mat_qi_from_value(v: &Value, path: &str) -> Result<Mat<CRat>, DecodeError> {
    let rows = rows_from_value(v, path)?;
    let parsed: Result<Vec<Vec<CRat>>, DecodeError> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, cell)| crat_from_value(cell, &format!("{path}[{i}][{j}]")))
                .collect()
        })
        .collect();
    Ok(Mat::from_rows(parsed?))
}

fn field_tag_from_value(v: Option<&Value>, path: &str) -> Result<FieldTag, DecodeError> {
    match v {
        Some(Value::String(s)) if s == "Q" => Ok(FieldTag::Q),
        Some(Value::String(s)) if s == "Qi" => Ok(FieldTag::Qi),
        Some(_) => err(path, "field must be \"Q\" or \"Qi\""),
        None => err(path, "missing field tag"),
    }
}

pub fn subspace_q_to_value(s: &Subspace<Rat>) -> Value {
    json!({ "ambient": s.ambient_dim(), "basis": mat_q_to_value(s.basis()), "field": "Q" })
}

pub fn subspace_qi_to_value(s: &Subspace<CRat>) -> Value {
    json!({ "ambient": s.ambient_dim(), "basis": mat_qi_to_value(s.basis()), "field": "Qi" })
}

fn object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>, DecodeError> {
    v.as_object().ok_or_else(|| DecodeError { path: path.into(), message: "expected an object".into() })
}

fn ambient_of(map: &Map<String, Value>, basis_rows: usize, path: &str) -> Result<usize, DecodeError> {
    match map.get("ambient") {
        Some(v) => v
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| DecodeError { path: format!("{path}.ambient"), message: "expected a count".into() }),
        None => Ok(basis_rows),
    }
}

pub fn subspace_q_from_value(v: &Value, path: &str) -> Result<Subspace<Rat>, DecodeError> {
    let map = object(v, path)?;
    if field_tag_from_value(map.get("field"), &format!("{path}.field"))? != FieldTag::Q {
        return err(&format!("{path}.field"), "expected field \"Q\"");
    }
    let basis = mat_q_from_value(
        map.get("basis").ok_or_else(|| DecodeError {
            path: format!("{path}.basis"),
            message: "missing basis".into(),
        })?,
        &format!("{path}.basis"),
    )?;
    let ambient = ambient_of(map, basis.rows(), path)?;
    if basis.rows() != ambient {
        return err(&format!("{path}.basis"), "basis rows do not match the ambient dimension");
    }
    Ok(Subspace::from_span(&basis))
}

pub fn subspace_qi_from_value(v: &Value, path: &str) -> Result<Subspace<CRat>, DecodeError> {
    let map = object(v, path)?;
    if field_tag_from_value(map.get("field"), &format!("{path}.field"))? != FieldTag::Qi {
        return err(&format!("{path}.field"), "expected field \"Qi\"");
    }
    let basis = mat_qi_from_value(
        map.get("basis").ok_or_else(|| DecodeError {
            path: format!("{path}.basis"),
            message: "missing basis".into(),
        })?,
        &format!("{path}.basis"),
    )?;
    let ambient = ambient_of(map, basis.rows(), path)?;
    if basis.rows() != ambient {
        return err(&format!("{path}.basis"), "basis rows do not match the ambient dimension");
    }
    Ok(Subspace::from_span(&basis))
}

/// A Dirac structure over either coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyDirac {
    Q(Dirac<Rat>),
    Qi(Dirac<CRat>),
}

/// Decode from either the raw-basis or the `(E, eps)` view. Validation
/// failures (non-isotropic spans, non-skew forms) surface as [`crate::Error`].
pub fn dirac_from_value(
    v: &Value,
    path: &str,
) -> Result<Result<AnyDirac, crate::Error>, DecodeError> {
    let map = object(v, path)?;
    let tag = if map.contains_key("field") {
        field_tag_from_value(map.get("field"), &format!("{path}.field"))?
    } else {
        FieldTag::Qi
    };
    if let Some(e_val) = map.get("E") {
        let eps_val = map.get("eps").ok_or_else(|| DecodeError {
            path: format!("{path}.eps"),
            message: "missing eps next to E".into(),
        })?;
        let e_map = object(e_val, &format!("{path}.E"))?;
        let e_tag = field_tag_from_value(e_map.get("field"), &format!("{path}.E.field"))?;
        return Ok(match e_tag {
            FieldTag::Q => {
                let e = subspace_q_from_value(e_val, &format!("{path}.E"))?;
                let eps = mat_q_from_value(eps_val, &format!("{path}.eps"))?;
                Dirac::build(&e, &eps).map(AnyDirac::Q)
            }
            FieldTag::Qi => {
                let e = subspace_qi_from_value(e_val, &format!("{path}.E"))?;
                let eps = mat_qi_from_value(eps_val, &format!("{path}.eps"))?;
                Dirac::build(&e, &eps).map(AnyDirac::Qi)
            }
        });
    }
    let basis_val = map.get("basis").ok_or_else(|| DecodeError {
        path: path.into(),
        message: "expected either a basis or an (E, eps) pair".into(),
    })?;
    let v_dim = map
        .get("v_dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| DecodeError { path: format!("{path}.v_dim"), message: "missing v_dim".into() })?
        as usize;
    Ok(match tag {
        FieldTag::Q => {
            let basis = mat_q_from_value(basis_val, &format!("{path}.basis"))?;
            Dirac::from_subspace(v_dim, Subspace::from_span(&basis)).map(AnyDirac::Q)
        }
        FieldTag::Qi => {
            let basis = mat_qi_from_value(basis_val, &format!("{path}.basis"))?;
            Dirac::from_subspace(v_dim, Subspace::from_span(&basis)).map(AnyDirac::Qi)
        }
    })
}

pub fn dirac_q_to_value(l: &Dirac<Rat>) -> Value {
    let ee = l.decompose().expect("valid structure decomposes");
    json!({
        "v_dim": l.v_dim(),
        "field": "Q",
        "E": subspace_q_to_value(&ee.e),
        "eps": mat_q_to_value(&ee.eps),
    })
}

pub fn dirac_qi_to_value(l: &Dirac<CRat>) -> Value {
    let ee = l.decompose().expect("valid structure decomposes");
    json!({
        "v_dim": l.v_dim(),
        "field": "Qi",
        "E": subspace_qi_to_value(&ee.e),
        "eps": mat_qi_to_value(&ee.eps),
    })
}

/// Decode a generalized complex structure: a complex Dirac structure, with
/// validation happening in [`GcStructure::from_dirac`].
pub fn gc_from_value(
    v: &Value,
    path: &str,
) -> Result<Result<GcStructure, crate::Error>, DecodeError> {
    let decoded = dirac_from_value(v, path)?;
    Ok(match decoded {
        Ok(AnyDirac::Qi(l)) => GcStructure::from_dirac(l),
        Ok(AnyDirac::Q(_)) => Err(crate::Error::FieldMismatch(
            "generalized complex structures live over Qi".into(),
        )),
        Err(e) => Err(e),
    })
}

pub fn gc_to_value(gc: &GcStructure) -> Value {
    let mut v = dirac_qi_to_value(gc.dirac());
    let map = v.as_object_mut().expect("object");
    map.insert("poisson".into(), mat_q_to_value(gc.poisson_bivector()));
    v
}

pub fn bihermitian_from_value(
    v: &Value,
    path: &str,
) -> Result<Result<BiHermitian, crate::Error>, DecodeError> {
    let map = object(v, path)?;
    let get = |name: &str| -> Result<Mat<Rat>, DecodeError> {
        mat_q_from_value(
            map.get(name).ok_or_else(|| DecodeError {
                path: format!("{path}.{name}"),
                message: "missing matrix".into(),
            })?,
            &format!("{path}.{name}"),
        )
    };
    let g = get("g")?;
    let b = get("b")?;
    let jp = get("Jp")?;
    let jm = get("Jm")?;
    Ok(BiHermitian::new(g, b, jp, jm))
}

pub fn bihermitian_to_value(bh: &BiHermitian) -> Value {
    json!({
        "g": mat_q_to_value(bh.metric()),
        "b": mat_q_to_value(bh.two_form()),
        "Jp": mat_q_to_value(bh.j_plus()),
        "Jm": mat_q_to_value(bh.j_minus()),
    })
}

pub fn tamed_from_value(
    v: &Value,
    path: &str,
) -> Result<Result<TamedData, crate::Error>, DecodeError> {
    let map = object(v, path)?;
    let eps = mat_q_from_value(
        map.get("eps").ok_or_else(|| DecodeError {
            path: format!("{path}.eps"),
            message: "missing eps".into(),
        })?,
        &format!("{path}.eps"),
    )?;
    let j = mat_q_from_value(
        map.get("J").ok_or_else(|| DecodeError {
            path: format!("{path}.J"),
            message: "missing J".into(),
        })?,
        &format!("{path}.J"),
    )?;
    Ok(TamedData::new(eps, j))
}

pub fn tamed_to_value(t: &TamedData) -> Value {
    json!({ "eps": mat_q_to_value(t.eps()), "J": mat_q_to_value(t.j()) })
}

pub fn lie_algebra_from_value(
    v: &Value,
    path: &str,
) -> Result<Result<LieAlgebra, crate::Error>, DecodeError> {
    let map = object(v, path)?;
    let dim = map
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| DecodeError { path: format!("{path}.dim"), message: "missing dim".into() })?
        as usize;
    let c_val = map.get("c").ok_or_else(|| DecodeError {
        path: format!("{path}.c"),
        message: "missing structure constants".into(),
    })?;
    let Value::Array(layers) = c_val else {
        return err(&format!("{path}.c"), "expected nested arrays");
    };
    if layers.len() != dim {
        return err(&format!("{path}.c"), "outer length does not match dim");
    }
    let mut c = Vec::with_capacity(dim);
    for (i, layer) in layers.iter().enumerate() {
        let rows = rows_from_value(layer, &format!("{path}.c[{i}]"))?;
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return err(&format!("{path}.c[{i}]"), "inner lengths do not match dim");
        }
        let mut plane = Vec::with_capacity(dim);
        for (j, row) in rows.iter().enumerate() {
            let mut line = Vec::with_capacity(dim);
            for (k, cell) in row.iter().enumerate() {
                line.push(rat_from_value(cell, &format!("{path}.c[{i}][{j}][{k}]"))?);
            }
            plane.push(line);
        }
        c.push(plane);
    }
    Ok(LieAlgebra::new(c))
}

pub fn lie_algebra_to_value(g: &LieAlgebra) -> Value {
    let dim = g.dim();
    let c = g.structure_constants();
    Value::Array(
        (0..dim)
            .map(|i| {
                Value::Array(
                    (0..dim)
                        .map(|j| {
                            Value::Array((0..dim).map(|k| rat_to_value(&c[i][j][k])).collect())
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{crat, rat, ratio};

    #[test]
    fn rational_round_trip() {
        for r in [rat(0), rat(-7), ratio(3, 4), ratio(-22, 7)] {
            let v = rat_to_value(&r);
            assert_eq!(rat_from_value(&v, "x").unwrap(), r);
        }
        assert_eq!(rat_from_value(&json!(5), "x").unwrap(), rat(5));
        assert!(rat_from_value(&json!("1/0"), "x").is_err());
        assert!(rat_from_value(&json!(1.5), "x").is_err());
    }

    #[test]
    fn complex_round_trip() {
        let z = CRat::new(ratio(1, 2), rat(-3));
        let v = crat_to_value(&z);
        assert_eq!(crat_from_value(&v, "z").unwrap(), z);
        // Bare rationals are accepted as real values.
        assert_eq!(crat_from_value(&json!("2/3"), "z").unwrap(), CRat::from_rat(ratio(2, 3)));
    }

    #[test]
    fn dirac_round_trip_both_views() {
        let e = Subspace::span_of_vectors(2, &[vec![rat(1), rat(0)]]);
        let l = Dirac::build(&e, &Mat::zeros(1, 1)).unwrap();
        let v = dirac_q_to_value(&l);
        let back = dirac_from_value(&v, "L").unwrap().unwrap();
        assert_eq!(back, AnyDirac::Q(l.clone()));

        let raw = json!({
            "v_dim": 2,
            "field": "Q",
            "basis": [["1", "0"], ["0", "0"], ["0", "0"], ["0", "1"]],
        });
        let back = dirac_from_value(&raw, "L").unwrap().unwrap();
        assert_eq!(back, AnyDirac::Q(l));
    }

    #[test]
    fn invalid_dirac_is_a_domain_error_not_a_decode_error() {
        let raw = json!({
            "v_dim": 1,
            "field": "Q",
            "basis": [["1"], ["1"]],
        });
        let decoded = dirac_from_value(&raw, "L").unwrap();
        assert!(decoded.is_err());
    }

    #[test]
    fn subspace_decode_checks_shape() {
        let good = json!({"ambient": 2, "basis": [["1"], ["2"]], "field": "Q"});
        assert!(subspace_q_from_value(&good, "s").is_ok());
        let bad = json!({"ambient": 3, "basis": [["1"], ["2"]], "field": "Q"});
        assert!(subspace_q_from_value(&bad, "s").is_err());
        let qi = json!({"ambient": 1, "basis": [[{"re": "1", "im": "2"}]], "field": "Qi"});
        let s = subspace_qi_from_value(&qi, "s").unwrap();
        assert_eq!(s.basis()[(0, 0)], crat(1, 2).clone() / crat(1, 2));
    }

    #[test]
    fn lie_algebra_round_trip() {
        let g = LieAlgebra::su2();
        let v = json!({"dim": 3, "c": lie_algebra_to_value(&g)});
        let back = lie_algebra_from_value(&v, "g").unwrap().unwrap();
        assert_eq!(back, g);
    }
}
