//! JSON definition files for algebras, Hopf algebras and YD algebras.
//!
//! Rationals are strings `"p/q"` or `"p"` (bare JSON integers are accepted).
//! Every object has a `"kind"` and an optional `"name"`:
//!
//! * `algebra`: `labels` (n strings), `unit` (n), `mult` (n×n×n, `mult[i][j]`
//!   is the coefficient vector of `e_i e_j`);
//! * `hopf`: the algebra fields plus `coproduct` (n×n×n, `coproduct[i][j][k]`
//!   is the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`), `counit` (n) and
//!   `antipode` (n×n, `antipode[i]` is `S(e_i)`);
//! * `module_algebra`: the algebra fields plus `hopf` (a builder name such as
//!   `"H4"` or `"E2"`, or an inline `hopf` object) and `action` (m×n×n,
//!   `action[k][a]` is `h_k · e_a`);
//! * `yd`: the `module_algebra` fields plus `coaction` (n×n×m,
//!   `coaction[a][b][k]` is the coefficient of `e_b ⊗ h_k` in `ρ(e_a)`).

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algebra::StructureAlgebra;
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::hopf::{named, HopfAlgebra};
use crate::linalg::{Matrix, Vector};
use crate::rational::Rational;
use crate::tensor::Tensor;
use crate::yd::{ModuleAlgebra, YdAlgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Definition {
    Algebra(StructureAlgebra),
    Hopf(HopfAlgebra),
    ModuleAlgebra(ModuleAlgebra),
    Yd(YdAlgebra),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedDefinition {
    pub name: Option<String>,
    /// the builder name when the parent Hopf algebra was given by name
    pub hopf_name: Option<String>,
    pub definition: Definition,
}

impl Definition {
    pub fn kind(&self) -> &'static str {
        match self {
            Definition::Algebra(_) => "algebra",
            Definition::Hopf(_) => "hopf",
            Definition::ModuleAlgebra(_) => "module_algebra",
            Definition::Yd(_) => "yd",
        }
    }

    /// Runs the axiom checkers appropriate to the kind.
    pub fn validate(&self) -> CheckReport {
        match self {
            Definition::Algebra(a) => a.check_axioms(),
            Definition::Hopf(h) => h.check_axioms(),
            Definition::ModuleAlgebra(m) => m.check(),
            Definition::Yd(y) => y.check(),
        }
    }
}

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| schema(&join(path, key), "missing field"))
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn array<'a>(v: &'a Value, path: &str, len: Option<usize>) -> Result<&'a Vec<Value>> {
    let arr = v.as_array().ok_or_else(|| schema(path, "expected an array"))?;
    match len {
        Some(n) if arr.len() != n => Err(schema(path, format!("expected {n} entries, found {}", arr.len()))),
        _ => Ok(arr),
    }
}

fn rational(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse().map_err(|e: Error| schema(path, e.to_string())),
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from_integer)
            .ok_or_else(|| schema(path, "numbers must be integers; write fractions as \"p/q\"")),
        _ => Err(schema(path, "expected a rational")),
    }
}

fn vector(v: &Value, path: &str, len: usize) -> Result<Vector> {
    array(v, path, Some(len))?
        .iter()
        .enumerate()
        .map(|(i, x)| rational(x, &format!("{path}[{i}]")))
        .collect()
}

/// An `a × b × c` nested array.
fn cube(v: &Value, path: &str, a: usize, b: usize, c: usize) -> Result<Vec<Vec<Vector>>> {
    array(v, path, Some(a))?
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let p = format!("{path}[{i}]");
            array(row, &p, Some(b))?
                .iter()
                .enumerate()
                .map(|(j, x)| vector(x, &format!("{p}[{j}]"), c))
                .collect()
        })
        .collect()
}

fn parse_algebra(obj: &Map<String, Value>) -> Result<StructureAlgebra> {
    let labels: Vec<String> = array(field(obj, "labels", "")?, "labels", None)?
        .iter()
        .enumerate()
        .map(|(i, l)| {
            l.as_str()
                .map(str::to_string)
                .ok_or_else(|| schema(&format!("labels[{i}]"), "expected a string"))
        })
        .collect::<Result<_>>()?;
    let n = labels.len();
    if n == 0 {
        return Err(schema("labels", "an algebra needs at least one basis element"));
    }
    let unit = vector(field(obj, "unit", "")?, "unit", n)?;
    let mult = cube(field(obj, "mult", "")?, "mult", n, n, n)?;
    StructureAlgebra::new(labels, unit, mult)
}

fn parse_hopf_object(obj: &Map<String, Value>) -> Result<HopfAlgebra> {
    let alg = parse_algebra(obj)?;
    let n = alg.dim();
    let table = cube(field(obj, "coproduct", "")?, "coproduct", n, n, n)?;
    let coproduct = table
        .iter()
        .map(|rows| {
            let mut t = Tensor::zero(2);
            for (j, row) in rows.iter().enumerate() {
                for (k, c) in row.iter().enumerate() {
                    t.add_term(vec![j, k], c.clone());
                }
            }
            t
        })
        .collect();
    let counit = vector(field(obj, "counit", "")?, "counit", n)?;
    let cols: Vec<Vector> = array(field(obj, "antipode", "")?, "antipode", Some(n))?
        .iter()
        .enumerate()
        .map(|(i, v)| vector(v, &format!("antipode[{i}]"), n))
        .collect::<Result<_>>()?;
    let antipode = Matrix::from_columns(n, &cols)?;
    HopfAlgebra::new(alg, coproduct, counit, antipode)
}

/// Shared instances for the builders used across the crate, so that
/// parent comparisons hit the pointer fast path.
fn named_arc(name: &str) -> Result<Arc<HopfAlgebra>> {
    match name {
        "H4" => Ok(crate::sweedler::h4_arc()),
        "E2" => Ok(crate::e2::e2_arc()),
        "DH4" => Ok(crate::e2::dh4().hopf().clone()),
        other => named(other).map(Arc::new),
    }
}

fn parse_parent(obj: &Map<String, Value>) -> Result<(Arc<HopfAlgebra>, Option<String>)> {
    match field(obj, "hopf", "")? {
        Value::String(name) => named_arc(name)
            .map(|h| (h, Some(name.clone())))
            .map_err(|e| schema("hopf", e.to_string())),
        Value::Object(inner) => parse_hopf_object(inner)
            .map(|h| (Arc::new(h), None))
            .map_err(|e| nest("hopf", e)),
        _ => Err(schema("hopf", "expected a builder name or a hopf object")),
    }
}

fn nest(prefix: &str, e: Error) -> Error {
    match e {
        Error::Schema { path, message } => schema(&join(prefix, &path), message),
        other => other,
    }
}

fn parse_action(obj: &Map<String, Value>, h: &HopfAlgebra, n: usize) -> Result<Vec<Matrix>> {
    cube(field(obj, "action", "")?, "action", h.dim(), n, n)?
        .iter()
        .map(|cols| Matrix::from_columns(n, cols))
        .collect()
}

fn parse_coaction(obj: &Map<String, Value>, h: &HopfAlgebra, n: usize) -> Result<Matrix> {
    let m = h.dim();
    let table = cube(field(obj, "coaction", "")?, "coaction", n, n, m)?;
    let mut out = Matrix::zeros(n * m, n);
    for (a, rows) in table.iter().enumerate() {
        for (b, row) in rows.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                out.set(b * m + k, a, c.clone());
            }
        }
    }
    Ok(out)
}

/// Parses a definition; JSON syntax errors carry line and column, schema
/// errors the path of the offending field.
pub fn parse_definition(text: &str) -> Result<NamedDefinition> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let obj = value
        .as_object()
        .ok_or_else(|| schema("", "expected a JSON object"))?;
    let kind = field(obj, "kind", "")?
        .as_str()
        .ok_or_else(|| schema("kind", "expected a string"))?;
    let name = match obj.get("name") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(schema("name", "expected a string")),
    };
    let mut hopf_name = None;
    let definition = match kind {
        "algebra" => Definition::Algebra(parse_algebra(obj)?),
        "hopf" => Definition::Hopf(parse_hopf_object(obj)?),
        "module_algebra" | "yd" => {
            let (h, hname) = parse_parent(obj)?;
            hopf_name = hname;
            let alg = parse_algebra(obj)?;
            let n = alg.dim();
            let action = parse_action(obj, &h, n)?;
            if kind == "yd" {
                let coaction = parse_coaction(obj, &h, n)?;
                Definition::Yd(YdAlgebra::new(h, alg, action, coaction)?)
            } else {
                Definition::ModuleAlgebra(ModuleAlgebra::new(h, alg, action)?)
            }
        }
        other => {
            return Err(schema(
                "kind",
                format!("unknown kind {other:?}; expected algebra, hopf, module_algebra or yd"),
            ))
        }
    };
    Ok(NamedDefinition {
        name,
        hopf_name,
        definition,
    })
}

fn rat(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn vec_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn algebra_fields(a: &StructureAlgebra, out: &mut Map<String, Value>) {
    let n = a.dim();
    out.insert("labels".into(), json!(a.labels()));
    out.insert("unit".into(), vec_json(a.unit()));
    let mult: Vec<Value> = (0..n)
        .map(|i| Value::Array((0..n).map(|j| vec_json(&a.basis_product_vec(i, j))).collect()))
        .collect();
    out.insert("mult".into(), Value::Array(mult));
}

fn hopf_fields(h: &HopfAlgebra, out: &mut Map<String, Value>) {
    let n = h.dim();
    algebra_fields(h.alg(), out);
    let coproduct: Vec<Value> = (0..n)
        .map(|i| {
            let d = h.delta(i);
            Value::Array(
                (0..n)
                    .map(|j| Value::Array((0..n).map(|k| rat(&d.coefficient(&[j, k]))).collect()))
                    .collect(),
            )
        })
        .collect();
    out.insert("coproduct".into(), Value::Array(coproduct));
    out.insert("counit".into(), vec_json(h.counit()));
    let antipode: Vec<Value> = (0..n).map(|i| vec_json(&h.antipode().column(i))).collect();
    out.insert("antipode".into(), Value::Array(antipode));
}

fn hopf_json(h: &HopfAlgebra) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!("hopf"));
    hopf_fields(h, &mut m);
    Value::Object(m)
}

/// Serializes a definition in the format read by [`parse_definition`].
pub fn to_json(def: &NamedDefinition) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(def.definition.kind()));
    if let Some(name) = &def.name {
        m.insert("name".into(), json!(name));
    }
    let parent = |h: &HopfAlgebra| match &def.hopf_name {
        Some(name) => json!(name),
        None => hopf_json(h),
    };
    let action_json = |action: &[Matrix]| -> Value {
        Value::Array(
            action
                .iter()
                .map(|mat| Value::Array((0..mat.cols()).map(|a| vec_json(&mat.column(a))).collect()))
                .collect(),
        )
    };
    match &def.definition {
        Definition::Algebra(a) => algebra_fields(a, &mut m),
        Definition::Hopf(h) => hopf_fields(h, &mut m),
        Definition::ModuleAlgebra(x) => {
            m.insert("hopf".into(), parent(&x.hopf));
            algebra_fields(&x.alg, &mut m);
            m.insert("action".into(), action_json(&x.action));
        }
        Definition::Yd(y) => {
            m.insert("hopf".into(), parent(&y.hopf));
            algebra_fields(&y.alg, &mut m);
            m.insert("action".into(), action_json(&y.action));
            let (n, k) = (y.dim(), y.hopf.dim());
            let coaction: Vec<Value> = (0..n)
                .map(|a| {
                    Value::Array(
                        (0..n)
                            .map(|b| Value::Array((0..k).map(|j| rat(y.coaction.get(b * k + j, a))).collect()))
                            .collect(),
                    )
                })
                .collect();
            m.insert("coaction".into(), Value::Array(coaction));
        }
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::h4;
    use crate::rational::qi;
    use crate::sweedler::{build_c, CDescriptor};

    fn round_trip(def: NamedDefinition) {
        let text = serde_json::to_string_pretty(&to_json(&def)).unwrap();
        assert_eq!(parse_definition(&text).unwrap(), def);
    }

    #[test]
    fn h4_round_trips_and_validates() {
        let def = NamedDefinition {
            name: Some("sweedler".into()),
            hopf_name: None,
            definition: Definition::Hopf(h4()),
        };
        assert!(def.definition.validate().passed());
        round_trip(def);
    }

    #[test]
    fn yd_algebras_round_trip_with_named_and_inline_parents() {
        let c = build_c(&CDescriptor::new(qi(2), qi(1), "3/2".parse().unwrap()));
        round_trip(NamedDefinition {
            name: None,
            hopf_name: Some("H4".into()),
            definition: Definition::Yd(c.clone()),
        });
        round_trip(NamedDefinition {
            name: None,
            hopf_name: None,
            definition: Definition::ModuleAlgebra(c.module()),
        });
    }

    #[test]
    fn corrupted_associativity_is_reported() {
        let mut v = to_json(&NamedDefinition {
            name: None,
            hopf_name: None,
            definition: Definition::Algebra(build_c(&CDescriptor::from_i64(1, 0, 0)).alg),
        });
        // x·1 = 2x breaks the unit and associativity
        v["mult"][1][0] = json!(["0", "2"]);
        let def = parse_definition(&v.to_string()).unwrap();
        let report = def.definition.validate();
        assert!(!report.passed());
        assert!(report.failed_items().any(|i| i.name.contains("associativ")), "{report}");
    }

    #[test]
    fn schema_errors_name_the_field() {
        let mut v = to_json(&NamedDefinition {
            name: None,
            hopf_name: Some("H4".into()),
            definition: Definition::Yd(build_c(&CDescriptor::from_i64(1, 1, 1))),
        });
        v.as_object_mut().unwrap().remove("coaction");
        match parse_definition(&v.to_string()) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "coaction"),
            other => panic!("{other:?}"),
        }
        v["coaction"] = json!([]);
        v["action"][1][0] = json!(["1", "x"]);
        match parse_definition(&v.to_string()) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "action[1][0][1]"),
            other => panic!("{other:?}"),
        }
        match parse_definition("{\n  \"kind\": \"algebra\",\n  oops\n}") {
            Err(Error::Parse(m)) => assert!(m.starts_with("line 3"), "{m}"),
            other => panic!("{other:?}"),
        }
    }
}
