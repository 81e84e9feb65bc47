//! Reports as ordered key/value trees, rendered as indented text or JSON.
//! Field order is the insertion order, so output is deterministic.

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use symsym_core::{Mat, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Str(String),
    Int(i64),
    Bool(bool),
    List(Vec<Value>),
    Map(Fields),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Fields(Vec<(String, Value)>);

impl Fields {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.0.push((key.to_string(), v.into()));
        self
    }

    pub fn with(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.push(key, v);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(String, Value)> {
        self.0.iter()
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Str(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Str(s)
    }
}

impl From<&Scalar> for Value {
    fn from(s: &Scalar) -> Self {
        Value::Str(s.to_string())
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<Fields> for Value {
    fn from(f: Fields) -> Self {
        Value::Map(f)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Self {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

/// A matrix as a list of rows of exact rationals.
pub fn matrix(m: &Mat) -> Value {
    Value::List(
        (0..m.rows())
            .map(|r| Value::List(m.row(r).iter().map(Value::from).collect()))
            .collect(),
    )
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Str(x) => s.serialize_str(x),
            Value::Int(x) => s.serialize_i64(*x),
            Value::Bool(x) => s.serialize_bool(*x),
            Value::List(xs) => {
                let mut seq = s.serialize_seq(Some(xs.len()))?;
                for x in xs {
                    seq.serialize_element(x)?;
                }
                seq.end()
            }
            Value::Map(f) => f.serialize(s),
        }
    }
}

impl Serialize for Fields {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A command's result: a status word plus its fields.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub fields: Fields,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

impl Report {
    pub fn new(command: &str, status: Status, fields: Fields) -> Self {
        Self {
            command: command.into(),
            status,
            fields,
        }
    }

    fn as_fields(&self) -> Fields {
        let mut f = Fields::new()
            .with("command", self.command.as_str())
            .with("status", self.status.as_str());
        f.0.extend(self.fields.0.iter().cloned());
        f
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.as_fields())
                    .expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = String::new();
                text_fields(&self.as_fields(), 0, &mut s);
                s
            }
        }
    }
}

fn is_scalar(v: &Value) -> bool {
    matches!(v, Value::Str(_) | Value::Int(_) | Value::Bool(_))
}

fn inline(v: &Value) -> String {
    match v {
        Value::Str(s) => s.clone(),
        Value::Int(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::List(xs) => format!(
            "[{}]",
            xs.iter().map(inline).collect::<Vec<_>>().join(", ")
        ),
        Value::Map(f) => format!(
            "{{{}}}",
            f.iter()
                .map(|(k, v)| format!("{k}: {}", inline(v)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    }
}

/// Widest list printed on a single line.
const INLINE_WIDTH: usize = 100;

/// Short lists of scalars, or of lists of scalars, print on one line.
fn fits_inline(xs: &[Value]) -> bool {
    let flat = xs.iter().all(|x| match x {
        Value::List(inner) => inner.iter().all(is_scalar),
        other => is_scalar(other),
    });
    flat && inline(&Value::List(xs.to_vec())).len() <= INLINE_WIDTH
}

fn text_fields(f: &Fields, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    for (k, v) in f.iter() {
        match v {
            Value::Map(inner) => {
                out.push_str(&format!("{pad}{k}:\n"));
                text_fields(inner, depth + 1, out);
            }
            Value::List(xs) if !xs.is_empty() && !fits_inline(xs) => {
                out.push_str(&format!("{pad}{k}:\n"));
                for x in xs {
                    match x {
                        Value::Map(inner) => {
                            out.push_str(&format!("{pad}  -\n"));
                            text_fields(inner, depth + 2, out);
                        }
                        other => out.push_str(&format!("{pad}  - {}\n", inline(other))),
                    }
                }
            }
            other => out.push_str(&format!("{pad}{k}: {}\n", inline(other))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use symsym_core::frac;

    fn sample() -> Report {
        let inner = Fields::new().with("z", 1usize).with("a", &frac(-3, 4));
        Report::new(
            "demo",
            Status::Pass,
            Fields::new()
                .with("name", "x")
                .with("inner", inner.clone())
                .with("items", vec![Value::Map(inner)])
                .with("flags", vec![true, false]),
        )
    }

    #[test]
    fn json_keeps_insertion_order_and_rationals() {
        let j = sample().render(Format::Json);
        let z = j.find("\"z\"").unwrap();
        let a = j.find("\"a\"").unwrap();
        assert!(z < a);
        assert!(j.contains("\"-3/4\""));
        assert!(!j.contains("0.75"));
    }

    #[test]
    fn text_layout() {
        let t = sample().render(Format::Text);
        assert_eq!(
            t,
            "command: demo\nstatus: pass\nname: x\ninner:\n  z: 1\n  a: -3/4\nitems:\n  -\n    z: 1\n    a: -3/4\nflags: [true, false]\n"
        );
    }

    #[test]
    fn rendering_is_deterministic() {
        assert_eq!(sample().render(Format::Json), sample().render(Format::Json));
    }
}
