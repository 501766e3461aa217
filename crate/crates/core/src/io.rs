//! JSON configuration files.
//!
//! ```json
//! {"mode": "outside_segment",
//!  "P": [["1","0","1"], ...], "R": [["1","2","0"], ...],
//!  "cubic": ["0","0","1", ...], "provenance": "..."}
//! ```
//!
//! Bipartite files carry `"B"` and `"G"` instead of `"P"`. Integers are
//! written as decimal strings; plain JSON integers are accepted on input.
//! Unknown fields are rejected.

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::cubic::Cubic;
use crate::geom::ProjPoint;
use crate::incidence::{BipartiteConfiguration, Configuration, PierceMode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("malformed configuration JSON: {0}")]
    Json(String),
    #[error("invalid configuration: {0}")]
    Invalid(String),
}

/// An arbitrary-precision integer serialized as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct IntVisitor;
        impl Visitor<'_> for IntVisitor {
            type Value = Int;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
                v.trim().parse::<BigInt>().map(Int).map_err(|_| E::custom(format!("{v:?} is not an integer")))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
                Ok(Int(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
                Ok(Int(v.into()))
            }
        }
        d.deserialize_any(IntVisitor)
    }
}

pub type Triple = [Int; 3];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub mode: String,
    #[serde(rename = "P", default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<Triple>>,
    #[serde(rename = "R")]
    pub r: Vec<Triple>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Triple>>,
    #[serde(rename = "G", default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cubic: Option<Vec<Int>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointSets {
    Plain(Configuration),
    Bipartite(BipartiteConfiguration),
}

impl PointSets {
    pub fn all_points(&self) -> Vec<ProjPoint> {
        match self {
            PointSets::Plain(c) => c.all_points(),
            PointSets::Bipartite(b) => b.all_points(),
        }
    }
}

/// Indented JSON that keeps arrays of scalars (coordinate triples, cubic
/// coefficients) on one line.
pub fn pretty_json(value: &serde_json::Value) -> String {
    fn go(v: &serde_json::Value, depth: usize, out: &mut String) {
        use serde_json::Value;
        let pad = |d: usize| "  ".repeat(d);
        match v {
            Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
                let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
                out.push('[');
                out.push_str(&parts.join(", "));
                out.push(']');
            }
            Value::Array(items) => {
                out.push_str("[\n");
                for (i, x) in items.iter().enumerate() {
                    out.push_str(&pad(depth + 1));
                    go(x, depth + 1, out);
                    out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
                }
                out.push_str(&pad(depth));
                out.push(']');
            }
            Value::Object(map) if map.is_empty() => out.push_str("{}"),
            Value::Object(map) => {
                out.push_str("{\n");
                for (i, (k, x)) in map.iter().enumerate() {
                    out.push_str(&pad(depth + 1));
                    out.push_str(&Value::String(k.clone()).to_string());
                    out.push_str(": ");
                    go(x, depth + 1, out);
                    out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
                }
                out.push_str(&pad(depth));
                out.push('}');
            }
            scalar => out.push_str(&scalar.to_string()),
        }
    }
    let mut out = String::new();
    go(value, 0, &mut out);
    out
}

/// A parsed and structurally validated configuration file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigDocument {
    pub sets: PointSets,
    pub mode: PierceMode,
    pub cubic: Option<Cubic>,
    pub provenance: Option<String>,
}

fn to_points(name: &str, v: &[Triple]) -> Result<Vec<ProjPoint>, IoError> {
    v.iter()
        .enumerate()
        .map(|(i, [x, y, z])| {
            ProjPoint::from_triple([x.0.clone(), y.0.clone(), z.0.clone()])
                .map_err(|e| IoError::Invalid(format!("{name}[{i}]: {e}")))
        })
        .collect()
}

fn from_points(v: &[ProjPoint]) -> Vec<Triple> {
    v.iter().map(|p| p.coords().clone().map(Int)).collect()
}

impl ConfigDocument {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        let file: ConfigFile = serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
        ConfigDocument::from_file(file)
    }

    pub fn from_file(file: ConfigFile) -> Result<Self, IoError> {
        let mode: PierceMode = file.mode.parse().map_err(IoError::Invalid)?;
        let r = to_points("R", &file.r)?;
        let sets = match (&file.p, &file.b, &file.g) {
            (Some(p), None, None) => PointSets::Plain(
                Configuration::new(to_points("P", p)?, r, mode).map_err(|e| IoError::Invalid(e.to_string()))?,
            ),
            (None, Some(b), Some(g)) => PointSets::Bipartite(
                BipartiteConfiguration::new(to_points("B", b)?, to_points("G", g)?, r)
                    .map_err(|e| IoError::Invalid(e.to_string()))?,
            ),
            _ => return Err(IoError::Invalid("expected either \"P\" or both \"B\" and \"G\"".into())),
        };
        let cubic = match &file.cubic {
            None => None,
            Some(c) if c.len() == 10 => Some(
                Cubic::from_slice(&c.iter().map(|v| v.0.clone()).collect::<Vec<_>>())
                    .map_err(|e| IoError::Invalid(format!("cubic: {e}")))?,
            ),
            Some(c) => return Err(IoError::Invalid(format!("cubic has {} coefficients, expected 10", c.len()))),
        };
        Ok(ConfigDocument { sets, mode, cubic, provenance: file.provenance })
    }

    pub fn to_file(&self) -> ConfigFile {
        let (p, b, g, r) = match &self.sets {
            PointSets::Plain(c) => (Some(from_points(c.p())), None, None, from_points(c.r())),
            PointSets::Bipartite(bc) => {
                (None, Some(from_points(bc.b())), Some(from_points(bc.g())), from_points(bc.r()))
            }
        };
        ConfigFile {
            mode: self.mode.as_str().to_string(),
            p,
            r,
            b,
            g,
            cubic: self.cubic.as_ref().map(|c| c.coeffs().iter().cloned().map(Int).collect()),
            provenance: self.provenance.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        pretty_json(&serde_json::to_value(self.to_file()).expect("serializable"))
    }

    pub fn plain(config: Configuration) -> Self {
        let mode = config.mode();
        ConfigDocument { sets: PointSets::Plain(config), mode, cubic: None, provenance: None }
    }
}
