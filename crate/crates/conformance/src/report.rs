use std::fmt;

use qalg::{Elem, QaError, Result, Scalar};
use serde_json::{json, Value};

pub const SUITE_VERSION: &str = concat!("qalg-conformance/", env!("CARGO_PKG_VERSION"));

/// Minimized failing input.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample<S> {
    pub elems: Vec<Elem<S>>,
    pub scalars: Vec<S>,
}

impl<S: Scalar> Counterexample<S> {
    /// Largest component count among the elements.
    pub fn max_components(&self) -> usize {
        self.elems.iter().map(Elem::size).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "elems": self.elems.iter().map(Elem::to_json).collect::<Vec<_>>(),
            "scalars": self.scalars.iter().map(Scalar::to_json_string).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| QaError::Json(format!("counterexample: {what}"));
        let elems = v["elems"]
            .as_array()
            .ok_or_else(|| bad("missing elems"))?
            .iter()
            .map(Elem::from_json)
            .collect::<Result<Vec<_>>>()?;
        let scalars = v["scalars"]
            .as_array()
            .ok_or_else(|| bad("missing scalars"))?
            .iter()
            .map(|s| s.as_str().and_then(S::parse_literal).ok_or_else(|| bad("bad scalar")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Counterexample { elems, scalars })
    }
}

impl<S: Scalar> fmt::Display for Counterexample<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.elems.iter().map(ToString::to_string).collect();
        write!(f, "{}", elems.join(", "))?;
        if !self.scalars.is_empty() {
            let scalars: Vec<String> = self.scalars.iter().map(ToString::to_string).collect();
            write!(f, "; scalars {}", scalars.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyResult<S> {
    pub id: String,
    pub anchor: String,
    pub cases: usize,
    pub pass: bool,
    pub counterexample: Option<Counterexample<S>>,
    pub millis: u128,
}

impl<S: Scalar> PropertyResult<S> {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "id": self.id,
            "anchor": self.anchor,
            "cases": self.cases,
            "pass": self.pass,
            "millis": self.millis as u64,
        });
        if let Some(c) = &self.counterexample {
            v["counterexample"] = c.to_json();
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| QaError::Json(format!("property result: {what}"));
        Ok(PropertyResult {
            id: v["id"].as_str().ok_or_else(|| bad("id"))?.to_string(),
            anchor: v["anchor"].as_str().ok_or_else(|| bad("anchor"))?.to_string(),
            cases: v["cases"].as_u64().ok_or_else(|| bad("cases"))? as usize,
            pass: v["pass"].as_bool().ok_or_else(|| bad("pass"))?,
            counterexample: match v.get("counterexample") {
                Some(c) => Some(Counterexample::from_json(c)?),
                None => None,
            },
            millis: v["millis"].as_u64().unwrap_or(0) as u128,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConformanceReport<S> {
    pub suite_version: String,
    pub seed: u64,
    pub instance: String,
    /// Sorted by id.
    pub properties: Vec<PropertyResult<S>>,
}

impl<S: Scalar> ConformanceReport<S> {
    pub fn pass(&self) -> bool {
        self.properties.iter().all(|p| p.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult<S>> {
        self.properties.iter().filter(|p| !p.pass)
    }

    pub fn property(&self, id: &str) -> Option<&PropertyResult<S>> {
        self.properties.iter().find(|p| p.id == id)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite_version": self.suite_version,
            "seed": self.seed,
            "instance": self.instance,
            "properties": self.properties.iter().map(PropertyResult::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| QaError::Json(format!("report: {what}"));
        Ok(ConformanceReport {
            suite_version: v["suite_version"].as_str().ok_or_else(|| bad("suite_version"))?.to_string(),
            seed: v["seed"].as_u64().ok_or_else(|| bad("seed"))?,
            instance: v["instance"].as_str().ok_or_else(|| bad("instance"))?.to_string(),
            properties: v["properties"]
                .as_array()
                .ok_or_else(|| bad("properties"))?
                .iter()
                .map(PropertyResult::from_json)
                .collect::<Result<Vec<_>>>()?,
        })
    }

    /// Same report with timings cleared, for replay comparisons.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        for p in &mut r.properties {
            p.millis = 0;
        }
        r
    }
}
