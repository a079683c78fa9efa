//! Problem files: a ring, named objects over it and a list of tasks.

use std::collections::BTreeMap;

use hkit_core::{Error, Limits, Result};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub ring: RingDef,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ideals: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub quotients: BTreeMap<String, QuotientDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, Vec<String>>,
    /// Ideals `c` presenting Artinian algebras `R/c`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub artinian: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub tasks: Vec<Task>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDef {
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limits: Option<Limits>,
}

/// Either the name of an ideal or its generators.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealRef {
    Name(String),
    Gens(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientDef {
    pub defining: IdealRef,
    pub dim: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Task {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default)]
    pub args: Map<String, Value>,
    /// Integer, boolean, or a list of them.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Value>,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<ProblemFile> {
        let p: ProblemFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("problem file: {e}")))?;
        p.validate()?;
        Ok(p)
    }

    /// Every named reference inside the file must resolve.
    pub fn validate(&self) -> Result<()> {
        for (name, q) in &self.quotients {
            if let IdealRef::Name(n) = &q.defining {
                if !self.ideals.contains_key(n) {
                    return Err(Error::InvalidInput(format!(
                        "quotient `{name}` refers to unknown ideal `{n}`"
                    )));
                }
            }
        }
        for (k, task) in self.tasks.iter().enumerate() {
            for (key, v) in &task.args {
                let Value::String(name) = v else { continue };
                let table: Option<Vec<&str>> = match key.as_str() {
                    "ideal" | "bigger" => Some(self.ideals.keys().map(String::as_str).chain(["m"]).collect()),
                    "quotient" => Some(self.quotients.keys().map(String::as_str).collect()),
                    "params" => Some(self.parameters.keys().map(String::as_str).collect()),
                    "artinian" => Some(
                        self.artinian
                            .keys()
                            .chain(self.ideals.keys())
                            .map(String::as_str)
                            .collect(),
                    ),
                    _ => None,
                };
                if let Some(t) = table {
                    if !t.contains(&name.as_str()) {
                        return Err(Error::InvalidInput(format!(
                            "task {} ({}): unknown {key} name `{name}`",
                            k + 1,
                            task.command
                        )));
                    }
                }
            }
            if let Some(Value::Array(names)) = task.args.get("named") {
                for n in names {
                    let ok = n.as_str().is_some_and(|s| self.parameters.contains_key(s));
                    if !ok {
                        return Err(Error::InvalidInput(format!(
                            "task {} ({}): unknown parameter ideal {n}",
                            k + 1,
                            task.command
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
