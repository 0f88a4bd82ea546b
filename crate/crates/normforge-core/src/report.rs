//! Machine-checkable certificates: named assertions plus the inputs and
//! witnesses they were checked against, serialized as deterministic JSON.
//!
//! Every engine entry point returns one of these instead of a bare boolean
//! so a failing run says exactly which claim broke and on what data. Keys
//! are sorted by the JSON layer, so identical runs produce byte-identical
//! reports.

use serde::{Deserialize, Serialize};

/// One named check with its verdict and optional context.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A bundle of assertions about one computation, with enough context to
/// re-run it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub title: String,
    pub inputs: serde_json::Value,
    pub witnesses: serde_json::Value,
    pub assertions: Vec<Assertion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Certificate {
    pub fn new(title: &str) -> Self {
        Certificate {
            title: title.to_string(),
            inputs: serde_json::Value::Null,
            witnesses: serde_json::Value::Null,
            assertions: Vec::new(),
            seed: None,
        }
    }

    pub fn with_inputs(mut self, inputs: serde_json::Value) -> Self {
        self.inputs = inputs;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn set_witnesses(&mut self, witnesses: serde_json::Value) {
        self.witnesses = witnesses;
    }

    pub fn check(&mut self, name: &str, passed: bool) {
        self.assertions.push(Assertion {
            name: name.to_string(),
            passed,
            detail: None,
        });
    }

    pub fn check_with(&mut self, name: &str, passed: bool, detail: String) {
        self.assertions.push(Assertion {
            name: name.to_string(),
            passed,
            detail: Some(detail),
        });
    }

    /// True when every recorded assertion passed.
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.assertions
            .iter()
            .filter(|a| !a.passed)
            .map(|a| a.name.as_str())
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "title": self.title,
            "inputs": self.inputs,
            "witnesses": self.witnesses,
            "passed": self.passed(),
            "assertions": self.assertions.iter().map(|a| serde_json::json!({
                "name": a.name,
                "passed": a.passed,
                "detail": a.detail,
            })).collect::<Vec<_>>(),
            "seed": self.seed,
        })
    }

    pub fn to_pretty_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("certificates are plain data")
    }
}
