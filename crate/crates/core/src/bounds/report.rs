use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// One evaluated bound. `value` is per vertex unless `valid_for` says otherwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub value: f64,
    pub params: BTreeMap<String, f64>,
    pub valid_for: String,
}

impl BoundReport {
    pub fn new(name: &str, value: f64, valid_for: &str) -> Self {
        BoundReport { name: name.to_owned(), value, params: BTreeMap::new(), valid_for: valid_for.to_owned() }
    }

    pub fn param(mut self, key: &str, value: f64) -> Self {
        self.params.insert(key.to_owned(), value);
        self
    }
}
