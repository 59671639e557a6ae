use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "quartic-report/1";

/// One command's output. Keys serialize sorted because `serde_json::Map` is a `BTreeMap`.
#[derive(Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub certificates: Value,
    pub provenance: Provenance,
    pub elapsed_ms: u64,
    pub ok: bool,
}

#[derive(Serialize, Default)]
pub struct Provenance {
    pub computed: usize,
    pub imported: usize,
    /// Trusted inputs that were not computed here, such as rank facts.
    pub trusted: Vec<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, started: Instant) -> Self {
        Report {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            inputs,
            results: Value::Null,
            certificates: json!([]),
            provenance: Provenance::default(),
            elapsed_ms: started.elapsed().as_millis() as u64,
            ok: true,
        }
    }

    /// Canonical JSON text: sorted keys, two-space indent, trailing newline.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        canonical(&v)
    }
}

pub fn canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

pub fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("core types serialize")
}
