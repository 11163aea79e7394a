//! Deterministic machine-readable reports. JSON objects are backed by
//! sorted maps, so identical inputs produce byte-identical output across
//! runs and worker counts. Rationals render as `p/q` strings, never
//! floats.

use serde_json::{Map, Value};

use wiener_core::rational;
use wiener_core::Rational;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Envelope shared by every subcommand's JSON output.
pub struct ReportEnvelope {
    pub command: &'static str,
    pub parameters: Vec<(String, String)>,
    pub results: Value,
}

impl ReportEnvelope {
    pub fn new(command: &'static str) -> Self {
        ReportEnvelope {
            command,
            parameters: Vec::new(),
            results: Value::Null,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.push((key.to_owned(), value.to_string()));
        self
    }

    pub fn results(mut self, results: Value) -> Self {
        self.results = results;
        self
    }

    pub fn to_value(&self) -> Value {
        let mut params = Map::new();
        for (k, v) in &self.parameters {
            params.insert(k.clone(), Value::String(v.clone()));
        }
        let mut top = Map::new();
        top.insert(
            "artifact_version".to_owned(),
            Value::String(ARTIFACT_VERSION.to_owned()),
        );
        top.insert("command".to_owned(), Value::String(self.command.to_owned()));
        top.insert("parameters".to_owned(), Value::Object(params));
        top.insert("results".to_owned(), self.results.clone());
        Value::Object(top)
    }

    pub fn to_json(&self) -> String {
        json_string(&self.to_value())
    }
}

pub fn json_string(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("report values serialize")
}

/// `p/q` string value for a rational result field.
pub fn rational_value(r: &Rational) -> Value {
    Value::String(rational::fraction_string(r))
}

/// Minimal CSV escaping: quote fields containing separators or quotes.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

/// Edge list as a compact single token, e.g. `0-1 0-2 1-2`.
pub fn edges_token(edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_keys_are_sorted() {
        let envelope = ReportEnvelope::new("bounds")
            .param("n", 8)
            .param("k", 4)
            .results(Value::Object(Map::new()));
        let json = envelope.to_json();
        let artifact = json.find("artifact_version").unwrap();
        let command = json.find("\"command\"").unwrap();
        let parameters = json.find("\"parameters\"").unwrap();
        let results = json.find("\"results\"").unwrap();
        assert!(artifact < command && command < parameters && parameters < results);
    }

    #[test]
    fn rationals_render_with_denominator() {
        assert_eq!(
            rational_value(&rational::ratio(40, 1)),
            Value::String("40/1".to_owned())
        );
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_line(&["x".into(), "y,z".into()]), "x,\"y,z\"");
    }
}
