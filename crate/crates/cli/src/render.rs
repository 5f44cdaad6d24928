//! Output rendering.

use serde_json::Value;

use crate::Format;

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => value.to_string(),
        Format::Text => text(value),
    }
}

/// `key: value` per top-level field; a battery report becomes one
/// `PASS`/`FAIL` line per check.
fn text(value: &Value) -> String {
    if let Some(checks) = value.get("checks").and_then(Value::as_array) {
        let mut lines: Vec<String> = checks
            .iter()
            .map(|c| {
                let status = if c["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
                format!("{status} {}: {}", scalar(&c["name"]), scalar(&c["detail"]))
            })
            .collect();
        let overall = if value["passed"].as_bool() == Some(true) { "passed" } else { "FAILED" };
        lines.push(format!("suite {} (seed {}): {overall}", scalar(&value["suite"]), value["seed"]));
        return lines.join("\n");
    }
    match value {
        Value::Object(map) => map.iter().map(|(k, v)| format!("{k}: {}", scalar(v))).collect::<Vec<_>>().join("\n"),
        other => scalar(other),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}
