use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct OutputEnvelope {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub input_echo: Value,
    pub result: Value,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub fn render(envelope: &OutputEnvelope, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(envelope).expect("serializable envelope");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            flatten("", &envelope.result, &mut out);
            out
        }
    }
}

/// One `path: value` line per scalar leaf.
fn flatten(path: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                let p = if path.is_empty() {
                    key.clone()
                } else {
                    format!("{path}.{key}")
                };
                flatten(&p, v, out);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), v, out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{path}: {}\n", parts.join(" ")));
        }
        _ => out.push_str(&format!("{path}: {}\n", scalar(value))),
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_lines() {
        let envelope = OutputEnvelope {
            schema_version: SCHEMA_VERSION,
            command: "x",
            input_echo: Value::Null,
            result: json!({"b": 1, "a": {"w": "FF", "n": null}, "xs": [1, 2], "ys": [{"k": true}]}),
            timing_ms: 0,
        };
        assert_eq!(
            render(&envelope, Format::Text),
            "b: 1\na.w: FF\na.n: null\nxs: 1 2\nys[0].k: true\n"
        );
    }
}
