//! Report rendering.
//!
//! Reports are built as JSON values with keys in insertion order. The text
//! form is an indented key/value listing of the same value, so both forms
//! carry the same information and are deterministic.

use serde_json::Value;

pub fn to_json(report: &Value) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
    out.push('\n');
    out
}

pub fn to_text(report: &Value) -> String {
    let mut out = String::new();
    match report {
        Value::Object(map) => {
            for (k, v) in map {
                entry(&mut out, 0, k, v);
            }
        }
        other => {
            out.push_str(&scalar(other));
            out.push('\n');
        }
    }
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "none".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn pad(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn entry(out: &mut String, depth: usize, key: &str, v: &Value) {
    pad(out, depth);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str(&format!("{key}: []\n")),
        Value::Object(map) if map.is_empty() => out.push_str(&format!("{key}: {{}}\n")),
        Value::Array(items) => {
            out.push_str(&format!("{key}:\n"));
            for item in items {
                list_item(out, depth + 1, item);
            }
        }
        Value::Object(map) => {
            out.push_str(&format!("{key}:\n"));
            for (k, v) in map {
                entry(out, depth + 1, k, v);
            }
        }
        other => out.push_str(&format!("{key}: {}\n", scalar(other))),
    }
}

fn list_item(out: &mut String, depth: usize, v: &Value) {
    pad(out, depth);
    match v {
        Value::Object(map) if !map.is_empty() => {
            // First field on the dash line, the rest aligned below it.
            let mut fields = map.iter();
            let (k, first) = fields.next().expect("non-empty");
            if is_scalar(first) {
                out.push_str(&format!("- {k}: {}\n", scalar(first)));
            } else {
                out.push_str("-\n");
                entry(out, depth + 1, k, first);
            }
            for (k, v) in fields {
                entry(out, depth + 1, k, v);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            out.push_str("-\n");
            for item in items {
                list_item(out, depth + 1, item);
            }
        }
        Value::Array(_) => out.push_str("- []\n"),
        Value::Object(_) => out.push_str("- {}\n"),
        other => out.push_str(&format!("- {}\n", scalar(other))),
    }
}
