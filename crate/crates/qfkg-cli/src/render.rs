//! Plain-text rendering of JSON reports.
//!
//! JSON is the canonical report format; this module derives the human view
//! from the same `serde_json::Value`, so the two can never disagree.

use serde_json::Value;

pub fn render(value: &Value) -> String {
    let mut out = String::new();
    walk(value, 0, &mut out);
    out
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn scalar(value: &Value) -> Option<String> {
    match value {
        Value::Null => Some("-".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Arrays of scalars print inline: `[1, q, 3/2]`.
fn inline(value: &Value) -> Option<String> {
    if let Some(s) = scalar(value) {
        return Some(s);
    }
    if let Value::Array(items) = value {
        let parts: Option<Vec<String>> = items.iter().map(inline).collect();
        return parts.map(|p| format!("[{}]", p.join(", ")));
    }
    None
}

fn walk(value: &Value, depth: usize, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                indent(out, depth);
                if let Some(s) = inline(v) {
                    out.push_str(&format!("{key}: {s}\n"));
                } else {
                    out.push_str(&format!("{key}:\n"));
                    walk(v, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                if let Some(s) = inline(v) {
                    indent(out, depth);
                    out.push_str(&format!("- {s}\n"));
                } else {
                    indent(out, depth);
                    out.push_str("-\n");
                    walk(v, depth + 1, out);
                }
            }
        }
        other => {
            indent(out, depth);
            out.push_str(&scalar(other).unwrap_or_default());
            out.push('\n');
        }
    }
}
