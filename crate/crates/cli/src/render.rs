//! Plain-text rendering of JSON reports.

use serde_json::Value;

const INLINE_WIDTH: usize = 96;

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(_) => object(v, 0, &mut out),
        other => {
            out.push_str(&scalar(other));
            out.push('\n');
        }
    }
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn inline(v: &Value) -> Option<String> {
    let s = match v {
        Value::Object(_) | Value::Array(_) => v.to_string().replace('"', ""),
        other => scalar(other),
    };
    (s.len() <= INLINE_WIDTH && !s.contains('\n')).then_some(s)
}

fn object(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    let Value::Object(map) = v else { return };
    for (key, val) in map {
        match val {
            Value::String(s) if s.contains('\n') => {
                out.push_str(&format!("{pad}{key}:\n"));
                for line in s.lines() {
                    out.push_str(&format!("{pad}  {line}\n"));
                }
            }
            _ => match inline(val) {
                Some(s) => out.push_str(&format!("{pad}{key}: {s}\n")),
                None => {
                    out.push_str(&format!("{pad}{key}:\n"));
                    block(val, indent + 1, out);
                }
            },
        }
    }
}

fn block(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(_) => object(v, indent, out),
        Value::Array(items) => {
            for item in items {
                match inline(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        block(item, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_nested_values() {
        let v = json!({
            "count": 72,
            "name": "x1y2",
            "table": "1 . .\n. 2 .",
            "long": (0..40).collect::<Vec<_>>(),
        });
        let t = text(&v);
        assert!(t.contains("count: 72\n"));
        assert!(t.contains("name: x1y2\n"));
        assert!(t.contains("table:\n  1 . .\n  . 2 .\n"));
        assert!(t.contains("long:\n  - 0\n"));
    }
}
