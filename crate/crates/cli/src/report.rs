//! Reports are built as ordered JSON values and rendered either as JSON or
//! as indented text, so both formats carry the same content.

use serde_json::Value;

pub fn render_json(report: &Value) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
    out.push('\n');
    out
}

pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = report {
        for (k, v) in map {
            field(&mut out, 0, k, v);
        }
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(Value::is_number) => {
            Some(format!("[{}]", items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn field(out: &mut String, indent: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(indent);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    match v {
        Value::Array(items) if items.is_empty() => out.push_str(&format!("{pad}{key}: []\n")),
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for item in items {
                list_item(out, indent + 1, item);
            }
        }
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, v) in map {
                field(out, indent + 1, k, v);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

fn list_item(out: &mut String, indent: usize, v: &Value) {
    let pad = "  ".repeat(indent);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}- {s}\n"));
        return;
    }
    match v {
        Value::Object(map) => {
            let mut first = true;
            for (k, v) in map {
                let mut buf = String::new();
                field(&mut buf, indent + 1, k, v);
                if first {
                    let inner = "  ".repeat(indent + 1);
                    buf.replace_range(..inner.len(), &format!("{pad}- "));
                    first = false;
                }
                out.push_str(&buf);
            }
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}-\n"));
            for item in items {
                list_item(out, indent + 1, item);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
