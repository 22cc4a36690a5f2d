//! TSV and JSON rendering of command reports.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Arrays of objects become a table with a header row, objects become
/// `key<TAB>value` lines and scalars print bare.
pub fn render(v: &Value, format: Format) -> String {
    if format == Format::Json {
        return format!("{}\n", serde_json::to_string_pretty(v).expect("json"));
    }
    let mut out = String::new();
    match v {
        Value::Array(rows) => {
            let header: Vec<&String> = match rows.first() {
                Some(Value::Object(m)) => m.keys().collect(),
                _ => Vec::new(),
            };
            if !header.is_empty() {
                out.push_str(&header.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("\t"));
                out.push('\n');
            }
            for row in rows {
                let line: Vec<String> = match row {
                    Value::Object(m) => header.iter().map(|k| m.get(*k).map_or_else(String::new, cell)).collect(),
                    other => vec![cell(other)],
                };
                out.push_str(&line.join("\t"));
                out.push('\n');
            }
        }
        Value::Object(m) => {
            for (k, val) in m {
                out.push_str(&format!("{k}\t{}\n", cell(val)));
            }
        }
        other => {
            out.push_str(&cell(other));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tables_and_records() {
        let t = json!([{"d": 1, "pass": true}, {"d": 2, "pass": false}]);
        assert_eq!(render(&t, Format::Tsv), "d\tpass\n1\ttrue\n2\tfalse\n");
        assert_eq!(render(&json!({"a": "x", "b": null}), Format::Tsv), "a\tx\nb\t-\n");
        assert_eq!(render(&json!("0"), Format::Tsv), "0\n");
        assert!(render(&t, Format::Json).starts_with('['));
    }
}
