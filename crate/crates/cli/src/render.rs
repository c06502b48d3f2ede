//! Report document and its JSON, CSV and text renderings. All three are
//! produced from the same rounded JSON value, so they carry identical data.

use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

/// Significant digits kept for every floating-point number.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Sections in output order.
const SECTIONS: [&str; 7] = ["config", "summary", "counts", "violations", "minimizers", "rows", "timing"];

/// The report every subcommand produces. An empty `violations` list is
/// exactly what makes the exit status 0.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub config: Value,
    pub summary: Value,
    pub counts: Vec<Value>,
    pub violations: Vec<Value>,
    pub minimizers: Vec<Value>,
    pub rows: Vec<Value>,
    pub timing: Option<Value>,
}

impl Document {
    pub fn new(config: &impl Serialize) -> Document {
        Document {
            config: to_value(config),
            summary: Value::Object(Map::new()),
            ..Document::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// The document as one JSON object with rounded numbers.
    pub fn to_json_value(&self) -> Value {
        let mut top = Map::new();
        top.insert("config".into(), self.config.clone());
        top.insert("summary".into(), self.summary.clone());
        top.insert("counts".into(), Value::Array(self.counts.clone()));
        top.insert("violations".into(), Value::Array(self.violations.clone()));
        top.insert("minimizers".into(), Value::Array(self.minimizers.clone()));
        top.insert("rows".into(), Value::Array(self.rows.clone()));
        if let Some(t) = &self.timing {
            top.insert("timing".into(), t.clone());
        }
        let mut v = Value::Object(top);
        round_numbers(&mut v);
        v
    }
}

/// Serializes any report fragment.
pub fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("report types serialize to JSON")
}

/// Rounds `x` to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    let s = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let r: f64 = s.parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn round_numbers(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().expect("f64 number"));
            *v = serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number);
        }
        Value::Array(items) => items.iter_mut().for_each(round_numbers),
        Value::Object(map) => map.values_mut().for_each(round_numbers),
        _ => {}
    }
}

pub fn write_json(doc: &Document, out: &mut impl Write) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, &doc.to_json_value())?;
    writeln!(out)
}

/// Flattens nested objects and arrays into dotted field names.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// `(section, index, field, value)` records in output order.
fn records(doc: &Document) -> Vec<(String, usize, String, String)> {
    let json = doc.to_json_value();
    let mut out = Vec::new();
    for section in SECTIONS {
        let Some(v) = json.get(section) else { continue };
        let items: Vec<&Value> = match v {
            Value::Array(items) => items.iter().collect(),
            other => vec![other],
        };
        for (i, item) in items.into_iter().enumerate() {
            let mut fields = Vec::new();
            flatten("", item, &mut fields);
            for (field, value) in fields {
                out.push((section.to_string(), i, field, value));
            }
        }
    }
    out
}

/// Long-form CSV: one `section,index,field,value` record per scalar.
pub fn write_csv(doc: &Document, out: &mut impl Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["section", "index", "field", "value"])?;
    for (section, index, field, value) in records(doc) {
        w.write_record([section, index.to_string(), field, value])?;
    }
    w.flush()?;
    Ok(())
}

/// Human-readable rendering: one block per non-empty section, one line
/// per entry.
pub fn write_text(doc: &Document, out: &mut impl Write) -> std::io::Result<()> {
    let json = doc.to_json_value();
    let status = if doc.passed() { "PASS" } else { "FAIL" };
    let command = json["config"]["command"].as_str().unwrap_or("report");
    writeln!(out, "{command}: {status} ({} violations)", doc.violations.len())?;
    for section in SECTIONS {
        let Some(v) = json.get(section) else { continue };
        let items: Vec<&Value> = match v {
            Value::Array(items) => items.iter().collect(),
            Value::Object(map) if map.is_empty() => Vec::new(),
            other => vec![other],
        };
        if items.is_empty() {
            continue;
        }
        writeln!(out, "\n[{section}]")?;
        for item in items {
            let line: Vec<String> = match item {
                Value::Object(map) => map.iter().map(|(k, x)| format!("{k}={}", inline(x))).collect(),
                other => vec![inline(other)],
            };
            writeln!(out, "  {}", line.join("  "))?;
        }
    }
    Ok(())
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("{{{}}}", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => format!(
            "({})",
            map.iter().map(|(k, x)| format!("{k}={}", inline(x))).collect::<Vec<_>>().join(", ")
        ),
        other => scalar(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Document {
        let mut d = Document::new(&json!({"command": "demo"}));
        d.summary = json!({"holds": true, "x": 1.0 / 3.0});
        d.rows = vec![json!({"name": "P_4", "spectrum": [1.618033988749895, -1.618033988749895]})];
        d
    }

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig(-2.0f64.sqrt() * 1e-7), -1.41421356237e-7);
        assert_eq!(round_sig(5.0), 5.0);
        let v = sample().to_json_value();
        assert_eq!(v["summary"]["x"], json!(0.333333333333));
        assert_eq!(v["rows"][0]["spectrum"][0], json!(1.61803398875));
    }

    #[test]
    fn csv_and_json_agree() {
        let d = sample();
        let mut buf = Vec::new();
        write_csv(&d, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("rows,0,spectrum.0,1.61803398875"));
        assert!(text.contains("summary,0,x,0.333333333333"));
        assert!(text.contains("config,0,command,demo"));
    }

    #[test]
    fn text_has_status_line() {
        let mut buf = Vec::new();
        write_text(&sample(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("demo: PASS"));
        assert!(text.contains("spectrum={1.61803398875, -1.61803398875}"));
    }
}
