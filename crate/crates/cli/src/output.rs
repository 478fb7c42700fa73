use std::io::{self, Write};

use serde_json::{json, Map, Value};

use crate::args::Format;

/// One emitted result; the JSON and CSV forms are projections of this.
#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub op: String,
    pub params: Vec<(String, i64)>,
    pub result: String,
    /// Right-hand side, for identity checks.
    pub rhs: Option<String>,
    pub verdict: Option<bool>,
    pub expected: Option<bool>,
}

impl Record {
    pub fn new(op: &str, params: &[(&str, i64)], result: impl ToString) -> Self {
        Record {
            op: op.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            result: result.to_string(),
            rhs: None,
            verdict: None,
            expected: None,
        }
    }

    fn to_json(&self) -> Value {
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        let mut obj = Map::new();
        obj.insert("op".into(), json!(self.op));
        obj.insert("params".into(), Value::Object(params));
        obj.insert("result".into(), json!(self.result));
        if let Some(rhs) = &self.rhs {
            obj.insert("rhs".into(), json!(rhs));
        }
        if let Some(v) = self.verdict {
            obj.insert("verdict".into(), json!(v));
        }
        if let Some(e) = self.expected {
            obj.insert("expected".into(), json!(e));
        }
        Value::Object(obj)
    }

    fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn opt_bool(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

/// Writes records as a JSON array or CSV table. Text output is produced by
/// the caller, which knows what a human wants to see.
pub fn emit_structured(out: &mut impl Write, format: Format, records: &[Record]) -> io::Result<()> {
    match format {
        Format::Json => {
            let array = Value::Array(records.iter().map(Record::to_json).collect());
            serde_json::to_writer_pretty(&mut *out, &array)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .quote_style(csv::QuoteStyle::NonNumeric)
                .from_writer(out);
            w.write_record(["op", "params", "result", "rhs", "verdict", "expected"])?;
            for r in records {
                w.write_record([
                    r.op.clone(),
                    r.params_text(),
                    r.result.clone(),
                    r.rhs.clone().unwrap_or_default(),
                    opt_bool(r.verdict),
                    opt_bool(r.expected),
                ])?;
            }
            w.flush()
        }
        Format::Text => {
            for r in records {
                writeln!(out, "{}", r.result)?;
            }
            Ok(())
        }
    }
}
