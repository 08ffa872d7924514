use fradkin::rational::{fmt_decimal, Q};
use serde_json::Value;

use crate::config::Format;
use crate::error::CliError;

/// One command's result in every supported format.
#[derive(Debug)]
pub struct Output {
    pub json: Value,
    pub text: String,
    /// Header and rows; commands without a natural table fall back to key/value pairs.
    pub csv: Option<(Vec<String>, Vec<Vec<String>>)>,
    pub pass: bool,
}

impl Output {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).map_err(|e| CliError::Output(e.to_string())),
            Format::Text => Ok(self.text.clone()),
            Format::Csv => {
                let (header, rows) = match &self.csv {
                    Some(t) => t.clone(),
                    None => key_values(&self.json),
                };
                let mut w = csv::Writer::from_writer(Vec::new());
                let err = |e: csv::Error| CliError::Output(e.to_string());
                w.write_record(&header).map_err(err)?;
                for r in &rows {
                    w.write_record(r).map_err(err)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
            }
        }
    }
}

fn key_values(v: &Value) -> (Vec<String>, Vec<Vec<String>>) {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    (vec!["key".into(), "value".into()], rows)
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<Vec<String>>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&join(k), x, out)),
        Value::Array(xs) => xs
            .iter()
            .enumerate()
            .for_each(|(k, x)| flatten(&join(&k.to_string()), x, out)),
        Value::String(s) => out.push(vec![prefix.to_string(), s.clone()]),
        Value::Null => out.push(vec![prefix.to_string(), String::new()]),
        other => out.push(vec![prefix.to_string(), other.to_string()]),
    }
}

/// Rational rendering for text and csv: exact unless a precision was requested.
#[derive(Clone, Copy, Debug)]
pub struct Render {
    pub precision: Option<usize>,
}

impl Render {
    pub fn q(&self, x: &Q) -> String {
        match self.precision {
            Some(d) => fmt_decimal(x, d),
            None => x.to_string(),
        }
    }

    pub fn qs(&self, xs: &[Q]) -> String {
        xs.iter().map(|x| self.q(x)).collect::<Vec<_>>().join(", ")
    }
}

pub fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fradkin::rational::qq;
    use serde_json::json;

    #[test]
    fn csv_fallback_flattens() {
        let o = Output {
            json: json!({"a": {"b": 1}, "c": ["x", null]}),
            text: String::new(),
            csv: None,
            pass: true,
        };
        let s = o.render(Format::Csv).unwrap();
        assert_eq!(s, "key,value\na.b,1\nc.0,x\nc.1,\n");
    }

    #[test]
    fn precision_only_on_request() {
        assert_eq!(Render { precision: None }.q(&qq(-1, 3)), "-1/3");
        assert_eq!(Render { precision: Some(3) }.q(&qq(-1, 3)), "-0.333");
    }
}
