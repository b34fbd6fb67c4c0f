//! Flat output rows and their CSV / JSON renderings.
//!
//! Numbers are printed with 12 significant digits in the style of C's
//! `%.12g` (fixed notation for exponents in `[-4, 12)`, scientific
//! otherwise, trailing zeros removed). Both emitters use the same rendering,
//! so a row read back from either format prints identically.

use std::io::{self, Write};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Text(String),
    Number(f64),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Text(s) => s.clone(),
            Value::Number(x) => format_number(*x),
        }
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Number(x)
    }
}

impl From<u32> for Value {
    fn from(x: u32) -> Self {
        Value::Number(x as f64)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Number(x as f64)
    }
}

/// One output row: ordered key/value pairs.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OutputRecord {
    pub fields: Vec<(String, Value)>,
}

impl OutputRecord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_owned(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn number(&self, key: &str) -> Option<f64> {
        match self.get(key)? {
            Value::Number(x) => Some(*x),
            Value::Text(_) => None,
        }
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.fields.iter().map(|(k, _)| k.as_str())
    }
}

/// `%.12g`-style rendering. Non-finite values render as `nan`, `inf` or
/// `-inf`.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    const DIGITS: i32 = 12;
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_owned()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn parse_value(s: &str) -> Value {
    match s.parse::<f64>() {
        Ok(x) => Value::Number(x),
        Err(_) => Value::Text(s.to_owned()),
    }
}

/// Header from the first record, then one line per record.
pub fn write_csv<W: Write>(records: &[OutputRecord], out: W) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new().from_writer(out);
    if let Some(first) = records.first() {
        w.write_record(first.keys())?;
    }
    for r in records {
        w.write_record(r.fields.iter().map(|(_, v)| v.render()))?;
    }
    w.flush()
}

/// A single top-level array of objects.
pub fn write_json<W: Write>(records: &[OutputRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "[")?;
    for (i, r) in records.iter().enumerate() {
        let body: Vec<String> = r
            .fields
            .iter()
            .map(|(k, v)| {
                let value = match v {
                    Value::Text(s) => serde_json::Value::from(s.as_str()).to_string(),
                    Value::Number(x) if x.is_finite() => format_number(*x),
                    Value::Number(_) => "null".into(),
                };
                format!("{}: {value}", serde_json::Value::from(k.as_str()))
            })
            .collect();
        let sep = if i + 1 < records.len() { "," } else { "" };
        writeln!(out, "  {{{}}}{sep}", body.join(", "))?;
    }
    writeln!(out, "]")
}

pub fn parse_csv(text: &str) -> Result<Vec<OutputRecord>, csv::Error> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers()?.clone();
    rdr.records()
        .map(|row| {
            let row = row?;
            Ok(OutputRecord {
                fields: headers
                    .iter()
                    .zip(row.iter())
                    .map(|(k, v)| (k.to_owned(), parse_value(v)))
                    .collect(),
            })
        })
        .collect()
}

pub fn parse_json(text: &str) -> Result<Vec<OutputRecord>, serde_json::Error> {
    let rows: Vec<serde_json::Map<String, serde_json::Value>> = serde_json::from_str(text)?;
    Ok(rows
        .into_iter()
        .map(|obj| OutputRecord {
            fields: obj
                .into_iter()
                .map(|(k, v)| {
                    let value = match v {
                        serde_json::Value::Number(n) => Value::Number(n.as_f64().unwrap_or(f64::NAN)),
                        serde_json::Value::String(s) => Value::Text(s),
                        serde_json::Value::Null => Value::Number(f64::NAN),
                        other => Value::Text(other.to_string()),
                    };
                    (k, value)
                })
                .collect(),
        })
        .collect())
}
