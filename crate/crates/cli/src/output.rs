//! One record model rendered as aligned text, JSON or TSV. A single record
//! prints in pretty form as `key=value` pairs on one line.

use std::io::Write;

use serde_json::{Map, Value};

use crate::args::FormatKind;

pub type Record = Map<String, Value>;

/// Builds a record field by field, keeping insertion order.
#[derive(Default)]
pub struct RecordBuilder(Record);

impl RecordBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn text(mut self, key: &str, value: impl ToString) -> Self {
        self.0
            .insert(key.to_string(), Value::String(value.to_string()));
        self
    }

    pub fn int(mut self, key: &str, value: impl Into<u64>) -> Self {
        self.0.insert(key.to_string(), Value::from(value.into()));
        self
    }

    pub fn boolean(mut self, key: &str, value: bool) -> Self {
        self.0.insert(key.to_string(), Value::Bool(value));
        self
    }

    pub fn opt_text(mut self, key: &str, value: Option<impl ToString>) -> Self {
        let v = value.map_or(Value::Null, |s| Value::String(s.to_string()));
        self.0.insert(key.to_string(), v);
        self
    }

    pub fn build(self) -> Record {
        self.0
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn header(records: &[Record]) -> Vec<String> {
    records
        .first()
        .map(|r| r.keys().cloned().collect())
        .unwrap_or_default()
}

pub fn render(out: &mut impl Write, format: FormatKind, records: &[Record]) -> std::io::Result<()> {
    match format {
        FormatKind::Json => {
            let arr = Value::Array(records.iter().cloned().map(Value::Object).collect());
            serde_json::to_writer_pretty(&mut *out, &arr)?;
            writeln!(out)
        }
        FormatKind::Tsv => {
            let keys = header(records);
            writeln!(out, "{}", keys.join("\t"))?;
            for r in records {
                let row: Vec<String> = keys
                    .iter()
                    .map(|k| r.get(k).map(cell).unwrap_or_default())
                    .collect();
                writeln!(out, "{}", row.join("\t"))?;
            }
            Ok(())
        }
        FormatKind::Pretty if records.len() == 1 => {
            let pairs: Vec<String> = records[0]
                .iter()
                .filter(|(_, v)| !v.is_null())
                .map(|(k, v)| {
                    let c = cell(v);
                    if c.contains(char::is_whitespace) {
                        format!("{k}=\"{c}\"")
                    } else {
                        format!("{k}={c}")
                    }
                })
                .collect();
            writeln!(out, "{}", pairs.join(" "))
        }
        FormatKind::Pretty => {
            let keys = header(records);
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    keys.iter()
                        .map(|k| r.get(k).map(cell).unwrap_or_default())
                        .collect()
                })
                .collect();
            // Numbers right, text left.
            let numeric: Vec<bool> = keys
                .iter()
                .map(|k| {
                    records
                        .iter()
                        .all(|r| r.get(k).is_none_or(Value::is_number))
                })
                .collect();
            let widths: Vec<usize> = keys
                .iter()
                .enumerate()
                .map(|(i, k)| {
                    rows.iter()
                        .map(|r| r[i].chars().count())
                        .chain([k.chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: &[String]| {
                cells
                    .iter()
                    .zip(widths.iter().zip(&numeric))
                    .map(|(c, (w, num))| {
                        if *num {
                            format!("{c:>w$}")
                        } else {
                            format!("{c:<w$}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(&keys).trim_end())?;
            for r in &rows {
                writeln!(out, "{}", line(r).trim_end())?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<Record> {
        vec![
            RecordBuilder::new()
                .int("n", 1u64)
                .text("r", "2;24")
                .build(),
            RecordBuilder::new()
                .int("n", 2u64)
                .text("r", "2;22 13 20")
                .build(),
        ]
    }

    fn rendered(format: FormatKind) -> String {
        let mut buf = Vec::new();
        render(&mut buf, format, &sample()).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn tsv_has_header_and_rows() {
        assert_eq!(rendered(FormatKind::Tsv), "n\tr\n1\t2;24\n2\t2;22 13 20\n");
    }

    #[test]
    fn json_is_an_array_of_objects() {
        let v: Value = serde_json::from_str(&rendered(FormatKind::Json)).unwrap();
        assert_eq!(v[1]["r"], "2;22 13 20");
        assert_eq!(v[0]["n"], 1);
    }

    #[test]
    fn single_record_is_one_line() {
        let rec = RecordBuilder::new()
            .text("l", "15")
            .text("h", "12")
            .text("n", "1 21")
            .opt_text("note", None::<String>)
            .build();
        let mut buf = Vec::new();
        render(&mut buf, FormatKind::Pretty, &[rec]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "l=15 h=12 n=\"1 21\"\n");
    }

    #[test]
    fn pretty_aligns_columns() {
        let text = rendered(FormatKind::Pretty);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n  r");
        assert_eq!(lines[1], "1  2;24");
        assert_eq!(lines[2], "2  2;22 13 20");
    }
}
