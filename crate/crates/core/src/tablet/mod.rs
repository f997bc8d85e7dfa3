//! The fifteen lines of Plimpton 322 as inscribed and as corrected, the
//! differ between them, and simulations of the scribal slips.

mod diff;
mod errors;

pub use diff::{diff_tablets, Category, Column, DiffMode, ErrorRecord};
pub use errors::{
    product_from_squares, regular_terminal_lines, simulate_error, sum_of_squares_identity,
    wrong_y_is_previous_ratio_multiple, ErrorModel, LineAnalysis, SimulatedCell, SimulationOutcome,
};

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::procedure::TableRow;
use crate::sexagesimal::Sexagesimal;

pub const LINES: usize = 15;

const GOLDEN_MAGIC: &str = "# plimpton322 golden v1";

const ATTESTED: &str = include_str!("../../data/attested.tsv");
const CORRECTED: &str = include_str!("../../data/corrected.tsv");
const CORRECTED_PQ: &str = include_str!("../../data/corrected_pq.tsv");

/// File names of the golden data, relative to a data directory.
pub const ATTESTED_FILE: &str = "attested.tsv";
pub const CORRECTED_FILE: &str = "corrected.tsv";
pub const CORRECTED_PQ_FILE: &str = "corrected_pq.tsv";

/// How the ambiguous lines 11 and 15 are corrected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reading {
    /// Line 11 as `(45, 1 15)`, line 15 as `(28, 53)`.
    #[default]
    Reciprocal,
    /// Line 11 as `(3, 5)`, line 15 as `(56, 1 46)`.
    GeneratingPair,
}

impl Reading {
    pub fn file_name(&self) -> &'static str {
        match self {
            Reading::Reciprocal => CORRECTED_FILE,
            Reading::GeneratingPair => CORRECTED_PQ_FILE,
        }
    }
}

impl FromStr for Reading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r" | "reciprocal" => Ok(Reading::Reciprocal),
            "pq" | "generating-pair" => Ok(Reading::GeneratingPair),
            other => Err(Error::InvalidToken(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabletRow {
    pub n: usize,
    /// The line number itself is restored.
    pub number_restored: bool,
    pub column_one: Sexagesimal,
    pub col2: Sexagesimal,
    pub col3: Sexagesimal,
}

impl TabletRow {
    pub fn cell(&self, column: Column) -> &Sexagesimal {
        match column {
            Column::I => &self.column_one,
            Column::II => &self.col2,
            Column::III => &self.col3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tablet {
    rows: Vec<TabletRow>,
}

impl Tablet {
    pub fn new(rows: Vec<TabletRow>) -> Result<Self> {
        if rows.len() != LINES {
            return Err(Error::Golden(format!(
                "expected {LINES} rows, found {}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.n != i + 1 {
                return Err(Error::Golden(format!(
                    "row {} is numbered {}",
                    i + 1,
                    row.n
                )));
            }
        }
        Ok(Tablet { rows })
    }

    pub fn rows(&self) -> &[TabletRow] {
        &self.rows
    }

    /// Row `n`, counted from 1.
    pub fn row(&self, n: usize) -> Option<&TabletRow> {
        n.checked_sub(1).and_then(|i| self.rows.get(i))
    }

    /// The first fifteen lines of a built table. Where the reciprocal
    /// method leaves `(60x, 60, 60y)` integral the unreduced pair is used.
    pub fn from_table(rows: &[TableRow]) -> Result<Self> {
        if rows.len() < LINES {
            return Err(Error::TooFewRows(rows.len()));
        }
        let out = rows[..LINES]
            .iter()
            .map(|r| {
                let t = r.tablet_form.unwrap_or_else(|| r.triple());
                TabletRow {
                    n: r.n,
                    number_restored: false,
                    column_one: r.column_one.clone(),
                    col2: Sexagesimal::from_integer(t.w as u128),
                    col3: Sexagesimal::from_integer(t.d as u128),
                }
            })
            .collect();
        Tablet::new(out)
    }

    /// Parses the golden text format: a version line, comment lines
    /// starting with `#`, then one tab-separated row per line.
    pub fn from_golden(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        match lines.next() {
            Some(first) if first.starts_with(GOLDEN_MAGIC) => {}
            _ => return Err(Error::Golden(format!("missing `{GOLDEN_MAGIC}` header"))),
        }
        let mut rows = Vec::new();
        for (k, line) in lines.enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(Error::Golden(format!(
                    "line {}: expected 4 tab-separated fields, found {}",
                    k + 2,
                    fields.len()
                )));
            }
            let at = |e: Error| Error::Golden(format!("line {}: {e}", k + 2));
            let (number, restored) = match fields[0]
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
            {
                Some(inner) => (inner, true),
                None => (fields[0], false),
            };
            let n = number.parse().map_err(|_| {
                Error::Golden(format!("line {}: bad line number `{}`", k + 2, fields[0]))
            })?;
            rows.push(TabletRow {
                n,
                number_restored: restored,
                column_one: fields[1].parse().map_err(at)?,
                col2: fields[2].parse().map_err(at)?,
                col3: fields[3].parse().map_err(at)?,
            });
        }
        Tablet::new(rows)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Golden(format!("{}: {e}", path.display())))?;
        Self::from_golden(&text)
    }

    pub fn to_golden(&self, title: &str) -> String {
        let mut out = format!("{GOLDEN_MAGIC}: {title}\n# n\tcolumn I\tcolumn II\tcolumn III\n");
        for r in &self.rows {
            let n = if r.number_restored {
                format!("[{}]", r.n)
            } else {
                r.n.to_string()
            };
            out.push_str(&format!("{n}\t{}\t{}\t{}\n", r.column_one, r.col2, r.col3));
        }
        out
    }
}

impl fmt::Display for Tablet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_golden("tablet"))
    }
}

/// The inscribed values, restorations flagged.
pub fn attested_tablet() -> Tablet {
    Tablet::from_golden(ATTESTED).expect("embedded golden data")
}

/// The intended values under the given reading of lines 11 and 15.
pub fn corrected_tablet(reading: Reading) -> Tablet {
    let text = match reading {
        Reading::Reciprocal => CORRECTED,
        Reading::GeneratingPair => CORRECTED_PQ,
    };
    Tablet::from_golden(text).expect("embedded golden data")
}
