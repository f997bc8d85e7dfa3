use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sexagesimal::Sexagesimal;
use crate::tablet::Tablet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Column {
    I,
    II,
    III,
}

impl Column {
    pub const ALL: [Column; 3] = [Column::I, Column::II, Column::III];
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Column::I => "I",
            Column::II => "II",
            Column::III => "III",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Category {
    /// A copying slip: Column I, or a single digit off by one wedge.
    Typographical,
    Computational,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Typographical => "typographical",
            Category::Computational => "computational",
        })
    }
}

/// Treatment of restored zero digits inside an inscribed number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DiffMode {
    /// Compare what is written: a restored inner zero is an empty place.
    #[default]
    Strict,
    /// Read restored inner zeros as zero digits.
    Lenient,
}

impl FromStr for DiffMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(DiffMode::Strict),
            "lenient" => Ok(DiffMode::Lenient),
            other => Err(Error::InvalidToken(other.to_string())),
        }
    }
}

/// One differing cell. `inscribed` and `correct` hold the digits from the
/// first surviving place on, in floating notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorRecord {
    pub line: usize,
    pub column: Column,
    pub inscribed: Sexagesimal,
    pub correct: Sexagesimal,
    pub category: Category,
    pub annotation: Option<String>,
}

impl fmt::Display for ErrorRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {} column {}: inscribed {} for {} ({})",
            self.line, self.column, self.inscribed, self.correct, self.category
        )
    }
}

fn leading_restored(s: &Sexagesimal) -> usize {
    s.extrapolated().iter().take_while(|&&f| f).count()
}

fn tail(s: &Sexagesimal, skip: usize) -> Sexagesimal {
    let digits: Vec<u8> = s.digits()[skip.min(s.digits().len())..]
        .iter()
        .copied()
        .skip_while(|&d| d == 0)
        .collect();
    if digits.is_empty() {
        return Sexagesimal::zero();
    }
    Sexagesimal::from_digits(false, digits, 0).expect("no leading zero")
}

fn same(a: &Sexagesimal, b: &Sexagesimal, mode: DiffMode) -> bool {
    match mode {
        DiffMode::Strict => a
            .without_restored_gaps()
            .floating_eq(&b.without_restored_gaps()),
        DiffMode::Lenient => a.floating_eq(b),
    }
}

fn categorize(column: Column, inscribed: &Sexagesimal, correct: &Sexagesimal) -> Category {
    if column == Column::I {
        return Category::Typographical;
    }
    let (a, b) = (inscribed.digits(), correct.digits());
    let differing: Vec<(u8, u8)> = a
        .iter()
        .zip(b)
        .filter(|(x, y)| x != y)
        .map(|(x, y)| (*x, *y))
        .collect();
    let one_wedge = |(x, y): (u8, u8)| matches!(x.abs_diff(y), 1 | 10);
    if a.len() == b.len() && differing.len() == 1 && one_wedge(differing[0]) {
        Category::Typographical
    } else {
        Category::Computational
    }
}

fn ratio_of(a: &Sexagesimal, b: &Sexagesimal) -> Option<(u128, u128)> {
    let (x, y) = (a.significand().ok()?, b.significand().ok()?);
    Some((x, y))
}

/// Notes a slip that could sit in either of Columns II and III: the
/// inscribed cell is twice or half the intended one while the other cell
/// agrees, so scaling both intended cells moves the error across.
fn alternative_reading(
    column: Column,
    inscribed: &Sexagesimal,
    correct: &Sexagesimal,
    other_correct: &Sexagesimal,
) -> Option<String> {
    let (x, y) = ratio_of(inscribed, correct)?;
    let other = other_correct.significand().ok()?;
    let other_col = if column == Column::II {
        Column::III
    } else {
        Column::II
    };
    let (factor, scaled) = if x == 2 * y {
        ("doubled", other * 2)
    } else if 2 * x == y && other % 2 == 0 {
        ("halved", other / 2)
    } else {
        return None;
    };
    Some(format!(
        "with both intended cells {factor}, column {column} is right and column {other_col} is wrong ({} for {})",
        Sexagesimal::from_integer(other),
        Sexagesimal::from_integer(scaled)
    ))
}

/// One record per cell where `generated` and `attested` differ.
pub fn diff_tablets(generated: &Tablet, attested: &Tablet, mode: DiffMode) -> Vec<ErrorRecord> {
    let mut out = Vec::new();
    for (g, a) in generated.rows().iter().zip(attested.rows()) {
        for column in Column::ALL {
            let (gc, ac) = (g.cell(column), a.cell(column));
            if same(gc, ac, mode) {
                continue;
            }
            let skip = leading_restored(gc).max(leading_restored(ac));
            let inscribed = tail(&ac.without_restored_gaps(), skip);
            let correct = tail(&gc.without_restored_gaps(), skip);
            let annotation = if same(gc, ac, DiffMode::Lenient) {
                Some("an empty place read as zero; equal in lenient mode".to_string())
            } else {
                match column {
                    Column::I => None,
                    Column::II if same(&g.col3, &a.col3, mode) => alternative_reading(
                        column,
                        &ac.without_flags(),
                        &gc.without_flags(),
                        &g.col3,
                    ),
                    Column::III if same(&g.col2, &a.col2, mode) => alternative_reading(
                        column,
                        &ac.without_flags(),
                        &gc.without_flags(),
                        &g.col2,
                    ),
                    _ => None,
                }
            };
            out.push(ErrorRecord {
                line: a.n,
                column,
                category: categorize(column, &inscribed, &correct),
                inscribed,
                correct,
                annotation,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tablet::{attested_tablet, corrected_tablet, Reading};

    #[test]
    fn identical_tablets_have_no_records() {
        let t = corrected_tablet(Reading::Reciprocal);
        assert!(diff_tablets(&t, &t, DiffMode::Strict).is_empty());
        let a = attested_tablet();
        assert!(diff_tablets(&a, &a, DiffMode::Strict).is_empty());
    }

    #[test]
    fn line_two_column_one() {
        let recs = diff_tablets(
            &corrected_tablet(Reading::Reciprocal),
            &attested_tablet(),
            DiffMode::Strict,
        );
        let r = recs
            .iter()
            .find(|r| r.line == 2 && r.column == Column::I)
            .unwrap();
        assert_eq!(r.inscribed.to_string(), "58 14 56 15");
        assert_eq!(r.correct.to_string(), "58 14 50 06 15");
        assert_eq!(r.category, Category::Typographical);
    }

    #[test]
    fn lenient_mode_accepts_the_gap() {
        let c = corrected_tablet(Reading::Reciprocal);
        let a = attested_tablet();
        let strict = diff_tablets(&c, &a, DiffMode::Strict);
        let lenient = diff_tablets(&c, &a, DiffMode::Lenient);
        assert_eq!(strict.len(), lenient.len() + 1);
        let gap = strict
            .iter()
            .find(|r| r.line == 13 && r.column == Column::I)
            .unwrap();
        assert_eq!(gap.inscribed.to_string(), "27 03 45");
        assert_eq!(gap.correct.to_string(), "27 00 03 45");
        assert!(gap.annotation.is_some());
    }

    #[test]
    fn swapped_roles_swap_cells() {
        let c = corrected_tablet(Reading::Reciprocal);
        let a = attested_tablet();
        let fwd = diff_tablets(&c, &a, DiffMode::Strict);
        let back = diff_tablets(&a, &c, DiffMode::Strict);
        assert_eq!(fwd.len(), back.len());
        for (f, b) in fwd.iter().zip(&back) {
            assert_eq!((f.line, f.column), (b.line, b.column));
            assert_eq!((&f.inscribed, &f.correct), (&b.correct, &b.inscribed));
        }
    }

    #[test]
    fn line_fifteen_names_the_other_cell() {
        let recs = diff_tablets(
            &corrected_tablet(Reading::Reciprocal),
            &attested_tablet(),
            DiffMode::Strict,
        );
        let r = recs.iter().find(|r| r.line == 15).unwrap();
        assert_eq!(r.column, Column::II);
        assert_eq!(r.category, Category::Computational);
        let note = r.annotation.as_deref().unwrap();
        assert!(note.contains("column III is wrong (53 for 1 46)"), "{note}");
    }
}
