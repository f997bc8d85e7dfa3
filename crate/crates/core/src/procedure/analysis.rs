use crate::error::{Error, Result};
use crate::procedure::TableRow;
use crate::ratio::ExactRatio;

/// Difference between two adjacent lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapStep {
    /// Line numbers of the pair.
    pub upper: usize,
    pub lower: usize,
    pub delta_r: ExactRatio,
    pub delta_column_one: ExactRatio,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapAnalysis {
    pub steps: Vec<GapStep>,
}

impl GapAnalysis {
    /// The largest step in `r`; the first on a tie.
    pub fn largest_r_step(&self) -> &GapStep {
        largest(&self.steps, |s| s.delta_r)
    }

    pub fn largest_column_one_step(&self) -> &GapStep {
        largest(&self.steps, |s| s.delta_column_one)
    }

    pub fn r_steps_exceeding(&self, threshold: &ExactRatio) -> Vec<&GapStep> {
        self.steps
            .iter()
            .filter(|s| s.delta_r > *threshold)
            .collect()
    }

    pub fn column_one_steps_exceeding(&self, threshold: &ExactRatio) -> Vec<&GapStep> {
        self.steps
            .iter()
            .filter(|s| s.delta_column_one > *threshold)
            .collect()
    }
}

fn largest(steps: &[GapStep], key: impl Fn(&GapStep) -> ExactRatio) -> &GapStep {
    let mut best = &steps[0];
    for s in &steps[1..] {
        if key(s) > key(best) {
            best = s;
        }
    }
    best
}

/// Exact differences between successive lines of a descending table.
pub fn gap_analysis(rows: &[TableRow]) -> Result<GapAnalysis> {
    if rows.len() < 2 {
        return Err(Error::TooFewRows(rows.len()));
    }
    let mut steps = Vec::with_capacity(rows.len() - 1);
    for (i, pair) in rows.windows(2).enumerate() {
        let (a, b) = (&pair[0], &pair[1]);
        if a.r <= b.r {
            return Err(Error::Unsorted(i + 2));
        }
        steps.push(GapStep {
            upper: a.n,
            lower: b.n,
            delta_r: a.r - b.r,
            delta_column_one: a.column_one.to_ratio()? - b.column_one.to_ratio()?,
        });
    }
    Ok(GapAnalysis { steps })
}

/// Open-interval filters on the shape of the rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeCriterion {
    WOverD { lo: ExactRatio, hi: ExactRatio },
    LOverW { lo: ExactRatio, hi: ExactRatio },
}

pub fn shape_filter(rows: &[TableRow], criterion: &ShapeCriterion) -> Result<Vec<TableRow>> {
    let (lo, hi, key): (_, _, fn(&TableRow) -> ExactRatio) = match criterion {
        ShapeCriterion::WOverD { lo, hi } => (lo, hi, TableRow::w_over_d),
        ShapeCriterion::LOverW { lo, hi } => (lo, hi, TableRow::l_over_w),
    };
    if lo >= hi {
        return Err(Error::EmptyInterval {
            lo: lo.to_string(),
            hi: hi.to_string(),
        });
    }
    Ok(rows
        .iter()
        .filter(|row| {
            let v = key(row);
            *lo < v && v < *hi
        })
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::procedure::{
        build_table, enumerate_ratios, Line4Policy, ProcedureSpec, TripleMethod,
    };

    fn ratio(n: i128, d: i128) -> ExactRatio {
        ExactRatio::new(n, d).unwrap()
    }

    fn price_rows() -> Vec<TableRow> {
        let rs = enumerate_ratios(&ProcedureSpec::price()).unwrap();
        build_table(&rs, TripleMethod::R, Line4Policy::Insert).unwrap()
    }

    #[test]
    fn gaps_need_two_rows() {
        let rows = price_rows();
        assert_eq!(gap_analysis(&rows[..1]), Err(Error::TooFewRows(1)));
        let g = gap_analysis(&rows[..5]).unwrap();
        assert_eq!(g.steps.len(), 4);
        assert_eq!(g.steps[0].delta_r, ratio(12, 5) - ratio(64, 27));
    }

    #[test]
    fn shape_windows() {
        let rows = price_rows();
        let wide = shape_filter(
            &rows,
            &ShapeCriterion::WOverD {
                lo: ratio(1, 2),
                hi: ratio(1, 1),
            },
        )
        .unwrap();
        // 16/9 gives 175/337, just above one half
        assert_eq!(
            wide.iter().map(|r| r.n).collect::<Vec<_>>(),
            (1..=16).collect::<Vec<_>>()
        );
        let bad = ShapeCriterion::LOverW {
            lo: ratio(5, 1),
            hi: ratio(1, 1),
        };
        assert!(matches!(
            shape_filter(&rows, &bad),
            Err(Error::EmptyInterval { .. })
        ));
    }
}
