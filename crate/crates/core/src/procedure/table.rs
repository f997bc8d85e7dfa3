use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ratio::ExactRatio;
use crate::sexagesimal::Sexagesimal;
use crate::triple::{
    column_one, is_admissible_ratio, pq_triple, r_method, GeneratingPair, MultiplierStrategy,
    Triple,
};

/// The ratio of line 4, absent from the standard-table pool.
pub const LINE_FOUR_RATIO: (i128, i128) = (125, 54);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TripleMethod {
    /// `(p² − q², 2pq, p² + q²)`.
    Pq,
    /// Reciprocal method with factor elimination.
    #[default]
    R,
}

impl fmt::Display for TripleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TripleMethod::Pq => "pq",
            TripleMethod::R => "r",
        })
    }
}

impl FromStr for TripleMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pq" => Ok(TripleMethod::Pq),
            "r" => Ok(TripleMethod::R),
            other => Err(Error::InvalidToken(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Line4Policy {
    /// Splice 125/54 in when the list brackets it but lacks it.
    #[default]
    Insert,
    /// Drop 125/54 if present.
    Omit,
}

impl FromStr for Line4Policy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "insert" => Ok(Line4Policy::Insert),
            "omit" => Ok(Line4Policy::Omit),
            other => Err(Error::InvalidToken(other.to_string())),
        }
    }
}

/// One line of a reconstructed table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub p: u64,
    pub q: u64,
    pub r: ExactRatio,
    pub l: u64,
    /// `d²/l²`, leading one included.
    pub column_one: Sexagesimal,
    pub w: u64,
    pub d: u64,
    /// `(60x, 60, 60y)` for reciprocal-method rows where it is integral.
    pub tablet_form: Option<Triple>,
}

impl TableRow {
    pub fn triple(&self) -> Triple {
        Triple {
            w: self.w,
            l: self.l,
            d: self.d,
        }
    }

    /// `w²/l²`: Column I without the leading one.
    pub fn column_one_without_leading_one(&self) -> Sexagesimal {
        let v = self.column_one.to_ratio().expect("small value") - ExactRatio::one();
        Sexagesimal::from_ratio(&v).expect("regular difference")
    }

    pub fn w_over_d(&self) -> ExactRatio {
        self.triple().w_over_d()
    }

    pub fn l_over_w(&self) -> ExactRatio {
        self.triple().l_over_w()
    }
}

fn build_row(n: usize, r: &ExactRatio, method: TripleMethod) -> Result<TableRow> {
    let pair = GeneratingPair::from_ratio(r)?;
    let (triple, tablet_form) = match method {
        TripleMethod::Pq => (pq_triple(&pair)?, None),
        TripleMethod::R => {
            let trace = r_method(r, MultiplierStrategy::MaximalFactor)?;
            (trace.result, trace.tablet_form)
        }
    };
    Ok(TableRow {
        n,
        p: pair.p(),
        q: pair.q(),
        r: *r,
        l: triple.l,
        column_one: column_one(&triple, true)?,
        w: triple.w,
        d: triple.d,
        tablet_form,
    })
}

/// Numbers the ratios from 1 and computes each line. Input must be
/// admissible and strictly descending.
pub fn build_table(
    ratios: &[ExactRatio],
    method: TripleMethod,
    line4: Line4Policy,
) -> Result<Vec<TableRow>> {
    for (i, r) in ratios.iter().enumerate() {
        if !is_admissible_ratio(r) {
            return Err(Error::Inadmissible(r.to_string()));
        }
        if i > 0 && ratios[i - 1] <= *r {
            return Err(Error::Unsorted(i + 1));
        }
    }
    let four = ExactRatio::new(LINE_FOUR_RATIO.0, LINE_FOUR_RATIO.1)?;
    let mut list = ratios.to_vec();
    match line4 {
        Line4Policy::Insert => {
            let above = list.iter().any(|r| *r > four);
            let below = list.iter().any(|r| *r < four);
            if above && below && !list.contains(&four) {
                let at = list
                    .iter()
                    .position(|r| *r < four)
                    .expect("a smaller ratio exists");
                list.insert(at, four);
            }
        }
        Line4Policy::Omit => list.retain(|r| *r != four),
    }
    list.iter()
        .enumerate()
        .map(|(i, r)| build_row(i + 1, r, method))
        .collect()
}
