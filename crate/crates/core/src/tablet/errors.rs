//! Mechanisms that turn a correct computation into an inscribed slip.

use std::fmt;

use crate::error::{Error, Result};
use crate::procedure::{enumerate_ratios, ProcedureSpec};
use crate::ratio::ExactRatio;
use crate::sexagesimal::Sexagesimal;
use crate::tablet::{attested_tablet, Column, LINES};
use crate::triple::{align, eliminate, eliminate_with, r_method, MultiplierStrategy, Triple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ErrorModel {
    /// Line 2, Column III as `(p+q)² + 2p'q` with `p'` in place of `p`.
    GillingsLine2 { assumed_p: u64 },
    /// Line 2 eliminated with the Robson multipliers, then continued past
    /// the stopping point.
    RobsonOvershoot { extra_steps: usize },
    /// Line 2 eliminated by division, with one step multiplying the left
    /// number by the inverse of the right multiplier. Steps count from 0.
    ModifiedMultiplier { faulty_step: usize },
    /// Line 2 eliminated with the Robson multipliers from a miscomputed `y`.
    WrongY { y: Sexagesimal },
    /// Column II holds `w²` instead of `w`.
    SquareCopy { line: usize },
    /// The last halving step is applied to the right number only.
    HalvingSkip { line: usize },
}

impl ErrorModel {
    pub fn name(&self) -> &'static str {
        match self {
            ErrorModel::GillingsLine2 { .. } => "gillings_line2",
            ErrorModel::RobsonOvershoot { .. } => "robson_overshoot",
            ErrorModel::ModifiedMultiplier { .. } => "modified_multiplier",
            ErrorModel::WrongY { .. } => "wrong_y",
            ErrorModel::SquareCopy { .. } => "square_copy",
            ErrorModel::HalvingSkip { .. } => "halving_skip",
        }
    }

    /// Every model with the parameters that target the inscribed slips;
    /// both miscomputed values of `y` are included.
    pub fn catalogue() -> Vec<ErrorModel> {
        vec![
            ErrorModel::GillingsLine2 { assumed_p: 60 },
            ErrorModel::RobsonOvershoot { extra_steps: 2 },
            ErrorModel::ModifiedMultiplier { faulty_step: 3 },
            ErrorModel::WrongY {
                y: "3;21 02 30".parse().expect("literal"),
            },
            ErrorModel::WrongY {
                y: "3;20 01 02 30".parse().expect("literal"),
            },
            ErrorModel::SquareCopy { line: 13 },
            ErrorModel::HalvingSkip { line: 15 },
        ]
    }

    /// The catalogue entry for `name`; `wrong_y` takes its value from
    /// `param` (default 3;21 02 30), others take their numeric parameter.
    pub fn parse(name: &str, param: Option<&str>) -> Result<ErrorModel> {
        let num = |default: u64| -> Result<u64> {
            match param {
                None => Ok(default),
                Some(p) => p
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidToken(p.to_string())),
            }
        };
        Ok(match name {
            "gillings_line2" => ErrorModel::GillingsLine2 {
                assumed_p: num(60)?,
            },
            "robson_overshoot" => ErrorModel::RobsonOvershoot {
                extra_steps: num(2)? as usize,
            },
            "modified_multiplier" => ErrorModel::ModifiedMultiplier {
                faulty_step: num(3)? as usize,
            },
            "wrong_y" => ErrorModel::WrongY {
                y: param.unwrap_or("3;21 02 30").parse()?,
            },
            "square_copy" => ErrorModel::SquareCopy {
                line: num(13)? as usize,
            },
            "halving_skip" => ErrorModel::HalvingSkip {
                line: num(15)? as usize,
            },
            other => {
                return Err(Error::ModelMismatch(format!(
                    "unknown error model `{other}`"
                )))
            }
        })
    }
}

impl fmt::Display for ErrorModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ErrorModel::GillingsLine2 { assumed_p } => write!(f, "{} p'={assumed_p}", self.name()),
            ErrorModel::RobsonOvershoot { extra_steps } => {
                write!(f, "{} extra={extra_steps}", self.name())
            }
            ErrorModel::ModifiedMultiplier { faulty_step } => {
                write!(f, "{} step={faulty_step}", self.name())
            }
            ErrorModel::WrongY { y } => write!(f, "{} y={y}", self.name()),
            ErrorModel::SquareCopy { line } | ErrorModel::HalvingSkip { line } => {
                write!(f, "{} line={line}", self.name())
            }
        }
    }
}

/// A simulated value set against the inscribed cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulatedCell {
    pub column: Column,
    pub value: Sexagesimal,
    pub attested: Sexagesimal,
    /// Equal in floating notation.
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulationOutcome {
    pub model: ErrorModel,
    pub line: usize,
    /// Final `(left, right)` numbers of an elimination, aligned to integers.
    pub pair: Option<(Sexagesimal, Sexagesimal)>,
    /// Exact states after each multiplication.
    pub states: Vec<(ExactRatio, ExactRatio)>,
    pub cells: Vec<SimulatedCell>,
    pub note: Option<String>,
}

impl SimulationOutcome {
    pub fn matches_attested(&self) -> bool {
        self.cells.iter().all(|c| c.matches)
    }
}

fn line_ratio(line: usize) -> Result<ExactRatio> {
    if !(1..=LINES).contains(&line) {
        return Err(Error::ModelMismatch(format!(
            "line {line} is not on the tablet"
        )));
    }
    Ok(enumerate_ratios(&ProcedureSpec::price())?[line - 1])
}

fn xy(r: &ExactRatio) -> Result<(ExactRatio, ExactRatio)> {
    let rbar = r.recip()?;
    let half = ExactRatio::new(1, 2)?;
    Ok(((*r - rbar) * half, (*r + rbar) * half))
}

fn aligned_pair(a: &ExactRatio, b: &ExactRatio) -> Result<(Sexagesimal, Sexagesimal)> {
    let (x, y, _) = align(a, b)?;
    Ok((Sexagesimal::from_integer(x), Sexagesimal::from_integer(y)))
}

fn cell(line: usize, column: Column, value: Sexagesimal) -> SimulatedCell {
    let attested = attested_tablet()
        .row(line)
        .expect("line checked")
        .cell(column)
        .without_flags();
    SimulatedCell {
        column,
        matches: value.floating_eq(&attested),
        value,
        attested,
    }
}

const MISREAD: &str = "3 13 stands where 3 12 01 is inscribed";

/// `y` equals the true `y` of line 2 times the ratio of line 1.
pub fn wrong_y_is_previous_ratio_multiple(y: &Sexagesimal) -> Result<bool> {
    let (_, true_y) = xy(&line_ratio(2)?)?;
    Ok(y.to_ratio()? == line_ratio(1)? * true_y)
}

/// `(p+q)² − 2pq = p² + q²`.
pub fn sum_of_squares_identity(p: i128, q: i128) -> bool {
    (p + q) * (p + q) - 2 * p * q == p * p + q * q
}

/// `pq` found from squares two ways: `¼[(p+q)² − (p−q)²]` and
/// `½[(p+q)² − p² − q²]`.
pub fn product_from_squares(p: i128, q: i128) -> (ExactRatio, ExactRatio) {
    let s = (p + q) * (p + q);
    let quarter = ExactRatio::new(s - (p - q) * (p - q), 4).expect("non-zero");
    let half = ExactRatio::new(s - p * p - q * q, 2).expect("non-zero");
    (quarter, half)
}

pub fn simulate_error(model: &ErrorModel) -> Result<SimulationOutcome> {
    let outcome = |line, pair, states, cells, note| SimulationOutcome {
        model: model.clone(),
        line,
        pair,
        states,
        cells,
        note,
    };
    match model {
        ErrorModel::GillingsLine2 { assumed_p } => {
            let r = line_ratio(2)?;
            let (p, q) = (r.numer(), r.denom());
            if *assumed_p == 0 {
                return Err(Error::ModelMismatch("p' must be positive".into()));
            }
            let square = (p + q) * (p + q);
            let product = 2 * (*assumed_p as i128) * q;
            let value = Sexagesimal::from_integer((square + product) as u128);
            let note = format!(
                "(p+q)² = {}, 2p'q = {}",
                Sexagesimal::from_integer(square as u128),
                Sexagesimal::from_integer(product as u128)
            );
            Ok(outcome(
                2,
                None,
                Vec::new(),
                vec![cell(2, Column::III, value)],
                Some(note),
            ))
        }
        ErrorModel::RobsonOvershoot { extra_steps } => {
            if *extra_steps == 0 {
                return Err(Error::ModelMismatch(
                    "an overshoot needs at least one extra step".into(),
                ));
            }
            let (x, y) = xy(&line_ratio(2)?)?;
            let run = eliminate(&x, &y, MultiplierStrategy::Robson)?;
            let last = run
                .steps
                .last()
                .ok_or_else(|| Error::ModelMismatch("no elimination step to repeat".into()))?;
            let m = last.left_multiplier;
            let mut states: Vec<_> = run.steps.iter().map(|s| (s.left, s.right)).collect();
            let (stop_w, _) = aligned_pair(&last.left, &last.right)?;
            let (mut a, mut b) = (last.left, last.right);
            for _ in 0..*extra_steps {
                a = a * m;
                b = b * m;
                states.push((a, b));
            }
            let pair = aligned_pair(&a, &b)?;
            let cells = vec![
                cell(2, Column::II, stop_w),
                cell(2, Column::III, pair.1.clone()),
            ];
            let note = format!("w copied from the stopping point, d from the last step; {MISREAD}");
            Ok(outcome(2, Some(pair), states, cells, Some(note)))
        }
        ErrorModel::ModifiedMultiplier { faulty_step } => {
            let (x, y) = xy(&line_ratio(2)?)?;
            let clean = eliminate(&x, &y, MultiplierStrategy::Modified)?;
            if *faulty_step == 0 || *faulty_step >= clean.steps.len() {
                return Err(Error::ModelMismatch(format!(
                    "step {faulty_step} is not one of the division steps 1..{}",
                    clean.steps.len()
                )));
            }
            let fault = *faulty_step;
            let run = eliminate_with(&x, &y, MultiplierStrategy::Modified, |i, m| {
                if i == fault {
                    (m.recip().expect("non-zero multiplier"), *m)
                } else {
                    (*m, *m)
                }
            })?;
            let states: Vec<_> = run.steps.iter().map(|s| (s.left, s.right)).collect();
            let pair = (
                Sexagesimal::from_integer(run.final_left),
                Sexagesimal::from_integer(run.final_right),
            );
            let cells = vec![
                cell(2, Column::II, pair.0.clone()),
                cell(2, Column::III, pair.1.clone()),
            ];
            Ok(outcome(
                2,
                Some(pair),
                states,
                cells,
                Some(MISREAD.to_string()),
            ))
        }
        ErrorModel::WrongY { y } => {
            let yv = y.to_ratio()?;
            if !yv.is_positive() {
                return Err(Error::ModelMismatch("y must be positive".into()));
            }
            let (x, _) = xy(&line_ratio(2)?)?;
            let run = eliminate(&x, &yv, MultiplierStrategy::Robson)?;
            let states: Vec<_> = run.steps.iter().map(|s| (s.left, s.right)).collect();
            let pair = (
                Sexagesimal::from_integer(run.final_left),
                Sexagesimal::from_integer(run.final_right),
            );
            let cells = vec![
                cell(2, Column::II, pair.0.clone()),
                cell(2, Column::III, pair.1.clone()),
            ];
            let mut notes = Vec::new();
            if wrong_y_is_previous_ratio_multiple(y)? {
                notes.push("y is 12/5 times the true y".to_string());
            }
            if !cells.iter().all(|c| c.matches) {
                notes.push(MISREAD.to_string());
            }
            let note = (!notes.is_empty()).then(|| notes.join("; "));
            Ok(outcome(2, Some(pair), states, cells, note))
        }
        ErrorModel::SquareCopy { line } => {
            let r = line_ratio(*line)?;
            let w = r_method(&r, MultiplierStrategy::MaximalFactor)?.result.w as u128;
            let value = Sexagesimal::from_integer(w * w);
            let note = format!("w = {}", Sexagesimal::from_integer(w));
            Ok(outcome(
                *line,
                None,
                Vec::new(),
                vec![cell(*line, Column::II, value)],
                Some(note),
            ))
        }
        ErrorModel::HalvingSkip { line } => {
            let (x, y) = xy(&line_ratio(*line)?)?;
            let clean = eliminate(&x, &y, MultiplierStrategy::HalvingFirst)?;
            let thirty = ExactRatio::from_integer(30);
            let last = clean.steps.len().checked_sub(1);
            if last.is_none_or(|i| clean.steps[i].left_multiplier != thirty) {
                return Err(Error::ModelMismatch(format!(
                    "line {line} does not end with a halving step"
                )));
            }
            let skip = last.expect("checked");
            let mut states = Vec::new();
            let (mut a, mut b) = (x, y);
            for (i, s) in clean.steps.iter().enumerate() {
                if i != skip {
                    a = a * s.left_multiplier;
                }
                b = b * s.right_multiplier;
                states.push((a, b));
            }
            let pair = aligned_pair(&a, &b)?;
            let cells = vec![
                cell(*line, Column::II, pair.0.clone()),
                cell(*line, Column::III, pair.1.clone()),
            ];
            Ok(outcome(*line, Some(pair), states, cells, None))
        }
    }
}

/// A line whose intended `w` or `d` ends in a digit sharing a factor
/// with 60.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineAnalysis {
    pub n: usize,
    pub x: ExactRatio,
    pub y: ExactRatio,
    /// The reduced triple.
    pub expected: Triple,
    /// `(60x, 60, 60y)` where integral, else the reduced triple.
    pub tablet_form: Triple,
    pub inscribed_w: Sexagesimal,
    pub inscribed_d: Sexagesimal,
    /// The inscribed pair differs from the reduced `(w, d)`.
    pub deviates: bool,
}

fn shares_factor_with_sixty(n: u64) -> bool {
    let last = Sexagesimal::from_integer(n as u128)
        .significant_digits()
        .last()
        .copied()
        .unwrap_or(0) as u64;
    num_integer::gcd(last, 60) > 1
}

pub fn regular_terminal_lines() -> Result<Vec<LineAnalysis>> {
    let attested = attested_tablet();
    let ratios = enumerate_ratios(&ProcedureSpec::price())?;
    let mut out = Vec::new();
    for (i, r) in ratios.iter().take(LINES).enumerate() {
        let trace = r_method(r, MultiplierStrategy::MaximalFactor)?;
        let t = trace.result;
        if !(shares_factor_with_sixty(t.w) || shares_factor_with_sixty(t.d)) {
            continue;
        }
        let row = attested.row(i + 1).expect("fifteen rows");
        let (iw, id) = (row.col2.without_flags(), row.col3.without_flags());
        let deviates = !(iw.floating_eq(&Sexagesimal::from_integer(t.w as u128))
            && id.floating_eq(&Sexagesimal::from_integer(t.d as u128)));
        out.push(LineAnalysis {
            n: i + 1,
            x: trace.x,
            y: trace.y,
            expected: t,
            tablet_form: trace.tablet_form.unwrap_or(t),
            inscribed_w: iw,
            inscribed_d: id,
            deviates,
        });
    }
    Ok(out)
}
