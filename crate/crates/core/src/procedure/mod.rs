//! Pools of generating ratios under the historical selection procedures,
//! the tables built from them, and the analyses run on those tables.

mod analysis;
mod table;

pub use analysis::{gap_analysis, shape_filter, GapAnalysis, GapStep, ShapeCriterion};
pub use table::{build_table, Line4Policy, TableRow, TripleMethod, LINE_FOUR_RATIO};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ratio::ExactRatio;
use crate::sexagesimal::{
    is_regular, regular_numbers_up_to, sqrt2_constant, standard_reciprocal_table, Sexagesimal,
    Sqrt2Variant,
};
use crate::triple::is_admissible_ratio;

/// A ratio-selection procedure with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProcedureSpec {
    /// Regular `2 <= p <= p_max`, `2 <= q <= q_max`.
    Price { p_max: u64, q_max: u64 },
    /// Regular `2 <= p, q <= max`.
    P125 { max: u64 },
    /// Reciprocal pairs `(r, 1/r)` with few places in floating notation,
    /// optionally restricted to a closed window of ratios.
    RobsonDigits {
        max_places_each: usize,
        max_places_total: usize,
        window: Option<(ExactRatio, ExactRatio)>,
    },
    /// `p` and `q` taken from the standard reciprocal table.
    StandardTable { include_one: bool },
    /// Regular `1 <= p <= p_max`, `1 <= q <= q_max` and `p/q <= r_max`.
    Bounded {
        p_max: u64,
        q_max: u64,
        r_max: ExactRatio,
    },
}

impl ProcedureSpec {
    pub fn price() -> Self {
        ProcedureSpec::Price {
            p_max: 128,
            q_max: 54,
        }
    }

    pub fn p125() -> Self {
        ProcedureSpec::P125 { max: 125 }
    }

    /// Four places each, seven in all, between the ratios of the first
    /// and last lines of the tablet (1;48 and 2;24).
    pub fn robson_digits() -> Self {
        ProcedureSpec::RobsonDigits {
            max_places_each: 4,
            max_places_total: 7,
            window: Some((ratio(9, 5), ratio(12, 5))),
        }
    }

    pub fn standard_table() -> Self {
        ProcedureSpec::StandardTable { include_one: false }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ProcedureSpec::Price { .. } => "price",
            ProcedureSpec::P125 { .. } => "p125",
            ProcedureSpec::RobsonDigits { .. } => "robson_digits",
            ProcedureSpec::StandardTable { .. } => "standard_table",
            ProcedureSpec::Bounded { .. } => "bounded",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidProcedure(msg));
        match self {
            ProcedureSpec::Price { p_max, q_max } if *p_max < 2 || *q_max < 2 => {
                bad(format!("price bounds ({p_max}, {q_max}) leave no pairs"))
            }
            ProcedureSpec::P125 { max } if *max < 2 => bad(format!("bound {max} leaves no pairs")),
            ProcedureSpec::RobsonDigits {
                max_places_each,
                max_places_total,
                window,
            } => {
                if *max_places_each == 0 || *max_places_total < *max_places_each {
                    return bad(format!(
                        "place limits {max_places_each} each, {max_places_total} total"
                    ));
                }
                if *max_places_each > 4 {
                    return bad("at most four places per number are searched".into());
                }
                match window {
                    Some((lo, hi)) if lo > hi => Err(Error::EmptyInterval {
                        lo: lo.to_string(),
                        hi: hi.to_string(),
                    }),
                    _ => Ok(()),
                }
            }
            ProcedureSpec::Bounded {
                p_max,
                q_max,
                r_max,
            } => {
                if *p_max == 0 || *q_max == 0 {
                    bad(format!("bounds ({p_max}, {q_max}) leave no pairs"))
                } else if *r_max <= ExactRatio::one() {
                    Err(Error::RatioNotAboveOne(r_max.to_string()))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ProcedureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProcedureSpec {
    type Err = Error;

    /// Accepts the procedure names with their default parameters.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "price" => Ok(Self::price()),
            "p125" => Ok(Self::p125()),
            "robson_digits" | "robson" => Ok(Self::robson_digits()),
            "standard_table" | "standard" => Ok(Self::standard_table()),
            other => Err(Error::InvalidProcedure(format!(
                "unknown procedure `{other}`"
            ))),
        }
    }
}

fn ratio(n: i128, d: i128) -> ExactRatio {
    ExactRatio::new(n, d).expect("non-zero denominator")
}

fn regular_in(lo: u64, hi: u64) -> Vec<u64> {
    regular_numbers_up_to(hi)
        .into_iter()
        .filter(|&n| n >= lo)
        .collect()
}

/// The `(p, q)` pool of a pair-based procedure.
fn pair_pool(spec: &ProcedureSpec) -> Option<(Vec<u64>, Vec<u64>)> {
    match spec {
        ProcedureSpec::Price { p_max, q_max } => {
            Some((regular_in(2, *p_max), regular_in(2, *q_max)))
        }
        ProcedureSpec::P125 { max } => Some((regular_in(2, *max), regular_in(2, *max))),
        ProcedureSpec::StandardTable { include_one } => {
            let mut ns: Vec<u64> = standard_reciprocal_table().iter().map(|e| e.n).collect();
            if *include_one {
                ns.insert(0, 1);
            }
            Some((ns.clone(), ns))
        }
        ProcedureSpec::Bounded { p_max, q_max, .. } => {
            Some((regular_in(1, *p_max), regular_in(1, *q_max)))
        }
        ProcedureSpec::RobsonDigits { .. } => None,
    }
}

/// Number of places of `v` in floating notation.
pub fn floating_places(v: &ExactRatio) -> Result<usize> {
    Ok(Sexagesimal::from_ratio(v)?.significant_digits().len())
}

/// Reciprocal pairs in `(1, 3)` passing the place limits. A ratio with at
/// most four floating places in that range has at most three fractional
/// places, so every candidate is a multiple of `60⁻³`.
fn robson_candidates(each: usize, total: usize) -> Result<Vec<ExactRatio>> {
    const SCALE: i128 = 216_000;
    let mut out = Vec::new();
    for n in SCALE + 1..3 * SCALE {
        let r = ratio(n, SCALE);
        if !is_regular(r.numer() as u128) {
            continue;
        }
        let a = floating_places(&r)?;
        if a > each {
            continue;
        }
        let b = floating_places(&r.recip()?)?;
        if b <= each && a + b <= total {
            out.push(r);
        }
    }
    Ok(out)
}

fn descending(set: BTreeSet<ExactRatio>) -> Vec<ExactRatio> {
    set.into_iter().rev().collect()
}

/// Distinct admissible ratios of the procedure, strictly descending.
pub fn enumerate_ratios(spec: &ProcedureSpec) -> Result<Vec<ExactRatio>> {
    spec.validate()?;
    if let ProcedureSpec::RobsonDigits {
        max_places_each,
        max_places_total,
        window,
    } = spec
    {
        let set = robson_candidates(*max_places_each, *max_places_total)?
            .into_iter()
            .filter(is_admissible_ratio)
            .filter(|r| window.as_ref().is_none_or(|(lo, hi)| lo <= r && r <= hi))
            .collect();
        return Ok(descending(set));
    }
    let (ps, qs) = pair_pool(spec).expect("pair-based procedure");
    let r_max = match spec {
        ProcedureSpec::Bounded { r_max, .. } => Some(*r_max),
        _ => None,
    };
    let mut set = BTreeSet::new();
    for &p in &ps {
        for &q in &qs {
            if p <= q {
                continue;
            }
            let r = ratio(p as i128, q as i128);
            if is_admissible_ratio(&r) && r_max.is_none_or(|m| r <= m) {
                set.insert(r);
            }
        }
    }
    Ok(descending(set))
}

/// Sizes of a procedure's pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PoolStatistics {
    /// `(p, q)` pairs considered; for the digit procedure, the reciprocal
    /// pairs in `(1, 3)` passing the place limits.
    pub total_pairs: usize,
    pub distinct: usize,
    pub distinct_below_three: usize,
    pub admissible: usize,
}

pub fn pool_statistics(spec: &ProcedureSpec) -> Result<PoolStatistics> {
    let admissible = enumerate_ratios(spec)?.len();
    if let ProcedureSpec::RobsonDigits {
        max_places_each,
        max_places_total,
        ..
    } = spec
    {
        let n = robson_candidates(*max_places_each, *max_places_total)?.len();
        return Ok(PoolStatistics {
            total_pairs: n,
            distinct: n,
            distinct_below_three: n,
            admissible,
        });
    }
    let (ps, qs) = pair_pool(spec).expect("pair-based procedure");
    let mut distinct = BTreeSet::new();
    for &p in &ps {
        for &q in &qs {
            distinct.insert(ratio(p as i128, q as i128));
        }
    }
    let (one, three) = (ExactRatio::one(), ExactRatio::from_integer(3));
    let distinct_below_three = distinct.iter().filter(|r| one < **r && **r < three).count();
    Ok(PoolStatistics {
        total_pairs: ps.len() * qs.len(),
        distinct: distinct.len(),
        distinct_below_three,
        admissible,
    })
}

/// Bounds on `p`, `q` and `p/q` read off an approximation of `1 + √2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedBounds {
    pub variant: Sqrt2Variant,
    /// `1 + √2` under the approximation.
    pub alpha: ExactRatio,
    /// The approximation cut to its first fractional place.
    pub r_max: ExactRatio,
    pub p_max: u64,
    pub q_max: u64,
}

impl DerivedBounds {
    pub fn spec(&self) -> ProcedureSpec {
        ProcedureSpec::Bounded {
            p_max: self.p_max,
            q_max: self.q_max,
            r_max: self.r_max,
        }
    }
}

/// `r_max` is `1 + √2` kept to one fractional place; read in floating
/// notation over `q_max = 1 00` it gives `p_max = 60·r_max`.
pub fn derive_bounds(variant: Sqrt2Variant) -> Result<DerivedBounds> {
    let alpha = ExactRatio::one() + sqrt2_constant(variant).to_ratio()?;
    let r_max = Sexagesimal::truncated(&alpha, 1)?.to_ratio()?;
    let q_max = 60u64;
    let p_max = (r_max * ExactRatio::from_integer(q_max as i128))
        .to_integer()
        .ok_or(Error::Overflow)? as u64;
    Ok(DerivedBounds {
        variant,
        alpha,
        r_max,
        p_max,
        q_max,
    })
}

/// Admissible ratios `p/q` above `lower` with regular `p, q <= bound`,
/// descending.
pub fn admissible_ratios_above(lower: &ExactRatio, bound: u64) -> Vec<ExactRatio> {
    let regs = regular_numbers_up_to(bound);
    let mut set = BTreeSet::new();
    for &p in &regs {
        for &q in regs.iter().take_while(|&&q| q < p) {
            let r = ratio(p as i128, q as i128);
            if r > *lower && is_admissible_ratio(&r) {
                set.insert(r);
            }
        }
    }
    descending(set)
}

/// The next regular ratio between 2;24 and `1 + √2` once `p` and `q` may
/// reach `60³`: 2;24 09 45 21 05 37 30.
pub fn near_alpha_check_ratio() -> ExactRatio {
    ratio(19683, 8192)
}
