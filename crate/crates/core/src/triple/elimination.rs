//! The reciprocal method: from a generating ratio `r` to the pair
//! `x = (r − 1/r)/2`, `y = (r + 1/r)/2`, then clearing the common regular
//! factors of `x` and `y` one multiplier at a time.
//!
//! The scribe reads each pair in floating notation, so a state is judged by
//! its aligned form: both numbers scaled by the same power of sixty until
//! they are integers and not both multiples of 60. The process stops when
//! the last sexagesimal digits of the aligned pair share no factor of 2, 3
//! or 5, which holds exactly when the aligned integers share none.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ratio::ExactRatio;
use crate::triple::{is_admissible_ratio, Triple};

const MAX_STEPS: usize = 64;

/// Rule choosing the next multiplier from the trailing digits of the
/// aligned pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MultiplierStrategy {
    /// Multiply by `60/g`, where `g` is the largest divisor of 60 shared by
    /// both trailing digits.
    #[default]
    MaximalFactor,
    /// As `MaximalFactor`, except that a purely even common factor is
    /// removed by halving (×30) one factor of two at a time.
    HalvingFirst,
    /// Remove 30, else 5, else 3, else 2, by multiplying with its
    /// complement to sixty (×2, ×12, ×20, ×30).
    Robson,
    /// The same choices as `Robson`, applied as divisions (×1/30, ×1/5, ...).
    Modified,
}

impl MultiplierStrategy {
    pub const ALL: [MultiplierStrategy; 4] = [
        MultiplierStrategy::MaximalFactor,
        MultiplierStrategy::HalvingFirst,
        MultiplierStrategy::Robson,
        MultiplierStrategy::Modified,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MultiplierStrategy::MaximalFactor => "maximal",
            MultiplierStrategy::HalvingFirst => "halving",
            MultiplierStrategy::Robson => "robson",
            MultiplierStrategy::Modified => "modified",
        }
    }

    /// The next multiplier, or `None` once the trailing digits share no
    /// factor of 2, 3 or 5.
    pub fn multiplier(&self, left_tail: u8, right_tail: u8) -> Option<ExactRatio> {
        let g = (left_tail as u64).gcd(&(right_tail as u64)).gcd(&60);
        if g == 1 {
            return None;
        }
        let int = |n: u64| ExactRatio::from_integer(n as i128);
        let removed = match self {
            MultiplierStrategy::MaximalFactor => g,
            MultiplierStrategy::HalvingFirst => {
                if g.is_power_of_two() {
                    2
                } else {
                    g
                }
            }
            MultiplierStrategy::Robson | MultiplierStrategy::Modified => [30, 5, 3, 2]
                .into_iter()
                .find(|f| g % f == 0)
                .expect("g > 1 divides 60"),
        };
        Some(match self {
            MultiplierStrategy::Modified => int(removed).recip().expect("non-zero"),
            _ => int(60 / removed),
        })
    }
}

impl fmt::Display for MultiplierStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MultiplierStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidToken(s.to_string()))
    }
}

/// One multiplication of the pair; the left and right multipliers differ
/// only in simulated slips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationStep {
    pub left_multiplier: ExactRatio,
    pub right_multiplier: ExactRatio,
    pub left: ExactRatio,
    pub right: ExactRatio,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub left: ExactRatio,
    pub right: ExactRatio,
    pub steps: Vec<EliminationStep>,
    /// Aligned final pair.
    pub final_left: u128,
    pub final_right: u128,
    /// Power of sixty taking the last exact state to the aligned pair.
    pub shift: i32,
}

impl Elimination {
    /// Last exact state (the start when no step was taken).
    pub fn last_state(&self) -> (ExactRatio, ExactRatio) {
        self.steps
            .last()
            .map_or((self.left, self.right), |s| (s.left, s.right))
    }
}

/// Smallest `k >= 0` with `den | 60^k`.
fn sixty_exponent(den: i128) -> Result<u32> {
    if !crate::sexagesimal::is_regular(den.unsigned_abs()) {
        return Err(Error::NonTerminating(format!("1/{den}")));
    }
    let mut power: i128 = 1;
    let mut k = 0;
    while power % den != 0 {
        power = power.checked_mul(60).ok_or(Error::Overflow)?;
        k += 1;
    }
    Ok(k)
}

/// Both values scaled by a common power of sixty into integers, not both
/// divisible by 60. Returns the integers and the exponent used.
pub(crate) fn align(a: &ExactRatio, b: &ExactRatio) -> Result<(u128, u128, i32)> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Degenerate(
            "elimination needs positive values".into(),
        ));
    }
    let k = sixty_exponent(a.denom())?.max(sixty_exponent(b.denom())?);
    let scale = 60i128.checked_pow(k).ok_or(Error::Overflow)?;
    let lift = |v: &ExactRatio| -> Result<u128> {
        let n = v
            .numer()
            .checked_mul(scale / v.denom())
            .ok_or(Error::Overflow)?;
        Ok(n as u128)
    };
    let (mut x, mut y, mut k) = (lift(a)?, lift(b)?, k as i32);
    while x % 60 == 0 && y % 60 == 0 {
        x /= 60;
        y /= 60;
        k -= 1;
    }
    Ok((x, y, k))
}

/// Runs `strategy` on the pair until no common factor of 2, 3, 5 remains.
pub fn eliminate(
    left: &ExactRatio,
    right: &ExactRatio,
    strategy: MultiplierStrategy,
) -> Result<Elimination> {
    eliminate_with(left, right, strategy, |_, m| (*m, *m))
}

/// As [`eliminate`], but `apply(step_index, multiplier)` decides the
/// multipliers actually applied to the left and right numbers.
pub fn eliminate_with<F>(
    left: &ExactRatio,
    right: &ExactRatio,
    strategy: MultiplierStrategy,
    apply: F,
) -> Result<Elimination>
where
    F: Fn(usize, &ExactRatio) -> (ExactRatio, ExactRatio),
{
    let mut steps: Vec<EliminationStep> = Vec::new();
    let (mut a, mut b) = (*left, *right);
    loop {
        let (x, y, shift) = align(&a, &b)?;
        let Some(m) = strategy.multiplier((x % 60) as u8, (y % 60) as u8) else {
            return Ok(Elimination {
                left: *left,
                right: *right,
                steps,
                final_left: x,
                final_right: y,
                shift,
            });
        };
        if steps.len() == MAX_STEPS {
            return Err(Error::StrategyDiverged(format!(
                "{strategy} did not terminate within {MAX_STEPS} steps"
            )));
        }
        let (ml, mr) = apply(steps.len(), &m);
        a = a * ml;
        b = b * mr;
        steps.push(EliminationStep {
            left_multiplier: ml,
            right_multiplier: mr,
            left: a,
            right: b,
        });
    }
}

/// The full record of one reciprocal-method computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMethodTrace {
    pub r: ExactRatio,
    pub rbar: ExactRatio,
    pub x: ExactRatio,
    pub y: ExactRatio,
    pub strategy: MultiplierStrategy,
    pub steps: Vec<ExactRatio>,
    /// Pair after each step.
    pub states: Vec<(ExactRatio, ExactRatio)>,
    /// Power of sixty dropped when reading the final pair as integers.
    pub shift: i32,
    pub result: Triple,
    /// The unreduced `(60x, 60, 60y)` when it is integral.
    pub tablet_form: Option<Triple>,
}

impl RMethodTrace {
    /// Product of the multipliers, times the dropped power of sixty: the
    /// length of the rectangle.
    pub fn scale(&self) -> ExactRatio {
        let product = self.steps.iter().fold(ExactRatio::one(), |acc, m| acc * *m);
        product * ExactRatio::from_integer(60).pow(self.shift)
    }
}

/// Reduces `(x, 1, y)` to a primitive integer triple by clearing
/// denominators and dividing by the gcd.
pub fn primitive_from_pair(x: &ExactRatio, y: &ExactRatio) -> Result<Triple> {
    let den = x.denom().lcm(&y.denom());
    let xs = x.numer() * (den / x.denom());
    let ys = y.numer() * (den / y.denom());
    let g = xs.gcd(&den).gcd(&ys);
    let conv = |v: i128| u64::try_from(v / g).map_err(|_| Error::Overflow);
    Triple::new(conv(xs)?, conv(den)?, conv(ys)?)
}

/// The reciprocal method for any regular `r > 1`; the width may exceed the
/// length when `r` is not admissible.
pub fn reciprocal_triple(r: &ExactRatio, strategy: MultiplierStrategy) -> Result<RMethodTrace> {
    if *r <= ExactRatio::one() {
        return Err(Error::RatioNotAboveOne(r.to_string()));
    }
    if !r.is_regular() {
        return Err(Error::NotRegular(r.to_string()));
    }
    let rbar = r.recip()?;
    let half = ExactRatio::new(1, 2)?;
    let x = (*r - rbar) * half;
    let y = (*r + rbar) * half;

    let run = eliminate(&x, &y, strategy)?;
    let steps: Vec<ExactRatio> = run.steps.iter().map(|s| s.left_multiplier).collect();
    let states = run.steps.iter().map(|s| (s.left, s.right)).collect();
    let to_u64 = |v: u128| u64::try_from(v).map_err(|_| Error::Overflow);
    let w = to_u64(run.final_left)?;
    let d = to_u64(run.final_right)?;

    let trace_scale = steps.iter().fold(ExactRatio::one(), |acc, m| acc * *m)
        * ExactRatio::from_integer(60).pow(run.shift);
    let l = trace_scale
        .to_integer()
        .and_then(|v| u64::try_from(v).ok())
        .ok_or_else(|| Error::StrategyDiverged(format!("length {trace_scale} is not integral")))?;
    let result = Triple::new(w, l, d)?;

    let anchor = primitive_from_pair(&x, &y)?;
    if anchor != result {
        return Err(Error::StrategyDiverged(format!(
            "{strategy} produced {result}, gcd reduction gives {anchor}"
        )));
    }

    let sixty = ExactRatio::from_integer(60);
    let tablet_form = match ((x * sixty).to_integer(), (y * sixty).to_integer()) {
        (Some(w0), Some(d0)) => Some(Triple::new(w0 as u64, 60, d0 as u64)?),
        _ => None,
    };

    Ok(RMethodTrace {
        r: *r,
        rbar,
        x,
        y,
        strategy,
        steps,
        states,
        shift: run.shift,
        result,
        tablet_form,
    })
}

/// The reciprocal method restricted to admissible ratios.
pub fn r_method(r: &ExactRatio, strategy: MultiplierStrategy) -> Result<RMethodTrace> {
    if *r <= ExactRatio::one() {
        return Err(Error::RatioNotAboveOne(r.to_string()));
    }
    if !r.is_regular() {
        return Err(Error::NotRegular(r.to_string()));
    }
    if !is_admissible_ratio(r) {
        return Err(Error::Inadmissible(r.to_string()));
    }
    reciprocal_triple(r, strategy)
}
