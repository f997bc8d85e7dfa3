//! The cane leaning against a wall.
//!
//! A cane of length `l` stands upright against a wall. Its top slides down
//! by `d` while its foot moves out by `b`. From `(l − d)² + b² = l²` the
//! length is `l = (d² + b²)/(2d)`; the height reached is found as the
//! square side of `l² − b²`.

use crate::error::{Error, Result};
use crate::ratio::ExactRatio;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaneProblem {
    /// How far the top has come down.
    pub d: ExactRatio,
    /// How far the foot has gone out.
    pub b: ExactRatio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaneSolution {
    pub l: ExactRatio,
    pub h: ExactRatio,
    /// `l² − b²`, whose square side is `h`.
    pub h_squared: ExactRatio,
}

pub fn solve_cane(problem: &CaneProblem) -> Result<CaneSolution> {
    let CaneProblem { d, b } = *problem;
    if !d.is_positive() {
        return Err(Error::Degenerate(format!(
            "the drop must be positive, got {d}"
        )));
    }
    if b < ExactRatio::zero() {
        return Err(Error::Degenerate(format!(
            "the distance out must not be negative, got {b}"
        )));
    }
    let l = (d * d + b * b) / (ExactRatio::from_integer(2) * d);
    let h_squared = l * l - b * b;
    if h_squared <= ExactRatio::zero() {
        return Err(Error::Degenerate(format!(
            "the cane of length {l} is no taller than its drop {d}"
        )));
    }
    let h = h_squared
        .sqrt_exact()
        .ok_or_else(|| Error::NonTerminating(format!("square side of {h_squared}")))?;
    if h != l - d {
        return Err(Error::Degenerate(format!(
            "the cane of length {l} is no taller than its drop {d}"
        )));
    }
    Ok(CaneSolution { l, h, h_squared })
}
