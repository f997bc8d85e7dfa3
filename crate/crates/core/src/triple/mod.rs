//! Pythagorean triples from generating pairs and from reciprocal pairs.

mod elimination;

pub(crate) use elimination::align;
pub use elimination::{
    eliminate, eliminate_with, primitive_from_pair, r_method, reciprocal_triple, Elimination,
    EliminationStep, MultiplierStrategy, RMethodTrace,
};

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ratio::ExactRatio;
use crate::sexagesimal::{is_regular, Sexagesimal};

/// Regular integers `p > q >= 1` generating the triple
/// `(p² − q², 2pq, p² + q²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratingPair {
    p: u64,
    q: u64,
}

impl GeneratingPair {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if q == 0 || p <= q {
            return Err(Error::InvalidPair { p, q });
        }
        if !is_regular(p as u128) {
            return Err(Error::NotRegular(p.to_string()));
        }
        if !is_regular(q as u128) {
            return Err(Error::NotRegular(q.to_string()));
        }
        Ok(GeneratingPair { p, q })
    }

    /// The reduced pair of a ratio `p/q > 1`.
    pub fn from_ratio(r: &ExactRatio) -> Result<Self> {
        let p = u64::try_from(r.numer()).map_err(|_| Error::RatioNotAboveOne(r.to_string()))?;
        let q = u64::try_from(r.denom()).map_err(|_| Error::Overflow)?;
        Self::new(p, q)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn ratio(&self) -> ExactRatio {
        ExactRatio::new(self.p as i128, self.q as i128).expect("q > 0")
    }

    pub fn is_reduced(&self) -> bool {
        self.p.gcd(&self.q) == 1
    }
}

impl fmt::Display for GeneratingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Width, length and diagonal of a rectangle: `w² + l² = d²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub w: u64,
    pub l: u64,
    pub d: u64,
}

impl Triple {
    pub fn new(w: u64, l: u64, d: u64) -> Result<Self> {
        let (w2, l2, d2) = (sq(w), sq(l), sq(d));
        if w == 0 || l == 0 || w2.checked_add(l2) != Some(d2) {
            return Err(Error::Degenerate(format!(
                "({w}, {l}, {d}) is not a Pythagorean triple"
            )));
        }
        Ok(Triple { w, l, d })
    }

    pub fn gcd(&self) -> u64 {
        self.w.gcd(&self.l).gcd(&self.d)
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd() == 1
    }

    pub fn primitive(&self) -> Triple {
        let g = self.gcd();
        Triple {
            w: self.w / g,
            l: self.l / g,
            d: self.d / g,
        }
    }

    pub fn scaled(&self, k: u64) -> Triple {
        Triple {
            w: self.w * k,
            l: self.l * k,
            d: self.d * k,
        }
    }

    pub fn w_over_d(&self) -> ExactRatio {
        ratio(self.w, self.d)
    }

    pub fn l_over_w(&self) -> ExactRatio {
        ratio(self.l, self.w)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.w, self.l, self.d)
    }
}

fn sq(n: u64) -> u128 {
    (n as u128) * (n as u128)
}

fn ratio(n: u64, d: u64) -> ExactRatio {
    ExactRatio::new(n as i128, d as i128).expect("non-zero side")
}

/// `(m, (m² − 1)/2, (m² + 1)/2)` for odd `m >= 3`.
pub fn greek_odd_triple(m: u64) -> Result<Triple> {
    if m < 3 || m % 2 == 0 {
        return Err(Error::InvalidOddGenerator(m));
    }
    let m2 = m.checked_mul(m).ok_or(Error::Overflow)?;
    Triple::new(m, (m2 - 1) / 2, (m2 + 1) / 2)
}

/// `w = p² − q²`, `l = 2pq`, `d = p² + q²`, unreduced.
pub fn pq_triple(pair: &GeneratingPair) -> Result<Triple> {
    let (p, q) = (pair.p, pair.q);
    let p2 = p.checked_mul(p).ok_or(Error::Overflow)?;
    let q2 = q.checked_mul(q).ok_or(Error::Overflow)?;
    let l = p
        .checked_mul(q)
        .and_then(|v| v.checked_mul(2))
        .ok_or(Error::Overflow)?;
    let d = p2.checked_add(q2).ok_or(Error::Overflow)?;
    Triple::new(p2 - q2, l, d)
}

/// `p² − q² < 2pq`: the width comes out shorter than the length.
pub fn is_admissible(pair: &GeneratingPair) -> bool {
    is_admissible_ratio(&pair.ratio())
}

/// `1 < r < 1 + √2`, decided exactly as `r² − 2r − 1 < 0`.
pub fn is_admissible_ratio(r: &ExactRatio) -> bool {
    let one = ExactRatio::one();
    *r > one && (*r * *r - ExactRatio::from_integer(2) * *r - one) < ExactRatio::zero()
}

/// Column I of the tablet: `d²/l²`, or `w²/l²` without the leading one.
pub fn column_one(t: &Triple, leading_one: bool) -> Result<Sexagesimal> {
    if !is_regular(t.l as u128) {
        return Err(Error::NotRegular(t.l.to_string()));
    }
    let top = if leading_one { t.d } else { t.w };
    let value = ExactRatio::new(sq(top) as i128, sq(t.l) as i128)?;
    Sexagesimal::from_ratio(&value)
}

/// How the generating-pair triple relates to the reciprocal-method triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Identical,
    PqIsDouble,
    /// Non-reduced pairs scale the triple further.
    PqIsMultiple(u64),
}

pub fn pq_vs_r_equivalence(pair: &GeneratingPair) -> Result<Equivalence> {
    let pq = pq_triple(pair)?;
    let r = reciprocal_triple(&pair.ratio(), MultiplierStrategy::MaximalFactor)?.result;
    let k = pq.d / r.d;
    if r.scaled(k) != pq {
        return Err(Error::StrategyDiverged(format!(
            "{pq} is not a multiple of {r}"
        )));
    }
    Ok(match k {
        1 => Equivalence::Identical,
        2 => Equivalence::PqIsDouble,
        k => Equivalence::PqIsMultiple(k),
    })
}
