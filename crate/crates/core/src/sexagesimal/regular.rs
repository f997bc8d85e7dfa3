//! Regular (2·3·5-smooth) numbers and their reciprocals.

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::ratio::ExactRatio;
use crate::sexagesimal::Sexagesimal;

/// Exponents `(alpha, beta, gamma)` with value `2^alpha · 3^beta · 5^gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegularFactorization {
    pub alpha: i32,
    pub beta: i32,
    pub gamma: i32,
}

impl RegularFactorization {
    pub fn value(&self) -> ExactRatio {
        let two = ExactRatio::from_integer(2).pow(self.alpha);
        let three = ExactRatio::from_integer(3).pow(self.beta);
        let five = ExactRatio::from_integer(5).pow(self.gamma);
        two * three * five
    }

    /// Factorization of a regular ratio; exponents may be negative.
    pub fn of_ratio(r: &ExactRatio) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::Zero);
        }
        if !r.is_regular() {
            return Err(Error::NotRegular(r.to_string()));
        }
        let n = strip(r.numer().unsigned_abs()).1;
        let d = strip(r.denom().unsigned_abs()).1;
        Ok(RegularFactorization {
            alpha: n[0] - d[0],
            beta: n[1] - d[1],
            gamma: n[2] - d[2],
        })
    }
}

fn strip(mut n: u128) -> (u128, [i32; 3]) {
    let mut exps = [0; 3];
    for (slot, p) in exps.iter_mut().zip([2u128, 3, 5]) {
        while n % p == 0 {
            n /= p;
            *slot += 1;
        }
    }
    (n, exps)
}

/// True when `n` is positive and has no prime factor other than 2, 3, 5.
pub fn is_regular(n: u128) -> bool {
    n != 0 && strip(n).0 == 1
}

/// The part of `n` made of the primes 2, 3 and 5.
pub fn regular_part(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    n / strip(n).0
}

/// Exponents of 2, 3, 5 in `q`, or [`Error::NotRegular`].
pub fn regular_factorization(q: u64) -> Result<RegularFactorization> {
    if q == 0 {
        return Err(Error::Zero);
    }
    let (rest, [alpha, beta, gamma]) = strip(q as u128);
    if rest != 1 {
        return Err(Error::NotRegular(q.to_string()));
    }
    Ok(RegularFactorization { alpha, beta, gamma })
}

/// All regular integers in `[1, limit]`, ascending.
pub fn regular_numbers_up_to(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p2 = 1u64;
    while p2 <= limit {
        let mut p3 = p2;
        while p3 <= limit {
            let mut p5 = p3;
            while p5 <= limit {
                out.push(p5);
                match p5.checked_mul(5) {
                    Some(v) => p5 = v,
                    None => break,
                }
            }
            match p3.checked_mul(3) {
                Some(v) => p3 = v,
                None => break,
            }
        }
        match p2.checked_mul(2) {
            Some(v) => p2 = v,
            None => break,
        }
    }
    out.sort_unstable();
    out
}

/// Exact finite expansion of `1/n` for regular `n`.
pub fn reciprocal(n: u64) -> Result<Sexagesimal> {
    regular_factorization(n)?;
    Sexagesimal::from_ratio(&ExactRatio::new(1, n as i128)?)
}

/// One line of a reciprocal table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocalEntry {
    pub n: u64,
    pub nbar: Sexagesimal,
}

impl ReciprocalEntry {
    pub fn new(n: u64) -> Result<Self> {
        Ok(ReciprocalEntry {
            n,
            nbar: reciprocal(n)?,
        })
    }
}

/// The standard table: regular numbers from 2 to 81 (1 21) with reciprocals.
pub fn standard_reciprocal_table() -> Vec<ReciprocalEntry> {
    regular_numbers_up_to(81)
        .into_iter()
        .filter(|&n| n >= 2)
        .map(|n| ReciprocalEntry::new(n).expect("regular by construction"))
        .collect()
}

/// Truncated lower and upper bounds on `1/n` for a non-regular `n`, with
/// `digits` fractional places. The bounds differ by one unit in the last place.
pub fn approximate_reciprocal(n: u64, digits: usize) -> Result<(Sexagesimal, Sexagesimal)> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if regular_factorization(n).is_ok() {
        return Err(Error::AlreadyRegular(n));
    }
    if digits == 0 {
        return Err(Error::InvalidToken("digit count must be at least 1".into()));
    }
    let exact = ExactRatio::new(1, n as i128)?;
    let lower = Sexagesimal::truncated(&exact, digits)?;
    let ulp = ExactRatio::new(1, 60i128.checked_pow(digits as u32).ok_or(Error::Overflow)?)?;
    let upper = Sexagesimal::from_ratio(&(lower.to_ratio()? + ulp))?;
    Ok((lower, upper))
}

/// The scribal shortcut for a non-regular `n`: rewrite `1/n` as
/// `k · 1/(k·n)` and replace `k·n` by its nearest regular neighbour
/// (the smaller one on a tie). Returns the neighbour and the approximation.
pub fn approximate_by_regular_neighbor(n: u64, k: u64) -> Result<(u64, Sexagesimal)> {
    if n == 0 || k == 0 {
        return Err(Error::Zero);
    }
    let target = n.checked_mul(k).ok_or(Error::Overflow)?;
    let mut below = target;
    while !is_regular(below as u128) {
        below -= 1;
    }
    let mut above = target;
    while !is_regular(above as u128) {
        above += 1;
    }
    let neighbor = if target - below <= above - target {
        below
    } else {
        above
    };
    let approx = ExactRatio::from_integer(k as i128) * ExactRatio::new(1, neighbor as i128)?;
    Ok((neighbor, Sexagesimal::from_ratio(&approx)?))
}

/// `m` with `m * m == n`, if `n` is a perfect square.
pub fn integer_sqrt_exact(n: u128) -> Option<u128> {
    let m = n.sqrt();
    (m.checked_mul(m) == Some(n)).then_some(m)
}
