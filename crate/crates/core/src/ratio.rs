//! Exact rational numbers in lowest terms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::sexagesimal::{integer_sqrt_exact, is_regular};

/// An exact fraction `numerator / denominator` with `denominator > 0` and
/// the two parts coprime.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(Ratio<i128>);

impl ExactRatio {
    pub fn new(numerator: i128, denominator: i128) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(ExactRatio(Ratio::new(numerator, denominator)))
    }

    pub fn from_integer(n: i128) -> Self {
        ExactRatio(Ratio::from_integer(n))
    }

    pub fn zero() -> Self {
        ExactRatio(Ratio::zero())
    }

    pub fn one() -> Self {
        ExactRatio(Ratio::one())
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, if the ratio is whole.
    pub fn to_integer(&self) -> Option<i128> {
        self.is_integer().then(|| self.numer())
    }

    pub fn abs(&self) -> Self {
        ExactRatio(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(ExactRatio(self.0.recip()))
    }

    pub fn pow(&self, exp: i32) -> Self {
        ExactRatio(self.0.pow(exp))
    }

    /// Both numerator and denominator are 2·3·5-smooth (zero is not regular).
    pub fn is_regular(&self) -> bool {
        !self.is_zero()
            && is_regular(self.numer().unsigned_abs())
            && is_regular(self.denom().unsigned_abs())
    }

    /// Exact square root of a non-negative ratio whose parts are both perfect squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.0.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = integer_sqrt_exact(u128::try_from(self.numer()).ok()?)?;
        let d = integer_sqrt_exact(u128::try_from(self.denom()).ok()?)?;
        Some(ExactRatio(Ratio::new(n as i128, d as i128)))
    }

    /// `gcd` of numerators over `lcm` of denominators; the largest ratio
    /// dividing both operands to an integer.
    pub fn gcd(&self, other: &Self) -> Self {
        let n = self.numer().gcd(&other.numer());
        let d = self.denom().lcm(&other.denom());
        ExactRatio(Ratio::new(n, d))
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRatio {
    type Err = Error;

    /// Parses `n` or `n/d` in decimal.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidToken(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse::<i128>().map_err(|_| bad())?;
                let d = d.trim().parse::<i128>().map_err(|_| bad())?;
                ExactRatio::new(n, d)
            }
            None => Ok(ExactRatio::from_integer(
                s.parse::<i128>().map_err(|_| bad())?,
            )),
        }
    }
}

impl From<i128> for ExactRatio {
    fn from(n: i128) -> Self {
        ExactRatio::from_integer(n)
    }
}

impl From<u64> for ExactRatio {
    fn from(n: u64) -> Self {
        ExactRatio::from_integer(n as i128)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRatio {
            type Output = ExactRatio;
            fn $method(self, rhs: ExactRatio) -> ExactRatio {
                ExactRatio(self.0.$method(rhs.0))
            }
        }

        impl $trait<&ExactRatio> for &ExactRatio {
            type Output = ExactRatio;
            fn $method(self, rhs: &ExactRatio) -> ExactRatio {
                ExactRatio(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactRatio {
    type Output = ExactRatio;
    fn neg(self) -> ExactRatio {
        ExactRatio(-self.0)
    }
}
