//! Old Babylonian approximations of the square root of two.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sexagesimal::Sexagesimal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sqrt2Variant {
    /// 1;30
    Rough,
    /// 1;25
    Coarse,
    /// 1;24 51 10, as on YBC 7289
    Fine,
}

impl Sqrt2Variant {
    pub const ALL: [Sqrt2Variant; 3] = [
        Sqrt2Variant::Rough,
        Sqrt2Variant::Coarse,
        Sqrt2Variant::Fine,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Sqrt2Variant::Rough => "rough",
            Sqrt2Variant::Coarse => "coarse",
            Sqrt2Variant::Fine => "fine",
        }
    }
}

impl FromStr for Sqrt2Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rough" => Ok(Sqrt2Variant::Rough),
            "coarse" => Ok(Sqrt2Variant::Coarse),
            "fine" => Ok(Sqrt2Variant::Fine),
            other => Err(Error::InvalidToken(other.to_string())),
        }
    }
}

pub fn sqrt2_constant(variant: Sqrt2Variant) -> Sexagesimal {
    let digits = match variant {
        Sqrt2Variant::Rough => vec![1, 30],
        Sqrt2Variant::Coarse => vec![1, 25],
        Sqrt2Variant::Fine => vec![1, 24, 51, 10],
    };
    let frac = digits.len() - 1;
    Sexagesimal::from_digits(false, digits, frac).expect("valid constant")
}

/// Diagonal of a square with the given side, using the fine constant.
pub fn diagonal_of_square(side: &Sexagesimal) -> Result<Sexagesimal> {
    let s = side.to_ratio()?;
    if !s.is_positive() {
        return Err(Error::Degenerate(
            "side of a square must be positive".into(),
        ));
    }
    let d = s * sqrt2_constant(Sqrt2Variant::Fine).to_ratio()?;
    Sexagesimal::from_ratio(&d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        assert_eq!(sqrt2_constant(Sqrt2Variant::Fine).to_string(), "1;24 51 10");
        assert_eq!(sqrt2_constant(Sqrt2Variant::Coarse).to_string(), "1;25");
        assert_eq!(sqrt2_constant(Sqrt2Variant::Rough).to_string(), "1;30");
    }

    #[test]
    fn ybc_7289_diagonal() {
        let d = |s: &str| diagonal_of_square(&s.parse().unwrap()).unwrap().to_string();
        assert_eq!(d("0;30"), "0;42 25 35");
        assert_eq!(d("1"), "1;24 51 10");
        assert_eq!(d("2"), "2;49 42 20");
        assert!(diagonal_of_square(&"0".parse().unwrap()).is_err());
    }
}
