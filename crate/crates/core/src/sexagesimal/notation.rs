//! Base-60 numerals: representation, parsing and formatting.
//!
//! Text grammar:
//!
//! ```text
//! [-] digit ( ' ' digit )* [ ';' digit ( ' ' digit )* ]
//! ```
//!
//! where `digit` is one or two decimal characters with value at most 59.
//! `[` ... `]` spans mark restored (extrapolated) digits and may open or
//! close anywhere, including inside a token (`5[3]`); a digit is flagged
//! when any of its characters is bracketed. Two consecutive spaces denote
//! an empty place, read as a zero digit.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ratio::ExactRatio;
use crate::sexagesimal::is_regular;

const BASE: i128 = 60;

/// Rendering convention for [`Sexagesimal::format`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    /// Explicit `;` before the fractional digits, digits after the first
    /// padded to two characters: `1;59 00 15`.
    #[default]
    Canonical,
    /// Floating notation: no fraction mark, leading and trailing zero
    /// places dropped: `1 15` for 1/48.
    Tablet,
}

/// A signed base-60 numeral with an explicit fraction point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sexagesimal {
    negative: bool,
    digits: Vec<u8>,
    frac_len: usize,
    extrapolated: Vec<bool>,
}

impl Sexagesimal {
    /// Builds a numeral from its digits, most significant first, with the
    /// last `frac_len` digits fractional.
    pub fn from_digits(negative: bool, digits: Vec<u8>, frac_len: usize) -> Result<Self> {
        let flags = vec![false; digits.len()];
        Self::from_parts(negative, digits, frac_len, flags)
    }

    fn from_parts(
        negative: bool,
        mut digits: Vec<u8>,
        frac_len: usize,
        mut extrapolated: Vec<bool>,
    ) -> Result<Self> {
        if let Some(&d) = digits.iter().find(|&&d| d > 59) {
            return Err(Error::DigitOutOfRange(d as u32));
        }
        if frac_len > digits.len() {
            return Err(Error::InvalidToken(format!(
                "fraction length {frac_len} exceeds {} digits",
                digits.len()
            )));
        }
        if digits.len() == frac_len {
            digits.insert(0, 0);
            extrapolated.insert(0, false);
        }
        let int_len = digits.len() - frac_len;
        if int_len > 1 && digits[0] == 0 {
            return Err(Error::LeadingZero(format!("{digits:?}")));
        }
        let negative = negative && digits.iter().any(|&d| d != 0);
        Ok(Sexagesimal {
            negative,
            digits,
            frac_len,
            extrapolated,
        })
    }

    pub fn zero() -> Self {
        Sexagesimal {
            negative: false,
            digits: vec![0],
            frac_len: 0,
            extrapolated: vec![false],
        }
    }

    pub fn from_integer(n: u128) -> Self {
        let mut digits = Vec::new();
        let mut rest = n;
        while rest > 0 {
            digits.push((rest % 60) as u8);
            rest /= 60;
        }
        if digits.is_empty() {
            digits.push(0);
        }
        digits.reverse();
        let flags = vec![false; digits.len()];
        Sexagesimal {
            negative: false,
            digits,
            frac_len: 0,
            extrapolated: flags,
        }
    }

    /// Exact finite expansion of `value`; fails when the reduced
    /// denominator is not regular.
    pub fn from_ratio(value: &ExactRatio) -> Result<Self> {
        let den = value.denom();
        if !is_regular(den as u128) {
            return Err(Error::NonTerminating(value.to_string()));
        }
        let negative = value.numer() < 0;
        let num = value.numer().abs();
        let mut out = Self::from_integer((num / den) as u128);
        let mut rem = num % den;
        while rem != 0 {
            rem = rem.checked_mul(BASE).ok_or(Error::Overflow)?;
            out.digits.push((rem / den) as u8);
            out.extrapolated.push(false);
            out.frac_len += 1;
            rem %= den;
        }
        out.negative = negative && value.numer() != 0;
        Ok(out)
    }

    /// The value of `value` truncated toward zero after `frac_len`
    /// fractional places. Works for any ratio, regular or not.
    pub fn truncated(value: &ExactRatio, frac_len: usize) -> Result<Self> {
        let den = value.denom();
        let negative = value.numer() < 0;
        let num = value.numer().abs();
        let mut out = Self::from_integer((num / den) as u128);
        let mut rem = num % den;
        for _ in 0..frac_len {
            rem = rem.checked_mul(BASE).ok_or(Error::Overflow)?;
            out.digits.push((rem / den) as u8);
            out.extrapolated.push(false);
            out.frac_len += 1;
            rem %= den;
        }
        out.negative = negative && out.digits.iter().any(|&d| d != 0);
        Ok(out)
    }

    pub fn to_ratio(&self) -> Result<ExactRatio> {
        let mut acc: i128 = 0;
        for &d in &self.digits {
            acc = acc
                .checked_mul(BASE)
                .and_then(|a| a.checked_add(d as i128))
                .ok_or(Error::Overflow)?;
        }
        let scale = checked_pow60(self.frac_len)?;
        let v = ExactRatio::new(acc, scale)?;
        Ok(if self.negative { -v } else { v })
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn frac_len(&self) -> usize {
        self.frac_len
    }

    pub fn integer_digits(&self) -> &[u8] {
        &self.digits[..self.digits.len() - self.frac_len]
    }

    pub fn fractional_digits(&self) -> &[u8] {
        &self.digits[self.digits.len() - self.frac_len..]
    }

    pub fn extrapolated(&self) -> &[bool] {
        &self.extrapolated
    }

    pub fn has_extrapolated(&self) -> bool {
        self.extrapolated.iter().any(|&f| f)
    }

    /// Same numeral with the given restoration flags.
    pub fn with_extrapolated(mut self, flags: Vec<bool>) -> Result<Self> {
        if flags.len() != self.digits.len() {
            return Err(Error::InvalidToken(format!(
                "{} flags for {} digits",
                flags.len(),
                self.digits.len()
            )));
        }
        self.extrapolated = flags;
        Ok(self)
    }

    /// Same value with every restoration flag cleared.
    pub fn without_flags(&self) -> Self {
        let mut out = self.clone();
        out.extrapolated.iter_mut().for_each(|f| *f = false);
        out
    }

    /// Moves the fraction point so that `int_len` digits are integral,
    /// keeping the digit string. Used to read tablet numerals, which carry
    /// no fraction mark.
    pub fn with_integer_len(&self, int_len: usize) -> Result<Self> {
        if int_len == 0 || int_len > self.digits.len() {
            return Err(Error::InvalidToken(format!(
                "cannot place fraction point after {int_len} of {} digits",
                self.digits.len()
            )));
        }
        Self::from_parts(
            self.negative,
            self.digits.clone(),
            self.digits.len() - int_len,
            self.extrapolated.clone(),
        )
    }

    /// Digits in floating notation: leading and trailing zero places dropped.
    pub fn significant_digits(&self) -> &[u8] {
        let start = self.digits.iter().position(|&d| d != 0);
        let end = self.digits.iter().rposition(|&d| d != 0);
        match (start, end) {
            (Some(s), Some(e)) => &self.digits[s..=e],
            _ => &[],
        }
    }

    /// Equality up to a power of sixty, as a scribe would read two numerals.
    pub fn floating_eq(&self, other: &Self) -> bool {
        self.negative == other.negative && self.significant_digits() == other.significant_digits()
    }

    /// The significant digits read as an integer.
    pub fn significand(&self) -> Result<u128> {
        self.significant_digits().iter().try_fold(0u128, |acc, &d| {
            acc.checked_mul(60)
                .and_then(|a| a.checked_add(d as u128))
                .ok_or(Error::Overflow)
        })
    }

    /// Drops digits flagged as restored when an attested digit precedes them
    /// and their value is zero: the empty places a scribe left unwritten.
    /// Restorations at the broken edge are kept.
    pub fn without_restored_gaps(&self) -> Self {
        let mut digits = Vec::with_capacity(self.digits.len());
        let mut flags = Vec::with_capacity(self.digits.len());
        let mut frac_len = self.frac_len;
        let int_len = self.digits.len() - self.frac_len;
        let mut seen_attested = false;
        for (i, (&d, &f)) in self.digits.iter().zip(&self.extrapolated).enumerate() {
            if f && d == 0 && seen_attested {
                if i >= int_len {
                    frac_len -= 1;
                }
                continue;
            }
            seen_attested |= !f;
            digits.push(d);
            flags.push(f);
        }
        Sexagesimal {
            negative: self.negative,
            digits,
            frac_len,
            extrapolated: flags,
        }
    }

    /// Digits after dropping the leading restored run, as they survive on a
    /// broken tablet.
    pub fn attested_tail(&self) -> &[u8] {
        let start = self
            .extrapolated
            .iter()
            .position(|&f| !f)
            .unwrap_or(self.digits.len());
        &self.digits[start..]
    }

    pub fn format(&self, style: Style) -> String {
        match style {
            Style::Canonical => self.render(0, self.digits.len(), true),
            Style::Tablet => {
                let start = self.digits.iter().position(|&d| d != 0);
                let end = self.digits.iter().rposition(|&d| d != 0);
                match (start, end) {
                    (Some(s), Some(e)) => self.render(s, e + 1, false),
                    _ => "0".to_string(),
                }
            }
        }
    }

    fn render(&self, start: usize, end: usize, fraction_mark: bool) -> String {
        let int_len = self.digits.len() - self.frac_len;
        let mut out = String::new();
        if self.negative {
            out.push('-');
        }
        for i in start..end {
            if i > start {
                out.push(if fraction_mark && i == int_len {
                    ';'
                } else {
                    ' '
                });
            }
            let flagged = self.extrapolated[i];
            if flagged && (i == start || !self.extrapolated[i - 1]) {
                out.push('[');
            }
            if i == start {
                out.push_str(&self.digits[i].to_string());
            } else {
                out.push_str(&format!("{:02}", self.digits[i]));
            }
            if flagged && (i + 1 == end || !self.extrapolated[i + 1]) {
                out.push(']');
            }
        }
        out
    }
}

fn checked_pow60(exp: usize) -> Result<i128> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow)?;
    BASE.checked_pow(exp).ok_or(Error::Overflow)
}

impl fmt::Display for Sexagesimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Style::Canonical))
    }
}

impl fmt::Debug for Sexagesimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sexagesimal({})", self.format(Style::Canonical))
    }
}

impl FromStr for Sexagesimal {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_sexagesimal(text)
    }
}

/// Parses the sexagesimal text grammar described in the module docs.
pub fn parse_sexagesimal(text: &str) -> Result<Sexagesimal> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (negative, body) = match trimmed
        .strip_prefix('-')
        .or_else(|| trimmed.strip_prefix('−'))
    {
        Some(rest) => (true, rest.trim_start()),
        None => (false, trimmed),
    };

    let mut tokens: Vec<(String, bool)> = Vec::new();
    let mut frac_at: Option<usize> = None;
    let mut cur = String::new();
    let mut cur_flag = false;
    let mut bracket_open = false;
    let mut prev: Option<char> = None;

    let flush = |cur: &mut String, cur_flag: &mut bool, tokens: &mut Vec<(String, bool)>| {
        if !cur.is_empty() {
            tokens.push((std::mem::take(cur), *cur_flag));
        }
        *cur_flag = false;
    };

    for ch in body.chars() {
        match ch {
            '[' => {
                if bracket_open {
                    return Err(Error::UnbalancedBrackets(text.to_string()));
                }
                bracket_open = true;
            }
            ']' => {
                if !bracket_open {
                    return Err(Error::UnbalancedBrackets(text.to_string()));
                }
                bracket_open = false;
            }
            '0'..='9' => {
                cur.push(ch);
                cur_flag |= bracket_open;
            }
            ' ' => {
                if !cur.is_empty() {
                    flush(&mut cur, &mut cur_flag, &mut tokens);
                } else if prev == Some(' ') && !tokens.is_empty() {
                    // an empty place between two separators
                    tokens.push(("0".to_string(), false));
                }
            }
            ';' => {
                flush(&mut cur, &mut cur_flag, &mut tokens);
                if frac_at.is_some() {
                    return Err(Error::MultipleFractionMarks(text.to_string()));
                }
                if tokens.is_empty() {
                    return Err(Error::InvalidToken(text.to_string()));
                }
                frac_at = Some(tokens.len());
            }
            other => return Err(Error::InvalidToken(other.to_string())),
        }
        prev = Some(ch);
    }
    flush(&mut cur, &mut cur_flag, &mut tokens);
    if bracket_open {
        return Err(Error::UnbalancedBrackets(text.to_string()));
    }
    if tokens.is_empty() {
        return Err(Error::EmptyInput);
    }
    if frac_at == Some(tokens.len()) {
        return Err(Error::InvalidToken(text.to_string()));
    }

    let mut digits = Vec::with_capacity(tokens.len());
    let mut flags = Vec::with_capacity(tokens.len());
    for (tok, flag) in tokens {
        if tok.len() > 2 {
            return Err(Error::InvalidToken(tok));
        }
        let value: u32 = tok.parse().map_err(|_| Error::InvalidToken(tok.clone()))?;
        if value > 59 {
            return Err(Error::DigitOutOfRange(value));
        }
        digits.push(value as u8);
        flags.push(flag);
    }
    let frac_len = frac_at.map_or(0, |k| digits.len() - k);
    if digits.len() - frac_len > 1 && digits[0] == 0 {
        return Err(Error::LeadingZero(text.to_string()));
    }
    Sexagesimal::from_parts(negative, digits, frac_len, flags)
}

/// A possibly repeating base-60 expansion: `integer ; preperiod (period)*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub negative: bool,
    pub integer: Sexagesimal,
    pub preperiod: Vec<u8>,
    pub period: Vec<u8>,
}

impl Expansion {
    pub fn terminates(&self) -> bool {
        self.period.is_empty()
    }
}

/// Long division in base 60, detecting the repeating block.
pub fn expand(value: &ExactRatio) -> Result<Expansion> {
    let den = value.denom();
    let num = value.numer().abs();
    let integer = Sexagesimal::from_integer((num / den) as u128);
    let mut rem = num % den;
    let mut seen = std::collections::HashMap::new();
    let mut digits = Vec::new();
    while rem != 0 {
        if let Some(&start) = seen.get(&rem) {
            let period = digits.split_off(start);
            return Ok(Expansion {
                negative: value.numer() < 0,
                integer,
                preperiod: digits,
                period,
            });
        }
        seen.insert(rem, digits.len());
        rem = rem.checked_mul(BASE).ok_or(Error::Overflow)?;
        digits.push((rem / den) as u8);
        rem %= den;
    }
    Ok(Expansion {
        negative: value.numer() < 0,
        integer,
        preperiod: digits,
        period: Vec::new(),
    })
}
