//! Exact rational numbers and the decimal text format used by every input file.
//!
//! Decimal strings are the only accepted numeric syntax on the data side:
//! an optional sign, digits, and an optional fractional part. Scientific
//! notation is rejected so that every value has one exact reading.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberError {
    #[error("empty number")]
    Empty,
    #[error("invalid decimal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parse a plain decimal such as `-12.375`.
pub fn parse_decimal(text: &str) -> Result<Rational, NumberError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(NumberError::Empty);
    }
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(NumberError::Invalid(s.to_string()));
    }
    let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(NumberError::Invalid(s.to_string()));
    }
    let mut digits = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    let numer: BigInt = digits
        .parse()
        .map_err(|_| NumberError::Invalid(s.to_string()))?;
    let denom = num_traits::pow(BigInt::from(10u8), frac_part.len());
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

/// Parse either a decimal or an exact fraction `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational, NumberError> {
    let s = text.trim();
    match s.split_once('/') {
        None => parse_decimal(s),
        Some((n, d)) => {
            let numer = parse_decimal(n)?;
            let denom = parse_decimal(d)?;
            if denom.is_zero() {
                return Err(NumberError::ZeroDenominator(s.to_string()));
            }
            Ok(numer / denom)
        }
    }
}

/// Render exactly: a terminating decimal when the reduced denominator has
/// only factors 2 and 5, otherwise `p/q`.
pub fn format_rational(value: &Rational) -> String {
    let denom = value.denom().clone();
    let mut rest = denom.clone();
    let two = BigInt::from(2u8);
    let five = BigInt::from(5u8);
    let (mut twos, mut fives) = (0usize, 0usize);
    while rest.is_even() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return alloc::format!("{}/{}", value.numer(), denom);
    }
    let places = twos.max(fives);
    let scale = num_traits::pow(BigInt::from(10u8), places);
    let scaled = value.numer() * (&scale / &denom);
    let negative = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if places == 0 {
        out.push_str(&digits);
        return out;
    }
    let padded = if digits.len() <= places {
        let mut p = "0".repeat(places + 1 - digits.len());
        p.push_str(&digits);
        p
    } else {
        digits
    };
    let split = padded.len() - places;
    out.push_str(&padded[..split]);
    out.push('.');
    out.push_str(&padded[split..]);
    out
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Rational extended with both infinities; used for interval endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtRational {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtRational {
    /// Accepts what [`parse_rational`] does plus `inf`, `+inf`, `-inf` (case-insensitive).
    pub fn parse(text: &str) -> Result<Self, NumberError> {
        let s = text.trim();
        match s.to_ascii_lowercase().as_str() {
            "inf" | "+inf" | "infinity" | "+infinity" => Ok(ExtRational::PosInf),
            "-inf" | "-infinity" => Ok(ExtRational::NegInf),
            _ if s.starts_with('\u{2212}') => match &s['\u{2212}'.len_utf8()..] {
                "inf" | "∞" => Ok(ExtRational::NegInf),
                rest => parse_rational(rest).map(|v| ExtRational::Finite(-v)),
            },
            "∞" | "+∞" => Ok(ExtRational::PosInf),
            "-∞" => Ok(ExtRational::NegInf),
            _ => parse_rational(s).map(ExtRational::Finite),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            ExtRational::NegInf => 0,
            ExtRational::Finite(_) => 1,
            ExtRational::PosInf => 2,
        }
    }
}

impl From<Rational> for ExtRational {
    fn from(value: Rational) -> Self {
        ExtRational::Finite(value)
    }
}

impl From<i64> for ExtRational {
    fn from(value: i64) -> Self {
        ExtRational::Finite(Rational::from_integer(value.into()))
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::NegInf => f.write_str("-inf"),
            ExtRational::PosInf => f.write_str("inf"),
            ExtRational::Finite(v) => f.write_str(&format_rational(v)),
        }
    }
}

/// `num / den` as an exact rational; test and fixture helper.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_decimals() {
        assert_eq!(parse_decimal("15").unwrap(), ratio(15, 1));
        assert_eq!(parse_decimal("-0.125").unwrap(), ratio(-1, 8));
        assert_eq!(parse_decimal(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_decimal("2.").unwrap(), ratio(2, 1));
    }

    #[test]
    fn rejects_scientific_and_junk() {
        assert!(parse_decimal("1e3").is_err());
        assert!(parse_decimal("1.2.3").is_err());
        assert!(parse_decimal("").is_err());
        assert!(parse_decimal("-").is_err());
        assert!(parse_decimal(".").is_err());
    }

    #[test]
    fn fractions() {
        assert_eq!(parse_rational("3/2").unwrap(), ratio(3, 2));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn formats_exactly() {
        assert_eq!(format_rational(&ratio(3, 2)), "1.5");
        assert_eq!(format_rational(&ratio(-1, 8)), "-0.125");
        assert_eq!(format_rational(&ratio(7, 1)), "7");
        assert_eq!(format_rational(&ratio(1, 3)), "1/3");
        assert_eq!(format_rational(&ratio(1, 100)), "0.01");
    }

    #[test]
    fn extended_order() {
        let a = ExtRational::parse("-inf").unwrap();
        let b = ExtRational::parse("10").unwrap();
        let c = ExtRational::parse("inf").unwrap();
        assert!(a < b && b < c);
        assert_eq!(ExtRational::parse("−inf").unwrap(), ExtRational::NegInf);
        assert_eq!(ExtRational::parse("INF").unwrap(), ExtRational::PosInf);
    }

    proptest::proptest! {
        #[test]
        fn format_then_parse_is_identity(n in -1_000_000i64..1_000_000, k in 0u32..6, fives in proptest::bool::ANY) {
            let den = if fives { 5i64.pow(k) } else { 2i64.pow(k) };
            let v = ratio(n, den);
            let text = format_rational(&v);
            proptest::prop_assert_eq!(parse_rational(&text).unwrap(), v);
        }
    }
}
