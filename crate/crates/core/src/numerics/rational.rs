use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact fraction of arbitrary-precision integers, always in lowest terms
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `num / den` in canonical form. Panics if `den == 0`; use
/// [`checked_div`] on untrusted input.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `10^exp` for any integer exponent.
pub fn pow10(exp: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10u32), exp.unsigned_abs() as usize);
    if exp >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Parses `p/q`, integer, decimal (`-1.25`) and scientific (`1e-21`,
/// `2.5E3`) literals into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let num = parse_rational(n).map_err(|_| bad())?;
        let den = parse_rational(d).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(num / den);
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let exp: i64 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let magnitude = BigInt::parse_bytes(all_digits.as_bytes(), 10).ok_or_else(bad)?;
    let value = Rational::from_integer(magnitude) * pow10(exponent - frac_part.len() as i64);
    Ok(if negative { -value } else { value })
}

/// Decimal rendering with `digits` fractional digits, truncated toward zero.
pub fn format_decimal(value: &Rational, digits: u32) -> String {
    let scaled = (value.abs() * pow10(digits as i64)).to_integer();
    let text = scaled.to_str_radix(10);
    let (int_part, frac_part) = if digits == 0 {
        (text, String::new())
    } else {
        let width = digits as usize + 1;
        let padded = format!("{text:0>width$}");
        let split = padded.len() - digits as usize;
        (padded[..split].to_string(), padded[split..].to_string())
    };
    let sign = if value.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Nearest `f64`, for plotting and diagnostics only.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(checked_div(&rat(1, 2), &rat(0, 1)), Err(Error::DivisionByZero));
        assert_eq!(parse_rational("3/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn parses_all_literal_forms() {
        assert_eq!(parse_rational("22/7").unwrap(), rat(22, 7));
        assert_eq!(parse_rational("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rational("1e-21").unwrap(), pow10(-21));
        assert_eq!(parse_rational("2.5E3").unwrap(), rat(2500, 1));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("+7").unwrap(), rat(7, 1));
        assert_eq!(parse_rational("1.5/0.5").unwrap(), rat(3, 1));
        for bad in ["", "abc", "1..2", "1e", "-", "1/2/x", "."] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn decimal_rendering_truncates_toward_zero() {
        assert_eq!(format_decimal(&rat(22, 7), 5), "3.14285");
        assert_eq!(format_decimal(&rat(-22, 7), 5), "-3.14285");
        assert_eq!(format_decimal(&rat(1, 1000), 2), "0.00");
        assert_eq!(format_decimal(&rat(-1, 1000), 2), "0.00");
        assert_eq!(format_decimal(&rat(7, 2), 0), "3");
        assert_eq!(format_decimal(&rat(1, 20), 3), "0.050");
    }

    #[test]
    fn float_conversion() {
        assert!((to_f64(&rat(1, 3)) - 1.0 / 3.0).abs() < 1e-16);
    }
}
