//! Exact rational helpers shared by every curvature kernel.

use std::str::FromStr;

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

/// All curvature values, masses and weights are carried as arbitrary
/// precision rationals.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"3"`, `"-2.50"`, `".5"`, `"1e-3"` or `"5/2"` into an exact rational.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let token = token.trim();
    if token.is_empty() {
        return None;
    }
    if let Some((n, d)) = token.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }

    let (mantissa, exponent) = match token.find(['e', 'E']) {
        Some(pos) => (&token[..pos], token[pos + 1..].parse::<i32>().ok()?),
        None => (token, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut numer = BigInt::from_str(&format!("0{whole}{frac}")).ok()?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Rational::from_integer(numer * num::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num::pow(ten, (-scale) as usize))
    };
    Some(value)
}

/// Exact `p/q` form, or just `p` for integers.
pub fn to_exact_string(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Fixed-point decimal rendering, rounding half away from zero. Computed on
/// the exact value so output never depends on float formatting.
pub fn to_decimal_string(value: &Rational, places: usize) -> String {
    let scale = num::pow(BigInt::from(10), places);
    let scaled = value.abs() * Rational::from_integer(scale.clone());
    let floor = scaled.floor();
    let rounded = if &scaled - &floor >= ratio(1, 2) {
        floor.to_integer() + BigInt::one()
    } else {
        floor.to_integer()
    };
    let (whole, frac) = rounded.div_rem(&scale);
    let sign = if value.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{whole}");
    }
    let frac = frac.to_string();
    format!("{sign}{whole}.{}{frac}", "0".repeat(places - frac.len()))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        if value.numer().sign() == Sign::Minus {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational("2.5"), Some(ratio(5, 2)));
        assert_eq!(parse_rational("-0.125"), Some(ratio(-1, 8)));
        assert_eq!(parse_rational(".5"), Some(ratio(1, 2)));
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational("1e2"), Some(int(100)));
        assert_eq!(parse_rational("25e-1"), Some(ratio(5, 2)));
        assert_eq!(parse_rational("10/4"), Some(ratio(5, 2)));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "abc", "1.2.3", "1/0", ".", "-", "1e", "0x10"] {
            assert_eq!(parse_rational(bad), None, "{bad:?}");
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal_string(&ratio(-1, 4), 6), "-0.250000");
        assert_eq!(to_decimal_string(&ratio(1, 3), 6), "0.333333");
        assert_eq!(to_decimal_string(&ratio(2, 3), 6), "0.666667");
        assert_eq!(to_decimal_string(&int(-1347), 6), "-1347.000000");
        assert_eq!(to_decimal_string(&ratio(-1, 10_000_000), 6), "0.000000");
        assert_eq!(to_decimal_string(&ratio(5, 2), 0), "3");
    }

    #[test]
    fn exact_rendering() {
        assert_eq!(to_exact_string(&ratio(-5, 4)), "-5/4");
        assert_eq!(to_exact_string(&int(7)), "7");
        assert_eq!(parse_rational(&to_exact_string(&ratio(-5, 4))), Some(ratio(-5, 4)));
    }

    #[test]
    fn lcm_of_denominators() {
        let vals = [ratio(1, 4), ratio(1, 6), int(2)];
        assert_eq!(common_denominator(vals.iter()), BigInt::from(12));
    }
}
