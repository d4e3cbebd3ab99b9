//! Exact rational arithmetic.
//!
//! Every probability, quantile parameter, and solver coefficient in this
//! crate is a [`Rational`]. Floating point is forbidden throughout: the
//! representative definition mixes `<=` and `<` on cumulative sums, so a
//! quantile that lands exactly on a cumulative sum must be resolved
//! exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number in canonical form
/// (positive denominator, reduced).
pub type Rational = BigRational;

/// Shorthand constructor from an integer numerator/denominator pair.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The rational zero.
pub fn zero() -> Rational {
    Rational::zero()
}

/// The rational one.
pub fn one() -> Rational {
    Rational::one()
}

/// Parses strings like `"2/3"`, `"0"`, or `"1"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let num: BigInt = n
                .trim()
                .parse()
                .map_err(|_| format!("bad numerator in {s:?}"))?;
            let den: BigInt = d
                .trim()
                .parse()
                .map_err(|_| format!("bad denominator in {s:?}"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| format!("bad integer in {s:?}"))?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// Formats a rational as `"n"` or `"n/d"`, the same syntax `parse_rational`
/// accepts.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `true` iff `r` lies in the closed unit interval.
pub fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= Rational::one()
}

/// Ceiling of a nonnegative rational as usize.
pub fn ceil_to_usize(r: &Rational) -> usize {
    assert!(!r.is_negative(), "ceil_to_usize on negative rational");
    let c = r.ceil();
    let (digits_sign, digits) = c.numer().to_u64_digits();
    match digits_sign {
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => {
            assert!(digits.len() == 1, "rational too large for usize");
            digits[0] as usize
        }
        num_bigint::Sign::Minus => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["2/3", "0", "1", "-5/7", "11/12"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn unit_interval_bounds() {
        assert!(in_unit_interval(&rat(0, 1)));
        assert!(in_unit_interval(&rat(1, 1)));
        assert!(in_unit_interval(&rat(7, 12)));
        assert!(!in_unit_interval(&rat(3, 2)));
        assert!(!in_unit_interval(&rat(-1, 12)));
    }

    #[test]
    fn ceil_conversion() {
        assert_eq!(ceil_to_usize(&rat(4, 3)), 2);
        assert_eq!(ceil_to_usize(&rat(2, 1)), 2);
        assert_eq!(ceil_to_usize(&rat(0, 1)), 0);
    }
}
