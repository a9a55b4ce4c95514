use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction, always held in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`; panics when `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::format("zero denominator"));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn pow(&self, exp: i32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    /// Nearest integer, exact halves rounded away from zero.
    pub fn round_half_away(&self) -> BigInt {
        self.0.round().to_integer()
    }

    /// Positive integer square root when `self` is the square of a positive
    /// integer.
    pub fn positive_integer_sqrt(&self) -> Option<BigInt> {
        if !self.is_integer() || self.numer().sign() != Sign::Plus {
            return None;
        }
        let n = self.numer();
        let root = n.sqrt();
        (&root * &root == *n).then_some(root)
    }

    /// Stored form is canonical: lowest terms, positive denominator, zero as 0/1.
    pub fn is_canonical(&self) -> bool {
        let (n, d) = (self.numer(), self.denom());
        d.is_positive() && n.gcd(d).is_one() && (!n.is_zero() || d.is_one())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Fixed-point decimal text with `places` fractional digits, rounded half
    /// away from zero.
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = BigInt::from(10u32).pow(places);
        let scaled = (&self.0 * BigRational::from_integer(scale.clone()))
            .round()
            .to_integer();
        let negative = scaled.is_negative();
        let (int, frac) = scaled.abs().div_rem(&scale);
        let sign = if negative { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac:0>width$}", width = places as usize)
        }
    }

    /// Exact value of a plain decimal literal such as `-67.5` or `0.003`.
    pub fn from_decimal(text: &str) -> Result<Self> {
        let bad = || Error::format(format!("invalid decimal {text:?}"));
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if int.is_empty() || !int.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if !frac.bytes().all(|b| b.is_ascii_digit()) || body.ends_with('.') {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let value = Rational(BigRational::new(digits, scale));
        Ok(if negative { -value } else { value })
    }
}

/// Canonical text form: `num/den` with `den > 1`, or bare `num`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_canonical_int(text: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match text.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => text,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if digits == "0" && text.starts_with('-') {
        return None;
    }
    text.parse().ok()
}

/// Strict parser: accepts only the canonical text form, so that every value
/// has exactly one spelling.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |why: &str| Error::format(format!("invalid rational {text:?}: {why}"));
        match text.split_once('/') {
            None => parse_canonical_int(text, true)
                .map(|n| Rational(BigRational::from_integer(n)))
                .ok_or_else(|| bad("not a canonical integer")),
            Some((n, d)) => {
                let n = parse_canonical_int(n, true).ok_or_else(|| bad("bad numerator"))?;
                let d = parse_canonical_int(d, false).ok_or_else(|| bad("bad denominator"))?;
                if d <= BigInt::one() {
                    return Err(bad("denominator must exceed 1"));
                }
                if !n.gcd(&d).is_one() {
                    return Err(bad("not in lowest terms"));
                }
                Ok(Rational(BigRational::new_raw(n, d)))
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::integer(n.into())
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::integer(n.into())
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by zero panics, as for the underlying ratio type; callers check first.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text_form() {
        assert_eq!(Rational::new(6, 4).to_string(), "3/2");
        assert_eq!(Rational::new(-42, 5).to_string(), "-42/5");
        assert_eq!(Rational::new(10, -5).to_string(), "-2");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn strict_parse_rejects_non_canonical_spellings() {
        for bad in ["2/4", "1/1", "3/-2", "-0", "007", "+1", "1/0", "", "1/", "/2", "1.5", " 1"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} accepted");
        }
        assert_eq!("-135/2".parse::<Rational>().unwrap(), Rational::new(-135, 2));
        assert_eq!("0".parse::<Rational>().unwrap(), Rational::zero());
    }

    #[test]
    fn decimals() {
        assert_eq!(Rational::from_decimal("8.40").unwrap(), Rational::new(42, 5));
        assert_eq!(Rational::from_decimal("-0.15").unwrap(), Rational::new(-3, 20));
        assert!(Rational::from_decimal("8.40)").is_err());
        assert!(Rational::from_decimal("1.").is_err());
        assert_eq!(Rational::new(3, 5).to_decimal(2), "0.60");
        assert_eq!(Rational::new(-135, 2).to_decimal(2), "-67.50");
        assert_eq!(Rational::new(-1, 200).to_decimal(2), "-0.01");
        assert_eq!(Rational::new(-1, 1000).to_decimal(2), "0.00");
    }

    #[test]
    fn rounding_halves_away_from_zero() {
        assert_eq!(Rational::new(53, 2).round_half_away(), BigInt::from(27));
        assert_eq!(Rational::new(-1, 2).round_half_away(), BigInt::from(-1));
        assert_eq!(Rational::new(5, 4).round_half_away(), BigInt::from(1));
    }

    #[test]
    fn integer_square_roots() {
        assert_eq!(Rational::integer(729).positive_integer_sqrt(), Some(BigInt::from(27)));
        assert_eq!(Rational::integer(728).positive_integer_sqrt(), None);
        assert_eq!(Rational::zero().positive_integer_sqrt(), None);
        assert_eq!(Rational::new(1, 4).positive_integer_sqrt(), None);
    }
}
