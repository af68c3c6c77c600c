//! Exact scalar abstraction used by the constants, bounds and reducer ledgers.
//!
//! Everything that touches the constants `a`, `b` is generic over
//! [`ExactScalar`]. Floating point types deliberately do not implement it:
//! tightness and the ledger identity are equalities, and they only mean
//! something under exact arithmetic.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An ordered field with exact arithmetic and integer rounding.
pub trait ExactScalar:
    Clone + Ord + Debug + Display + FromStr + Num + Signed + FromPrimitive + Send + Sync
{
    /// `num / den`, reduced. Panics if `den == 0`.
    fn ratio(num: i64, den: i64) -> Self;

    fn from_count(n: usize) -> Self {
        Self::from_u64(n as u64).expect("count fits the scalar type")
    }

    /// Smallest integer `>= self`.
    fn ceil(&self) -> Self;

    /// Largest integer `<= self`.
    fn floor(&self) -> Self;

    fn is_integer(&self) -> bool;

    /// The value as `i64` if it is an integer that fits.
    fn to_integer_i64(&self) -> Option<i64>;

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> ExactScalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Debug
        + Display
        + FromStr
        + Send
        + Sync,
    Ratio<T>: FromPrimitive + FromStr,
{
    fn ratio(num: i64, den: i64) -> Self {
        let num = T::from_i64(num).expect("numerator fits");
        let den = T::from_i64(den).expect("denominator fits");
        Ratio::new(num, den)
    }

    fn ceil(&self) -> Self {
        Ratio::ceil(self)
    }

    fn floor(&self) -> Self {
        Ratio::floor(self)
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn to_integer_i64(&self) -> Option<i64> {
        if Ratio::is_integer(self) {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

/// Parse `"p/q"`, `"p"` or `"-p/q"` into a reduced scalar.
pub fn parse_scalar<T: ExactScalar>(text: &str) -> Option<T> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: i64 = num.parse().ok()?;
    let den: i64 = den.parse().ok()?;
    if den == 0 {
        return None;
    }
    Some(T::ratio(num, den))
}

/// Render as a reduced fraction, `"81/17"`, or a bare integer.
pub fn fraction<T: ExactScalar>(x: &T) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigRational, Rational};

    #[test]
    fn ratios_are_reduced() {
        let x = Rational::ratio(6, 34);
        assert_eq!(*x.numer(), 3);
        assert_eq!(*x.denom(), 17);
        let y = Rational::ratio(3, -6);
        assert_eq!(*y.denom(), 2);
        assert_eq!(*y.numer(), -1);
    }

    #[test]
    fn rounding() {
        let x = Rational::ratio(81, 17);
        assert_eq!(ExactScalar::ceil(&x), Rational::from_integer(5));
        assert_eq!(ExactScalar::floor(&x), Rational::from_integer(4));
        assert_eq!(ExactScalar::ceil(&Rational::ratio(-1, 2)), Rational::from_integer(0));
        assert_eq!(Rational::from_integer(7).to_integer_i64(), Some(7));
        assert_eq!(x.to_integer_i64(), None);
    }

    #[test]
    fn parse_and_print() {
        let x: Rational = parse_scalar("19/34").unwrap();
        assert_eq!(fraction(&x), "19/34");
        let y: BigRational = parse_scalar("-4/2").unwrap();
        assert_eq!(fraction(&y), "-2");
        assert!(parse_scalar::<Rational>("1/0").is_none());
        assert!(parse_scalar::<Rational>("x").is_none());
    }
}
