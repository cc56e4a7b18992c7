//! Coefficient types.
//!
//! Every algebraic structure in this crate is generic over a [`Scalar`]: any
//! type implementing [`num_traits::Num`] with negation. The exact workhorse
//! is [`BigRational`](num_rational::BigRational); [`Gf2`] carries mod-2
//! reductions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

/// Coefficient ring for polynomials, series and jets.
///
/// Division is only ever applied to nonzero pivots, so any field satisfies
/// the contract. Floating-point types technically qualify but every zero
/// test in this crate is exact.
pub trait Scalar:
    Num + Clone + Neg<Output = Self> + fmt::Debug + Send + Sync + 'static
{
    /// Embeds a machine integer.
    fn from_i64(value: i64) -> Self {
        let mut acc = Self::zero();
        let unit = if value < 0 { -Self::one() } else { Self::one() };
        let mut step = unit;
        let mut rest = value.unsigned_abs();
        // binary expansion keeps this cheap for large binomials
        while rest > 0 {
            if rest & 1 == 1 {
                acc = acc + step.clone();
            }
            step = step.clone() + step;
            rest >>= 1;
        }
        acc
    }
}

impl<T> Scalar for T where T: Num + Clone + Neg<Output = T> + fmt::Debug + Send + Sync + 'static {}

/// Parses an integer or `p/q` string into a rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(BigRational::new(num, den))
            }
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// The two-element field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2(bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);

    pub fn new(bit: bool) -> Self {
        Gf2(bit)
    }

    pub fn bit(self) -> bool {
        self.0
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Sub for Gf2 {
    type Output = Gf2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Div for Gf2 {
    type Output = Gf2;
    fn div(self, rhs: Gf2) -> Gf2 {
        assert!(rhs.0, "division by zero in GF(2)");
        self
    }
}

impl Rem for Gf2 {
    type Output = Gf2;
    fn rem(self, rhs: Gf2) -> Gf2 {
        assert!(rhs.0, "division by zero in GF(2)");
        Gf2::ZERO
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2::ZERO
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2::ONE
    }
}

impl Num for Gf2 {
    type FromStrRadixErr = ParseGf2Error;

    fn from_str_radix(text: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        let value = i64::from_str_radix(text.trim(), radix).map_err(|_| ParseGf2Error)?;
        Ok(Gf2(value.rem_euclid(2) == 1))
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseGf2Error;

impl fmt::Display for ParseGf2Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid GF(2) literal")
    }
}

impl std::error::Error for ParseGf2Error {}

impl FromStr for Gf2 {
    type Err = ParseGf2Error;
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        Gf2::from_str_radix(text, 10)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_i64_matches_repeated_addition() {
        for v in -20i64..=20 {
            let r = <BigRational as Scalar>::from_i64(v);
            assert_eq!(r, BigRational::from_integer(v.into()));
        }
        assert_eq!(<Gf2 as Scalar>::from_i64(7), Gf2::ONE);
        assert_eq!(<Gf2 as Scalar>::from_i64(-4), Gf2::ZERO);
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("-3/4"), Some(BigRational::new((-3).into(), 4.into())));
        assert_eq!(parse_rational("6/4"), Some(BigRational::new(3.into(), 2.into())));
        assert_eq!(parse_rational("12"), Some(BigRational::from_integer(12.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("0.5"), None);
    }

    #[test]
    fn gf2_field_axioms() {
        let all = [Gf2::ZERO, Gf2::ONE];
        for &a in &all {
            assert_eq!(a + a, Gf2::ZERO);
            assert_eq!(-a, a);
            for &b in &all {
                for &c in &all {
                    assert_eq!((a + b) * c, a * c + b * c);
                }
            }
        }
        assert_eq!(Gf2::ONE / Gf2::ONE, Gf2::ONE);
        assert_eq!("-3".parse::<Gf2>(), Ok(Gf2::ONE));
    }
}
