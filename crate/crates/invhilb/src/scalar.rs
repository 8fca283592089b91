//! Coefficient fields.
//!
//! Everything in the crate is generic over [`Field`], which is blanket
//! implemented for any `num-traits` number type whose reference operators are
//! available. Exact work uses [`Rational`]; `f64` also satisfies the bound,
//! which is handy for quick numerical evaluation but is never used for
//! verification.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, NumOps, One};

/// Exact rational numbers, always stored in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

/// A commutative field with by-reference arithmetic.
pub trait Field: Num + FromPrimitive + PartialOrd + Clone + Neg<Output = Self> + Debug + Display + Send + Sync + 'static {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn div_ref(&self, o: &Self) -> Self;

    fn of_i64(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("small integers embed in every field")
    }

    /// Parses an unsigned decimal integer literal.
    fn parse_int(digits: &str) -> Option<Self> {
        if digits.is_empty() {
            return None;
        }
        let ten = Self::of_i64(10);
        digits.chars().try_fold(Self::zero(), |acc, c| {
            let d = c.to_digit(10)?;
            Some(acc.mul_ref(&ten).add_ref(&Self::of_i64(d as i64)))
        })
    }

    fn inv(&self) -> Self {
        Self::one().div_ref(self)
    }
}

impl<T> Field for T
where
    T: Num + FromPrimitive + PartialOrd + Clone + Neg<Output = T> + Debug + Display + Send + Sync + 'static,
    for<'a> &'a T: NumOps<&'a T, T>,
{
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer value of a rational, if it is one.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    to_integer(r).and_then(|i| i.to_i64())
}
