//! Exact arithmetic in (1/2)Z.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A number in (1/2)Z, stored as twice its value.
///
/// Operator impls panic on overflow; the `checked_*` methods surface it as
/// [`Error::Overflow`]. Nothing ever wraps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const ONE: HalfInt = HalfInt { doubled: 2 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub fn from_int(value: i64) -> Self {
        Self::checked_from_int(value).expect("HalfInt overflow in from_int")
    }

    pub fn checked_from_int(value: i64) -> Result<Self> {
        value
            .checked_mul(2)
            .map(Self::from_doubled)
            .ok_or(Error::Overflow("HalfInt::from_int"))
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The integer value, if this is an integer.
    pub const fn to_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.doubled / 2)
        } else {
            None
        }
    }

    /// Half of this value; defined only when the result stays in (1/2)Z.
    pub const fn halve(self) -> Option<Self> {
        if self.is_integer() {
            Some(HalfInt::from_doubled(self.doubled / 2))
        } else {
            None
        }
    }

    pub fn floor(self) -> i64 {
        self.doubled.div_euclid(2)
    }

    pub fn ceil(self) -> i64 {
        -(-self.doubled).div_euclid(2)
    }

    pub fn abs(self) -> Self {
        HalfInt::from_doubled(self.doubled.checked_abs().expect("HalfInt overflow in abs"))
    }

    pub fn signum(self) -> i64 {
        self.doubled.signum()
    }

    pub fn is_zero(self) -> bool {
        self.doubled == 0
    }

    /// Numerator and denominator of the reduced fraction (denominator 1 or 2).
    pub fn fraction(self) -> (i64, i64) {
        match self.to_integer() {
            Some(v) => (v, 1),
            None => (self.doubled, 2),
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        self.doubled
            .checked_add(rhs.doubled)
            .map(Self::from_doubled)
            .ok_or(Error::Overflow("HalfInt addition"))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.doubled
            .checked_sub(rhs.doubled)
            .map(Self::from_doubled)
            .ok_or(Error::Overflow("HalfInt subtraction"))
    }

    pub fn checked_neg(self) -> Result<Self> {
        self.doubled
            .checked_neg()
            .map(Self::from_doubled)
            .ok_or(Error::Overflow("HalfInt negation"))
    }

    pub fn checked_mul_int(self, rhs: i64) -> Result<Self> {
        self.doubled
            .checked_mul(rhs)
            .map(Self::from_doubled)
            .ok_or(Error::Overflow("HalfInt scaling"))
    }

    /// Product of two half-integers, which lives in (1/4)Z; returned as
    /// `4 * self * rhs`.
    pub fn checked_mul_quadrupled(self, rhs: Self) -> Result<i64> {
        self.doubled
            .checked_mul(rhs.doubled)
            .ok_or(Error::Overflow("HalfInt product"))
    }
}

impl From<i64> for HalfInt {
    fn from(value: i64) -> Self {
        HalfInt::from_int(value)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("HalfInt overflow in add")
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("HalfInt overflow in sub")
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> Self {
        self.checked_neg().expect("HalfInt overflow in neg")
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> Self {
        self.checked_mul_int(rhs).expect("HalfInt overflow in mul")
    }
}

impl Sum for HalfInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(HalfInt::ZERO, |acc, x| acc + x)
    }
}

impl PartialOrd for HalfInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.doubled.cmp(&other.doubled)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.fraction() {
            (v, 1) => write!(f, "{v}"),
            (num, den) => write!(f, "{num}/{den}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Fraction {
    num: i64,
    den: i64,
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (num, den) = self.fraction();
        Fraction { num, den }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let Fraction { num, den } = Fraction::deserialize(deserializer)?;
        match den {
            1 => num
                .checked_mul(2)
                .map(HalfInt::from_doubled)
                .ok_or_else(|| serde::de::Error::custom("HalfInt overflow")),
            2 => Ok(HalfInt::from_doubled(num)),
            _ => Err(serde::de::Error::custom(format!(
                "denominator must be 1 or 2, got {den}"
            ))),
        }
    }
}
