//! Exact Gaussian-integer arithmetic, the unit group, the `w` sequence and
//! the parity predicates everything else is built on.

use std::fmt;

use crate::error::{Error, Result};

/// A Gaussian integer `x + yi`. All arithmetic is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianInt {
    pub x: i64,
    pub y: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { x: 0, y: 0 };
    pub const ONE: GaussianInt = GaussianInt { x: 1, y: 0 };
    pub const I: GaussianInt = GaussianInt { x: 0, y: 1 };
    /// The base of the digit expansions.
    pub const ONE_PLUS_I: GaussianInt = GaussianInt { x: 1, y: 1 };

    pub const fn new(x: i64, y: i64) -> Self {
        GaussianInt { x, y }
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn conj(self) -> Result<Self> {
        let y = self.y.checked_neg().ok_or(Error::Overflow("conj"))?;
        Ok(GaussianInt::new(self.x, y))
    }

    /// Absolute norm `x^2 + y^2`.
    pub fn norm(self) -> i128 {
        let (x, y) = (self.x as i128, self.y as i128);
        x * x + y * y
    }

    /// `max(|x|, |y|)`.
    pub fn sup_norm(self) -> u64 {
        self.x.unsigned_abs().max(self.y.unsigned_abs())
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let x = self.x.checked_add(rhs.x);
        let y = self.y.checked_add(rhs.y);
        match (x, y) {
            (Some(x), Some(y)) => Ok(GaussianInt::new(x, y)),
            _ => Err(Error::Overflow("gaussian add")),
        }
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        let x = self.x.checked_sub(rhs.x);
        let y = self.y.checked_sub(rhs.y);
        match (x, y) {
            (Some(x), Some(y)) => Ok(GaussianInt::new(x, y)),
            _ => Err(Error::Overflow("gaussian sub")),
        }
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let ovf = || Error::Overflow("gaussian mul");
        let xx = self.x.checked_mul(rhs.x).ok_or_else(ovf)?;
        let yy = self.y.checked_mul(rhs.y).ok_or_else(ovf)?;
        let xy = self.x.checked_mul(rhs.y).ok_or_else(ovf)?;
        let yx = self.y.checked_mul(rhs.x).ok_or_else(ovf)?;
        Ok(GaussianInt::new(
            xx.checked_sub(yy).ok_or_else(ovf)?,
            xy.checked_add(yx).ok_or_else(ovf)?,
        ))
    }

    pub fn mul_unit(self, u: Unit) -> Result<Self> {
        let ovf = || Error::Overflow("unit mul");
        let (x, y) = (self.x, self.y);
        Ok(match u {
            Unit::One => self,
            Unit::NegOne => GaussianInt::new(
                x.checked_neg().ok_or_else(ovf)?,
                y.checked_neg().ok_or_else(ovf)?,
            ),
            Unit::I => GaussianInt::new(y.checked_neg().ok_or_else(ovf)?, x),
            Unit::NegI => GaussianInt::new(y, x.checked_neg().ok_or_else(ovf)?),
        })
    }

    /// `2^j * z`.
    pub fn scale_pow2(self, j: u32) -> Result<Self> {
        let f = 2i64.checked_pow(j).ok_or(Error::Overflow("scale"))?;
        let x = self.x.checked_mul(f);
        let y = self.y.checked_mul(f);
        match (x, y) {
            (Some(x), Some(y)) => Ok(GaussianInt::new(x, y)),
            _ => Err(Error::Overflow("scale")),
        }
    }

    /// `z / 2^j`, or `None` if `2^j` does not divide both coordinates.
    pub fn div_pow2(self, j: u32) -> Option<Self> {
        if j >= 64 {
            return self.is_zero().then_some(self);
        }
        let mask = (1i64 << j).wrapping_sub(1);
        if self.x & mask != 0 || self.y & mask != 0 {
            return None;
        }
        Some(GaussianInt::new(self.x >> j, self.y >> j))
    }

    /// `(1+i)` divides `x + yi` iff `x + y` is even.
    pub fn divisible_by_one_plus_i(self) -> bool {
        (self.x ^ self.y) & 1 == 0
    }

    /// Exact quotient `z / (1+i) = ((x+y) + (y-x)i) / 2`, or `None` when
    /// `x + y` is odd.
    pub fn div_one_plus_i(self) -> Option<Self> {
        if !self.divisible_by_one_plus_i() {
            return None;
        }
        let (x, y) = (self.x as i128, self.y as i128);
        // both halves fit: |x + y| / 2 <= max(|x|, |y|)
        Some(GaussianInt::new(((x + y) / 2) as i64, ((y - x) / 2) as i64))
    }
}

impl fmt::Display for GaussianInt {
    /// Renders as `x+yi` / `x-yi`, always showing both parts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y < 0 {
            write!(f, "{}-{}i", self.x, self.y.unsigned_abs())
        } else {
            write!(f, "{}+{}i", self.x, self.y)
        }
    }
}

impl From<(i64, i64)> for GaussianInt {
    fn from((x, y): (i64, i64)) -> Self {
        GaussianInt::new(x, y)
    }
}

/// One of the four units of `Z[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    One,
    NegOne,
    I,
    NegI,
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::NegOne, Unit::I, Unit::NegI];

    pub fn value(self) -> GaussianInt {
        match self {
            Unit::One => GaussianInt::new(1, 0),
            Unit::NegOne => GaussianInt::new(-1, 0),
            Unit::I => GaussianInt::new(0, 1),
            Unit::NegI => GaussianInt::new(0, -1),
        }
    }

    pub fn from_value(z: GaussianInt) -> Option<Unit> {
        match (z.x, z.y) {
            (1, 0) => Some(Unit::One),
            (-1, 0) => Some(Unit::NegOne),
            (0, 1) => Some(Unit::I),
            (0, -1) => Some(Unit::NegI),
            _ => None,
        }
    }

    fn exponent(self) -> u8 {
        match self {
            Unit::One => 0,
            Unit::I => 1,
            Unit::NegOne => 2,
            Unit::NegI => 3,
        }
    }

    fn from_exponent(e: u8) -> Unit {
        match e % 4 {
            0 => Unit::One,
            1 => Unit::I,
            2 => Unit::NegOne,
            _ => Unit::NegI,
        }
    }

    pub fn inverse(self) -> Unit {
        Unit::from_exponent(4 - self.exponent())
    }
}

impl std::ops::Mul for Unit {
    type Output = Unit;

    fn mul(self, rhs: Unit) -> Unit {
        // units are powers of i; exponents add
        #[allow(clippy::suspicious_arithmetic_impl)]
        Unit::from_exponent(self.exponent() + rhs.exponent())
    }
}

/// `w(2k) = 3 * 2^k`, `w(2k+1) = 4 * 2^k`.
pub fn w(n: u32) -> Result<i64> {
    let base = if n.is_multiple_of(2) { 3 } else { 4 };
    2i64.checked_pow(n / 2)
        .and_then(|p| p.checked_mul(base))
        .ok_or(Error::Overflow("w"))
}

/// Exponent of 2 in `gcd(x, y)`. A zero coordinate imposes no constraint.
pub fn min_two_adic_valuation(z: GaussianInt) -> Result<u32> {
    if z.is_zero() {
        return Err(Error::Zero);
    }
    Ok((z.x | z.y).trailing_zeros())
}

pub fn is_unit(z: GaussianInt) -> bool {
    Unit::from_value(z).is_some()
}

/// True iff `gcd(x, y)` is odd. `gcd(0, 0) = 0` counts as even.
pub fn has_odd_gcd(z: GaussianInt) -> bool {
    (z.x | z.y) & 1 == 1
}
