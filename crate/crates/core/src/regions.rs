//! The octagonal regions `E(a, b) = { x+yi : |x|, |y| <= a, |x|+|y| <= b }`,
//! the octagons `Oct_n = E(w(n)-2, w(n+1)-3)` and the perforated octagons
//! `S_n = { z in Oct_n : gcd(x, y) odd }`.

use crate::error::{Error, Result};
use crate::gaussian::{has_odd_gcd, w, GaussianInt};
use crate::CountValue;

/// `E(a, b)` with `0 < a <= b <= 2a`. Both ends are allowed: `E(a, a)` is a
/// diamond and `E(a, 2a)` the full square, and `Oct_0 = E(1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Region {
    a: i64,
    b: i64,
}

impl Region {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let valid = a > 0 && a <= b && (b as i128) <= 2 * a as i128;
        if !valid {
            return Err(Error::InvalidRegion { a, b });
        }
        Ok(Region { a, b })
    }

    /// Axis bound.
    pub fn a(&self) -> i64 {
        self.a
    }

    /// Diagonal bound.
    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn contains(&self, z: GaussianInt) -> bool {
        let (x, y) = (z.x.unsigned_abs(), z.y.unsigned_abs());
        let (a, b) = (self.a as u64, self.b as u64);
        x <= a && y <= a && (x as u128 + y as u128) <= b as u128
    }

    /// `1 + 4a + 4a^2 - 2(2a-b)(2a-b+1)`: the square minus four copies of the
    /// triangle of side `2a-b` cut from each corner.
    pub fn count(&self) -> Result<CountValue> {
        let ovf = || Error::Overflow("region count");
        let a = self.a as i128;
        let t = 2 * a - self.b as i128;
        let sq = a.checked_mul(a).and_then(|v| v.checked_mul(4)).ok_or_else(ovf)?;
        let corner = t.checked_mul(t + 1).and_then(|v| v.checked_mul(2)).ok_or_else(ovf)?;
        let total = (1 + 4 * a)
            .checked_add(sq)
            .and_then(|v| v.checked_sub(corner))
            .ok_or_else(ovf)?;
        CountValue::try_from(total).map_err(|_| ovf())
    }

    /// Row-major walk: `y` ascending from `-a` to `a`, `x` ascending within
    /// each row.
    pub fn points(&self) -> RegionPoints {
        RegionPoints::new(*self)
    }
}

/// Iterator over the lattice points of a [`Region`].
#[derive(Debug, Clone)]
pub struct RegionPoints {
    region: Region,
    y: i64,
    x: i64,
    x_max: i64,
    done: bool,
}

impl RegionPoints {
    fn new(region: Region) -> Self {
        let mut it = RegionPoints { region, y: -region.a, x: 0, x_max: 0, done: false };
        it.start_row();
        it
    }

    fn start_row(&mut self) {
        let half = self.region.a.min(self.region.b - self.y.abs());
        self.x = -half;
        self.x_max = half;
    }
}

impl Iterator for RegionPoints {
    type Item = GaussianInt;

    fn next(&mut self) -> Option<GaussianInt> {
        if self.done {
            return None;
        }
        let z = GaussianInt::new(self.x, self.y);
        if self.x < self.x_max {
            self.x += 1;
        } else if self.y < self.region.a {
            self.y += 1;
            self.start_row();
        } else {
            self.done = true;
        }
        Some(z)
    }
}

/// `Oct_n = E(w(n) - 2, w(n+1) - 3)`.
pub fn oct(n: u32) -> Result<Region> {
    let a = w(n)? - 2;
    let b = w(n + 1)? - 3;
    Region::new(a, b)
}

fn poly(terms: &[i128]) -> Result<CountValue> {
    let mut acc: i128 = 0;
    for &t in terms {
        acc = acc.checked_add(t).ok_or(Error::Overflow("count"))?;
    }
    CountValue::try_from(acc).map_err(|_| Error::Overflow("count"))
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("count"))
}

fn w_wide(n: u32) -> Result<i128> {
    w(n).map(i128::from)
}

/// `|Oct_n| = 1 + 4(w_n - 2) + 4(w_n - 2)^2 - 2(w_{n+2} - w_{n+1})(w_{n+2} - w_{n+1} - 1)`.
pub fn oct_count(n: u32) -> Result<CountValue> {
    let a = w_wide(n)? - 2;
    let d = w_wide(n + 2)? - w_wide(n + 1)?;
    poly(&[1, mul(4, a)?, mul(4, mul(a, a)?)?, -mul(2, mul(d, d - 1)?)?])
}

/// Points of `Oct_n` with both coordinates even, origin included.
///
/// For `n >= 1` this is `1 + 2(w_n - 2) + (w_n - 2)^2 - 2(w_n - w_{n-1})(w_n - w_{n-1} + 1)`;
/// `Oct_0 = E(1, 1)` holds only the origin.
pub fn even_count(n: u32) -> Result<CountValue> {
    if n == 0 {
        return Ok(1);
    }
    let a = w_wide(n)? - 2;
    let d = w_wide(n)? - w_wide(n - 1)?;
    poly(&[1, mul(2, a)?, mul(a, a)?, -mul(2, mul(d, d + 1)?)?])
}

/// `|S_n| = 2(w_n - 2) + 3(w_n - 2)^2 - 6(w_n - w_{n-1})(w_n - w_{n-1} - 1)` for
/// `n >= 1`, and `|S_0| = 4` (the units).
pub fn s_count(n: u32) -> Result<CountValue> {
    if n == 0 {
        return Ok(4);
    }
    let a = w_wide(n)? - 2;
    let d = w_wide(n)? - w_wide(n - 1)?;
    poly(&[mul(2, a)?, mul(3, mul(a, a)?)?, -mul(6, mul(d, d - 1)?)?])
}

pub fn s_contains(n: u32, z: GaussianInt) -> Result<bool> {
    Ok(has_odd_gcd(z) && oct(n)?.contains(z))
}

/// Points of `S_n` in the row-major order of `Oct_n`.
pub fn s_enumerate(n: u32) -> Result<impl Iterator<Item = GaussianInt>> {
    Ok(oct(n)?.points().filter(|&z| has_odd_gcd(z)))
}
