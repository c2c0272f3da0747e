//! Ground truth for `phi` straight from the digit definition: the length of
//! the shortest `(1+i)`-ary expansion with digits in `{0, 1, -1, i, -i}`.
//!
//! The lowest digit is forced by parity. If `x + y` is even then `(1+i) | z`
//! and the digit must be `0`; otherwise every unit `u` makes `z - u`
//! divisible by `(1+i)` and all four are candidates. Searching every
//! candidate with a memo is exhaustive, so the minimum is exact. Nothing in
//! here touches the octagon machinery in [`crate::phi`].

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gaussian::{GaussianInt, Unit};

/// A single `(1+i)`-ary digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Digit {
    Zero,
    Unit(Unit),
}

impl Digit {
    /// Tie-breaking order used by [`expansion_of`].
    pub const ORDER: [Digit; 5] = [
        Digit::Zero,
        Digit::Unit(Unit::One),
        Digit::Unit(Unit::NegOne),
        Digit::Unit(Unit::I),
        Digit::Unit(Unit::NegI),
    ];

    pub fn value(self) -> GaussianInt {
        match self {
            Digit::Zero => GaussianInt::ZERO,
            Digit::Unit(u) => u.value(),
        }
    }

    pub fn is_zero(self) -> bool {
        self == Digit::Zero
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Digit::Zero => "0",
            Digit::Unit(Unit::One) => "1",
            Digit::Unit(Unit::NegOne) => "-1",
            Digit::Unit(Unit::I) => "i",
            Digit::Unit(Unit::NegI) => "-i",
        })
    }
}

/// Digits least-significant first, top digit nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    digits: Vec<Digit>,
}

impl Expansion {
    /// Returns `None` for an empty list or a zero top digit.
    pub fn new(digits: Vec<Digit>) -> Option<Self> {
        match digits.last() {
            Some(d) if !d.is_zero() => Some(Expansion { digits }),
            _ => None,
        }
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn eval(&self) -> Result<GaussianInt> {
        expansion_eval(self)
    }
}

impl fmt::Display for Expansion {
    /// Most-significant digit first, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// `sum digits[j] * (1+i)^j`, by Horner's rule from the top digit.
pub fn expansion_eval(e: &Expansion) -> Result<GaussianInt> {
    e.digits.iter().rev().try_fold(GaussianInt::ZERO, |acc, d| {
        acc.checked_mul(GaussianInt::ONE_PLUS_I)?.checked_add(d.value())
    })
}

/// Below this norm a step of the digit recursion can fail to shrink the
/// argument (`2+i -> 2-i` is a cycle), so those values come from a table.
const SMALL_NORM: i128 = 5;
/// Every nonzero point of norm at most [`SMALL_NORM`] has an expansion of
/// at most this many digits.
const SMALL_DIGITS: usize = 4;

/// Memoized exhaustive search. One instance per thread; the cache is
/// unbounded.
#[derive(Debug, Clone)]
pub struct Oracle {
    memo: HashMap<GaussianInt, u32>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new()
    }
}

impl Oracle {
    pub fn new() -> Self {
        Oracle { memo: small_table() }
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    pub fn phi(&mut self, z: GaussianInt) -> Result<u32> {
        if z.is_zero() {
            return Err(Error::Zero);
        }
        if let Some(&v) = self.memo.get(&z) {
            return Ok(v);
        }
        // norm > 5 here, so every child has strictly smaller norm
        let best = if let Some(q) = z.div_one_plus_i() {
            self.phi(q)?
        } else {
            let mut best = u32::MAX;
            for u in Unit::ALL {
                let child = child_of(z, u)?;
                best = best.min(self.phi(child)?);
            }
            best
        };
        let v = best + 1;
        self.memo.insert(z, v);
        Ok(v)
    }

    pub fn expansion_of(&mut self, z: GaussianInt) -> Result<Expansion> {
        let mut remaining = self.phi(z)?;
        let mut cur = z;
        let mut digits = Vec::with_capacity(remaining as usize + 1);
        while remaining > 0 {
            let mut step = None;
            for d in Digit::ORDER {
                let Some(child) = cur.checked_sub(d.value())?.div_one_plus_i() else {
                    continue;
                };
                if !child.is_zero() && self.phi(child)? == remaining - 1 {
                    step = Some((d, child));
                    break;
                }
            }
            let (d, child) = step.expect("some digit attains the minimum");
            digits.push(d);
            cur = child;
            remaining -= 1;
        }
        let top = Unit::from_value(cur).expect("phi 0 only at units");
        digits.push(Digit::Unit(top));
        Ok(Expansion::new(digits).expect("top digit is a unit"))
    }
}

fn child_of(z: GaussianInt, u: Unit) -> Result<GaussianInt> {
    Ok(z.checked_sub(u.value())?
        .div_one_plus_i()
        .expect("odd coordinate sum minus a unit is divisible by 1+i"))
}

/// Minimal expansion lengths of the small points, found by listing every
/// expansion of up to [`SMALL_DIGITS`] digits.
fn small_table() -> HashMap<GaussianInt, u32> {
    let mut table = HashMap::new();
    let mut layer = vec![Vec::<Digit>::new()];
    for len in 1..=SMALL_DIGITS {
        let mut next = Vec::with_capacity(layer.len() * 5);
        for prefix in &layer {
            for d in Digit::ORDER {
                let mut digits = prefix.clone();
                digits.push(d);
                if let Some(e) = Expansion::new(digits.clone()) {
                    let z = expansion_eval(&e).expect("small values");
                    if z.norm() <= SMALL_NORM {
                        table.entry(z).or_insert(len as u32 - 1);
                    }
                }
                next.push(digits);
            }
        }
        layer = next;
    }
    debug_assert_eq!(table.len(), 20);
    table
}

thread_local! {
    static ORACLE: RefCell<Oracle> = RefCell::new(Oracle::new());
}

/// `phi(z)` from the digit definition, using a per-thread cache.
pub fn phi_oracle(z: GaussianInt) -> Result<u32> {
    ORACLE.with(|o| o.borrow_mut().phi(z))
}

/// A shortest expansion of `z`. Among equally short witnesses, each digit is
/// the first of `0, 1, -1, i, -i` that still reaches the minimum.
pub fn expansion_of(z: GaussianInt) -> Result<Expansion> {
    ORACLE.with(|o| o.borrow_mut().expansion_of(z))
}
