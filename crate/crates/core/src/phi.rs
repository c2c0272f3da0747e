//! Fast `phi` and pre-image counts through the layer decomposition
//! `phi^{-1}([0, n]) \ {0} = disjoint union over j <= n/2 of 2^j S_{n-2j}`.

use crate::error::{Error, Result};
use crate::gaussian::{min_two_adic_valuation, GaussianInt};
use crate::regions::{oct, s_count, s_enumerate};
use crate::CountValue;

/// Smallest `t` with `z` in `Oct_t`. Octagons are nested, so a linear scan
/// from `t = 0` finds it.
pub fn min_oct_index(z: GaussianInt) -> Result<u32> {
    if z.is_zero() {
        return Err(Error::Zero);
    }
    let mut t = 0;
    while !oct(t)?.contains(z) {
        t += 1;
    }
    Ok(t)
}

/// `phi(z) = 2j + min_oct_index(z / 2^j)` where `2^j` is the exact power of
/// two dividing `gcd(x, y)`.
///
/// A point lies in at most one layer `2^j S_m` (the one matching its 2-adic
/// valuation), and for an odd-gcd point `S_m` membership is `Oct_m`
/// membership.
pub fn phi(z: GaussianInt) -> Result<u32> {
    let j = min_two_adic_valuation(z)?;
    let odd = z.div_pow2(j).expect("valuation divides");
    Ok(2 * j + min_oct_index(odd)?)
}

fn sum(terms: &[i128]) -> Result<CountValue> {
    let mut acc: i128 = 0;
    for &t in terms {
        acc = acc.checked_add(t).ok_or(Error::Overflow("preimage count"))?;
    }
    CountValue::try_from(acc).map_err(|_| Error::Overflow("preimage count"))
}

fn pow(base: i128, k: u32) -> Result<i128> {
    base.checked_pow(k).ok_or(Error::Overflow("preimage count"))
}

fn times(c: i128, v: i128) -> Result<i128> {
    c.checked_mul(v).ok_or(Error::Overflow("preimage count"))
}

/// `|phi^{-1}([0, n])|`, origin included.
///
/// * `n = 2k`: `25 + 8k - 48 * 2^k + 28 * 4^k`
/// * `n = 2k + 1`: `29 + 8k - 68 * 2^k + 56 * 4^k`
///
/// Both hold from `k = 0`. The odd case is often quoted with `28 * 4^k`,
/// which is wrong (see [`preimage_count_printed_odd`]).
pub fn preimage_count(n: u32) -> Result<CountValue> {
    let k = n / 2;
    let (k_w, p2, p4) = (k as i128, pow(2, k)?, pow(4, k)?);
    if n.is_multiple_of(2) {
        sum(&[25, 8 * k_w, -times(48, p2)?, times(28, p4)?])
    } else {
        sum(&[29, 8 * k_w, -times(68, p2)?, times(56, p4)?])
    }
}

/// The odd-level formula with the misprinted leading coefficient,
/// `29 + 8k - 68 * 2^k + 28 * 4^k`. Kept only so the discrepancy can be
/// reported; it goes negative at `k = 0`.
pub fn preimage_count_printed_odd(k: u32) -> Result<i128> {
    let ovf = || Error::Overflow("printed odd formula");
    let terms = [29, 8 * k as i128, -times(68, pow(2, k)?)?, times(28, pow(4, k)?)?];
    terms.iter().try_fold(0i128, |acc, &t| acc.checked_add(t).ok_or_else(ovf))
}

/// `1 + sum_{j=0}^{n/2} |S_{n-2j}|`.
pub fn preimage_count_via_sum(n: u32) -> Result<CountValue> {
    (0..=n / 2).try_fold(1 as CountValue, |acc, j| {
        acc.checked_add(s_count(n - 2 * j)?)
            .ok_or(Error::Overflow("preimage count sum"))
    })
}

/// Israel's closed forms for OEIS A006457:
/// `a(2k) = 14 * 4^k - 34 * 2^k + 8k + 21`,
/// `a(2k+1) = 28 * 4^k - 48 * 2^k + 8k + 25`.
/// `a(0) = 1` and `a(m) = |phi^{-1}([0, m-1])|` for `m >= 1`.
pub fn israel_a(m: u32) -> Result<CountValue> {
    let k = m / 2;
    let (k_w, p2, p4) = (k as i128, pow(2, k)?, pow(4, k)?);
    if m.is_multiple_of(2) {
        sum(&[times(14, p4)?, -times(34, p2)?, 8 * k_w, 21])
    } else {
        sum(&[times(28, p4)?, -times(48, p2)?, 8 * k_w, 25])
    }
}

/// `[a(0), ..., a(max_index)]`.
pub fn sequence(max_index: u32) -> Result<Vec<CountValue>> {
    let mut out = Vec::with_capacity(max_index as usize + 1);
    out.push(1);
    for m in 1..=max_index {
        out.push(preimage_count(m - 1)?);
    }
    Ok(out)
}

/// One point of `phi^{-1}([0, n])`. `layer` is the `j` of the layer
/// `2^j S_{n-2j}` the point came from; the origin has none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PreimagePoint {
    pub z: GaussianInt,
    pub layer: Option<u32>,
}

/// The origin, then the layers `2^j S_{n-2j}` for ascending `j`, each in
/// row-major order.
pub fn preimage_enumerate(n: u32) -> Result<impl Iterator<Item = PreimagePoint>> {
    // Oct_n bounds every scaled layer, so once it exists nothing below overflows
    oct(n)?;
    let mut layers = Vec::new();
    for j in 0..=n / 2 {
        let pts = s_enumerate(n - 2 * j)?.map(move |s| PreimagePoint {
            z: s.scale_pow2(j).expect("layer lies inside Oct_n"),
            layer: Some(j),
        });
        layers.push(pts);
    }
    let origin = PreimagePoint { z: GaussianInt::ZERO, layer: None };
    Ok(std::iter::once(origin).chain(layers.into_iter().flatten()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::Unit;
    use crate::oracle::Oracle;
    use crate::regions::s_contains;
    use std::collections::HashSet;

    fn g(x: i64, y: i64) -> GaussianInt {
        GaussianInt::new(x, y)
    }

    #[test]
    fn oct_index_examples() {
        assert_eq!(min_oct_index(g(1, 0)).unwrap(), 0);
        assert_eq!(min_oct_index(g(2, 1)).unwrap(), 1);
        assert_eq!(min_oct_index(g(5, 2)).unwrap(), 3);
        assert_eq!(min_oct_index(g(0, 0)), Err(Error::Zero));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(g(1, 0)).unwrap(), 0);
        assert_eq!(phi(g(2, 0)).unwrap(), 2);
        assert_eq!(phi(g(4, 2)).unwrap(), 3);
        assert_eq!(phi(g(5, 2)).unwrap(), 3);
        assert_eq!(phi(g(0, 0)), Err(Error::Zero));
    }

    #[test]
    fn phi_far_out() {
        assert_eq!(phi(g(1 << 61, 0)).unwrap(), 122);
        assert_eq!(phi(g(i64::MIN, 0)).unwrap(), 126);
        // beyond the last octagon whose bounds fit in i64
        assert_eq!(phi(g(i64::MAX, i64::MAX)), Err(Error::Overflow("w")));
    }

    #[test]
    fn count_examples() {
        assert_eq!(preimage_count(0).unwrap(), 5);
        assert_eq!(preimage_count(2).unwrap(), 49);
        assert_eq!(preimage_count(3).unwrap(), 125);
        assert_eq!(preimage_count(4).unwrap(), 297);
        assert_eq!(preimage_count_via_sum(0).unwrap(), 5);
        assert_eq!(preimage_count_via_sum(1).unwrap(), 17);
        assert_eq!(preimage_count_via_sum(3).unwrap(), 125);
        assert_eq!(israel_a(0).unwrap(), 1);
        assert_eq!(israel_a(1).unwrap(), 5);
        assert_eq!(israel_a(4).unwrap(), 125);
        assert_eq!(preimage_count_printed_odd(1).unwrap(), 13);
        assert_eq!(preimage_count_printed_odd(0).unwrap(), -11);
    }

    #[test]
    fn sequences() {
        assert_eq!(sequence(0).unwrap(), [1]);
        assert_eq!(sequence(2).unwrap(), [1, 5, 17]);
        assert_eq!(sequence(5).unwrap(), [1, 5, 17, 49, 125, 297]);
    }

    #[test]
    fn closed_forms_agree_far_out() {
        for n in 0..=110 {
            let c = preimage_count(n).unwrap();
            assert_eq!(c, preimage_count_via_sum(n).unwrap(), "n={n}");
            assert_eq!(c, israel_a(n + 1).unwrap(), "n={n}");
        }
        assert!(preimage_count(200).is_err());
    }

    #[test]
    fn enumeration_small() {
        let pts: Vec<_> = preimage_enumerate(0).unwrap().collect();
        assert_eq!(pts.len(), 5);
        assert_eq!(pts[0], PreimagePoint { z: GaussianInt::ZERO, layer: None });
        let three: Vec<_> = preimage_enumerate(3).unwrap().collect();
        assert_eq!(three.len(), 125);
        assert_eq!(three.iter().filter(|p| p.layer == Some(0)).count(), 108);
        assert_eq!(three.iter().filter(|p| p.layer == Some(1)).count(), 16);
        assert_eq!(preimage_enumerate(4).unwrap().count(), 297);
    }

    #[test]
    fn layers_disjoint_and_phi_consistent() {
        for n in 0..=12 {
            let pts: Vec<_> = preimage_enumerate(n).unwrap().collect();
            let set: HashSet<_> = pts.iter().map(|p| p.z).collect();
            assert_eq!(set.len(), pts.len(), "n={n}");
            assert_eq!(pts.len() as CountValue, preimage_count(n).unwrap());
            for p in &pts[1..] {
                let v = phi(p.z).unwrap();
                assert!(v <= n);
                assert_eq!(Some(min_two_adic_valuation(p.z).unwrap()), p.layer);
            }
        }
    }

    #[test]
    fn level_sets() {
        let r = w_box(12);
        let mut hist = vec![0 as CountValue; 13];
        for x in -r..=r {
            for y in -r..=r {
                let z = g(x, y);
                if z.is_zero() {
                    continue;
                }
                let v = phi(z).unwrap() as usize;
                if v <= 12 {
                    hist[v] += 1;
                }
            }
        }
        for n in 1..=12u32 {
            let expect = preimage_count(n).unwrap() - preimage_count(n - 1).unwrap();
            assert_eq!(hist[n as usize], expect, "n={n}");
        }
    }

    /// Half-width of a box containing `Oct_n`.
    fn w_box(n: u32) -> i64 {
        crate::gaussian::w(n).unwrap()
    }

    #[test]
    fn symmetries_and_scaling() {
        let mut oracle = Oracle::new();
        for x in -40i64..=40 {
            for y in -40i64..=40 {
                let z = g(x, y);
                if z.is_zero() {
                    continue;
                }
                let v = phi(z).unwrap();
                assert_eq!(v, oracle.phi(z).unwrap(), "{z}");
                assert_eq!(phi(z.scale_pow2(1).unwrap()).unwrap(), v + 2);
                assert_eq!(phi(z.conj().unwrap()).unwrap(), v);
                for u in Unit::ALL {
                    assert_eq!(phi(z.mul_unit(u).unwrap()).unwrap(), v);
                }
            }
        }
    }

    #[test]
    fn membership_via_layers() {
        for x in -30i64..=30 {
            for y in -30i64..=30 {
                let z = g(x, y);
                if z.is_zero() {
                    continue;
                }
                let j = min_two_adic_valuation(z).unwrap();
                let odd = z.div_pow2(j).unwrap();
                let v = phi(z).unwrap();
                for n in 0..12 {
                    let member = n >= 2 * j && s_contains(n - 2 * j, odd).unwrap();
                    assert_eq!(v <= n, member, "{z} n={n}");
                }
            }
        }
    }
}
