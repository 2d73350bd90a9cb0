//! Row-by-row transfer sweep over matching profiles.
//!
//! Cells are visited in scan order. The profile records which up cells of
//! the next row are already covered by vertical lozenges hanging from the
//! current row (one bit per column), plus one flag meaning "the next cell
//! in scan order is already covered".

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};

use num_bigint::BigUint;

use super::coeff::{Coeff, Dense, Pool};
use crate::error::{Error, Result};
use crate::lattice::{LozengeOrientation, Region, UnitTriangle, WeightScheme};

/// Widest region (in columns) the profile encoding can hold.
pub const MAX_WIDTH: usize = 127;

#[derive(Default)]
struct FoldHasher(u64);

impl Hasher for FoldHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for b in bytes {
            self.0 = (self.0.rotate_left(8) ^ *b as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        }
    }

    fn write_u128(&mut self, n: u128) {
        let x = (n as u64) ^ ((n >> 64) as u64).wrapping_mul(0xc2b2_ae3d_27d4_eb4f);
        self.0 = (x ^ (x >> 29)).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        self.0 ^= self.0 >> 32;
    }
}

type Profiles<C> = HashMap<u128, Dense<C>, BuildHasherDefault<FoldHasher>>;

/// Adds `q^shift * poly` to the profile `key`; false on overflow.
fn push<C: Coeff>(
    map: &mut Profiles<C>,
    key: u128,
    poly: Dense<C>,
    shift: u32,
    pool: &mut Pool<C>,
) -> bool {
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(poly.shifted(shift));
            true
        }
        Entry::Occupied(mut o) => {
            let ok = o.get_mut().add_shifted(&poly, shift, pool);
            pool.give(poly.coeffs);
            ok
        }
    }
}

/// Columns spanned by the region, checked against [`MAX_WIDTH`].
pub(crate) fn column_span(region: &Region) -> Result<(i32, usize)> {
    match region.column_range() {
        None => Ok((0, 0)),
        Some((lo, hi)) => {
            let width = (hi - lo + 1) as usize;
            if width > MAX_WIDTH {
                Err(Error::FrontierTooWide {
                    width,
                    max: MAX_WIDTH,
                })
            } else {
                Ok((lo, width))
            }
        }
    }
}

/// Runs the sweep; `Ok(None)` means a coefficient overflowed `C`.
pub(crate) fn sweep<C: Coeff>(
    region: &Region,
    scheme: WeightScheme,
) -> Result<Option<Vec<(u32, BigUint)>>> {
    let (lo, _) = column_span(region)?;
    let (base, se) = (region.base_row(), region.se_line());
    let weight = |o: LozengeOrientation, up: UnitTriangle| scheme.exponent(o, up, base, se);
    let col = |i: i32| 1u128 << (1 + (i - lo) as u32);

    let mut pool = Pool::new();
    let mut states: Profiles<C> = Profiles::default();
    states.insert(0, Dense::one());
    let mut next: Profiles<C> = Profiles::default();
    for &c in region.cells() {
        next.reserve(states.len());
        let (i, j) = (c.i, c.j);
        let bit = col(i);
        let pool = &mut pool;
        if c.is_up() {
            let right_ok = region.contains(&UnitTriangle::down(i, j));
            let w = weight(LozengeOrientation::Right, c);
            for (key, poly) in states.drain() {
                let flag = key & 1 != 0;
                let below = key & bit != 0;
                let ok = match (flag, below) {
                    (true, false) | (false, true) => push(&mut next, key & !bit & !1, poly, 0, pool),
                    (false, false) if right_ok => push(&mut next, key | 1, poly, w, pool),
                    _ => {
                        pool.give(poly.coeffs);
                        true
                    }
                };
                if !ok {
                    return Ok(None);
                }
            }
        } else {
            let left = UnitTriangle::up(i + 1, j);
            let above = UnitTriangle::up(i, j + 1);
            let left_ok = region.contains(&left);
            let above_ok = region.contains(&above);
            let wl = weight(LozengeOrientation::Left, left);
            let wv = weight(LozengeOrientation::Vertical, above);
            for (key, poly) in states.drain() {
                if key & 1 != 0 {
                    if !push(&mut next, key & !1, poly, 0, pool) {
                        return Ok(None);
                    }
                    continue;
                }
                debug_assert!(key & bit == 0);
                let ok = match (left_ok, above_ok) {
                    (true, true) => {
                        let copy = pool.copy(&poly);
                        push(&mut next, key | 1, copy, wl, pool)
                            && push(&mut next, key | bit, poly, wv, pool)
                    }
                    (true, false) => push(&mut next, key | 1, poly, wl, pool),
                    (false, true) => push(&mut next, key | bit, poly, wv, pool),
                    (false, false) => {
                        pool.give(poly.coeffs);
                        true
                    }
                };
                if !ok {
                    return Ok(None);
                }
            }
        }
        std::mem::swap(&mut states, &mut next);
        if states.is_empty() {
            break;
        }
    }
    Ok(Some(
        states
            .remove(&0)
            .map(|p| p.into_pairs())
            .unwrap_or_default(),
    ))
}

/// Largest number of live profiles seen during a sweep, for diagnostics.
pub(crate) fn peak_profiles(region: &Region) -> Result<usize> {
    let (lo, _) = column_span(region)?;
    let col = |i: i32| 1u128 << (1 + (i - lo) as u32);
    let mut states: std::collections::HashSet<u128, BuildHasherDefault<FoldHasher>> =
        Default::default();
    states.insert(0);
    let mut peak = 1;
    for &c in region.cells() {
        let mut next: std::collections::HashSet<u128, BuildHasherDefault<FoldHasher>> =
            Default::default();
        let (i, j) = (c.i, c.j);
        let bit = col(i);
        for key in states.drain() {
            let flag = key & 1 != 0;
            if c.is_up() {
                let below = key & bit != 0;
                if flag != below {
                    next.insert(key & !bit & !1);
                } else if !flag && region.contains(&UnitTriangle::down(i, j)) {
                    next.insert(key | 1);
                }
            } else if flag {
                next.insert(key & !1);
            } else {
                if region.contains(&UnitTriangle::up(i + 1, j)) {
                    next.insert(key | 1);
                }
                if region.contains(&UnitTriangle::up(i, j + 1)) {
                    next.insert(key | bit);
                }
            }
        }
        peak = peak.max(next.len());
        states = next;
    }
    Ok(peak)
}
