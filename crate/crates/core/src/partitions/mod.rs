//! Plane partitions counted directly, for comparison with the product
//! formulas and with tiling enumeration.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::enumerate::tiling_polynomial;
use crate::error::{Error, Result};
use crate::formulas::{exp_g, exp_h};
use crate::lattice::{build_region, RegionSpec, WeightScheme};
use crate::qalgebra::QPoly;

/// Largest `rows * cols * max` the generating path accepts.
pub const MAX_BRUTE_VOLUME: usize = 30;

/// Largest `rows * cols * (max + 1)` the counting path accepts.
pub const MAX_COUNT_BOX: usize = 4096;

/// Rows weakly decrease left to right, columns top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanePartition {
    pub rows: Vec<Vec<u32>>,
    pub max: u32,
}

impl PlanePartition {
    pub fn volume(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    pub fn is_valid(&self) -> bool {
        let cols = self.rows.first().map_or(0, Vec::len);
        self.rows.iter().all(|r| r.len() == cols)
            && self.rows.iter().flatten().all(|&v| v <= self.max)
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]))
            && self.rows.windows(2).all(|p| p[0].iter().zip(&p[1]).all(|(a, b)| a >= b))
    }
}

/// Every plane partition with `rows` rows, `cols` columns and entries at
/// most `max`, in lexicographic order of the row-major entry sequence.
pub fn plane_partitions(rows: usize, cols: usize, max: u32) -> Result<Vec<PlanePartition>> {
    if rows * cols * max as usize > MAX_BRUTE_VOLUME {
        return Err(Error::BoxTooLarge {
            rows,
            cols,
            max_entry: max as usize,
        });
    }
    let mut out = Vec::new();
    let mut cells = vec![0u32; rows * cols];
    fill(&mut cells, 0, cols, max, &mut out);
    Ok(out)
}

fn fill(cells: &mut [u32], k: usize, cols: usize, max: u32, out: &mut Vec<PlanePartition>) {
    if k == cells.len() {
        out.push(PlanePartition {
            rows: cells.chunks(cols.max(1)).map(<[u32]>::to_vec).collect(),
            max,
        });
        return;
    }
    let (r, c) = (k / cols, k % cols);
    let mut hi = max;
    if r > 0 {
        hi = hi.min(cells[k - cols]);
    }
    if c > 0 {
        hi = hi.min(cells[k - 1]);
    }
    for v in 0..=hi {
        cells[k] = v;
        fill(cells, k + 1, cols, max, out);
    }
}

/// Number of plane partitions in an `a x b x c` box, by generation.
pub fn pp_count_box(a: u32, b: u32, c: u32) -> Result<BigInt> {
    Ok(BigInt::from(plane_partitions(a as usize, b as usize, c)?.len()))
}

/// `sum q^|pi|` over plane partitions in an `a x b x c` box, by generation.
pub fn pp_volume_poly(a: u32, b: u32, c: u32) -> Result<QPoly> {
    let mut hist: BTreeMap<u32, u64> = BTreeMap::new();
    for p in plane_partitions(a as usize, b as usize, c)? {
        *hist.entry(p.volume()).or_default() += 1;
    }
    Ok(QPoly::from_pairs(hist))
}

/// Per-cell lower and upper bounds on a plane partition in a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PPConstraints {
    pub rows: usize,
    pub cols: usize,
    pub max: u32,
    /// `(lo, hi)` per cell, row-major.
    pub bounds: Vec<(u32, u32)>,
}

impl PPConstraints {
    pub fn unconstrained(rows: usize, cols: usize, max: u32) -> Self {
        Self {
            rows,
            cols,
            max,
            bounds: vec![(0, max); rows * cols],
        }
    }

    fn tighten(&mut self, r: usize, c: usize, lo: u32, hi: u32) {
        let b = &mut self.bounds[r * self.cols + c];
        b.0 = b.0.max(lo);
        b.1 = b.1.min(hi);
    }

    /// The box `(z+x+a+b) x (x+y+b+c)` with entries at most `y+z+c+a`
    /// and the three families of pinned entries coming from forced
    /// lozenges along the dented sides, read literally (rows and columns
    /// counted from 1 in the comments):
    ///
    /// 1. the first `z+b` entries of columns `1..=c` equal the maximum and
    ///    the rest of those columns are at most `y+z+a`;
    /// 2. the last `a` entries of rows `1..=b` equal `y+a`;
    /// 3. the last `y+b` entries of rows `z+x+b+1..=z+x+b+a` are zero and
    ///    the remaining entries of those rows are at least `a`.
    pub fn corollary(a: u32, b: u32, c: u32, x: u32, y: u32, z: u32) -> Self {
        Self::build(a, b, c, x, y, z, a as usize)
    }

    /// `width` is the number of pinned entries at the end of rows `1..=b`.
    /// A block wider than the box pins every entry of those rows.
    fn build(a: u32, b: u32, c: u32, x: u32, y: u32, z: u32, width: usize) -> Self {
        let rows = (z + x + a + b) as usize;
        let cols = (x + y + b + c) as usize;
        let max = y + z + c + a;
        let mut k = Self::unconstrained(rows, cols, max);
        let (a_, b_, c_, y_, z_) = (a as usize, b as usize, c as usize, y as usize, z as usize);
        for col in 0..c_ {
            for r in 0..rows {
                if r < z_ + b_ {
                    k.tighten(r, col, max, max);
                } else {
                    k.tighten(r, col, 0, y + z + a);
                }
            }
        }
        for r in 0..b_ {
            for col in cols.saturating_sub(width)..cols {
                k.tighten(r, col, y + a, y + a);
            }
        }
        for r in rows - a_..rows {
            for col in 0..cols {
                if col >= cols - y_ - b_ {
                    k.tighten(r, col, 0, 0);
                } else {
                    k.tighten(r, col, a, max);
                }
            }
        }
        k
    }

    /// [`PPConstraints::corollary`] with the second family replaced by
    /// "the last `b` entries of rows `1..=b` equal `y+a`". With this block
    /// the pinned entries tile the corners of the box the way the forced
    /// lozenges sit around the three dents.
    pub fn corollary_b_block(a: u32, b: u32, c: u32, x: u32, y: u32, z: u32) -> Self {
        Self::build(a, b, c, x, y, z, b as usize)
    }

    pub fn admits(&self, p: &PlanePartition) -> bool {
        p.rows.len() == self.rows
            && p.rows.iter().flatten().zip(&self.bounds).all(|(&v, &(lo, hi))| lo <= v && v <= hi)
    }
}

/// Number of plane partitions meeting `k`, by a cell-by-cell transfer
/// count over the last `cols` entries.
pub fn count_constrained(k: &PPConstraints) -> Result<BigInt> {
    if k.rows * k.cols * (k.max as usize + 1) > MAX_COUNT_BOX {
        return Err(Error::BoxTooLarge {
            rows: k.rows,
            cols: k.cols,
            max_entry: k.max as usize,
        });
    }
    if k.rows == 0 || k.cols == 0 {
        return Ok(BigInt::from(1));
    }
    // state: the entry above each column position still to be filled in
    // the current row, and the current row's entries already placed
    let mut states: HashMap<Vec<u32>, BigUint> = HashMap::new();
    states.insert(vec![k.max; k.cols], BigUint::from(1u8));
    for cell in 0..k.rows * k.cols {
        let c = cell % k.cols;
        let (lo, hi) = k.bounds[cell];
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::with_capacity(states.len());
        for (state, n) in states {
            let mut top = state[c].min(hi);
            if c > 0 {
                top = top.min(state[c - 1]);
            }
            for v in lo..=top {
                let mut s = state.clone();
                s[c] = v;
                *next.entry(s).or_default() += &n;
            }
        }
        states = next;
    }
    Ok(BigInt::from(states.into_values().sum::<BigUint>()))
}

/// Plane partitions under the three corollary constraints, read literally.
/// It misses the `b`-dent when `a = 0`; see
/// [`PPConstraints::corollary_b_block`] for the reading that matches the
/// product formula.
pub fn constrained_pp_count(a: u32, b: u32, c: u32, x: u32, y: u32, z: u32) -> Result<BigInt> {
    count_constrained(&PPConstraints::corollary(a, b, c, x, y, z))
}

/// `sum q^|pi|` over the piles counted by the F region, recovered from
/// the second-weight tiling polynomial divided by `q^h`. The first weight
/// divided by `q^g` must give the same polynomial.
pub fn gpp_volume_poly(spec: &RegionSpec) -> Result<QPoly> {
    let RegionSpec::F { x, y, z, a, b, c, d, e, f } = *spec else {
        return Err(Error::InvalidParameters(format!("{spec} is not an F region")));
    };
    let p = [x, y, z, a, b, c, d, e, f].map(i64::from);
    let g = exp_g(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]);
    let h = exp_h(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]);
    let region = build_region(spec);
    let divide = |scheme: WeightScheme, k: i64| -> Result<QPoly> {
        let value = tiling_polynomial(&region, scheme)?.value;
        u32::try_from(k)
            .ok()
            .and_then(|k| value.unshift(k))
            .ok_or_else(|| Error::DivisionFailure(format!("{spec}: {scheme} polynomial {value} by q^{k}")))
    };
    let by_h = divide(WeightScheme::Wt2, h)?;
    let by_g = divide(WeightScheme::Wt1, g)?;
    if by_h != by_g {
        return Err(Error::DivisionFailure(format!(
            "{spec}: the two weights disagree after division ({by_h} vs {by_g})"
        )));
    }
    Ok(by_h)
}
