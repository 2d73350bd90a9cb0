//! Weighted tiling polynomials computed from first principles.
//!
//! Two engines with nothing in common but the region: a row-by-row transfer
//! sweep ([`tiling_polynomial`]) and plain backtracking
//! ([`tiling_polynomial_naive`]).

mod coeff;
mod dp;
mod naive;
mod tiling;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Region, WeightScheme};
use crate::qalgebra::QPoly;

pub use dp::MAX_WIDTH;
pub use tiling::lex_first_tiling;

/// Default cell bound for the backtracking engine.
pub const NAIVE_MAX_CELLS: usize = 60;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingPolynomial {
    pub value: QPoly,
    /// [`Region::digest`] of the region the value belongs to.
    pub region_hash: u64,
    pub scheme: WeightScheme,
}

fn from_pairs(pairs: Vec<(u32, BigUint)>) -> QPoly {
    QPoly::from_pairs(pairs.into_iter().map(|(e, c)| (e, BigInt::from(c))))
}

/// Sum over all tilings of the product of lozenge weights.
///
/// The zero polynomial means the region has no tiling; the empty region has
/// exactly one.
pub fn tiling_polynomial(region: &Region, scheme: WeightScheme) -> Result<TilingPolynomial> {
    let value = if region.is_balanced() {
        sweep_with::<u128>(region, scheme)?
    } else {
        QPoly::zero()
    };
    Ok(TilingPolynomial {
        value,
        region_hash: region.digest(),
        scheme,
    })
}

/// Sweeps with machine coefficients `C`, redoing the sweep with `u128` and
/// then big integers whenever a coefficient overflows.
fn sweep_with<C: coeff::Coeff>(region: &Region, scheme: WeightScheme) -> Result<QPoly> {
    if let Some(pairs) = dp::sweep::<C>(region, scheme)? {
        return Ok(from_pairs(pairs));
    }
    if let Some(pairs) = dp::sweep::<u128>(region, scheme)? {
        return Ok(from_pairs(pairs));
    }
    let pairs = dp::sweep::<BigUint>(region, scheme)?.expect("big coefficients never overflow");
    Ok(from_pairs(pairs))
}

/// Same contract as [`tiling_polynomial`], by exhaustive backtracking.
pub fn tiling_polynomial_naive(region: &Region, scheme: WeightScheme) -> Result<TilingPolynomial> {
    tiling_polynomial_naive_bounded(region, scheme, NAIVE_MAX_CELLS)
}

pub fn tiling_polynomial_naive_bounded(
    region: &Region,
    scheme: WeightScheme,
    max_cells: usize,
) -> Result<TilingPolynomial> {
    if region.len() > max_cells {
        return Err(Error::RegionTooLarge {
            cells: region.len(),
            max: max_cells,
        });
    }
    let hist = naive::histogram(region, scheme);
    Ok(TilingPolynomial {
        value: QPoly::from_pairs(hist),
        region_hash: region.digest(),
        scheme,
    })
}

/// Number of tilings.
pub fn count_tilings(region: &Region) -> Result<BigInt> {
    Ok(tiling_polynomial(region, WeightScheme::Unweighted)?
        .value
        .eval_at_one())
}

/// Largest number of simultaneous profiles the sweep needs for `region`.
pub fn peak_profiles(region: &Region) -> Result<usize> {
    dp::peak_profiles(region)
}
