use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::cell::{Lozenge, LozengeOrientation, UnitTriangle};
use super::region::Region;
use crate::error::Error;
use crate::qalgebra::QPoly;

/// Positional monomial weights on lozenges.
///
/// * `Wt1`: a right lozenge gets `q^l`, `l` the number of lattice lines from
///   its left side to the southeast reference line.
/// * `Wt2`: a right lozenge gets `q^k`, `k` the number of rows from its top
///   edge down to the base row.
/// * `Wt3`: a left lozenge gets `q^k`, `k` measured the same way as `Wt2`.
///
/// Every other lozenge has weight 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightScheme {
    #[default]
    #[serde(rename = "none")]
    Unweighted,
    Wt1,
    Wt2,
    Wt3,
}

impl WeightScheme {
    pub const ALL: [WeightScheme; 4] = [
        WeightScheme::Unweighted,
        WeightScheme::Wt1,
        WeightScheme::Wt2,
        WeightScheme::Wt3,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            WeightScheme::Unweighted => "none",
            WeightScheme::Wt1 => "wt1",
            WeightScheme::Wt2 => "wt2",
            WeightScheme::Wt3 => "wt3",
        }
    }

    /// Exponent of the weight of the lozenge made of `up` and the down cell
    /// in direction `orient`, relative to the given reference lines.
    #[inline]
    pub fn exponent(
        self,
        orient: LozengeOrientation,
        up: UnitTriangle,
        base_row: i32,
        se_line: i32,
    ) -> u32 {
        let e = match (self, orient) {
            (WeightScheme::Wt1, LozengeOrientation::Right) => se_line - up.i,
            (WeightScheme::Wt2, LozengeOrientation::Right)
            | (WeightScheme::Wt3, LozengeOrientation::Left) => up.j + 1 - base_row,
            _ => 0,
        };
        u32::try_from(e).expect("lozenge lies beyond the reference line")
    }
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for WeightScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "none" | "unweighted" => WeightScheme::Unweighted,
            "wt1" => WeightScheme::Wt1,
            "wt2" => WeightScheme::Wt2,
            "wt3" => WeightScheme::Wt3,
            _ => return Err(Error::Parse(format!("unknown weight scheme {s:?}"))),
        })
    }
}

/// Weight exponent of `loz` inside `region`.
pub fn lozenge_exponent(loz: &Lozenge, region: &Region, scheme: WeightScheme) -> u32 {
    scheme.exponent(
        loz.orientation(),
        loz.up(),
        region.base_row(),
        region.se_line(),
    )
}

/// Weight of `loz` inside `region`, as a monomial.
pub fn lozenge_weight(loz: &Lozenge, region: &Region, scheme: WeightScheme) -> QPoly {
    QPoly::q_pow(lozenge_exponent(loz, region, scheme))
}
