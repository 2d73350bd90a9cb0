//! Mechanical checks of graphical condensation and of the three recurrences
//! it yields for the dented families.
//!
//! Everything here compares polynomials obtained by enumeration. Closed
//! forms enter only in tests, as an outside reference.

mod generate;
mod recurrence;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumerate::tiling_polynomial;
use crate::error::{Error, Result};
use crate::lattice::{in_cyclic_order, Region, UnitTriangle, WeightScheme};
use crate::qalgebra::QPoly;

pub use generate::{
    f_band_instance, f_band_reductions, kuo4_instances, outer_face_instance, q_band_instance, q_band_reductions,
};
pub use recurrence::{recurrence, recurrence_with, verify_recurrence, Recurrence, MAX_RECURRENCE_PARAM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    /// `u, w` in one colour class, `v, s` in the other, classes of equal size.
    Balanced4,
    /// `u, v, w` in the larger class, `s` in the smaller, sizes differing by one.
    Unbalanced31,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensationInstance {
    pub region: Region,
    pub scheme: WeightScheme,
    pub u: UnitTriangle,
    pub v: UnitTriangle,
    pub w: UnitTriangle,
    pub s: UnitTriangle,
    pub variant: Variant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum Verdict {
    Holds,
    Fails { lhs: QPoly, rhs: QPoly },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::Fails { lhs, rhs } => write!(f, "fails: {lhs} != {rhs}"),
        }
    }
}

/// The six generating polynomials of a three-term identity
/// `l0 l1 = a0 a1 + q^shift b0 b1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Terms {
    pub lhs: [QPoly; 2],
    pub first: [QPoly; 2],
    pub second: [QPoly; 2],
    pub shift: u32,
}

impl Terms {
    pub fn lhs_value(&self) -> QPoly {
        &self.lhs[0] * &self.lhs[1]
    }

    pub fn rhs_value(&self) -> QPoly {
        &self.first[0] * &self.first[1] + (&self.second[0] * &self.second[1]).shift(self.shift)
    }

    pub fn verdict(&self) -> Verdict {
        let (lhs, rhs) = (self.lhs_value(), self.rhs_value());
        if lhs == rhs {
            Verdict::Holds
        } else {
            Verdict::Fails { lhs, rhs }
        }
    }
}

fn m(region: &Region, scheme: WeightScheme) -> Result<QPoly> {
    Ok(tiling_polynomial(region, scheme)?.value)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidPlacement(msg.into())
}

/// Checks distinctness, membership, colours, class sizes and the cyclic
/// order of `u, v, w, s` around one face (either orientation).
pub fn check_placement(inst: &CondensationInstance) -> Result<()> {
    let cells = [inst.u, inst.v, inst.w, inst.s];
    for (k, c) in cells.iter().enumerate() {
        if cells[..k].contains(c) {
            return Err(invalid(format!("cell {c} listed twice")));
        }
        if !inst.region.contains(c) {
            return Err(invalid(format!("cell {c} is not in the region")));
        }
    }
    let (ups, downs) = (inst.region.up_count(), inst.region.down_count());
    let up = |c: &UnitTriangle| c.is_up();
    match inst.variant {
        Variant::Balanced4 => {
            if up(&inst.u) != up(&inst.w) || up(&inst.v) != up(&inst.s) || up(&inst.u) == up(&inst.v) {
                return Err(invalid("u, w and v, s must be opposite colour pairs"));
            }
            if ups != downs {
                return Err(invalid(format!("{ups} up cells against {downs} down cells")));
            }
        }
        Variant::Unbalanced31 => {
            let big = up(&inst.u);
            if up(&inst.v) != big || up(&inst.w) != big || up(&inst.s) == big {
                return Err(invalid("u, v, w must share a colour and s must have the other"));
            }
            let (more, less) = if big { (ups, downs) } else { (downs, ups) };
            if more != less + 1 {
                return Err(invalid(format!("{ups} up cells against {downs} down cells")));
            }
        }
    }
    let forward = in_cyclic_order(&inst.region, &cells);
    let backward = in_cyclic_order(&inst.region, &[inst.s, inst.w, inst.v, inst.u]);
    match (forward, backward) {
        (None, _) => Err(invalid("cells do not lie on one face")),
        (Some(true), _) | (_, Some(true)) => Ok(()),
        _ => Err(invalid("cells are not in cyclic order")),
    }
}

fn minus(inst: &CondensationInstance, cells: &[UnitTriangle]) -> Result<QPoly> {
    m(&inst.region.without(cells), inst.scheme)
}

/// `M(G) M(G-uvws) = M(G-uv) M(G-ws) + M(G-us) M(G-vw)`.
pub fn kuo4_terms(inst: &CondensationInstance) -> Result<Terms> {
    if inst.variant != Variant::Balanced4 {
        return Err(invalid("expected a balanced instance"));
    }
    check_placement(inst)?;
    let (u, v, w, s) = (inst.u, inst.v, inst.w, inst.s);
    Ok(Terms {
        lhs: [minus(inst, &[])?, minus(inst, &[u, v, w, s])?],
        first: [minus(inst, &[u, v])?, minus(inst, &[w, s])?],
        second: [minus(inst, &[u, s])?, minus(inst, &[v, w])?],
        shift: 0,
    })
}

pub fn verify_kuo4(inst: &CondensationInstance) -> Result<Verdict> {
    Ok(kuo4_terms(inst)?.verdict())
}

/// `M(G-v) M(G-uws) = M(G-u) M(G-vws) + M(G-w) M(G-uvs)`.
pub fn kuo31_terms(inst: &CondensationInstance) -> Result<Terms> {
    let mut t = kuo31_common(inst)?;
    let (u, v, s) = (inst.u, inst.v, inst.s);
    t.second[1] = minus(inst, &[u, v, s])?;
    Ok(t)
}

/// The same identity with `G-vws` in both right-hand products, as it is
/// sometimes quoted. It does not hold in general.
pub fn kuo31_terms_misquoted(inst: &CondensationInstance) -> Result<Terms> {
    kuo31_common(inst)
}

fn kuo31_common(inst: &CondensationInstance) -> Result<Terms> {
    if inst.variant != Variant::Unbalanced31 {
        return Err(invalid("expected an unbalanced instance"));
    }
    check_placement(inst)?;
    let (u, v, w, s) = (inst.u, inst.v, inst.w, inst.s);
    let vws = minus(inst, &[v, w, s])?;
    Ok(Terms {
        lhs: [minus(inst, &[v])?, minus(inst, &[u, w, s])?],
        first: [minus(inst, &[u])?, vws.clone()],
        second: [minus(inst, &[w])?, vws],
        shift: 0,
    })
}

pub fn verify_kuo31(inst: &CondensationInstance) -> Result<Verdict> {
    Ok(kuo31_terms(inst)?.verdict())
}
