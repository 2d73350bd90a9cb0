//! The three-term recurrences for the Q, B and F families, checked on
//! enumerated second-weight polynomials.

use super::{Terms, Verdict};
use crate::enumerate::tiling_polynomial;
use crate::error::{Error, Result};
use crate::lattice::{build_region, RegionSpec, WeightScheme};
use crate::qalgebra::QPoly;

/// Largest parameter [`verify_recurrence`] accepts. The shifted regions
/// reach one more than this.
pub const MAX_RECURRENCE_PARAM: u32 = 4;

/// `M(l0) M(l1) = M(a0) M(a1) + q^shift M(b0) M(b1)` for second weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    pub lhs: [RegionSpec; 2],
    pub first: [RegionSpec; 2],
    pub second: [RegionSpec; 2],
    pub shift: u32,
}

impl Recurrence {
    pub fn regions(&self) -> impl Iterator<Item = &RegionSpec> {
        self.lhs.iter().chain(&self.first).chain(&self.second)
    }
}

fn need(ok: bool, what: &str, spec: &RegionSpec) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!("{spec}: recurrence needs {what}")))
    }
}

/// The six regions and the power of `q` for the recurrence at `spec`.
pub fn recurrence(spec: &RegionSpec) -> Result<Recurrence> {
    if let Some(p) = spec.params().into_iter().find(|&p| p > MAX_RECURRENCE_PARAM) {
        return Err(Error::InvalidParameters(format!(
            "{spec}: parameter {p} exceeds the enumeration bound {MAX_RECURRENCE_PARAM}"
        )));
    }
    match *spec {
        RegionSpec::Q { a, b, x, y, z, t } => {
            need(b > 0 && t > 0 && y > 0, "b, t, y > 0", spec)?;
            let q = |b, y, z, t| RegionSpec::q(a, b, x, y, z, t);
            Ok(Recurrence {
                lhs: [q(b, y, z, t), q(b - 1, y, z + 1, t - 1)],
                first: [q(b - 1, y, z + 1, t), q(b, y, z, t - 1)],
                second: [q(b - 1, y + 1, z, t - 1), q(b, y - 1, z + 1, t)],
                shift: y + z + t + a + b,
            })
        }
        RegionSpec::B { x, y, z, t, a, b, c, d } => {
            need(z > 0 && t > 0, "z, t > 0", spec)?;
            let r = |z, t, c, d| RegionSpec::b(x, y, z, t, a, b, c, d);
            Ok(Recurrence {
                lhs: [r(z, t, c, d), r(z - 1, t - 1, c + 1, d + 1)],
                first: [r(z - 1, t, c, d + 1), r(z, t - 1, c + 1, d)],
                second: [r(z - 1, t, c + 1, d), r(z, t - 1, c, d + 1)],
                shift: 0,
            })
        }
        RegionSpec::F { x, y, z, a, b, c, d, e, f } => {
            need(y > 0 && z > 0, "y, z > 0", spec)?;
            let r = |x, y, z, e| RegionSpec::f(x, y, z, a, b, c, d, e, f);
            Ok(Recurrence {
                lhs: [r(x, y, z, e), r(x + 1, y - 1, z - 1, e + 1)],
                first: [r(x + 1, y, z - 1, e), r(x, y - 1, z, e + 1)],
                second: [r(x + 1, y - 1, z, e), r(x, y, z - 1, e + 1)],
                shift: 0,
            })
        }
        _ => Err(Error::InvalidParameters(format!(
            "{spec}: only the Q, B and F families have a recurrence"
        ))),
    }
}

/// Evaluates the recurrence at `spec` with `m` supplying each region's
/// polynomial, so sweeps can share a cache.
pub fn recurrence_with(spec: &RegionSpec, mut m: impl FnMut(&RegionSpec) -> Result<QPoly>) -> Result<Terms> {
    let rec = recurrence(spec)?;
    Ok(Terms {
        lhs: [m(&rec.lhs[0])?, m(&rec.lhs[1])?],
        first: [m(&rec.first[0])?, m(&rec.first[1])?],
        second: [m(&rec.second[0])?, m(&rec.second[1])?],
        shift: rec.shift,
    })
}

/// Checks the recurrence at `spec` on enumerated second-weight polynomials.
pub fn verify_recurrence(spec: &RegionSpec) -> Result<Verdict> {
    let terms = recurrence_with(spec, |s| Ok(tiling_polynomial(&build_region(s), WeightScheme::Wt2)?.value))?;
    Ok(terms.verdict())
}
