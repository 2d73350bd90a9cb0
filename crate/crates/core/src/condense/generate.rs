//! Building condensation instances: placements on the outer face, random
//! ones for sweeps, and the band construction for the Q-family recurrence.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{CondensationInstance, Variant};
use crate::error::{Error, Result};
use crate::lattice::{boundary_walks, build_region, layout, Region, RegionSpec, UnitTriangle, WeightScheme};

/// Outer face cells in counterclockwise order, each listed once.
fn outer_cells(region: &Region) -> Vec<UnitTriangle> {
    let Some(walk) = boundary_walks(region).into_iter().next() else {
        return Vec::new();
    };
    let mut seen = std::collections::HashSet::new();
    walk.into_iter().filter(|c| seen.insert(*c)).collect()
}

/// A balanced placement on the outer face: `u` is the `k`-th up cell met on
/// the walk (cyclically), then `v, w, s` are the next down, up and down
/// cells after it.
pub fn outer_face_instance(region: Region, scheme: WeightScheme, k: usize) -> Option<CondensationInstance> {
    let cells = outer_cells(&region);
    let ups: Vec<usize> = (0..cells.len()).filter(|&i| cells[i].is_up()).collect();
    if ups.is_empty() {
        return None;
    }
    let start = ups[k % ups.len()];
    let n = cells.len();
    let mut picked = vec![start];
    let mut want_up = false;
    for step in 1..n {
        let i = (start + step) % n;
        if cells[i].is_up() == want_up {
            picked.push(i);
            want_up = !want_up;
            if picked.len() == 4 {
                break;
            }
        }
    }
    if picked.len() < 4 {
        return None;
    }
    Some(CondensationInstance {
        u: cells[picked[0]],
        v: cells[picked[1]],
        w: cells[picked[2]],
        s: cells[picked[3]],
        region,
        scheme,
        variant: Variant::Balanced4,
    })
}

/// Picks four increasing walk positions with alternating colours, starting
/// from an up cell.
fn random_placement(cells: &[UnitTriangle], rng: &mut StdRng) -> Option<[UnitTriangle; 4]> {
    let mut out = Vec::with_capacity(4);
    let mut from = 0;
    for k in 0..4 {
        let want_up = k % 2 == 0;
        let choices: Vec<usize> = (from..cells.len()).filter(|&i| cells[i].is_up() == want_up).collect();
        // leave room for the remaining picks
        let room = choices.len().saturating_sub(3 - k);
        if room == 0 {
            return None;
        }
        let i = choices[rng.gen_range(0..room.min(choices.len()))];
        out.push(cells[i]);
        from = i + 1;
    }
    Some([out[0], out[1], out[2], out[3]])
}

/// `n` random balanced outer-face instances on hexagons, K and Q regions
/// with parameters at most 2, weighted by the second weight.
pub fn kuo4_instances(n: usize, seed: u64) -> Vec<CondensationInstance> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let mut p = || rng.gen_range(0..=2u32);
        let spec = match out.len() % 3 {
            0 => RegionSpec::hex(p() + 1, p() + 1, p() + 1),
            1 => RegionSpec::k(p(), p(), p(), p(), p()),
            _ => RegionSpec::q(p(), p(), p(), p(), p(), p()),
        };
        let region = build_region(&spec);
        if !region.is_balanced() || region.len() < 8 {
            continue;
        }
        let cells = outer_cells(&region);
        let Some([u, v, w, s]) = random_placement(&cells, &mut rng) else {
            continue;
        };
        out.push(CondensationInstance {
            region,
            scheme: WeightScheme::Wt2,
            u,
            v,
            w,
            s,
            variant: Variant::Balanced4,
        });
    }
    out
}

fn band_cells(a: u32, b: u32, x: u32, y: u32, z: u32, t: u32) -> Result<(Region, [UnitTriangle; 4])> {
    if b == 0 || t == 0 || y == 0 {
        return Err(Error::InvalidParameters(format!(
            "the band construction needs b, t, y > 0 (got b={b}, t={t}, y={y})"
        )));
    }
    let spec = RegionSpec::q(a, b, x, y, z, t);
    let hex = layout(&spec).hexagon;
    let q = build_region(&spec);
    let (x, y, b) = (x as i32, y as i32, b as i32);
    let row = hex.ne_diag() - x - b;
    let band: Vec<UnitTriangle> = (0..b)
        .map(|k| UnitTriangle::up(x + k, row))
        .chain((0..b - 1).map(|k| UnitTriangle::down(x + k, row)))
        .collect();
    let top = hex.height() - 1;
    let cells = [
        UnitTriangle::up(hex.se_line() - 1, 0),
        UnitTriangle::up(x, row),
        UnitTriangle::up(hex.ne_diag() - hex.height(), top),
        UnitTriangle::down(hex.ne_diag() - hex.height() - x - y, top),
    ];
    Ok((q.with(&band), cells))
}

/// The Q region with the bottom row of its lower dent filled back in, and
/// the four outer-face cells whose removals give the recurrence for the
/// second weight. Needs `b, t, y > 0`.
pub fn q_band_instance(a: u32, b: u32, x: u32, y: u32, z: u32, t: u32) -> Result<CondensationInstance> {
    let (region, [u, v, w, s]) = band_cells(a, b, x, y, z, t)?;
    Ok(CondensationInstance {
        region,
        scheme: WeightScheme::Wt2,
        u,
        v,
        w,
        s,
        variant: Variant::Unbalanced31,
    })
}

/// The six reductions behind the Q recurrence: removing the listed cells
/// from the band region leaves a region whose second-weight polynomial is
/// `q^k` times that of the listed Q region.
pub fn q_band_reductions(
    a: u32,
    b: u32,
    x: u32,
    y: u32,
    z: u32,
    t: u32,
) -> Result<Vec<(Vec<UnitTriangle>, RegionSpec, u32)>> {
    let (_, [u, v, w, s]) = band_cells(a, b, x, y, z, t)?;
    let k = y + z + t + a + b;
    let q = RegionSpec::q;
    Ok(vec![
        (vec![v], q(a, b, x, y, z, t), 0),
        (vec![u], q(a, b - 1, x, y, z + 1, t), 0),
        (vec![w], q(a, b - 1, x, y + 1, z, t - 1), (x + y) * k),
        (vec![u, w, s], q(a, b - 1, x, y, z + 1, t - 1), (x + y - 1) * k),
        (vec![v, w, s], q(a, b, x, y, z, t - 1), (x + y - 1) * k),
        (vec![u, v, s], q(a, b, x, y - 1, z + 1, t), 0),
    ])
}

#[allow(clippy::too_many_arguments)]
fn f_band_cells(
    x: u32,
    y: u32,
    z: u32,
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    e: u32,
    f: u32,
) -> Result<(Region, [UnitTriangle; 4])> {
    if y == 0 || z == 0 {
        return Err(Error::InvalidParameters(format!(
            "the band construction needs y, z > 0 (got y={y}, z={z})"
        )));
    }
    let spec = RegionSpec::f(x, y, z, a, b, c, d, e, f);
    let hex = layout(&spec).hexagon;
    let region = build_region(&spec);
    // the whole southwest side, just outside the line u + v = 0
    let n = hex.sides[5] as i32;
    let band: Vec<UnitTriangle> = (0..n)
        .map(|j| UnitTriangle::up(-1 - j, j))
        .chain((0..n - 1).map(|j| UnitTriangle::down(-2 - j, j)))
        .collect();
    let l = (x + y + z + d + e + f) as i32;
    let cells = [
        UnitTriangle::up(hex.se_line() - 1, 0),
        UnitTriangle::up(-1, 0),
        UnitTriangle::up(-n, hex.height() - 1),
        // touches the lower corner of the e-triangle
        UnitTriangle::down((x + c) as i32 - 1, a as i32 + l - e as i32 - 1),
    ];
    Ok((region.with(&band), cells))
}

/// The F region with a band along its southwest side, and the four
/// outer-face cells whose removals give the recurrence. Needs `y, z > 0`.
#[allow(clippy::too_many_arguments)]
pub fn f_band_instance(
    x: u32,
    y: u32,
    z: u32,
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    e: u32,
    f: u32,
) -> Result<CondensationInstance> {
    let (region, [u, v, w, s]) = f_band_cells(x, y, z, a, b, c, d, e, f)?;
    Ok(CondensationInstance {
        region,
        scheme: WeightScheme::Wt2,
        u,
        v,
        w,
        s,
        variant: Variant::Unbalanced31,
    })
}

/// The six reductions behind the F recurrence. All forced lozenges have
/// weight one, so every shift is zero.
#[allow(clippy::too_many_arguments)]
pub fn f_band_reductions(
    x: u32,
    y: u32,
    z: u32,
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    e: u32,
    f: u32,
) -> Result<Vec<(Vec<UnitTriangle>, RegionSpec, u32)>> {
    let (_, [u, v, w, s]) = f_band_cells(x, y, z, a, b, c, d, e, f)?;
    let r = |x, y, z, e| RegionSpec::f(x, y, z, a, b, c, d, e, f);
    Ok(vec![
        (vec![v], r(x, y, z, e), 0),
        (vec![u], r(x + 1, y - 1, z, e), 0),
        (vec![w], r(x + 1, y, z - 1, e), 0),
        (vec![u, w, s], r(x + 1, y - 1, z - 1, e + 1), 0),
        (vec![v, w, s], r(x, y, z - 1, e + 1), 0),
        (vec![u, v, s], r(x, y - 1, z, e + 1), 0),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::condense::{check_placement, kuo31_terms_misquoted, verify_kuo31};
    use crate::qalgebra::QPoly;
    use crate::enumerate::tiling_polynomial;

    #[test]
    fn generated_instances_are_legal() {
        let insts = kuo4_instances(12, 3);
        assert_eq!(insts.len(), 12);
        for inst in &insts {
            check_placement(inst).unwrap();
        }
        assert_eq!(insts, kuo4_instances(12, 3));
    }

    #[test]
    fn band_reductions_by_enumeration() {
        for (a, b, x, y, z, t) in [(1, 1, 1, 1, 1, 1), (0, 1, 0, 1, 0, 1), (1, 2, 0, 1, 1, 1)] {
            let inst = q_band_instance(a, b, x, y, z, t).unwrap();
            for (cells, spec, k) in q_band_reductions(a, b, x, y, z, t).unwrap() {
                let reduced = tiling_polynomial(&inst.region.without(&cells), WeightScheme::Wt2).unwrap();
                let direct = tiling_polynomial(&build_region(&spec), WeightScheme::Wt2).unwrap();
                assert_eq!(reduced.value, direct.value.shift(k), "{spec} from {cells:?}");
            }
            assert!(verify_kuo31(&inst).unwrap().holds());
        }
    }

    #[test]
    fn f_band_reductions_by_enumeration() {
        for p in [[1, 1, 1, 1, 1, 1, 1, 1, 1], [0, 1, 1, 0, 0, 0, 0, 0, 0], [1, 1, 1, 0, 1, 0, 1, 0, 1], [0, 1, 2, 1, 0, 0, 1, 1, 0]] {
            let [x, y, z, a, b, c, d, e, f] = p;
            let inst = f_band_instance(x, y, z, a, b, c, d, e, f).unwrap();
            for (cells, spec, k) in f_band_reductions(x, y, z, a, b, c, d, e, f).unwrap() {
                let reduced = tiling_polynomial(&inst.region.without(&cells), WeightScheme::Wt2).unwrap();
                let direct = tiling_polynomial(&build_region(&spec), WeightScheme::Wt2).unwrap();
                assert_eq!(reduced.value, direct.value.shift(k), "{spec} from {cells:?}");
            }
            assert!(verify_kuo31(&inst).unwrap().holds());
        }
    }

    #[test]
    fn misquoted_three_one_form_fails() {
        let inst = q_band_instance(1, 1, 1, 1, 1, 1).unwrap();
        assert!(!kuo31_terms_misquoted(&inst).unwrap().verdict().holds());
    }

    #[test]
    fn vanishing_terms_still_balance() {
        // some random placement leaves an untileable reduction
        let with_zero = kuo4_instances(60, 11)
            .iter()
            .map(|inst| crate::condense::kuo4_terms(inst).unwrap())
            .find(|t| t.lhs.iter().chain(&t.first).chain(&t.second).any(QPoly::is_zero))
            .expect("a placement with an untileable reduction");
        assert!(with_zero.verdict().holds());
    }

    #[test]
    fn band_needs_positive_parameters() {
        assert!(q_band_instance(1, 0, 1, 1, 1, 1).is_err());
        assert!(q_band_reductions(1, 1, 1, 1, 1, 0).is_err());
    }
}
