use std::collections::BTreeSet;

use num_bigint::BigInt;
use qtiling::enumerate::{
    count_tilings, tiling_polynomial, tiling_polynomial_naive, tiling_polynomial_naive_bounded, NAIVE_MAX_CELLS,
};
use qtiling::formulas::{exp_g, exp_h, f_hex_wt1, f_hex_wt2, f_macmahon_count};
use qtiling::lattice::{build_region, Family, Region, RegionSpec, UnitTriangle, WeightScheme};
use qtiling::qalgebra::QPoly;
use qtiling::Error;

const SCHEMES: [WeightScheme; 4] =
    [WeightScheme::Unweighted, WeightScheme::Wt1, WeightScheme::Wt2, WeightScheme::Wt3];

fn tuples(len: usize, max: u32) -> impl Iterator<Item = Vec<u32>> {
    let base = max + 1;
    (0..base.pow(len as u32)).map(move |mut m| {
        (0..len)
            .map(|_| {
                let d = m % base;
                m /= base;
                d
            })
            .collect()
    })
}

fn specs(family: Family, max: u32) -> impl Iterator<Item = RegionSpec> {
    tuples(family.param_names().len(), max).map(move |p| RegionSpec::from_params(family, &p).unwrap())
}

fn poly(r: &Region, s: WeightScheme) -> QPoly {
    tiling_polynomial(r, s).unwrap().value
}

/// Number of perfect matchings by recursion on the first cell.
fn matchings(left: &mut BTreeSet<UnitTriangle>) -> u64 {
    let Some(&c) = left.iter().next() else { return 1 };
    left.remove(&c);
    let mut n = 0;
    for m in c.neighbors() {
        if left.remove(&m) {
            n += matchings(left);
            left.insert(m);
        }
    }
    left.insert(c);
    n
}

#[test]
fn hexagon_values() {
    for p in tuples(3, 3) {
        let r = build_region(&RegionSpec::hex(p[0], p[1], p[2]));
        assert_eq!(poly(&r, WeightScheme::Wt1), f_hex_wt1(p[0], p[1], p[2]).expand().unwrap());
        assert_eq!(poly(&r, WeightScheme::Wt2), f_hex_wt2(p[0], p[1], p[2]).expand().unwrap());
        assert_eq!(count_tilings(&r).unwrap(), f_macmahon_count(p[0], p[1], p[2]));
    }
    assert_eq!(poly(&build_region(&RegionSpec::hex(1, 1, 1)), WeightScheme::Wt2), QPoly::from_pairs([(1, 1), (2, 1)]));
    assert_eq!(count_tilings(&build_region(&RegionSpec::hex(2, 2, 2))).unwrap(), BigInt::from(20));
}

#[test]
fn trivial_regions() {
    for s in SCHEMES {
        assert!(poly(&Region::empty(), s).is_one());
        assert!(tiling_polynomial_naive(&Region::empty(), s).unwrap().value.is_one());
        let lone = Region::from_cells([UnitTriangle::up(0, 0)]);
        assert!(poly(&lone, s).is_zero());
        assert!(tiling_polynomial_naive(&lone, s).unwrap().value.is_zero());
    }
    let r = build_region(&RegionSpec::hex(1, 2, 1));
    assert_eq!(tiling_polynomial_naive(&r, WeightScheme::Unweighted).unwrap().value, QPoly::constant(3));
}

#[test]
fn naive_refuses_large_regions() {
    let r = build_region(&RegionSpec::hex(4, 4, 4));
    assert!(r.len() > NAIVE_MAX_CELLS);
    assert!(matches!(
        tiling_polynomial_naive(&r, WeightScheme::Wt2),
        Err(Error::RegionTooLarge { .. })
    ));
    assert!(tiling_polynomial_naive_bounded(&r, WeightScheme::Unweighted, 200).is_ok());
}

#[test]
fn counts_agree_with_plain_recursion() {
    let mut corpus: Vec<RegionSpec> = specs(Family::K, 1).collect();
    corpus.extend(specs(Family::Q, 1));
    corpus.extend(specs(Family::B, 1).step_by(5));
    corpus.extend(specs(Family::F, 1).step_by(17));
    for spec in corpus {
        let r = build_region(&spec);
        if r.len() > 70 {
            continue;
        }
        let n = matchings(&mut r.cells().clone());
        assert_eq!(count_tilings(&r).unwrap(), BigInt::from(n), "{spec}");
    }
}

#[test]
fn dp_matches_naive_on_small_regions() {
    let mut corpus: Vec<RegionSpec> = specs(Family::Hex, 2).collect();
    corpus.extend(specs(Family::K, 1));
    corpus.extend(specs(Family::Q, 1));
    corpus.extend(specs(Family::B, 1).step_by(3));
    corpus.extend(specs(Family::F, 1).step_by(7));
    let mut checked = 0;
    for spec in corpus {
        let r = build_region(&spec);
        if r.len() > 40 {
            continue;
        }
        checked += 1;
        for s in SCHEMES {
            assert_eq!(poly(&r, s), tiling_polynomial_naive(&r, s).unwrap().value, "{spec} {s}");
        }
    }
    assert!(checked > 100);
}

#[test]
fn weighted_values_at_one_are_counts() {
    let mut corpus: Vec<RegionSpec> = specs(Family::K, 2).collect();
    corpus.extend(specs(Family::Q, 1));
    corpus.extend(specs(Family::F, 1).step_by(11));
    for spec in corpus {
        let r = build_region(&spec);
        let n = count_tilings(&r).unwrap();
        for s in SCHEMES {
            let p = poly(&r, s);
            assert_eq!(p.eval_at_one(), n, "{spec} {s}");
            assert!(p.has_nonnegative_coeffs());
        }
    }
}

#[test]
fn first_and_second_weights_differ_by_a_monomial() {
    for spec in specs(Family::F, 1) {
        let r = build_region(&spec);
        let p: Vec<i64> = spec.params().into_iter().map(i64::from).collect();
        let d = exp_g(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8])
            - exp_h(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]);
        let (w1, w2) = (poly(&r, WeightScheme::Wt1), poly(&r, WeightScheme::Wt2));
        if d >= 0 {
            assert_eq!(w1, w2.shift(d as u32), "{spec}");
        } else {
            assert_eq!(w2, w1.shift((-d) as u32), "{spec}");
        }
    }
}

#[test]
fn value_is_tagged_with_its_region() {
    let r = build_region(&RegionSpec::q(1, 1, 1, 1, 1, 1));
    let t = tiling_polynomial(&r, WeightScheme::Wt3).unwrap();
    assert_eq!(t.region_hash, r.digest());
    assert_eq!(t.scheme, WeightScheme::Wt3);
    let other = build_region(&RegionSpec::q(1, 1, 1, 1, 1, 2));
    assert_ne!(t.region_hash, other.digest());
}
