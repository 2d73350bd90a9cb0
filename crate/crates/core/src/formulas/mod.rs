//! Closed product formulas, in factored form.
//!
//! Every function returns a [`QProduct`]; weighted generating functions
//! include their `q`-power prefactor. Parameter order follows
//! [`RegionSpec`](crate::lattice::RegionSpec).

mod exponents;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{RegionSpec, WeightScheme};
use crate::qalgebra::{hyperfactorial, q_hyperfactorial, QProduct};

pub use exponents::{c2, exp_a, exp_e, exp_g, exp_h, exp_hex, exp_k, exp_q3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    MacMahonQ,
    MacMahon1,
    MainCount,
    MainQ,
    HexWt1,
    HexWt2,
    KWt2,
    QWt2,
    QWt3,
    BWt2,
    ExpG,
    ExpH,
    ExpE,
    ExpA,
    CorollaryPP,
}

impl FormulaId {
    pub const ALL: [FormulaId; 15] = [
        FormulaId::MacMahonQ,
        FormulaId::MacMahon1,
        FormulaId::MainCount,
        FormulaId::MainQ,
        FormulaId::HexWt1,
        FormulaId::HexWt2,
        FormulaId::KWt2,
        FormulaId::QWt2,
        FormulaId::QWt3,
        FormulaId::BWt2,
        FormulaId::ExpG,
        FormulaId::ExpH,
        FormulaId::ExpE,
        FormulaId::ExpA,
        FormulaId::CorollaryPP,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FormulaId::MacMahonQ => "macmahon_q",
            FormulaId::MacMahon1 => "macmahon_1",
            FormulaId::MainCount => "main_count",
            FormulaId::MainQ => "main_q",
            FormulaId::HexWt1 => "hex_wt1",
            FormulaId::HexWt2 => "hex_wt2",
            FormulaId::KWt2 => "k_wt2",
            FormulaId::QWt2 => "q_wt2",
            FormulaId::QWt3 => "q_wt3",
            FormulaId::BWt2 => "b_wt2",
            FormulaId::ExpG => "exp_g",
            FormulaId::ExpH => "exp_h",
            FormulaId::ExpE => "exp_e",
            FormulaId::ExpA => "exp_a",
            FormulaId::CorollaryPP => "corollary_pp",
        }
    }

    /// Number of integer arguments.
    pub fn arity(self) -> usize {
        match self {
            FormulaId::MacMahonQ | FormulaId::MacMahon1 | FormulaId::HexWt1 | FormulaId::HexWt2 => 3,
            FormulaId::KWt2 => 5,
            FormulaId::QWt2 | FormulaId::QWt3 | FormulaId::ExpE | FormulaId::CorollaryPP => 6,
            FormulaId::BWt2 | FormulaId::ExpA => 8,
            FormulaId::MainCount | FormulaId::MainQ | FormulaId::ExpG | FormulaId::ExpH => 9,
        }
    }

    /// Evaluates the formula. Exponent and count formulas come back as
    /// constant products.
    pub fn evaluate(self, p: &[u32]) -> Result<FormulaValue> {
        if p.len() != self.arity() {
            return Err(Error::InvalidParameters(format!(
                "{} takes {} arguments, got {}",
                self.tag(),
                self.arity(),
                p.len()
            )));
        }
        let i: Vec<i64> = p.iter().map(|&v| v as i64).collect();
        Ok(match self {
            FormulaId::MacMahonQ => FormulaValue::Product(f_macmahon_q(p[0], p[1], p[2])),
            FormulaId::MacMahon1 => FormulaValue::Integer(f_macmahon_count(p[0], p[1], p[2])),
            FormulaId::MainCount => FormulaValue::Integer(f_main_count(
                p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8],
            )),
            FormulaId::MainQ => FormulaValue::Product(f_main_q(
                p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8],
            )),
            FormulaId::HexWt1 => FormulaValue::Product(f_hex_wt1(p[0], p[1], p[2])),
            FormulaId::HexWt2 => FormulaValue::Product(f_hex_wt2(p[0], p[1], p[2])),
            FormulaId::KWt2 => FormulaValue::Product(f_k_wt2(p[0], p[1], p[2], p[3], p[4])),
            FormulaId::QWt2 => {
                FormulaValue::Product(f_q_wt2(p[0], p[1], p[2], p[3], p[4], p[5]))
            }
            FormulaId::QWt3 => {
                FormulaValue::Product(f_q_wt3(p[0], p[1], p[2], p[3], p[4], p[5]))
            }
            FormulaId::BWt2 => FormulaValue::Product(f_b_wt2(
                p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7],
            )),
            FormulaId::ExpG => FormulaValue::Integer(
                exp_g(i[0], i[1], i[2], i[3], i[4], i[5], i[6], i[7], i[8]).into(),
            ),
            FormulaId::ExpH => FormulaValue::Integer(
                exp_h(i[0], i[1], i[2], i[3], i[4], i[5], i[6], i[7], i[8]).into(),
            ),
            FormulaId::ExpE => {
                FormulaValue::Integer(exp_e(i[0], i[1], i[2], i[3], i[4], i[5]).into())
            }
            FormulaId::ExpA => FormulaValue::Integer(
                exp_a(i[0], i[1], i[2], i[3], i[4], i[5], i[6], i[7]).into(),
            ),
            FormulaId::CorollaryPP => FormulaValue::Integer(f_corollary_pp(
                p[0], p[1], p[2], p[3], p[4], p[5],
            )),
        })
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown formula {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaValue {
    Product(QProduct),
    Integer(BigInt),
}

/// `H_q(n)` for a sum of parameters.
fn hq(n: u32) -> QProduct {
    q_hyperfactorial(n)
}

fn ratio(num: &[u32], den: &[u32]) -> QProduct {
    let n: QProduct = num.iter().map(|&k| hq(k)).product();
    let d: QProduct = den.iter().map(|&k| hq(k)).product();
    n / d
}

fn int_ratio(num: &[u32], den: &[u32]) -> BigInt {
    let n: BigInt = num.iter().map(|&k| hyperfactorial(k)).product();
    let d: BigInt = den.iter().map(|&k| hyperfactorial(k)).product();
    debug_assert!((&n % &d) == BigInt::from(0));
    n / d
}

/// Volume generating function of plane partitions in an `a × b × c` box.
pub fn f_macmahon_q(a: u32, b: u32, c: u32) -> QProduct {
    ratio(&[a, b, c, a + b + c], &[a + b, b + c, c + a])
}

/// Number of plane partitions in an `a × b × c` box.
pub fn f_macmahon_count(a: u32, b: u32, c: u32) -> BigInt {
    int_ratio(&[a, b, c, a + b + c], &[a + b, b + c, c + a])
}

/// Hyperfactorial arguments of the three-bowtie product, numerator then
/// denominator, with multiplicity.
#[allow(clippy::too_many_arguments)]
fn main_terms(
    x: u32,
    y: u32,
    z: u32,
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    e: u32,
    f: u32,
) -> (Vec<u32>, Vec<u32>) {
    let big = a + b + c + d + e + f;
    let s = x + y + z;
    let num = vec![
        // line 1
        x, y, z, a, a, b, b, c, c, d, e, f,
        d + e + f + s, d + e + f + s, d + e + f + s, d + e + f + s,
        // line 2
        big + 2 * s, big + s, big + s,
        // line 3
        a + b + d + e + s, a + c + d + f + s, b + c + e + f + s,
        // line 4
        a + d + x + y, b + e + y + z, c + f + z + x,
        // line 5
        big - a + x + y + 2 * z, big - b + 2 * x + y + z, big - c + x + 2 * y + z,
    ];
    let den = vec![
        // line 1
        a + d, b + e, c + f, d + e + s, e + f + s, f + d + s,
        // line 2
        big + 2 * x + y + z, big + x + 2 * y + z, big + x + y + 2 * z,
        // line 3
        a + d + e + f + s, a + d + e + f + s,
        b + d + e + f + s, b + d + e + f + s,
        c + d + e + f + s, c + d + e + f + s,
        // line 4
        a + b + y, b + c + z, c + a + x,
        // line 5
        b + c + e + f + x + y + 2 * z, c + a + d + f + 2 * x + y + z, a + b + d + e + x + 2 * y + z,
    ];
    (num, den)
}

/// Number of tilings of the three-bowtie region `F(x,y,z; a,b,c; d,e,f)`.
#[allow(clippy::too_many_arguments)]
pub fn f_main_count(x: u32, y: u32, z: u32, a: u32, b: u32, c: u32, d: u32, e: u32, f: u32) -> BigInt {
    let (num, den) = main_terms(x, y, z, a, b, c, d, e, f);
    int_ratio(&num, &den)
}

/// Volume generating function of the generalized plane partitions that
/// correspond to tilings of `F(x,y,z; a,b,c; d,e,f)`.
#[allow(clippy::too_many_arguments)]
pub fn f_main_q(x: u32, y: u32, z: u32, a: u32, b: u32, c: u32, d: u32, e: u32, f: u32) -> QProduct {
    let (num, den) = main_terms(x, y, z, a, b, c, d, e, f);
    ratio(&num, &den)
}

/// First-weight generating function of `Hex(a, b, c)`.
pub fn f_hex_wt1(a: u32, b: u32, c: u32) -> QProduct {
    f_macmahon_q(a, b, c).times_q_pow(exp_hex(a as i64, b as i64).0)
}

/// Second-weight generating function of `Hex(a, b, c)`.
pub fn f_hex_wt2(a: u32, b: u32, c: u32) -> QProduct {
    f_macmahon_q(a, b, c).times_q_pow(exp_hex(a as i64, b as i64).1)
}

/// Second-weight generating function of `K_a(x, y, z, t)`.
pub fn f_k_wt2(a: u32, x: u32, y: u32, z: u32, t: u32) -> QProduct {
    let e = exp_k(a as i64, x as i64, y as i64, z as i64, t as i64);
    ratio(
        &[a, x, y, z, t, a + x + y, a + y + z, a + t + x, a + x + y + z + t],
        &[a + x, a + y, y + z, t + x, a + x + y + z, a + x + y + t, a + z + t],
    )
    .times_q_pow(e)
}

/// Hyperfactorial arguments shared by the two Q-region products; they
/// differ only in the squared factor of the last line.
fn q_terms(a: u32, b: u32, x: u32, y: u32, z: u32, t: u32, squared: u32) -> (Vec<u32>, Vec<u32>) {
    let num = vec![
        x, y, z, t, a, b,
        a + b + x + 2 * y + z + t, a + b + x + y + t,
        a + x + y, b + y + t, squared, squared,
    ];
    let den = vec![
        a + x, b + t, a + b + y,
        a + b + y + z + t, a + b + x + 2 * y + t, a + b + x + y + z,
        x + y + t, a + y + z, b + y + z,
    ];
    (num, den)
}

/// Second-weight generating function of `Q_{a,b}(x, y, z, t)`, including `q^E`.
///
/// The squared factor of the last line is `H_q(a+b+y+z)`, the same one the
/// left-lozenge formula carries; see [`f_q_wt2_printed`].
pub fn f_q_wt2(a: u32, b: u32, x: u32, y: u32, z: u32, t: u32) -> QProduct {
    let e = exp_e(a as i64, b as i64, x as i64, y as i64, z as i64, t as i64);
    let (num, den) = q_terms(a, b, x, y, z, t, a + b + y + z);
    ratio(&num, &den).times_q_pow(e)
}

/// [`f_q_wt2`] with the squared factor `H_q(a+b+y+t)` as it is usually
/// printed. It disagrees with enumeration whenever `z != t`.
pub fn f_q_wt2_printed(a: u32, b: u32, x: u32, y: u32, z: u32, t: u32) -> QProduct {
    let e = exp_e(a as i64, b as i64, x as i64, y as i64, z as i64, t as i64);
    let (num, den) = q_terms(a, b, x, y, z, t, a + b + y + t);
    ratio(&num, &den).times_q_pow(e)
}

/// Left-lozenge generating function of `Q_{a,b}(x, y, z, t)`.
pub fn f_q_wt3(a: u32, b: u32, x: u32, y: u32, z: u32, t: u32) -> QProduct {
    let e = exp_q3(a as i64, b as i64, x as i64, y as i64, z as i64, t as i64);
    let (num, den) = q_terms(a, b, x, y, z, t, a + b + y + z);
    ratio(&num, &den).times_q_pow(e)
}

/// Hyperfactorial arguments of the B-region product in the printed
/// arrangement.
#[allow(clippy::too_many_arguments)]
fn b_terms(x: u32, y: u32, z: u32, t: u32, a: u32, b: u32, c: u32, d: u32) -> (Vec<u32>, Vec<u32>) {
    let s = a + b + c + d;
    let num = vec![
        // line 1
        x, y, z, t, a, a, b, c, d,
        // line 2
        s + y + z + 2 * t, s + x + 2 * z + t,
        // line 3
        s + x + y + 2 * z + 2 * t, s + x + y + z + t,
        // line 4
        a + b + c + x + z + t, a + c + d + y + z + t,
        b + c + d + z + t, b + c + d + z + t, b + c + d + z + t,
        // line 5
        d + y + t, b + x + z, a + c + z + t,
    ];
    let den = vec![
        // line 1
        a + c, b + x, d + y,
        // line 2
        a + c + d + y + z + 2 * t, a + b + c + x + 2 * z + t,
        // line 3
        s + x + y + z + 2 * t, s + x + y + 2 * z + t,
        // line 4
        b + c + d + x + z + t, b + c + d + y + z + t, s + z + t, s + z + t,
        // line 5
        b + c + z + t, c + d + z + t, a + x + z, a + y + t, b + d + z + t,
    ];
    (num, den)
}

/// Second-weight generating function of `B(x,y,z,t; a,b,c,d)`, including `q^A`.
///
/// The product is the printed one with `x` and `y` exchanged (the prefactor
/// `q^A` is not); this is the arrangement both base-case splits of the
/// region force. See [`f_b_wt2_printed`].
#[allow(clippy::too_many_arguments)]
pub fn f_b_wt2(x: u32, y: u32, z: u32, t: u32, a: u32, b: u32, c: u32, d: u32) -> QProduct {
    let e = exp_a(
        x as i64, y as i64, z as i64, t as i64, a as i64, b as i64, c as i64, d as i64,
    );
    let (num, den) = b_terms(y, x, z, t, a, b, c, d);
    ratio(&num, &den).times_q_pow(e)
}

/// The B-region product exactly as usually printed, prefactor included.
#[allow(clippy::too_many_arguments)]
pub fn f_b_wt2_printed(x: u32, y: u32, z: u32, t: u32, a: u32, b: u32, c: u32, d: u32) -> QProduct {
    let e = exp_a(
        x as i64, y as i64, z as i64, t as i64, a as i64, b as i64, c as i64, d as i64,
    );
    let (num, den) = b_terms(x, y, z, t, a, b, c, d);
    ratio(&num, &den).times_q_pow(e)
}

/// Number of plane partitions in the `(z+x+a+b) × (x+y+b+c)` box with
/// entries at most `y+z+c+a` obeying the three boundary constraints.
pub fn f_corollary_pp(a: u32, b: u32, c: u32, x: u32, y: u32, z: u32) -> BigInt {
    let s = x + y + z;
    let t = a + b + c;
    int_ratio(
        &[
            x, y, z, a, b, c, s,
            t + 2 * s, t + s, t + s,
            a + b + s, a + c + s, b + c + s,
            a + x + y, b + y + z, c + z + x,
        ],
        &[
            t + 2 * x + y + z, t + x + 2 * y + z, t + x + y + 2 * z,
            a + s, a + s, b + s, b + s, c + s, c + s,
            a + b + y, b + c + z, c + a + x,
        ],
    )
}

/// The closed formula matching a region and a weight, if there is one.
///
/// Weighted cases come back as products (F-regions shifted by `q^g` or
/// `q^h`); unweighted cases come back as integers.
pub fn formula_for(spec: &RegionSpec, scheme: WeightScheme) -> Result<FormulaValue> {
    use FormulaValue::{Integer, Product};
    use WeightScheme::*;
    let at_one = |p: QProduct| -> Result<FormulaValue> { Ok(Integer(p.eval_at_one()?)) };
    match (*spec, scheme) {
        (RegionSpec::Hex { a, b, c }, Wt1) => Ok(Product(f_hex_wt1(a, b, c))),
        (RegionSpec::Hex { a, b, c }, Wt2) => Ok(Product(f_hex_wt2(a, b, c))),
        (RegionSpec::Hex { a, b, c }, Unweighted) => Ok(Integer(f_macmahon_count(a, b, c))),
        (RegionSpec::K { a, x, y, z, t }, Wt2) => Ok(Product(f_k_wt2(a, x, y, z, t))),
        (RegionSpec::K { a, x, y, z, t }, Unweighted) => at_one(f_k_wt2(a, x, y, z, t)),
        (RegionSpec::Q { a, b, x, y, z, t }, Wt2) => Ok(Product(f_q_wt2(a, b, x, y, z, t))),
        (RegionSpec::Q { a, b, x, y, z, t }, Wt3) => Ok(Product(f_q_wt3(a, b, x, y, z, t))),
        (RegionSpec::Q { a, b, x, y, z, t }, Unweighted) => at_one(f_q_wt3(a, b, x, y, z, t)),
        (RegionSpec::B { x, y, z, t, a, b, c, d }, Wt2) => {
            Ok(Product(f_b_wt2(x, y, z, t, a, b, c, d)))
        }
        (RegionSpec::B { x, y, z, t, a, b, c, d }, Unweighted) => {
            at_one(f_b_wt2(x, y, z, t, a, b, c, d))
        }
        (RegionSpec::F { x, y, z, a, b, c, d, e, f }, Wt1 | Wt2) => {
            let p: [i64; 9] = [x, y, z, a, b, c, d, e, f].map(i64::from);
            let shift = if scheme == Wt1 {
                exp_g(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8])
            } else {
                exp_h(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8])
            };
            Ok(Product(f_main_q(x, y, z, a, b, c, d, e, f).times_q_pow(shift)))
        }
        (RegionSpec::F { x, y, z, a, b, c, d, e, f }, Unweighted) => {
            Ok(Integer(f_main_count(x, y, z, a, b, c, d, e, f)))
        }
        _ => Err(Error::InvalidParameters(format!(
            "no closed formula for {spec} under {scheme}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::QPoly;

    #[test]
    fn macmahon_small() {
        assert!(f_macmahon_q(0, 3, 4).expand().unwrap().is_one());
        assert_eq!(f_macmahon_q(1, 1, 1).expand().unwrap(), QPoly::from_pairs([(0, 1), (1, 1)]));
        assert_eq!(f_macmahon_q(2, 2, 2).eval_at_one().unwrap(), 20.into());
        assert_eq!(f_macmahon_count(2, 2, 2), 20.into());
    }

    #[test]
    fn hex_weights() {
        assert_eq!(f_hex_wt2(1, 1, 1).expand().unwrap(), QPoly::from_pairs([(1, 1), (2, 1)]));
        assert!(f_hex_wt1(0, 3, 2).expand().unwrap().is_one());
        assert_eq!(f_hex_wt1(2, 3, 0).expand().unwrap().low_degree(), Some(12));
    }

    #[test]
    fn main_reduces_to_macmahon() {
        for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    assert_eq!(
                        f_main_q(x, y, z, 0, 0, 0, 0, 0, 0),
                        f_macmahon_q(z + x, x + y, y + z)
                    );
                    assert_eq!(
                        f_main_count(x, y, z, 0, 0, 0, 0, 0, 0),
                        f_macmahon_count(z + x, x + y, y + z)
                    );
                }
            }
        }
        assert_eq!(f_main_count(1, 1, 1, 0, 0, 0, 0, 0, 0), 20.into());
    }

    #[test]
    fn count_is_q_product_at_one() {
        for p in [[1, 1, 1, 1, 1, 1, 0, 0, 0], [2, 0, 1, 1, 2, 0, 1, 1, 2], [0, 0, 0, 2, 2, 2, 2, 2, 2]] {
            let q = f_main_q(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]);
            let n = f_main_count(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]);
            assert_eq!(q.eval_at_one().unwrap(), n);
        }
    }

    #[test]
    fn corollary_matches_main() {
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for (x, y, z) in [(0, 0, 0), (1, 2, 0), (2, 1, 1), (1, 1, 1)] {
                        assert_eq!(
                            f_corollary_pp(a, b, c, x, y, z),
                            f_main_count(x, y, z, a, b, c, 0, 0, 0)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ids_roundtrip() {
        for id in FormulaId::ALL {
            assert_eq!(id.tag().parse::<FormulaId>().unwrap(), id);
        }
        assert!(FormulaId::MainQ.evaluate(&[0; 3]).is_err());
        assert_eq!(
            FormulaId::MainQ.evaluate(&[0; 9]).unwrap(),
            FormulaValue::Product(QProduct::one())
        );
    }

    #[test]
    fn all_zero_is_one() {
        assert!(f_k_wt2(0, 0, 0, 0, 0).expand().unwrap().is_one());
        assert!(f_q_wt2(0, 0, 0, 0, 0, 0).expand().unwrap().is_one());
        assert!(f_q_wt3(0, 0, 0, 0, 0, 0).expand().unwrap().is_one());
        assert!(f_b_wt2(0, 0, 0, 0, 0, 0, 0, 0).expand().unwrap().is_one());
        assert_eq!(f_corollary_pp(0, 0, 0, 0, 0, 0), 1.into());
    }
}
