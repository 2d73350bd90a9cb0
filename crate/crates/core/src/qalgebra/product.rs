//! Formal products `±q^m · Π Φ_d(q)^{e_d}` over cyclotomic polynomials.
//!
//! Every `q`-integer factors as `[n]_q = Π_{d | n, d > 1} Φ_d(q)`, so products
//! and ratios of `q`-factorials and `q`-hyperfactorials have a unique
//! representation as an exponent map on `d`. Cancellation happens exactly in
//! this basis; `[4]_q / [2]_q` for instance is `Φ_4`, which no multiset of
//! `q`-integers can express.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cyclotomic::{cyclotomic, divisors, euler_phi, mobius, prime_power_base};
use super::QPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QProduct {
    negative: bool,
    qpow: i64,
    cyclo: BTreeMap<u32, i64>,
}

impl Default for QProduct {
    fn default() -> Self {
        Self::one()
    }
}

impl QProduct {
    pub fn one() -> Self {
        Self {
            negative: false,
            qpow: 0,
            cyclo: BTreeMap::new(),
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self {
            qpow: k,
            ..Self::one()
        }
    }

    /// `Φ_d(q)^e` for `d >= 2`.
    pub fn cyclotomic_power(d: u32, e: i64) -> Self {
        assert!(d >= 2, "Φ_1 is excluded from the canonical basis");
        let mut p = Self::one();
        p.bump(d, e);
        p
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn qpow(&self) -> i64 {
        self.qpow
    }

    pub fn cyclotomic_exponents(&self) -> &BTreeMap<u32, i64> {
        &self.cyclo
    }

    pub fn exponent_of(&self, d: u32) -> i64 {
        self.cyclo.get(&d).copied().unwrap_or(0)
    }

    fn bump(&mut self, d: u32, e: i64) {
        if e == 0 {
            return;
        }
        let entry = self.cyclo.entry(d).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.cyclo.remove(&d);
        }
    }

    pub fn negate(mut self) -> Self {
        self.negative = !self.negative;
        self
    }

    pub fn times_q_pow(mut self, k: i64) -> Self {
        self.qpow += k;
        self
    }

    pub fn pow(&self, n: i64) -> Self {
        Self {
            negative: self.negative && n.rem_euclid(2) == 1,
            qpow: self.qpow * n,
            cyclo: self.cyclo.iter().map(|(d, e)| (*d, e * n)).collect(),
        }
    }

    pub fn recip(&self) -> Self {
        Self {
            negative: self.negative,
            qpow: -self.qpow,
            cyclo: self.cyclo.iter().map(|(d, e)| (*d, -e)).collect(),
        }
    }

    pub fn is_expandable(&self) -> bool {
        self.qpow >= 0 && self.cyclo.values().all(|e| *e >= 0)
    }

    fn check_expandable(&self) -> Result<()> {
        if self.is_expandable() {
            Ok(())
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    /// Degree of the polynomial part `Π Φ_d^{e_d}` (without the `q^m` factor).
    pub fn cyclotomic_degree(&self) -> i64 {
        self.cyclo
            .iter()
            .map(|(d, e)| euler_phi(*d) as i64 * e)
            .sum()
    }

    /// Exact polynomial value.
    ///
    /// The cyclotomic part is rewritten through Möbius inversion as
    /// `Π_n (1 - q^n)^{k_n}` and evaluated in `Z[q]/(q^{D+1})`, `D` being the
    /// final degree. Multiplying or dividing by `1 - q^n` is a single linear
    /// pass, and because the true result is a polynomial of degree `D` the
    /// truncation loses nothing.
    pub fn expand(&self) -> Result<QPoly> {
        self.check_expandable()?;
        let degree = self.cyclotomic_degree() as usize;
        let mut binomial_exps: BTreeMap<u32, i64> = BTreeMap::new();
        for (&d, &e) in &self.cyclo {
            for n in divisors(d) {
                let mu = mobius(d / n) as i64;
                if mu != 0 {
                    *binomial_exps.entry(n).or_insert(0) += mu * e;
                }
            }
        }
        let mut dense = vec![BigInt::zero(); degree + 1];
        dense[0] = BigInt::one();
        for (&n, &k) in &binomial_exps {
            let n = n as usize;
            if n > degree {
                continue;
            }
            if k > 0 {
                for _ in 0..k {
                    for i in (n..=degree).rev() {
                        let (lo, hi) = dense.split_at_mut(i);
                        hi[0] -= &lo[i - n];
                    }
                }
            } else {
                for _ in 0..(-k) {
                    for i in n..=degree {
                        let (lo, hi) = dense.split_at_mut(i);
                        hi[0] += &lo[i - n];
                    }
                }
            }
        }
        let mut poly = QPoly::from_dense(self.qpow as u32, &dense);
        if self.negative {
            poly = -&poly;
        }
        Ok(poly)
    }

    /// Reference expansion multiplying out the cyclotomic polynomials one
    /// factor at a time. Quadratic and slow; kept as a cross-check for
    /// [`QProduct::expand`].
    pub fn expand_by_factors(&self) -> Result<QPoly> {
        self.check_expandable()?;
        let mut acc = QPoly::q_pow(self.qpow as u32);
        for (&d, &e) in &self.cyclo {
            let phi = cyclotomic(d);
            for _ in 0..e {
                acc = &acc * &phi;
            }
        }
        if self.negative {
            acc = -&acc;
        }
        Ok(acc)
    }

    /// Value at `q = 1` without expanding: `Φ_d(1)` is `p` when `d` is a power
    /// of the prime `p` and `1` otherwise.
    pub fn eval_at_one(&self) -> Result<BigInt> {
        self.check_expandable()?;
        let mut acc = BigInt::one();
        for (&d, &e) in &self.cyclo {
            if let Some(p) = prime_power_base(d) {
                acc *= num_traits::pow(BigInt::from(p), e as usize);
            }
        }
        Ok(if self.negative { -acc } else { acc })
    }

    /// Rational value at `q = 1` as `(numerator, denominator)`, allowed for
    /// non-expandable products (negative exponents).
    pub fn eval_at_one_ratio(&self) -> (BigInt, BigInt) {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (&d, &e) in &self.cyclo {
            if let Some(p) = prime_power_base(d) {
                let f = num_traits::pow(BigInt::from(p), e.unsigned_abs() as usize);
                if e > 0 {
                    num *= f;
                } else {
                    den *= f;
                }
            }
        }
        if self.negative {
            num = -num;
        }
        (num, den)
    }
}

impl Mul for &QProduct {
    type Output = QProduct;
    fn mul(self, rhs: &QProduct) -> QProduct {
        let mut out = self.clone();
        out.negative ^= rhs.negative;
        out.qpow += rhs.qpow;
        for (d, e) in &rhs.cyclo {
            out.bump(*d, *e);
        }
        out
    }
}

impl Mul for QProduct {
    type Output = QProduct;
    fn mul(self, rhs: QProduct) -> QProduct {
        &self * &rhs
    }
}

impl Div for &QProduct {
    type Output = QProduct;
    fn div(self, rhs: &QProduct) -> QProduct {
        self * &rhs.recip()
    }
}

impl Div for QProduct {
    type Output = QProduct;
    fn div(self, rhs: QProduct) -> QProduct {
        &self / &rhs
    }
}

impl std::iter::Product for QProduct {
    fn product<I: Iterator<Item = QProduct>>(iter: I) -> Self {
        iter.fold(QProduct::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for QProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        let mut parts = Vec::new();
        if self.qpow != 0 {
            parts.push(format!("q^{}", self.qpow));
        }
        for (d, e) in &self.cyclo {
            if *e == 1 {
                parts.push(format!("Φ{d}"));
            } else {
                parts.push(format!("Φ{d}^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

/// `[n]_q` as a product. Panics on `n = 0`, whose value is the zero polynomial.
pub fn q_integer_product(n: u32) -> QProduct {
    assert!(n >= 1, "[0]_q is zero and has no product form");
    let mut p = QProduct::one();
    for d in divisors(n) {
        if d > 1 {
            p.bump(d, 1);
        }
    }
    p
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: u32) -> QProduct {
    // Φ_d divides [j]_q for each multiple j of d up to n
    let mut p = QProduct::one();
    for d in 2..=n {
        p.bump(d, (n / d) as i64);
    }
    p
}

/// `H_q(n) = [0]_q! [1]_q! ... [n-1]_q!`, with `H_q(0) = H_q(1) = 1`.
pub fn q_hyperfactorial(n: u32) -> QProduct {
    let mut p = QProduct::one();
    for d in 2..n {
        // Σ_{k<n} floor(k/d)
        let full = (n / d) as i64;
        let rem = (n % d) as i64;
        let d = d as i64;
        let e = d * full * (full - 1) / 2 + rem * full;
        p.bump(d as u32, e);
    }
    p
}

/// Ordinary hyperfactorial `H(n) = 0! 1! ... (n-1)!`.
pub fn hyperfactorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for k in 1..n {
        fact *= k;
        acc *= &fact;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::q_integer;

    #[test]
    fn factorial_examples() {
        assert_eq!(q_factorial(0), QProduct::one());
        let expect = QProduct::cyclotomic_power(2, 2)
            * QProduct::cyclotomic_power(3, 1)
            * QProduct::cyclotomic_power(4, 1);
        assert_eq!(q_factorial(4), expect);
        assert_eq!(q_hyperfactorial(0), QProduct::one());
        assert_eq!(q_hyperfactorial(1), QProduct::one());
        assert_eq!(q_hyperfactorial(2), QProduct::one());
        assert_eq!(q_hyperfactorial(3), QProduct::cyclotomic_power(2, 1));
    }

    #[test]
    fn hyperfactorial_matches_definition() {
        for n in 0..25 {
            let direct: QProduct = (0..n).map(q_factorial).product();
            assert_eq!(q_hyperfactorial(n), direct, "n = {n}");
        }
    }

    #[test]
    fn ratios() {
        let x = q_hyperfactorial(7);
        assert_eq!(&x / &x, QProduct::one());
        let four = &q_factorial(4) / &q_factorial(3);
        assert_eq!(four, q_integer_product(4));
        assert_eq!(four.expand().unwrap(), q_integer(4));
    }

    #[test]
    fn expand_examples() {
        assert!(QProduct::one().expand().unwrap().is_one());
        assert_eq!(q_hyperfactorial(3).expand().unwrap(), q_integer(2));
        let bad = QProduct::cyclotomic_power(3, -1);
        assert!(matches!(bad.expand(), Err(Error::NotPolynomial(_))));
        assert!(QProduct::q_pow(-1).eval_at_one().is_err());
        let neg = QProduct::q_pow(2).negate();
        assert_eq!(neg.expand().unwrap(), QPoly::monomial(2, -1));
    }

    #[test]
    fn expand_routes_agree() {
        for n in 0..12 {
            let p = q_hyperfactorial(n) * QProduct::q_pow(n as i64);
            assert_eq!(p.expand().unwrap(), p.expand_by_factors().unwrap());
        }
    }

    #[test]
    fn eval_at_one_is_hyperfactorial() {
        for n in 0..15 {
            assert_eq!(q_hyperfactorial(n).eval_at_one().unwrap(), hyperfactorial(n));
        }
        assert_eq!(hyperfactorial(4), BigInt::from(12));
    }
}
