//! Sparse univariate polynomials in `q` with arbitrary-precision integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact polynomial `sum c_k q^k`. Zero coefficients are never stored, so
/// the zero polynomial is the empty map and equality is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// `q^exp`.
    pub fn q_pow(exp: u32) -> Self {
        Self::monomial(exp, 1)
    }

    /// Builds a polynomial from a dense coefficient slice, `dense[k]` being the
    /// coefficient of `q^(offset + k)`.
    pub fn from_dense<C>(offset: u32, dense: &[C]) -> Self
    where
        C: Clone + Into<BigInt>,
    {
        let mut coeffs = BTreeMap::new();
        for (k, c) in dense.iter().enumerate() {
            let c: BigInt = c.clone().into();
            if !c.is_zero() {
                coeffs.insert(offset + k as u32, c);
            }
        }
        Self { coeffs }
    }

    pub fn from_pairs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, &c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, exp: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Divides by `q^k`, failing if some term has exponent below `k`.
    pub fn unshift(&self, k: u32) -> Option<Self> {
        if self.low_degree().is_some_and(|lo| lo < k) {
            return None;
        }
        Some(Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e - k, c.clone())).collect(),
        })
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        self.coeffs
            .iter()
            .map(|(e, c)| c * num_traits::pow(q.clone(), *e as usize))
            .sum()
    }

    /// If this is a single term `c q^k`, returns `(k, c)`.
    pub fn as_monomial(&self) -> Option<(u32, &BigInt)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// `q^deg * p(1/q)` for `deg = self.degree()`: the coefficient list reversed.
    pub fn reversed(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => Self {
                coeffs: self.coeffs.iter().map(|(e, c)| (d - e, c.clone())).collect(),
            },
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by `divisor`; `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        let (dd, lead) = match divisor.coeffs.iter().next_back() {
            Some((d, c)) => (*d, c.clone()),
            None => return None,
        };
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let rc = rem.coeff(rd);
            let (qc, r) = rc.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let shift = rd - dd;
            quot.add_term(shift, &qc);
            for (e, c) in divisor.terms() {
                rem.add_term(e + shift, &(-(c * &qc)));
            }
        }
        Some(quot)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        // dense accumulation is far faster than map updates for long products
        let lo = self.low_degree().unwrap() + rhs.low_degree().unwrap();
        let hi = self.degree().unwrap() + rhs.degree().unwrap();
        let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        QPoly::from_dense(lo, &acc)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

/// Wire form: `{"poly": [[exponent, "decimal"], ...]}` in ascending exponent order.
#[derive(Serialize, Deserialize)]
struct QPolyJson {
    poly: Vec<(u32, String)>,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QPolyJson {
            poly: self.coeffs.iter().map(|(e, c)| (*e, c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = QPolyJson::deserialize(d)?;
        let mut p = QPoly::zero();
        let mut last: Option<u32> = None;
        for (e, c) in raw.poly {
            if last.is_some_and(|l| l >= e) {
                return Err(D::Error::custom("exponents must be strictly ascending"));
            }
            last = Some(e);
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficients are not allowed"));
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }
}

impl QPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("QPoly serialization is infallible")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q` is the zero polynomial.
pub fn q_integer(n: u32) -> QPoly {
    QPoly::from_pairs((0..n).map(|k| (k, 1)))
}
