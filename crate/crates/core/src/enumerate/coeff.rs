use num_bigint::BigUint;
use num_traits::Zero;

/// Coefficient ring for the transfer sweep. `add` reports overflow so the
/// sweep can restart with a wider type.
pub(crate) trait Coeff: Clone + Send {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    #[must_use]
    fn add(&mut self, other: &Self) -> bool;
    fn into_big(self) -> BigUint;

    /// `dst[k] += src[k]` for all `k`; false on overflow.
    #[must_use]
    fn add_slice(dst: &mut [Self], src: &[Self]) -> bool {
        dst.iter_mut().zip(src).all(|(d, s)| s.is_zero() || d.add(s))
    }
}

macro_rules! machine_coeff {
    ($t:ty) => {
        impl Coeff for $t {
            fn zero() -> Self {
                0
            }

            fn one() -> Self {
                1
            }

            fn is_zero(&self) -> bool {
                *self == 0
            }

            fn add(&mut self, other: &Self) -> bool {
                match self.checked_add(*other) {
                    Some(s) => {
                        *self = s;
                        true
                    }
                    None => false,
                }
            }

            fn into_big(self) -> BigUint {
                BigUint::from(self)
            }

            // branch-free so the loop vectorizes; overflow is collected at the end
            fn add_slice(dst: &mut [Self], src: &[Self]) -> bool {
                let mut carry = false;
                for (d, s) in dst.iter_mut().zip(src) {
                    let (sum, o) = d.overflowing_add(*s);
                    *d = sum;
                    carry |= o;
                }
                !carry
            }
        }
    };
}

machine_coeff!(u64);
machine_coeff!(u128);

impl Coeff for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        BigUint::from(1u8)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }

    fn into_big(self) -> BigUint {
        self
    }
}

/// Dense polynomial `q^offset * (c[0] + c[1] q + ...)`.
#[derive(Debug)]
pub(crate) struct Dense<C> {
    pub offset: u32,
    pub coeffs: Vec<C>,
}

/// Spare coefficient buffers, so the sweep rarely allocates.
pub(crate) struct Pool<C>(Vec<Vec<C>>);

impl<C: Coeff> Pool<C> {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn take(&mut self) -> Vec<C> {
        self.0.pop().unwrap_or_default()
    }

    pub fn give(&mut self, mut v: Vec<C>) {
        v.clear();
        self.0.push(v);
    }

    pub fn copy(&mut self, p: &Dense<C>) -> Dense<C> {
        let mut coeffs = self.take();
        coeffs.extend_from_slice(&p.coeffs);
        Dense {
            offset: p.offset,
            coeffs,
        }
    }
}

impl<C: Coeff> Dense<C> {
    pub fn one() -> Self {
        Self {
            offset: 0,
            coeffs: vec![C::one()],
        }
    }

    pub fn shifted(mut self, by: u32) -> Self {
        self.offset += by;
        self
    }

    /// `self += q^shift * other`; false on overflow.
    pub fn add_shifted(&mut self, other: &Self, shift: u32, pool: &mut Pool<C>) -> bool {
        let start = other.offset + shift;
        if start < self.offset {
            let pad = (self.offset - start) as usize;
            let mut v = pool.take();
            v.resize(pad, C::zero());
            v.extend_from_slice(&self.coeffs);
            pool.give(std::mem::replace(&mut self.coeffs, v));
            self.offset = start;
        }
        let at = (start - self.offset) as usize;
        if self.coeffs.len() < at + other.coeffs.len() {
            self.coeffs.resize(at + other.coeffs.len(), C::zero());
        }
        C::add_slice(&mut self.coeffs[at..at + other.coeffs.len()], &other.coeffs)
    }

    pub fn into_pairs(self) -> Vec<(u32, BigUint)> {
        let offset = self.offset;
        self.coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (offset + k as u32, c.into_big()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_shifted_extends_both_ways() {
        let mut pool = Pool::new();
        let mut a: Dense<u128> = Dense::one().shifted(3);
        let b: Dense<u128> = Dense::one();
        assert!(a.add_shifted(&b, 1, &mut pool));
        assert!(a.add_shifted(&b, 5, &mut pool));
        assert!(a.add_shifted(&b, 3, &mut pool));
        let pairs = a.into_pairs();
        let flat: Vec<(u32, u64)> = pairs
            .into_iter()
            .map(|(e, c)| (e, c.try_into().unwrap()))
            .collect();
        assert_eq!(flat, vec![(1, 1), (3, 2), (5, 1)]);
    }

    #[test]
    fn overflow_is_reported() {
        let mut a = Dense::<u128> {
            offset: 0,
            coeffs: vec![u128::MAX],
        };
        assert!(!a.add_shifted(&Dense::one(), 0, &mut Pool::new()));
    }

    #[test]
    fn big_coefficients_add() {
        let mut c = [BigUint::from(7u8)];
        assert!(BigUint::add_slice(&mut c, &[BigUint::from(5u8)]));
        assert_eq!(c[0], BigUint::from(12u8));
    }
}
