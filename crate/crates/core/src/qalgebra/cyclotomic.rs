//! Cyclotomic polynomials and the number theory behind the factored form.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::QPoly;

pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// If `n = p^k` with `p` prime and `k >= 1`, returns `p`.
pub fn prime_power_base(n: u32) -> Option<u32> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            return (m == 1).then_some(p);
        }
        p += 1;
    }
    Some(n)
}

fn cache() -> &'static Mutex<HashMap<u32, QPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, QPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `d`-th cyclotomic polynomial, by exact division of `q^d - 1` by the
/// lower-order factors.
pub fn cyclotomic(d: u32) -> QPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut p = QPoly::from_pairs([(0, -1), (d, 1)]);
    for e in divisors(d) {
        if e < d {
            p = p
                .div_exact(&cyclotomic(e))
                .expect("cyclotomic factors divide q^d - 1");
        }
    }
    cache().lock().unwrap().insert(d, p.clone());
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_theory() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(prime_power_base(8), Some(2));
        assert_eq!(prime_power_base(9), Some(3));
        assert_eq!(prime_power_base(6), None);
        assert_eq!(prime_power_base(1), None);
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), QPoly::from_pairs([(0, -1), (1, 1)]));
        assert_eq!(cyclotomic(2), QPoly::from_pairs([(0, 1), (1, 1)]));
        assert_eq!(cyclotomic(4), QPoly::from_pairs([(0, 1), (2, 1)]));
        assert_eq!(cyclotomic(6), QPoly::from_pairs([(0, 1), (1, -1), (2, 1)]));
        for d in 1..60 {
            assert_eq!(cyclotomic(d).degree(), Some(euler_phi(d)));
        }
    }

    #[test]
    fn phi_105_has_a_minus_two() {
        assert_eq!(cyclotomic(105).coeff(7), (-2).into());
    }
}
