//! The four long exponents, transcribed term by term.
//!
//! Each term carries its position in the printed sum as `line.term`, so a
//! transcription can be checked against the source one term at a time.

/// `binom(n + 1, 2)`, written `c2(n)` below.
#[inline]
pub fn c2(n: i64) -> i64 {
    n * (n + 1) / 2
}

/// Exponent `g` relating the first weight on F-regions to pile volume.
#[allow(clippy::too_many_arguments)]
pub fn exp_g(x: i64, y: i64, z: i64, a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> i64 {
    (x + z + d + f) * c2(y + b) // 1.1
        + e * c2(b) // 1.2
        + a * (c + x) * (a + b + y) // 1.3
        + a * c2(x + c) // 1.4
        + (x + d) * (a + b + y) * (f + x + z) // 2.1
        + (x + z + f) * c2(d + x) // 2.2
        + b * (d + e + x + y) * (a + b + y) // 2.3
        + b * c2(x + y + d + e) // 3.1
        + f * (z + b) * (a + b + d + e + x + 2 * y + z) // 3.2
        + (z + b) * c2(f) // 3.3
        + x * c * (a + b + d + x + y) // 4.1
        + x * c2(c) // 4.2
}

/// Exponent `h` relating the second weight on F-regions to pile volume.
#[allow(clippy::too_many_arguments)]
pub fn exp_h(x: i64, y: i64, z: i64, a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> i64 {
    b * c2(x + z + d + e + f) // 1.1
        + y * c2(x + z + d + f) // 1.2
        + (x + c) * c2(a) // 1.3
        + x * c * (a + d) // 1.4
        + c * c2(x) // 1.5
        + (x + d) * c2(x + z + f) // 2.1
        + (x + d) * (x + z + f) * (a + d) // 2.2
        + f * c2(b + z) // 2.3
        + (x + y + d + e) * c2(b) // 2.4
        + f * (z + b) * (x + y + z + a + d + e + f) // 3.1
        + b * (x + y + z + a + d + e + f) * (x + y + d + e) // 3.2
}

/// Exponent `E` of the second weight on Q-regions.
pub fn exp_e(a: i64, b: i64, x: i64, y: i64, z: i64, _t: i64) -> i64 {
    (y + b) * c2(z) // 1
        + x * c2(a + z) // 2
        + b * (x + y) * (a + y + z) // 3
        + (x + y) * c2(b) // 4
}

/// Exponent `A` of the second weight on B-regions.
#[allow(clippy::too_many_arguments)]
pub fn exp_a(x: i64, y: i64, z: i64, t: i64, a: i64, b: i64, c: i64, d: i64) -> i64 {
    y * c2(a + z) // 1.1
        + (c + z + t) * c2(z + b) // 1.2
        + x * c2(b + d + z) // 1.3
        + a * z * (b + z) // 2.1
        + z * c2(a) // 2.2
        + c * (x + t) * (b + d + z + t) // 2.3
        + (x + t) * c2(c) // 2.4
}

/// Prefactor exponent of the second weight on K-regions.
pub fn exp_k(a: i64, x: i64, y: i64, z: i64, _t: i64) -> i64 {
    y * c2(z) + x * c2(z + a)
}

/// Prefactor exponent of the left-lozenge weight on Q-regions.
pub fn exp_q3(a: i64, b: i64, x: i64, y: i64, _z: i64, t: i64) -> i64 {
    b * c2(a + y) + y * c2(a + y + t) + x * c2(y + t)
}

/// Prefactor exponents of the first and second weights on `Hex(a, b, c)`.
pub fn exp_hex(a: i64, b: i64) -> (i64, i64) {
    (a * c2(b), b * c2(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_at_origin() {
        assert_eq!(exp_g(0, 0, 0, 0, 0, 0, 0, 0, 0), 0);
        assert_eq!(exp_h(0, 0, 0, 0, 0, 0, 0, 0, 0), 0);
        assert_eq!(exp_e(0, 0, 0, 0, 0, 0), 0);
        assert_eq!(exp_a(0, 0, 0, 0, 0, 0, 0, 0), 0);
    }

    #[test]
    fn h_shift_identities() {
        // the two linear relations h satisfies under the F recurrence shifts
        for x in 0..3 {
            for y in 1..3 {
                for z in 1..3 {
                    for (a, b, c, d, e, f) in [(0, 0, 0, 0, 0, 0), (1, 2, 0, 1, 1, 2), (2, 1, 1, 0, 2, 1)] {
                        let h = |x, y, z, e| exp_h(x, y, z, a, b, c, d, e, f);
                        assert_eq!(
                            h(x + 1, y, z - 1, e) + h(x, y - 1, z, e + 1),
                            h(x, y, z, e) + h(x + 1, y - 1, z - 1, e + 1)
                        );
                        assert_eq!(
                            h(x + 1, y - 1, z, e) + h(x, y, z - 1, e + 1),
                            a + d + x + y + h(x, y, z, e) + h(x + 1, y - 1, z - 1, e + 1)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn a_shift_identities() {
        for z in 1..3 {
            for t in 1..3 {
                for (x, y, a, b, c, d) in [(0, 0, 0, 0, 0, 0), (1, 2, 0, 1, 1, 2), (2, 1, 1, 0, 2, 1)] {
                    let big_a = |z, t, c, d| exp_a(x, y, z, t, a, b, c, d);
                    assert_eq!(
                        big_a(z, t, c, d) + big_a(z - 1, t - 1, c + 1, d + 1),
                        big_a(z, t - 1, c, d + 1) + big_a(z - 1, t, c + 1, d) - d - x - t
                    );
                    assert_eq!(
                        big_a(z, t, c, d) + big_a(z - 1, t - 1, c + 1, d + 1),
                        big_a(z - 1, t, c, d + 1) + big_a(z, t - 1, c + 1, d)
                    );
                }
            }
        }
    }
}
