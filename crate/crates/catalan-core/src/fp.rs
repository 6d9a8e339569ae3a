//! Thin floating-point shims.
//!
//! All transcendentals route through `libm` so the crate builds without `std`
//! and produces bit-identical results on every platform.

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn tan(x: f64) -> f64 {
    libm::tan(x)
}

#[inline]
pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub(crate) fn fabs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

/// Integer power by binary exponentiation; `powi(0.0, 0) == 1.0`.
pub(crate) fn powi(x: f64, n: i32) -> f64 {
    let mut base = x;
    let mut exp = n.unsigned_abs();
    let mut acc = 1.0;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    if n < 0 {
        1.0 / acc
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powi_matches_repeated_multiplication() {
        for n in 0..=40 {
            let mut expect = 1.0f64;
            for _ in 0..n {
                expect *= 0.5;
            }
            assert_eq!(powi(0.5, n), expect);
        }
        assert_eq!(powi(0.0, 0), 1.0);
        assert_eq!(powi(2.0, -3), 0.125);
    }
}
