//! Behavioural properties of the adaptive integrator: linearity, evaluation
//! monotonicity under tightening tolerances, and error-estimate honesty on a
//! small closed-form corpus (the full 20-integrand corpus lives in the
//! acceptance suite).

use catalan_core::quadrature::{integrate_finite, integrate_half_line, Tolerance};
use proptest::prelude::*;

fn poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

proptest! {
    #[test]
    fn linear_in_the_integrand(
        f_coeffs in proptest::collection::vec(-3.0..3.0f64, 1..=7),
        g_coeffs in proptest::collection::vec(-3.0..3.0f64, 1..=7),
        alpha in -3.0..3.0f64,
        beta in -3.0..3.0f64,
    ) {
        let tol = Tolerance::default();
        let combined = integrate_finite(
            |x| alpha * poly(&f_coeffs, x) + beta * poly(&g_coeffs, x),
            -1.0,
            2.0,
            &tol,
        ).unwrap();
        let f = integrate_finite(|x| poly(&f_coeffs, x), -1.0, 2.0, &tol).unwrap();
        let g = integrate_finite(|x| poly(&g_coeffs, x), -1.0, 2.0, &tol).unwrap();
        let expect = alpha * f.value + beta * g.value;
        let budget = combined.abs_error
            + alpha.abs() * f.abs_error
            + beta.abs() * g.abs_error
            + 1e-12 * (1.0 + expect.abs());
        prop_assert!(
            (combined.value - expect).abs() <= budget,
            "{} vs {expect}",
            combined.value
        );
    }
}

#[test]
fn tightening_rel_tol_never_reduces_evaluations() {
    type Case = (fn(f64) -> f64, f64, f64);
    let integrands: [Case; 4] = [
        (|x| libm::sin(3.0 * x), 0.0, 2.0),
        (|x| 1.0 / (1.0 + 25.0 * x * x), -1.0, 1.0),
        (|x| libm::exp(-x * x), -3.0, 3.0),
        (|x| libm::sqrt(x.abs()), -1.0, 1.0),
    ];
    for (f, lo, hi) in integrands {
        let mut previous = 0u32;
        let mut rel_tol = 1e-3;
        while rel_tol >= 1e-11 {
            let tol = Tolerance {
                abs_tol: 1e-300,
                rel_tol,
                max_evaluations: 1_000_000,
            };
            let result = integrate_finite(f, lo, hi, &tol).unwrap();
            assert!(
                result.evaluations >= previous,
                "rel_tol {rel_tol}: {} < {previous}",
                result.evaluations
            );
            previous = result.evaluations;
            rel_tol /= 10.0;
        }
    }
}

#[test]
fn estimates_are_honest_on_closed_forms() {
    use std::f64::consts::{E, PI};
    let tol = Tolerance::default();
    let cases: Vec<(&str, f64, f64)> = vec![
        (
            "x^2 on [0,1]",
            integrate_finite(|x| x * x, 0.0, 1.0, &tol).unwrap().value,
            1.0 / 3.0,
        ),
        (
            "half disk",
            integrate_finite(|x| libm::sqrt((1.0 - x * x).max(0.0)), -1.0, 1.0, &tol)
                .unwrap()
                .value,
            PI / 2.0,
        ),
        (
            "exp on [0,1]",
            integrate_finite(libm::exp, 0.0, 1.0, &tol).unwrap().value,
            E - 1.0,
        ),
        (
            "decaying exp half-line",
            integrate_half_line(|t| libm::exp(-t), &tol).unwrap().value,
            1.0,
        ),
        (
            "lorentzian half-line",
            integrate_half_line(|t| 1.0 / (1.0 + t * t), &tol)
                .unwrap()
                .value,
            PI / 2.0,
        ),
    ];
    for (name, value, exact) in cases {
        let err = (value - exact).abs();
        assert!(err <= 1e-9 * exact.abs().max(1.0), "{name}: err {err}");
    }
}
