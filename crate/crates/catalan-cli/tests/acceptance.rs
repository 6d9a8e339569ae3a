//! Acceptance suite: one test per toolkit-level guarantee, each printing a
//! PASS line with its measured numbers (run with `--nocapture` to see them).
//!
//! Covered: the two exact identity sweeps to n = 500, quadrature accuracy of
//! all six representations up to n = 20, the five analytic anchor values, the
//! four binomial-fold closed forms on random rationals, error-estimate
//! honesty on a 20-integrand closed-form corpus, figure-data CSV emission
//! with endpoint and symmetry checks, and the f1/f2 intersection scan.

use std::process::Command;
use std::time::Instant;

use catalan_core::exact::{
    callan_rhs, catalan, fold_even, fold_even_square, fold_even_square_weighted, fold_even_weighted,
};
use catalan_core::quadrature::{integrate_finite, integrate_half_line, Tolerance};
use catalan_core::representations::{evaluate_representation, find_f_intersection, RepId};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

fn catalan_bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_catalan"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn touchard_sweep_to_500() {
    let start = Instant::now();
    let run = catalan_bin(&["verify", "--identity", "touchard", "--max-n", "500"]);
    let elapsed = start.elapsed();
    assert_eq!(run.status.code(), Some(0), "sweep failed: {run:?}");
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "sweep took {:.2} s (limit 5 s)",
        elapsed.as_secs_f64()
    );
    println!(
        "PASS touchard-sweep: 501 values exact, exit 0, {:.2} s",
        elapsed.as_secs_f64()
    );
}

#[test]
fn callan_sweep_to_500_reduces_to_integers() {
    let run = catalan_bin(&["verify", "--identity", "callan", "--max-n", "500"]);
    assert_eq!(run.status.code(), Some(0), "sweep failed: {run:?}");
    for n in 2..=500u32 {
        let rhs = callan_rhs(n).unwrap();
        assert!(
            rhs.is_integer(),
            "callan_rhs({n}) = {rhs} is not an integer"
        );
        assert_eq!(rhs.to_integer(), BigInt::from(catalan(n)), "n = {n}");
    }
    println!("PASS callan-sweep: 499 values exact, every sum an integer, exit 0");
}

#[test]
fn representation_accuracy_to_n_20() {
    let tol = Tolerance::default();
    let start = Instant::now();
    let mut worst = (0.0f64, RepId::R0, 0u32);
    let mut checked = 0u32;
    for id in RepId::ALL {
        for n in id.n_min()..=20 {
            let rec = evaluate_representation(id, n, &tol).unwrap();
            assert!(
                rec.rel_error < 1e-8,
                "{id} at n = {n}: rel_error {}",
                rec.rel_error
            );
            if rec.rel_error > worst.0 {
                worst = (rec.rel_error, id, n);
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "grid took {:.1} s (limit 60 s)",
        elapsed.as_secs_f64()
    );
    println!(
        "PASS representation-accuracy: {checked} evaluations < 1e-8 rel, worst {:.2e} ({} at n = {}), {:.2} s",
        worst.0, worst.1, worst.2, elapsed.as_secs_f64()
    );
}

#[test]
fn analytic_anchor_values() {
    let tol = Tolerance::default();
    let anchors = [
        (RepId::R0, 0u32, 1.0f64),
        (RepId::B0, 0, 1.0),
        (RepId::R1, 1, 1.0),
        (RepId::R2, 2, 2.0),
        (RepId::B2, 2, 2.0),
    ];
    let mut worst = 0.0f64;
    for (id, n, expect) in anchors {
        let rec = evaluate_representation(id, n, &tol).unwrap();
        let rel = (rec.estimate - expect).abs() / expect;
        assert!(rel < 1e-9, "{id} at n = {n}: {} vs {expect}", rec.estimate);
        worst = worst.max(rel);
    }
    println!("PASS analytic-anchors: 5 anchors within 1e-9 relative, worst {worst:.2e}");
}

/// Deterministic 64-bit LCG (Knuth multiplier), enough to stir rationals.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() >> 33) as i64 % (hi - lo + 1)
    }

    fn rational(&mut self) -> BigRational {
        BigRational::new(
            BigInt::from(self.in_range(-12, 12)),
            BigInt::from(self.in_range(1, 12)),
        )
    }
}

#[test]
fn fold_identities_on_random_rationals() {
    let mut rng = Lcg(0x5eed_cafe_f00d_0001);
    let mut checks = 0u32;
    for _ in 0..50 {
        // The √a folds need a to be a perfect rational square.
        let root = rng.rational();
        let square = &root * &root;
        let b_sqrt = rng.rational();
        // The a² folds take any sign.
        let a_any = rng.rational();
        let b_any = rng.rational();
        for n in 0..=64u32 {
            let fold = fold_even(&square, &b_sqrt, n);
            assert_eq!(
                fold.closed_form.as_ref(),
                Some(&fold.sum),
                "fold_even n = {n}"
            );
            let fold = fold_even_weighted(&square, &b_sqrt, n);
            assert_eq!(
                fold.closed_form.as_ref(),
                Some(&fold.sum),
                "fold_even_weighted n = {n}"
            );
            let fold = fold_even_square(&a_any, &b_any, n);
            assert_eq!(
                fold.closed_form.as_ref(),
                Some(&fold.sum),
                "fold_even_square n = {n}"
            );
            let fold = fold_even_square_weighted(&a_any, &b_any, n);
            assert_eq!(
                fold.closed_form.as_ref(),
                Some(&fold.sum),
                "fold_even_square_weighted n = {n}"
            );
            checks += 4;
        }
    }
    println!(
        "PASS fold-identities: {checks} sum/closed-form pairs exactly equal (50 pairs, n <= 64)"
    );
}

#[test]
fn error_estimates_are_honest_on_closed_form_corpus() {
    use std::f64::consts::{E, PI};
    type FiniteCase = (&'static str, fn(f64) -> f64, f64, f64, f64);
    type HalfLineCase = (&'static str, fn(f64) -> f64, f64);
    let tol = Tolerance::default();
    let sqrt_pi = PI.sqrt();

    let finite: Vec<FiniteCase> = vec![
        ("x^2 on [0,1]", |x| x * x, 0.0, 1.0, 1.0 / 3.0),
        ("sin on [0,pi]", libm::sin, 0.0, PI, 2.0),
        ("exp on [0,1]", libm::exp, 0.0, 1.0, E - 1.0),
        (
            "half disk",
            |x| libm::sqrt((1.0 - x * x).max(0.0)),
            -1.0,
            1.0,
            PI / 2.0,
        ),
        (
            "1/(1+x^2) on [0,1]",
            |x| 1.0 / (1.0 + x * x),
            0.0,
            1.0,
            PI / 4.0,
        ),
        ("ln x on (0,1]", libm::log, 0.0, 1.0, -1.0),
        ("1/sqrt(x) on (0,1]", |x| 1.0 / libm::sqrt(x), 0.0, 1.0, 2.0),
        ("sqrt(x) on [0,1]", libm::sqrt, 0.0, 1.0, 2.0 / 3.0),
        (
            "runge 1/(1+25x^2)",
            |x| 1.0 / (1.0 + 25.0 * x * x),
            -1.0,
            1.0,
            2.0 / 5.0 * libm::atan(5.0),
        ),
        ("|x - 1/2| on [0,1]", |x| (x - 0.5).abs(), 0.0, 1.0, 0.25),
        (
            "x exp(-x^2) on [0,2]",
            |x| x * libm::exp(-x * x),
            0.0,
            2.0,
            (1.0 - libm::exp(-4.0)) / 2.0,
        ),
        (
            "cos(10x) on [0,1]",
            |x| libm::cos(10.0 * x),
            0.0,
            1.0,
            libm::sin(10.0) / 10.0,
        ),
        (
            "sin^2 on [0,pi]",
            |x| libm::sin(x) * libm::sin(x),
            0.0,
            PI,
            PI / 2.0,
        ),
        (
            "gaussian on [0,3]",
            |x| libm::exp(-x * x),
            0.0,
            3.0,
            sqrt_pi / 2.0 * libm::erf(3.0),
        ),
    ];
    let half_line: Vec<HalfLineCase> = vec![
        ("exp(-t)", |t| libm::exp(-t), 1.0),
        ("t exp(-t)", |t| t * libm::exp(-t), 1.0),
        ("exp(-t^2)", |t| libm::exp(-t * t), sqrt_pi / 2.0),
        ("1/(1+t^2)", |t| 1.0 / (1.0 + t * t), PI / 2.0),
        (
            "t^2/(t^2+1/4)^2",
            |t| {
                let u = t * t + 0.25;
                t * t / (u * u)
            },
            PI / 2.0,
        ),
        ("exp(-t) cos t", |t| libm::exp(-t) * libm::cos(t), 0.5),
    ];

    let mut total = 0u32;
    let mut dishonest = Vec::new();
    let mut report = |name: &str, value: f64, estimate: f64, exact: f64| {
        total += 1;
        let true_err = (value - exact).abs();
        if true_err > 10.0 * estimate {
            dishonest.push(format!(
                "{name}: true {true_err:.2e} > 10 x est {estimate:.2e}"
            ));
        }
    };
    for (name, f, lo, hi, exact) in finite {
        let r = integrate_finite(f, lo, hi, &tol).unwrap();
        report(name, r.value, r.abs_error, exact);
    }
    for (name, f, exact) in half_line {
        let r = integrate_half_line(f, &tol).unwrap();
        report(name, r.value, r.abs_error, exact);
    }
    assert_eq!(total, 20);
    assert!(
        dishonest.len() <= 1,
        "error estimates understated in {} of 20 cases:\n{}",
        dishonest.len(),
        dishonest.join("\n")
    );
    println!(
        "PASS error-estimate-honesty: {}/20 integrands with true error <= 10 x estimate",
        total as usize - dishonest.len()
    );
}

#[test]
fn figure_data_reproduces_weight_functions() {
    let read_csv = |family: &str, name: &str| -> Vec<Vec<f64>> {
        let mut path = std::env::temp_dir();
        path.push(format!(
            "catalan-acceptance-{}-{name}.csv",
            std::process::id()
        ));
        let run = catalan_bin(&[
            "weights",
            "--family",
            family,
            "--n",
            "5",
            "--samples",
            "400",
            "--format",
            "csv",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(run.status.code(), Some(0), "{run:?}");
        let text = std::fs::read_to_string(&path).unwrap();
        std::fs::remove_file(&path).ok();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "t,w1,w2,w3");
        lines
            .map(|line| line.split(',').map(|v| v.parse().unwrap()).collect())
            .collect()
    };

    let f_rows = read_csv("f", "f5");
    assert_eq!(f_rows.len(), 400);
    // Endpoint closed forms: f1(0) = 4^5, f2(0) = 4^4/2.
    assert!(
        (f_rows[0][1] - 1024.0).abs() <= 1e-12,
        "f1(0+) = {}",
        f_rows[0][1]
    );
    assert!(
        (f_rows[0][2] - 128.0).abs() <= 1e-12,
        "f2(0+) = {}",
        f_rows[0][2]
    );

    let g_rows = read_csv("g", "g5");
    assert_eq!(g_rows.len(), 400);
    // g3 = 2^(n-2) (n+2)/(n-1) t [(t+1)^(n-1) - (1-t)^(n-1)] multiplies two
    // odd factors, so it is even about 0; the paired-sample symmetry defect
    // must vanish. (An odd-symmetry reading would force the B2 integral to
    // zero, contradicting the nonzero Catalan values it reproduces.)
    let mut even_defect = 0.0f64;
    let mut odd_defect = 0.0f64;
    for i in 0..200 {
        let j = 399 - i;
        assert!(
            (g_rows[i][0] + g_rows[j][0]).abs() <= 1e-12,
            "grid not symmetric"
        );
        even_defect = even_defect.max((g_rows[i][3] - g_rows[j][3]).abs());
        odd_defect = odd_defect.max((g_rows[i][3] + g_rows[j][3]).abs());
    }
    assert!(
        even_defect <= 1e-12,
        "g3 paired-sample symmetry defect {even_defect:.2e}"
    );
    assert!(
        odd_defect > 1.0,
        "g3 would have to be the zero weight if it were odd"
    );
    println!(
        "PASS figure-data: 400-sample CSVs at n = 5; f1(0+) = 4^5 and f2(0+) = 4^4/2 within 1e-12; \
         g3 even-symmetric to {even_defect:.1e} (odd-reading defect {odd_defect:.1e})"
    );
}

#[test]
fn intersection_scan_converges_for_each_sign_change() {
    let mut summary = Vec::new();
    for n in [2u32, 3, 5, 10] {
        let scan = find_f_intersection(n, 1e-6, 10.0, 1e-10).unwrap();
        assert!(scan.sign_changes() >= 1, "n = {n}: no crossing found");
        let mut worst = 0.0f64;
        for root in &scan.roots {
            assert!(
                root.residual < 1e-10,
                "n = {n}: residual {} at t = {}",
                root.residual,
                root.t
            );
            worst = worst.max(root.residual);
        }
        summary.push(format!(
            "n={n}: {} crossing(s), worst residual {worst:.1e}",
            scan.sign_changes()
        ));
    }
    println!("PASS intersection-scan: {}", summary.join("; "));
}

#[test]
fn exact_catalan_values_fit_f64_for_supported_range() {
    // rel_error arithmetic relies on C_n being exactly representable.
    for n in 0..=30u32 {
        let exact = catalan(n);
        let as_float = exact.to_f64().unwrap();
        assert_eq!(
            BigRational::from_float(as_float).unwrap(),
            BigRational::from_integer(BigInt::from(exact))
        );
    }
    println!("PASS exact-f64-representability: C_0..C_30 exact in f64");
}
