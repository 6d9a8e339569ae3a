//! The six integral representations of the Catalan numbers and their weight
//! functions.
//!
//! Half-line family, kernel `t²/(t²+¼)²` on `[0, ∞)` with `s = 1/√(t²+¼)`:
//!
//! - `R0`: `C_n = (2/π) ∫ t²/(t²+¼)^(n+2) dt`, n ≥ 0
//! - `R1`: `C_n = (1/π) ∫ t²/(t²+¼)² [(2−s)^(n−1) + (2+s)^(n−1)] dt`, n ≥ 1
//! - `R2`: `C_n = (n+2)/(2(n−1)π) ∫ t²/(t²+¼)^(5/2) [(2+s)^(n−1) − (2−s)^(n−1)] dt`, n ≥ 2
//!
//! Symmetric family, kernel `√(1−t²)` on `[−1, 1]`:
//!
//! - `B0`: `C_n = (2^(2n+1)/π) ∫ t^(2n) √(1−t²) dt`, n ≥ 0
//! - `B1`: `C_n = (2^(n−1)/π) ∫ √(1−t²) [(1−t)^(n−1) + (1+t)^(n−1)] dt`, n ≥ 0
//! - `B2`: `C_n = (2^(n−1)(n+2)/(π(n−1))) ∫ t √(1−t²) [(t+1)^(n−1) − (1−t)^(n−1)] dt`, n ≥ 2
//!
//! The weights `f1..f3` (resp. `g1..g3`) are the same representations
//! factored against the fixed kernel, so that
//! `C_n = (2/π) ∫ kernel · w(t) dt` for every member of a family. Distinct
//! weights producing the same integral is what makes the representations
//! genuinely different; [`find_f_intersection`] locates where `f1` and `f2`
//! cross and counts the sign changes rather than assuming there is one.
//!
//! Everything here is compared against exact values from [`crate::exact`];
//! the supported range is capped at [`MAX_SUPPORTED_N`] because `4^n` growth
//! erodes double precision beyond it.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_1_PI, FRAC_2_PI, PI};
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::exact;
use crate::fp;
use crate::quadrature::{self, QuadratureError, QuadratureResult, Tolerance};

/// Largest n for which quadrature-versus-exact comparisons are supported.
pub const MAX_SUPPORTED_N: u32 = 30;

/// Number of points in the intersection sign-change scan.
pub const SCAN_POINTS: usize = 10_000;

/// Identifier of one integral representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepId {
    R0,
    R1,
    R2,
    B0,
    B1,
    B2,
}

/// Integration domain of a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegrationDomain {
    /// `[0, ∞)`, evaluated through the fixed tangent substitution.
    HalfLine,
    /// `[−1, 1]`.
    SymmetricUnit,
}

impl RepId {
    pub const ALL: [RepId; 6] = [
        RepId::R0,
        RepId::R1,
        RepId::R2,
        RepId::B0,
        RepId::B1,
        RepId::B2,
    ];

    /// Validity floor; `R2`/`B2` come from Callan's identity ("valid for n > 1").
    pub fn n_min(self) -> u32 {
        match self {
            RepId::R0 | RepId::B0 | RepId::B1 => 0,
            RepId::R1 => 1,
            RepId::R2 | RepId::B2 => 2,
        }
    }

    pub fn domain(self) -> IntegrationDomain {
        match self {
            RepId::R0 | RepId::R1 | RepId::R2 => IntegrationDomain::HalfLine,
            RepId::B0 | RepId::B1 | RepId::B2 => IntegrationDomain::SymmetricUnit,
        }
    }

    /// Constant applied once, outside the integral.
    pub fn prefactor(self, n: u32) -> f64 {
        let nf = f64::from(n);
        match self {
            RepId::R0 => FRAC_2_PI,
            RepId::R1 => FRAC_1_PI,
            RepId::R2 => (nf + 2.0) / (2.0 * (nf - 1.0) * PI),
            RepId::B0 => fp::powi(2.0, 2 * n as i32 + 1) / PI,
            RepId::B1 => fp::powi(2.0, n as i32 - 1) / PI,
            RepId::B2 => fp::powi(2.0, n as i32 - 1) * (nf + 2.0) / ((nf - 1.0) * PI),
        }
    }

    /// The bare integrand; the prefactor is not included.
    ///
    /// On the symmetric domain the kernel `√(1−t²)` vanishes at the
    /// endpoints; when rounding puts an evaluation node at or beyond `±1`
    /// the integrand returns 0 so the `B1` endpoint singularity at n = 0
    /// cannot produce 0·∞.
    pub fn integrand(self, n: u32, t: f64) -> f64 {
        let m = n as i32 - 1;
        match self {
            RepId::R0 => {
                let u = t * t + 0.25;
                t * t / fp::powi(u, n as i32 + 2)
            }
            RepId::R1 => {
                let u = t * t + 0.25;
                let s = 1.0 / fp::sqrt(u);
                t * t / (u * u) * (fp::powi(2.0 - s, m) + fp::powi(2.0 + s, m))
            }
            RepId::R2 => {
                let u = t * t + 0.25;
                let s = 1.0 / fp::sqrt(u);
                t * t / (u * u * fp::sqrt(u)) * (fp::powi(2.0 + s, m) - fp::powi(2.0 - s, m))
            }
            RepId::B0 => {
                let k = 1.0 - t * t;
                if k <= 0.0 {
                    return 0.0;
                }
                fp::powi(t, 2 * n as i32) * fp::sqrt(k)
            }
            RepId::B1 => {
                let k = 1.0 - t * t;
                if k <= 0.0 {
                    return 0.0;
                }
                fp::sqrt(k) * (fp::powi(1.0 - t, m) + fp::powi(1.0 + t, m))
            }
            RepId::B2 => {
                let k = 1.0 - t * t;
                if k <= 0.0 {
                    return 0.0;
                }
                t * fp::sqrt(k) * (fp::powi(t + 1.0, m) - fp::powi(1.0 - t, m))
            }
        }
    }
}

impl fmt::Display for RepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rep_label(*self))
    }
}

impl FromStr for RepId {
    type Err = ParseIdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "R0" => Ok(RepId::R0),
            "R1" => Ok(RepId::R1),
            "R2" => Ok(RepId::R2),
            "B0" => Ok(RepId::B0),
            "B1" => Ok(RepId::B1),
            "B2" => Ok(RepId::B2),
            _ => Err(ParseIdError),
        }
    }
}

/// Identifier of one weight function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightId {
    F1,
    F2,
    F3,
    G1,
    G2,
    G3,
}

impl WeightId {
    pub const F_FAMILY: [WeightId; 3] = [WeightId::F1, WeightId::F2, WeightId::F3];
    pub const G_FAMILY: [WeightId; 3] = [WeightId::G1, WeightId::G2, WeightId::G3];

    /// f3 and g3 carry the Callan factor (n+2)/(n−1) and need n > 1.
    pub fn n_min(self) -> u32 {
        match self {
            WeightId::F3 | WeightId::G3 => 2,
            _ => 1,
        }
    }

    fn is_g_family(self) -> bool {
        matches!(self, WeightId::G1 | WeightId::G2 | WeightId::G3)
    }
}

impl fmt::Display for WeightId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", weight_label(*self))
    }
}

impl FromStr for WeightId {
    type Err = ParseIdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(WeightId::F1),
            "f2" => Ok(WeightId::F2),
            "f3" => Ok(WeightId::F3),
            "g1" => Ok(WeightId::G1),
            "g2" => Ok(WeightId::G2),
            "g3" => Ok(WeightId::G3),
            _ => Err(ParseIdError),
        }
    }
}

/// Unrecognized representation or weight name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseIdError;

impl fmt::Display for ParseIdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "expected one of R0, R1, R2, B0, B1, B2 (or f1..f3, g1..g3)"
        )
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseIdError {}

/// Errors from the representation layer.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RepresentationError {
    /// n below the validity floor of the representation or weight.
    Domain {
        id: &'static str,
        n: u32,
        n_min: u32,
    },
    /// n beyond [`MAX_SUPPORTED_N`].
    Unsupported {
        n: u32,
    },
    /// Evaluation point outside the weight's domain.
    OutOfRange {
        t: f64,
    },
    /// The scan found no sign change of f1 − f2 in the bracket.
    NoBracket {
        t_lo: f64,
        t_hi: f64,
    },
    /// Malformed bracket.
    InvalidBracket {
        t_lo: f64,
        t_hi: f64,
    },
    Quadrature(QuadratureError),
}

impl fmt::Display for RepresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepresentationError::Domain { id, n, n_min } => {
                write!(f, "{id} requires n >= {n_min}, got n = {n}")
            }
            RepresentationError::Unsupported { n } => {
                write!(f, "n = {n} exceeds the supported maximum {MAX_SUPPORTED_N}")
            }
            RepresentationError::OutOfRange { t } => {
                write!(f, "t = {t} is outside the weight's domain")
            }
            RepresentationError::NoBracket { t_lo, t_hi } => {
                write!(f, "no sign change of f1 - f2 in [{t_lo}, {t_hi}]")
            }
            RepresentationError::InvalidBracket { t_lo, t_hi } => {
                write!(f, "invalid bracket [{t_lo}, {t_hi}]")
            }
            RepresentationError::Quadrature(err) => write!(f, "{err}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for RepresentationError {}

impl From<QuadratureError> for RepresentationError {
    fn from(err: QuadratureError) -> Self {
        RepresentationError::Quadrature(err)
    }
}

fn rep_label(id: RepId) -> &'static str {
    match id {
        RepId::R0 => "R0",
        RepId::R1 => "R1",
        RepId::R2 => "R2",
        RepId::B0 => "B0",
        RepId::B1 => "B1",
        RepId::B2 => "B2",
    }
}

fn weight_label(id: WeightId) -> &'static str {
    match id {
        WeightId::F1 => "f1",
        WeightId::F2 => "f2",
        WeightId::F3 => "f3",
        WeightId::G1 => "g1",
        WeightId::G2 => "g2",
        WeightId::G3 => "g3",
    }
}

/// One quadrature estimate next to the exact Catalan number it should equal.
#[derive(Clone, Debug)]
pub struct EvaluationRecord {
    pub n: u32,
    /// Prefactor times the integral estimate.
    pub estimate: f64,
    pub exact: BigUint,
    /// `|estimate − exact| / exact`.
    pub rel_error: f64,
    /// Raw quadrature output for the bare integral (prefactor not applied).
    pub quadrature: QuadratureResult,
}

fn check_n(id: &'static str, n: u32, n_min: u32) -> Result<(), RepresentationError> {
    if n < n_min {
        return Err(RepresentationError::Domain { id, n, n_min });
    }
    if n > MAX_SUPPORTED_N {
        return Err(RepresentationError::Unsupported { n });
    }
    Ok(())
}

fn record(n: u32, prefactor: f64, quadrature: QuadratureResult) -> EvaluationRecord {
    let exact = exact::catalan(n);
    let exact_f = exact
        .to_f64()
        .expect("catalan(n) fits in f64 for supported n");
    let estimate = prefactor * quadrature.value;
    EvaluationRecord {
        n,
        estimate,
        exact,
        rel_error: fp::fabs(estimate - exact_f) / exact_f,
        quadrature,
    }
}

/// The symmetric-family integrand in the Chebyshev angle `t = −cos θ`,
/// `θ ∈ [0, π]`: the kernel `√(1−t²) dt` becomes `sin²θ dθ` and the endpoint
/// factors become half-angle squares, all free of cancellation:
/// `1 − t = 2cos²(θ/2)`, `1 + t = 2sin²(θ/2)`, `sin θ = 2 sin(θ/2) cos(θ/2)`.
///
/// This keeps the `B1` integrand bounded at n = 0, where the raw form has
/// integrable endpoint singularities that f64 cannot resolve (there are no
/// representable points closer to ±1 than ~2.2e-16).
fn symmetric_theta_integrand(id: RepId, n: u32, theta: f64) -> f64 {
    let m = n as i32 - 1;
    let half_sin = fp::sin(0.5 * theta);
    let half_cos = fp::cos(0.5 * theta);
    let sin_theta = 2.0 * half_sin * half_cos;
    if sin_theta == 0.0 {
        return 0.0;
    }
    let sin2 = sin_theta * sin_theta;
    let one_minus_t = 2.0 * half_cos * half_cos;
    let one_plus_t = 2.0 * half_sin * half_sin;
    let t = half_sin * half_sin - half_cos * half_cos;
    match id {
        RepId::B0 => fp::powi(t, 2 * n as i32) * sin2,
        RepId::B1 => sin2 * (fp::powi(one_minus_t, m) + fp::powi(one_plus_t, m)),
        RepId::B2 => t * sin2 * (fp::powi(one_plus_t, m) - fp::powi(one_minus_t, m)),
        RepId::R0 | RepId::R1 | RepId::R2 => unreachable!("half-line representation"),
    }
}

/// Evaluates one representation at n by adaptive quadrature and compares it
/// with the exact Catalan number.
///
/// Half-line representations go through the fixed tangent substitution; the
/// symmetric family is integrated in the Chebyshev angle `t = -cos θ`, which
/// evaluates the same integral with the endpoint behaviour removed.
pub fn evaluate_representation(
    id: RepId,
    n: u32,
    tol: &Tolerance,
) -> Result<EvaluationRecord, RepresentationError> {
    check_n(rep_label(id), n, id.n_min())?;
    let quad = match id.domain() {
        IntegrationDomain::HalfLine => {
            quadrature::integrate_half_line(|t| id.integrand(n, t), tol)?
        }
        IntegrationDomain::SymmetricUnit => quadrature::integrate_finite(
            |theta| symmetric_theta_integrand(id, n, theta),
            0.0,
            PI,
            tol,
        )?,
    };
    Ok(record(n, id.prefactor(n), quad))
}

/// Evaluates the weight function `id` at a point.
pub fn evaluate_weight(id: WeightId, n: u32, t: f64) -> Result<f64, RepresentationError> {
    check_n(weight_label(id), n, id.n_min())?;
    if !t.is_finite() || (id.is_g_family() && !(-1.0..=1.0).contains(&t)) {
        return Err(RepresentationError::OutOfRange { t });
    }
    Ok(weight_value(id, n, t))
}

fn weight_value(id: WeightId, n: u32, t: f64) -> f64 {
    let m = n as i32 - 1;
    let nf = f64::from(n);
    match id {
        WeightId::F1 => fp::powi(t * t + 0.25, -(n as i32)),
        WeightId::F2 => {
            let s = 1.0 / fp::sqrt(t * t + 0.25);
            0.5 * (fp::powi(2.0 - s, m) + fp::powi(2.0 + s, m))
        }
        WeightId::F3 => {
            let s = 1.0 / fp::sqrt(t * t + 0.25);
            (nf + 2.0) / (4.0 * (nf - 1.0)) * s * (fp::powi(2.0 + s, m) - fp::powi(2.0 - s, m))
        }
        WeightId::G1 => fp::powi(2.0 * t, 2 * n as i32),
        WeightId::G2 => fp::powi(2.0, n as i32 - 2) * (fp::powi(1.0 - t, m) + fp::powi(1.0 + t, m)),
        WeightId::G3 => {
            fp::powi(2.0, n as i32 - 2) * (nf + 2.0) / (nf - 1.0)
                * t
                * (fp::powi(t + 1.0, m) - fp::powi(1.0 - t, m))
        }
    }
}

/// Integrates the family kernel times the weight and compares with `C_n`:
/// `(2/π) ∫₀^∞ t²/(t²+¼)² f_i(t) dt` or `(2/π) ∫₋₁¹ √(1−t²) g_i(t) dt`.
pub fn weight_identity_check(
    id: WeightId,
    n: u32,
    tol: &Tolerance,
) -> Result<EvaluationRecord, RepresentationError> {
    check_n(weight_label(id), n, id.n_min())?;
    let quad = if id.is_g_family() {
        quadrature::integrate_finite(
            |t| {
                let k = 1.0 - t * t;
                if k <= 0.0 {
                    return 0.0;
                }
                fp::sqrt(k) * weight_value(id, n, t)
            },
            -1.0,
            1.0,
            tol,
        )?
    } else {
        quadrature::integrate_half_line(
            |t| {
                let u = t * t + 0.25;
                t * t / (u * u) * weight_value(id, n, t)
            },
            tol,
        )?
    };
    Ok(record(n, FRAC_2_PI, quad))
}

/// One confirmed crossing of f1 and f2.
#[derive(Clone, Copy, Debug)]
pub struct IntersectionRoot {
    /// Abscissa of the crossing, refined to f64 resolution.
    pub t: f64,
    /// `|f1(t) − f2(t)|`, evaluated in exact rational arithmetic.
    pub residual: f64,
}

/// Result of a sign-change scan plus per-bracket root refinement.
#[derive(Clone, Debug)]
pub struct IntersectionScan {
    pub roots: Vec<IntersectionRoot>,
}

impl IntersectionScan {
    /// Number of confirmed sign changes of f1 − f2 on the scan grid.
    pub fn sign_changes(&self) -> usize {
        self.roots.len()
    }
}

/// `f1(t) − f2(t)` as an exact rational at a dyadic point.
///
/// `t² + ¼` is rational for every f64 t, so f1 = (t²+¼)^(−n) is exactly
/// computable, and f2 = ½[(2−s)^(n−1) + (2+s)^(n−1)] with s² = 1/(t²+¼) is
/// exactly the even binomial fold of (1/(t²+¼), 2) — no square root is ever
/// taken.
fn f_pair_difference_exact(n: u32, t: f64) -> BigRational {
    let tq = BigRational::from_float(t).expect("scan points are finite");
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let u = &tq * &tq + quarter;
    let f1 = Pow::pow(u.clone(), -(n as i32));
    let two = BigRational::from_integer(BigInt::from(2));
    let f2 = exact::fold_even(&u.recip(), &two, n - 1).sum;
    f1 - f2
}

fn exact_sign(n: u32, t: f64) -> i8 {
    let diff = f_pair_difference_exact(n, t);
    if diff.is_zero() {
        0
    } else if diff.is_positive() {
        1
    } else {
        -1
    }
}

// Bisection on exact signs: converges to the two adjacent floats straddling
// the true crossing, immune to f64 cancellation noise in f1 - f2.
fn refine_bracket(n: u32, mut lo: f64, mut hi: f64, tol: f64) -> Option<IntersectionRoot> {
    let mut sign_lo = exact_sign(n, lo);
    let sign_hi = exact_sign(n, hi);
    if sign_lo == 0 {
        return Some(IntersectionRoot {
            t: lo,
            residual: 0.0,
        });
    }
    if sign_hi == 0 {
        return Some(IntersectionRoot {
            t: hi,
            residual: 0.0,
        });
    }
    if sign_lo == sign_hi {
        return None;
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let diff = f_pair_difference_exact(n, mid);
        let residual = diff.abs().to_f64().unwrap_or(f64::INFINITY);
        if residual <= tol {
            return Some(IntersectionRoot { t: mid, residual });
        }
        let sign_mid = if diff.is_positive() { 1 } else { -1 };
        if sign_mid == sign_lo {
            lo = mid;
            sign_lo = sign_mid;
        } else {
            hi = mid;
        }
    }
    let residual_lo = f_pair_difference_exact(n, lo)
        .abs()
        .to_f64()
        .unwrap_or(f64::INFINITY);
    let residual_hi = f_pair_difference_exact(n, hi)
        .abs()
        .to_f64()
        .unwrap_or(f64::INFINITY);
    if residual_lo <= residual_hi {
        Some(IntersectionRoot {
            t: lo,
            residual: residual_lo,
        })
    } else {
        Some(IntersectionRoot {
            t: hi,
            residual: residual_hi,
        })
    }
}

/// Scans `[t_lo, t_hi]` on a 10⁴-point grid for sign changes of f1 − f2 at
/// the given n, and refines each bracket to a crossing.
///
/// The scan runs in f64; every bracket is then confirmed and bisected in
/// exact rational arithmetic, so the reported count and residuals do not
/// depend on floating-point noise near the crossing. `tol` is the residual at
/// which refinement may stop early; refinement otherwise proceeds to f64
/// resolution.
pub fn find_f_intersection(
    n: u32,
    t_lo: f64,
    t_hi: f64,
    tol: f64,
) -> Result<IntersectionScan, RepresentationError> {
    check_n("f1/f2 intersection", n, 2)?;
    if !t_lo.is_finite() || !t_hi.is_finite() || t_lo >= t_hi || t_lo < 0.0 {
        return Err(RepresentationError::InvalidBracket { t_lo, t_hi });
    }

    let step = (t_hi - t_lo) / (SCAN_POINTS as f64 - 1.0);
    let grid = |i: usize| {
        if i == SCAN_POINTS - 1 {
            t_hi
        } else {
            t_lo + step * i as f64
        }
    };
    let diff = |t: f64| weight_value(WeightId::F1, n, t) - weight_value(WeightId::F2, n, t);

    let mut roots = Vec::new();
    let mut prev_t = grid(0);
    let mut prev_sign = diff(prev_t) >= 0.0;
    for i in 1..SCAN_POINTS {
        let t = grid(i);
        let sign = diff(t) >= 0.0;
        if sign != prev_sign {
            if let Some(root) = refine_bracket(n, prev_t, t, tol) {
                roots.push(root);
            }
        }
        prev_t = t;
        prev_sign = sign;
    }

    if roots.is_empty() {
        return Err(RepresentationError::NoBracket { t_lo, t_hi });
    }
    Ok(IntersectionScan { roots })
}
