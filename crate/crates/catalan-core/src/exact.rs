//! Exact arbitrary-precision Catalan arithmetic.
//!
//! Catalan numbers are computed from `C_n = binom(2n, n) / (n + 1)`; the
//! Touchard identity
//!
//! ```text
//! C_{n+1} = Σ_{k=0..⌊n/2⌋} binom(n, 2k) · C_k · 2^(n−2k)
//! ```
//!
//! and Callan's k-weighted variant (valid for n > 1)
//!
//! ```text
//! C_n = Σ_{k=1..⌊n/2⌋} 2^(n−2k) · binom(n, 2k) · C_k · k(n+2) / (n(n−1))
//! ```
//!
//! are verified by exact integer/rational comparison, never floating point.
//!
//! The four `fold_*` operations collapse sums over even binomial indices into
//! two-term closed forms. They always compute the explicit sum; the closed
//! form is attached (and asserted equal) whenever it is exactly representable,
//! i.e. whenever the square root it involves is rational.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// Errors from precondition violations; the arithmetic itself cannot fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactError {
    /// Callan's identity is only valid for n > 1.
    CallanRange { n: u32 },
    /// A sweep range with n_min > n_max, or below the identity's validity floor.
    InvalidRange { n_min: u32, n_max: u32 },
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::CallanRange { n } => {
                write!(f, "callan identity requires n > 1, got n = {n}")
            }
            ExactError::InvalidRange { n_min, n_max } => {
                write!(f, "invalid sweep range [{n_min}, {n_max}]")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ExactError {}

/// The two identities the toolkit can sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Touchard,
    Callan,
}

impl Identity {
    /// Smallest n for which the identity is stated.
    pub fn n_floor(self) -> u32 {
        match self {
            Identity::Touchard => 0,
            Identity::Callan => 2,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::Touchard => write!(f, "touchard"),
            Identity::Callan => write!(f, "callan"),
        }
    }
}

/// One mismatch found by [`verify_identity`]; both sides as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub n: u32,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// Outcome of an exact identity sweep over `[n_min, n_max]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Identity,
    pub n_min: u32,
    pub n_max: u32,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    /// True exactly when no mismatch was found.
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Number of n values checked.
    pub fn checked(&self) -> u64 {
        u64::from(self.n_max) - u64::from(self.n_min) + 1
    }
}

/// `binom(n, k)`, with the convention `binom(n, k) = 0` for `k > n`.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc is binom(n, i-1) here, so the division is exact.
        acc = acc * BigUint::from(n - k + i) / BigUint::from(i);
    }
    acc
}

/// The n-th Catalan number, `binom(2n, n) / (n + 1)`; the division is exact.
pub fn catalan(n: u32) -> BigUint {
    let two_n = n.checked_mul(2).expect("2n overflows u32");
    binomial(two_n, n) / BigUint::from(n + 1)
}

/// Catalan numbers `C_0..=C_n` via the ratio recurrence
/// `C_{k+1} = C_k (4k + 2) / (k + 2)`.
///
/// An independent route from [`catalan`], which goes through the central
/// binomial coefficient; the two are cross-checked in the test suite.
pub fn catalan_table(n: u32) -> Vec<BigUint> {
    let mut table = Vec::with_capacity(n as usize + 1);
    table.push(BigUint::one());
    for k in 0..n {
        let next = table.last().unwrap() * BigUint::from(4 * k + 2) / BigUint::from(k + 2);
        table.push(next);
    }
    table
}

/// Right-hand side of the Touchard identity; equals `catalan(n + 1)`.
pub fn touchard_rhs(n: u32) -> BigUint {
    let catalans = catalan_table(n / 2);
    let mut term_binom = BigUint::one(); // binom(n, 2k)
    let mut pow2 = BigUint::one() << n as usize; // 2^(n-2k)
    let mut sum = BigUint::zero();
    for k in 0..=n / 2 {
        sum += &term_binom * &catalans[k as usize] * &pow2;
        if 2 * u64::from(k) + 2 <= u64::from(n) {
            // binom(n, 2k+2) = binom(n, 2k) (n-2k)(n-2k-1) / ((2k+1)(2k+2))
            term_binom = term_binom * BigUint::from(n - 2 * k) * BigUint::from(n - 2 * k - 1)
                / (BigUint::from(2 * k + 1) * BigUint::from(2 * k + 2));
        }
        pow2 >>= 2;
    }
    sum
}

/// Right-hand side of Callan's identity; an exact rational that reduces to
/// the integer `catalan(n)` for every n > 1.
///
/// The sum runs from k = 0: the k = 0 term carries a factor k and vanishes,
/// so this matches the k = 1 statement while keeping the same loop shape as
/// [`touchard_rhs`].
pub fn callan_rhs(n: u32) -> Result<BigRational, ExactError> {
    if n <= 1 {
        return Err(ExactError::CallanRange { n });
    }
    let catalans = catalan_table(n / 2);
    let mut term_binom = BigUint::one();
    let mut pow2 = BigUint::one() << n as usize;
    let mut sum = BigUint::zero();
    for k in 0..=n / 2 {
        sum += &term_binom * &catalans[k as usize] * &pow2 * BigUint::from(k);
        if 2 * u64::from(k) + 2 <= u64::from(n) {
            term_binom = term_binom * BigUint::from(n - 2 * k) * BigUint::from(n - 2 * k - 1)
                / (BigUint::from(2 * k + 1) * BigUint::from(2 * k + 2));
        }
        pow2 >>= 2;
    }
    // The weight k(n+2)/(n(n-1)) distributes out of the integer sum exactly.
    Ok(BigRational::new(
        BigInt::from(sum * BigUint::from(n + 2)),
        BigInt::from(u64::from(n) * u64::from(n - 1)),
    ))
}

/// Sweeps one identity over `[n_min, n_max]`, comparing both sides exactly.
pub fn verify_identity(
    identity: Identity,
    n_min: u32,
    n_max: u32,
) -> Result<IdentityReport, ExactError> {
    if n_min > n_max || n_min < identity.n_floor() {
        return Err(ExactError::InvalidRange { n_min, n_max });
    }
    let mut failures = Vec::new();
    for n in n_min..=n_max {
        let (lhs, rhs) = match identity {
            Identity::Touchard => (big_ratio(catalan(n + 1)), big_ratio(touchard_rhs(n))),
            Identity::Callan => (big_ratio(catalan(n)), callan_rhs(n)?),
        };
        if lhs != rhs {
            failures.push(IdentityFailure { n, lhs, rhs });
        }
    }
    Ok(IdentityReport {
        identity,
        n_min,
        n_max,
        failures,
    })
}

fn big_ratio(value: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

/// Exact square root of a nonnegative rational, when one exists.
pub fn rational_sqrt(a: &BigRational) -> Option<BigRational> {
    if a.is_negative() {
        return None;
    }
    let num = a.numer().magnitude();
    let den = a.denom().magnitude();
    let num_root = num.sqrt();
    let den_root = den.sqrt();
    if &num_root * &num_root == *num && &den_root * &den_root == *den {
        Some(BigRational::new(
            BigInt::from(num_root),
            BigInt::from(den_root),
        ))
    } else {
        None
    }
}

/// Result of one binomial fold: the explicit sum, plus the two-term closed
/// form whenever it is exactly representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldResult {
    pub sum: BigRational,
    pub closed_form: Option<BigRational>,
}

impl FoldResult {
    /// True when the closed form would need an irrational square root.
    pub fn requires_sqrt(&self) -> bool {
        self.closed_form.is_none()
    }
}

fn fold_sum(a: &BigRational, b: &BigRational, n: u32, k_weighted: bool) -> BigRational {
    let mut sum = BigRational::zero();
    for k in 0..=n / 2 {
        let mut term =
            big_ratio(binomial(n, 2 * k)) * Pow::pow(a.clone(), k) * Pow::pow(b.clone(), n - 2 * k);
        if k_weighted {
            term *= big_ratio(BigUint::from(k));
        }
        sum += term;
    }
    sum
}

fn assert_routes_agree(sum: &BigRational, closed: &BigRational) {
    assert_eq!(sum, closed, "binomial fold and closed form disagree");
}

/// `Σ binom(n, 2k) a^k b^(n−2k)`, with closed form
/// `½[(b−√a)^n + (b+√a)^n]` when `√a` is rational.
pub fn fold_even(a: &BigRational, b: &BigRational, n: u32) -> FoldResult {
    let sum = fold_sum(a, b, n, false);
    let closed_form = rational_sqrt(a).map(|root| {
        let closed =
            (Pow::pow(b - &root, n) + Pow::pow(b + &root, n)) / big_ratio(BigUint::from(2u32));
        assert_routes_agree(&sum, &closed);
        closed
    });
    FoldResult { sum, closed_form }
}

/// `Σ binom(n, 2k) k a^k b^(n−2k)`, with closed form
/// `(n√a/4)[(b+√a)^(n−1) − (b−√a)^(n−1)]` when `√a` is rational.
pub fn fold_even_weighted(a: &BigRational, b: &BigRational, n: u32) -> FoldResult {
    let sum = fold_sum(a, b, n, true);
    let closed_form = rational_sqrt(a).map(|root| {
        let closed = if n == 0 {
            // The n factor kills the closed form before the (n-1) exponent
            // could go negative.
            BigRational::zero()
        } else {
            big_ratio(BigUint::from(n)) * &root / big_ratio(BigUint::from(4u32))
                * (Pow::pow(b + &root, n - 1) - Pow::pow(b - &root, n - 1))
        };
        assert_routes_agree(&sum, &closed);
        closed
    });
    FoldResult { sum, closed_form }
}

/// `Σ binom(n, 2k) a^(2k) b^(n−2k)` with closed form `½[(a+b)^n + (b−a)^n]`.
///
/// No square root appears, so the closed form always exists.
pub fn fold_even_square(a: &BigRational, b: &BigRational, n: u32) -> FoldResult {
    let sum = fold_sum(&(a * a), b, n, false);
    let closed = (Pow::pow(a + b, n) + Pow::pow(b - a, n)) / big_ratio(BigUint::from(2u32));
    assert_routes_agree(&sum, &closed);
    FoldResult {
        sum,
        closed_form: Some(closed),
    }
}

/// `Σ binom(n, 2k) k a^(2k) b^(n−2k)` with closed form
/// `(na/4)[(a+b)^(n−1) − (b−a)^(n−1)]`.
pub fn fold_even_square_weighted(a: &BigRational, b: &BigRational, n: u32) -> FoldResult {
    let sum = fold_sum(&(a * a), b, n, true);
    let closed = if n == 0 {
        BigRational::zero()
    } else {
        big_ratio(BigUint::from(n)) * a / big_ratio(BigUint::from(4u32))
            * (Pow::pow(a + b, n - 1) - Pow::pow(b - a, n - 1))
    };
    assert_routes_agree(&sum, &closed);
    FoldResult {
        sum,
        closed_form: Some(closed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn int(value: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(value))
    }

    #[test]
    fn catalan_small_values() {
        assert_eq!(catalan(0), BigUint::from(1u32));
        assert_eq!(catalan(3), BigUint::from(5u32));
        assert_eq!(catalan(10), BigUint::from(16796u32));
    }

    #[test]
    fn catalan_table_matches_direct() {
        let table = catalan_table(60);
        for (n, value) in table.iter().enumerate() {
            assert_eq!(*value, catalan(n as u32));
        }
    }

    #[test]
    fn binomial_values_and_conventions() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(4, 5), BigUint::zero());
        assert_eq!(binomial(30, 15), BigUint::from(155117520u32));
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn touchard_rhs_values() {
        assert_eq!(touchard_rhs(0), BigUint::from(1u32));
        // n = 4: 16 + 24 + 2
        assert_eq!(touchard_rhs(4), BigUint::from(42u32));
        assert_eq!(touchard_rhs(6), catalan(7));
        assert_eq!(catalan(7), BigUint::from(429u32));
    }

    #[test]
    fn callan_rhs_values() {
        assert_eq!(callan_rhs(2).unwrap(), int(2));
        // n = 4: 12 + 2
        assert_eq!(callan_rhs(4).unwrap(), int(14));
        assert_eq!(callan_rhs(1), Err(ExactError::CallanRange { n: 1 }));
        assert_eq!(callan_rhs(0), Err(ExactError::CallanRange { n: 0 }));
    }

    #[test]
    fn verify_identity_sweeps() {
        let report = verify_identity(Identity::Touchard, 0, 100).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.checked(), 101);

        let report = verify_identity(Identity::Callan, 2, 100).unwrap();
        assert!(report.all_passed());

        assert_eq!(
            verify_identity(Identity::Callan, 0, 10),
            Err(ExactError::InvalidRange {
                n_min: 0,
                n_max: 10
            })
        );
        assert_eq!(
            verify_identity(Identity::Touchard, 5, 4),
            Err(ExactError::InvalidRange { n_min: 5, n_max: 4 })
        );
    }

    #[test]
    fn fold_even_values() {
        let r = fold_even(&int(1), &int(2), 3);
        assert_eq!(r.sum, int(14));
        assert_eq!(r.closed_form, Some(int(14)));

        let r = fold_even(&int(0), &int(2), 5);
        assert_eq!(r.sum, int(32));
        assert!(!r.requires_sqrt());

        // 81 + 216 + 16 = 313 = (1 + 625)/2
        let r = fold_even(&int(4), &int(3), 4);
        assert_eq!(r.sum, int(313));
        assert_eq!(r.closed_form, Some(int(313)));

        // a = 2 is not a perfect square: sum only.
        let r = fold_even(&int(2), &int(1), 4);
        assert!(r.requires_sqrt());
        assert_eq!(r.sum, int(1 + 6 * 2 + 4));
    }

    #[test]
    fn fold_even_weighted_values() {
        let r = fold_even_weighted(&int(1), &int(2), 3);
        assert_eq!(r.sum, int(6));
        assert_eq!(r.closed_form, Some(int(6)));

        let r = fold_even_weighted(&rat(7, 3), &rat(-2, 5), 0);
        assert_eq!(r.sum, BigRational::zero());

        // terms 6 + 2 = 8 = (4/4)(2^3 - 0^3)
        let r = fold_even_weighted(&int(1), &int(1), 4);
        assert_eq!(r.sum, int(8));
        assert_eq!(r.closed_form, Some(int(8)));
    }

    #[test]
    fn fold_even_square_values() {
        assert_eq!(fold_even_square(&int(1), &int(1), 2).sum, int(2));
        assert_eq!(fold_even_square(&int(0), &int(3), 3).sum, int(27));
        // 1 + 24 + 16 = 41 = (81 + 1)/2
        assert_eq!(fold_even_square(&int(2), &int(1), 4).sum, int(41));
        // negative a is fine for the a² form
        assert_eq!(fold_even_square(&int(-2), &int(1), 4).sum, int(41));
    }

    #[test]
    fn fold_even_square_weighted_values() {
        assert_eq!(fold_even_square_weighted(&int(1), &int(1), 2).sum, int(1));
        assert_eq!(
            fold_even_square_weighted(&rat(9, 2), &rat(-1, 7), 1).sum,
            BigRational::zero()
        );
        // single k = 1 term: binom(3,2)·1·4·1 = 12 = (6/4)(9 - 1)
        assert_eq!(fold_even_square_weighted(&int(2), &int(1), 3).sum, int(12));
    }

    #[test]
    fn identity_report_all_passed_tracks_failures() {
        let mut report = verify_identity(Identity::Touchard, 0, 3).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.checked(), 4);
        report.failures.push(IdentityFailure {
            n: 2,
            lhs: int(1),
            rhs: int(2),
        });
        assert!(!report.all_passed());
    }

    #[test]
    fn rational_sqrt_cases() {
        assert_eq!(rational_sqrt(&rat(4, 9)), Some(rat(2, 3)));
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&rat(-4, 9)), None);
        assert_eq!(rational_sqrt(&rat(49, 16)), Some(rat(7, 4)));
    }
}
