//! Exact Catalan-number arithmetic and the integral representations derived
//! from the Touchard and Callan identities.
//!
//! The crate has three layers:
//!
//! - [`exact`] — arbitrary-precision Catalan numbers, binomial coefficients,
//!   both identities, and the four binomial-fold closed forms, all evaluated
//!   without floating point.
//! - [`quadrature`] — adaptive Gauss–Kronrod integration over finite intervals
//!   and the half-line `[0, ∞)`, with error estimates and evaluation counting.
//! - [`representations`] — the six integral representations (`R0`–`R2` on the
//!   half-line, `B0`–`B2` on `[−1, 1]`) and the six weight functions
//!   (`f1`–`f3`, `g1`–`g3`), cross-checked against exact values.
//!
//! The core is `no_std`-compatible (`alloc` required); disable the default
//! `std` feature for embedded use. All floating-point transcendentals go
//! through `libm`, so results are bit-identical across platforms.
//!
//! ```
//! use catalan_core::exact;
//!
//! assert_eq!(exact::catalan(10).to_string(), "16796");
//! ```

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod exact;
pub mod quadrature;
pub mod representations;

mod fp;

pub use num_bigint::BigUint;
pub use num_rational::BigRational;
