//! Exact verification toolkit for the two-parameter mirror family
//! `y² + z + 1/z + x³ + a·x + b = 0` of elliptically fibered K3 surfaces
//! and its identification with Kummer surfaces of products of elliptic curves.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: big rationals, multivariate polynomials, rational functions,
//!   univariate polynomials and arbitrary-precision complex numbers.
//! * [`lattice`]: integral bilinear forms, curve graphs and their invariants.
//! * [`kummer`]: divisor classes on the Kummer surface of `E₁ × E₂`.
//! * [`toric`]: the reflexive simplex and its dual.
//! * [`weierstrass`]: Weierstrass models of the family and Kodaira fibers.
//! * [`shioda_inose`]: the explicit polynomial identities and the `(a, b)`
//!   parameterisations in terms of Legendre parameters and j-invariants.
//! * [`modular`]: numeric j-function, Fricke pairs and modular polynomials.
//! * [`constants`]: every transcribed constant, in one auditable place.
//! * [`verify`]: verification suites producing structured reports.

pub mod constants;
pub mod error;
pub mod exact;
pub mod kummer;
pub mod lattice;
pub mod modular;
pub mod shioda_inose;
pub mod toric;
pub mod verify;
pub mod weierstrass;

pub use error::{Error, Result};
