//! Exact arithmetic: rationals, polynomials and rational functions over ℚ,
//! plus arbitrary-precision complex numbers for the numeric side.

mod complex;
mod parse;
mod poly;
mod ratfunc;
mod univariate;

pub use complex::{
    fmt_real, real_from_bigint, real_from_i64, real_from_rational, real_parse, real_pi,
    real_round_to_bigint, real_to_f64, BigComplex, DEFAULT_PRECISION, MIN_PRECISION,
};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{MultiPolynomial, VarSet};
pub use ratfunc::{clear_denominators, FactoredSum, RationalFunction};
pub use univariate::UniPoly;

use num_traits::Zero;

use crate::{Error, Result};

/// Builds a rational from a small numerator and denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let err = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = n.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = d.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// `−4p³ − 27q²`, the discriminant of `x³ + p·x + q`.
pub fn cubic_discriminant(p: &BigRational, q: &BigRational) -> BigRational {
    -(int(4) * p * p * p) - int(27) * q * q
}
