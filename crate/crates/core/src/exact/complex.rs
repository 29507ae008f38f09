//! Arbitrary-precision complex numbers backed by `astro_float::BigFloat`.

use std::cell::RefCell;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::BigRational;
use crate::{Error, Result};

/// Working precision in bits used when no other precision is requested.
pub const DEFAULT_PRECISION: usize = 256;

/// The smallest precision accepted by [`BigComplex`] constructors.
pub const MIN_PRECISION: usize = 64;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

pub fn real_pi(p: usize) -> BigFloat {
    with_cc(|cc| cc.pi(p, RM))
}

pub fn real_from_i64(v: i64, p: usize) -> BigFloat {
    BigFloat::from_i64(v, p)
}

/// Exact integer or rational to a `p`-bit float.
pub fn real_from_rational(r: &BigRational, p: usize) -> BigFloat {
    let num = real_from_bigint(r.numer(), p + 64);
    let den = real_from_bigint(r.denom(), p + 64);
    num.div(&den, p, RM)
}

pub fn real_from_bigint(n: &BigInt, p: usize) -> BigFloat {
    let bits = n.bits() as usize + 64;
    with_cc(|cc| BigFloat::parse(&n.to_string(), Radix::Dec, p.max(bits), RM, cc))
}

/// Parses a decimal literal such as `-1.25e-3`.
pub fn real_parse(s: &str, p: usize) -> Result<BigFloat> {
    let t = s.trim();
    let ok = is_decimal_literal(t);
    let v = if ok {
        with_cc(|cc| BigFloat::parse(t, Radix::Dec, p, RM, cc))
    } else {
        BigFloat::nan(None)
    };
    if v.is_nan() || v.is_inf() {
        return Err(Error::Parse {
            input: s.to_string(),
            reason: "not a real number".into(),
        });
    }
    Ok(v)
}

/// `[+-]digits[.digits][(e|E)[+-]digits]`, with at least one mantissa digit.
fn is_decimal_literal(s: &str) -> bool {
    let s = s.strip_prefix(['+', '-']).unwrap_or(s);
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, Some(e)),
        None => (s, None),
    };
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    let digits = |x: &str| x.chars().all(|c| c.is_ascii_digit());
    let mant_ok = digits(ip) && digits(fp) && !(ip.is_empty() && fp.is_empty());
    let exp_ok = exp.is_none_or(|e| {
        let e = e.strip_prefix(['+', '-']).unwrap_or(e);
        !e.is_empty() && digits(e)
    });
    mant_ok && exp_ok
}

/// Nearest `f64`; underflows to zero and saturates to infinity.
pub fn real_to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    let Some((m, _, s, e, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    if x.is_zero() {
        return 0.0;
    }
    let top = *m.last().unwrap_or(&0);
    let next = if m.len() > 1 { m[m.len() - 2] } else { 0 };
    let mant = top as f64 + next as f64 / 2f64.powi(64);
    let v = mant * 2f64.powi(e.clamp(-2000, 2000) - 64);
    if s == Sign::Neg {
        -v
    } else {
        v
    }
}

/// Rounds to the nearest integer. Returns `None` for non-finite input.
pub fn real_round_to_bigint(x: &BigFloat) -> Option<BigInt> {
    if x.is_nan() || x.is_inf() {
        return None;
    }
    if x.is_zero() {
        return Some(BigInt::zero());
    }
    let r = x.round(0, RoundingMode::ToEven);
    if r.is_zero() {
        return Some(BigInt::zero());
    }
    let (m, _, s, e, _) = r.as_raw_parts()?;
    let mut digits = Vec::with_capacity(m.len() * 2);
    for &w in m {
        digits.push(w as u32);
        digits.push((w >> 32) as u32);
    }
    let mant = BigUint::new(digits);
    let shift = e as i64 - 64 * m.len() as i64;
    let mag = if shift >= 0 {
        mant << (shift as usize)
    } else {
        mant >> ((-shift) as usize)
    };
    let v = BigInt::from(mag);
    Some(if s == Sign::Neg { -v } else { v })
}

fn real_atan2(y: &BigFloat, x: &BigFloat, p: usize) -> BigFloat {
    let wp = p + 32;
    if x.is_zero() {
        if y.is_zero() {
            return BigFloat::from_i64(0, p);
        }
        let half_pi = real_pi(wp).div(&BigFloat::from_i64(2, wp), p, RM);
        return if y.is_negative() { -half_pi } else { half_pi };
    }
    let base = with_cc(|cc| y.div(x, wp, RM).atan(wp, RM, cc));
    if x.is_positive() {
        return base;
    }
    let pi = real_pi(wp);
    if y.is_negative() {
        base.sub(&pi, p, RM)
    } else {
        base.add(&pi, p, RM)
    }
}

/// A complex number `re + im·i` carrying its working precision.
#[derive(Clone)]
pub struct BigComplex {
    re: BigFloat,
    im: BigFloat,
    prec: usize,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat, prec: usize) -> Self {
        BigComplex {
            re,
            im,
            prec: prec.max(MIN_PRECISION),
        }
    }

    pub fn checked_precision(prec: usize) -> Result<usize> {
        if prec < MIN_PRECISION {
            return Err(Error::PrecisionInsufficient(format!(
                "{prec} bits requested, at least {MIN_PRECISION} required"
            )));
        }
        Ok(prec)
    }

    pub fn zero(prec: usize) -> Self {
        Self::from_i64(0, prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn i(prec: usize) -> Self {
        Self::new(
            BigFloat::from_i64(0, prec),
            BigFloat::from_i64(1, prec),
            prec,
        )
    }

    pub fn from_i64(v: i64, prec: usize) -> Self {
        Self::new(
            BigFloat::from_i64(v, prec),
            BigFloat::from_i64(0, prec),
            prec,
        )
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        Self::new(
            BigFloat::from_f64(re, prec),
            BigFloat::from_f64(im, prec),
            prec,
        )
    }

    pub fn from_rational(r: &BigRational, prec: usize) -> Self {
        Self::new(
            real_from_rational(r, prec),
            BigFloat::from_i64(0, prec),
            prec,
        )
    }

    pub fn from_real(re: BigFloat, prec: usize) -> Self {
        Self::new(re, BigFloat::from_i64(0, prec), prec)
    }

    /// Parses `a`, `bi`, `a+bi`, `a-bi`, `i` or `-i` with decimal `a`, `b`.
    pub fn parse(s: &str, prec: usize) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || Error::Parse {
            input: s.to_string(),
            reason: "expected a complex number like 0.5+1.25i".into(),
        };
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::from_real(
                real_parse(&t, prec).map_err(|_| err())?,
                prec,
            ));
        };
        // Split at the last sign that is not a leading sign or an exponent sign.
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re_s, im_s) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im_s = match im_s {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        let re = real_parse(re_s, prec).map_err(|_| err())?;
        let im = real_parse(im_s, prec).map_err(|_| err())?;
        Ok(Self::new(re, im, prec))
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn with_precision(&self, prec: usize) -> Self {
        let mut re = self.re.clone();
        let mut im = self.im.clone();
        let prec = prec.max(MIN_PRECISION);
        let _ = re.set_precision(prec, RM);
        let _ = im.set_precision(prec, RM);
        Self::new(re, im, prec)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (real_to_f64(&self.re), real_to_f64(&self.im))
    }

    pub fn is_finite(&self) -> bool {
        !(self.re.is_nan() || self.im.is_nan() || self.re.is_inf() || self.im.is_inf())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone(), self.prec)
    }

    pub fn norm_sqr(&self) -> BigFloat {
        let p = self.prec;
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt(self.prec, RM)
    }

    /// `|self|` as `f64`, saturating.
    pub fn abs_f64(&self) -> f64 {
        real_to_f64(&self.abs())
    }

    /// Principal argument in `(−π, π]`.
    pub fn arg(&self) -> BigFloat {
        real_atan2(&self.im, &self.re, self.prec)
    }

    pub fn scale(&self, c: &BigFloat) -> Self {
        let p = self.prec;
        Self::new(self.re.mul(c, p, RM), self.im.mul(c, p, RM), p)
    }

    pub fn recip(&self) -> Self {
        let p = self.prec;
        let d = self.norm_sqr();
        Self::new(self.re.div(&d, p, RM), -self.im.clone().div(&d, p, RM), p)
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut result = Self::one(self.prec);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    pub fn exp(&self) -> Self {
        let p = self.prec;
        let wp = p + 32;
        let (m, c, s) = with_cc(|cc| {
            (
                self.re.exp(wp, RM, cc),
                self.im.cos(wp, RM, cc),
                self.im.sin(wp, RM, cc),
            )
        });
        Self::new(m.mul(&c, p, RM), m.mul(&s, p, RM), p)
    }

    /// Principal square root (branch cut on the negative real axis, `√−1 = i`).
    pub fn sqrt(&self) -> Self {
        let p = self.prec;
        if self.is_zero() {
            return Self::zero(p);
        }
        let r = self.abs();
        let two = BigFloat::from_i64(2, p);
        let a = r.add(&self.re, p, RM).div(&two, p, RM).sqrt(p, RM);
        let b = r.sub(&self.re, p, RM).div(&two, p, RM).sqrt(p, RM);
        let b = if self.im.is_negative() { -b } else { b };
        Self::new(a, b, p)
    }

    /// Principal cube root `|z|^{1/3}·e^{i·arg(z)/3}`.
    pub fn cbrt(&self) -> Self {
        let p = self.prec;
        if self.is_zero() {
            return Self::zero(p);
        }
        if self.im.is_zero() && !self.re.is_negative() {
            return Self::from_real(self.re.cbrt(p, RM), p);
        }
        let wp = p + 32;
        let r = self.abs().cbrt(wp, RM);
        let theta = self.arg().div(&BigFloat::from_i64(3, wp), wp, RM);
        let (c, s) = with_cc(|cc| (theta.cos(wp, RM, cc), theta.sin(wp, RM, cc)));
        Self::new(r.mul(&c, p, RM), r.mul(&s, p, RM), p)
    }

    /// `|self − other|` as `f64`.
    pub fn dist(&self, other: &Self) -> f64 {
        (self - other).abs_f64()
    }

    /// `|self − other| / max(1, |other|)` as `f64`.
    pub fn rel_dist(&self, other: &Self) -> f64 {
        let d = self.dist(other);
        d / other.abs_f64().max(1.0)
    }

    /// Decimal rendering with `digits` significant digits per part; an exactly
    /// zero imaginary part is omitted.
    pub fn to_string_digits(&self, digits: usize) -> String {
        if self.im.is_zero() {
            return fmt_real(&self.re, digits);
        }
        if self.re.is_zero() {
            return format!("{}i", fmt_real(&self.im, digits));
        }
        format!(
            "{}{}{}i",
            fmt_real(&self.re, digits),
            if self.im.is_negative() { "-" } else { "+" },
            fmt_real(&self.im.abs(), digits)
        )
    }
}

/// Decimal rendering of a real rounded to `digits` significant digits,
/// positional when the decimal exponent lies in `-6..=digits`.
pub fn fmt_real(x: &BigFloat, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let digits = digits.max(1);
    let s = with_cc(|cc| x.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
    let (mant, exp) = s.split_once('e').unwrap_or((&s, "0"));
    let (sign, mant) = match mant.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mant),
    };
    let (int_part, frac) = mant.split_once('.').unwrap_or((mant, ""));
    let all: Vec<u8> = int_part
        .bytes()
        .chain(frac.bytes())
        .map(|b| b - b'0')
        .collect();
    let lead = all.iter().position(|&d| d != 0).unwrap_or(0);
    // Value is 0.d₁d₂… × 10^point.
    let mut point = exp.parse::<i64>().unwrap_or(0) + int_part.len() as i64 - lead as i64;
    let mut sig: Vec<u8> = all[lead..].to_vec();
    if sig.len() > digits {
        let round_up = sig[digits] >= 5;
        sig.truncate(digits);
        if round_up {
            let mut k = digits;
            loop {
                if k == 0 {
                    sig.insert(0, 1);
                    sig.pop();
                    point += 1;
                    break;
                }
                k -= 1;
                if sig[k] == 9 {
                    sig[k] = 0;
                } else {
                    sig[k] += 1;
                    break;
                }
            }
        }
    }
    while sig.len() > 1 && sig.last() == Some(&0) {
        sig.pop();
    }
    let text: String = sig.iter().map(|d| char::from(b'0' + d)).collect();
    let body = if (-5..=digits as i64).contains(&point) {
        if point <= 0 {
            format!("0.{}{text}", "0".repeat((-point) as usize))
        } else if point as usize >= text.len() {
            format!("{text}{}", "0".repeat(point as usize - text.len()))
        } else {
            format!("{}.{}", &text[..point as usize], &text[point as usize..])
        }
    } else {
        let (head, tail) = text.split_at(1);
        let tail = if tail.is_empty() {
            String::new()
        } else {
            format!(".{tail}")
        };
        format!("{head}{tail}e{}", point - 1)
    };
    format!("{sign}{body}")
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_digits(f.precision().unwrap_or(30)))
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_digits(20))
    }
}

impl<'a> Add<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        let p = self.prec.max(rhs.prec);
        BigComplex::new(self.re.add(&rhs.re, p, RM), self.im.add(&rhs.im, p, RM), p)
    }
}

impl<'a> Sub<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        let p = self.prec.max(rhs.prec);
        BigComplex::new(self.re.sub(&rhs.re, p, RM), self.im.sub(&rhs.im, p, RM), p)
    }
}

// Working precision is padded inside the product.
#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Mul<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        let p = self.prec.max(rhs.prec);
        let wp = p + 16;
        let re = self
            .re
            .mul(&rhs.re, wp, RM)
            .sub(&self.im.mul(&rhs.im, wp, RM), p, RM);
        let im = self
            .re
            .mul(&rhs.im, wp, RM)
            .add(&self.im.mul(&rhs.re, wp, RM), p, RM);
        BigComplex::new(re, im, p)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        self * &rhs.recip()
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-self.re.clone(), -self.im.clone(), self.prec)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: BigComplex) -> BigComplex { (&self).$m(&rhs) }
        }
        impl $tr<&BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: &BigComplex) -> BigComplex { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    const P: usize = DEFAULT_PRECISION;

    fn c(re: f64, im: f64) -> BigComplex {
        BigComplex::from_f64(re, im, P)
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = c(1.5, -2.0);
        let b = c(-0.25, 3.0);
        let q = &a / &b;
        assert!((&q * &b).dist(&a) < 1e-70);
        assert!((&(&a + &b) - &b).dist(&a) < 1e-70);
    }

    #[test]
    fn euler_identity() {
        let pi = real_pi(P);
        let z = BigComplex::new(BigFloat::from_i64(0, P), pi, P).exp();
        assert!(z.dist(&BigComplex::from_i64(-1, P)) < 1e-70);
    }

    #[test]
    fn principal_roots() {
        let m1 = BigComplex::from_i64(-1, P);
        assert!(m1.sqrt().dist(&BigComplex::i(P)) < 1e-70);
        let r = m1.cbrt();
        // e^{iπ/3}
        assert!(r.dist(&c(0.5, 3f64.sqrt() / 2.0)) < 1e-15);
        assert!(r.powi(3).dist(&m1) < 1e-70);
        let z = c(-3.0, -4.0);
        let s = z.sqrt();
        assert!(s.dist(&c(1.0, -2.0)) < 1e-70);
        assert!(z.cbrt().powi(3).dist(&z) < 1e-70);
    }

    #[test]
    fn parse_forms() {
        let cases = [
            ("0.5+1.25i", (0.5, 1.25)),
            ("-2-3i", (-2.0, -3.0)),
            ("i", (0.0, 1.0)),
            ("-i", (0.0, -1.0)),
            ("1e-3+2.5e1i", (1e-3, 25.0)),
            ("7", (7.0, 0.0)),
            ("3i", (0.0, 3.0)),
        ];
        for (s, (re, im)) in cases {
            let z = BigComplex::parse(s, P).unwrap();
            let (a, b) = z.to_f64();
            assert!((a - re).abs() < 1e-12 && (b - im).abs() < 1e-12, "{s}");
        }
        assert!(BigComplex::parse("abc", P).is_err());
        assert!(BigComplex::parse("", P).is_err());
        assert!(BigComplex::parse("1+", P).is_err());
    }

    #[test]
    fn integer_rounding() {
        let x = real_from_rational(&rat(-314159265358979323, 100), P);
        assert_eq!(
            real_round_to_bigint(&x).unwrap(),
            "-3141592653589793".parse::<BigInt>().unwrap()
        );
        let big: BigInt = "-157464000000000".parse().unwrap();
        assert_eq!(
            real_round_to_bigint(&real_from_bigint(&big, P)).unwrap(),
            big
        );
        assert_eq!(
            real_round_to_bigint(&BigFloat::from_f64(0.4, P)).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn precision_floor() {
        assert!(BigComplex::checked_precision(32).is_err());
        assert_eq!(BigComplex::checked_precision(128).unwrap(), 128);
    }

    #[test]
    fn formatting_rounds() {
        let r = |n: i64, d: i64| BigComplex::from_rational(&rat(n, d), P);
        assert_eq!(r(1728, 1).to_string_digits(30), "1728");
        assert_eq!(r(-33, 2).to_string_digits(30), "-16.5");
        assert_eq!(r(2, 3).to_string_digits(5), "0.66667");
        assert_eq!(r(1, 3000).to_string_digits(3), "0.000333");
        assert_eq!(r(999_999, 1).to_string_digits(3), "1e6");
        assert_eq!(r(1, 10_000_000).to_string_digits(3), "1e-7");
        assert_eq!(c(0.5, -1.25).to_string_digits(10), "0.5-1.25i");
        assert_eq!(c(0.0, 2.0).to_string_digits(10), "2i");
        assert_eq!(BigComplex::zero(P).to_string_digits(10), "0");
    }
}
