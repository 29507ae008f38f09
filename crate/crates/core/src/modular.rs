//! The j-function on the upper half-plane, Fricke pairs `(j(τ), j(−1/(nτ)))`
//! and the classical modular polynomials `Φ₁, Φ₂, Φ₃`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Mutex, OnceLock};

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::constants::Constants;
use crate::exact::{real_pi, real_round_to_bigint, real_to_f64, BigComplex, BigRational};
use crate::shioda_inose::ab_numeric;
use crate::{Error, Result};

/// Smallest truncation order accepted for a [`QSeries`].
pub const MIN_ORDER: usize = 16;
/// Truncation order used at the default precision.
pub const BASE_ORDER: usize = 64;
/// Precision used to reconstruct modular polynomials.
pub const RECONSTRUCTION_PRECISION: usize = 768;
/// Largest acceptable `|a − round(a)|` for a reconstructed coefficient.
pub const ROUNDING_THRESHOLD: f64 = 1e-6;
pub const CACHE_ENV: &str = "K3LAB_CACHE_DIR";

/// Power series `Σ c_k q^k` truncated after `q^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Result<Self> {
        if order < MIN_ORDER {
            return Err(Error::DimensionMismatch {
                expected: MIN_ORDER,
                got: order,
            });
        }
        coeffs.resize(order + 1, BigInt::zero());
        Ok(QSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let n = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        QSeries { coeffs: out }
    }

    pub fn pow(&self, mut e: u32) -> QSeries {
        let mut coeffs = vec![BigInt::zero(); self.order() + 1];
        coeffs[0] = BigInt::one();
        let mut acc = QSeries { coeffs };
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; requires constant term `±1`.
    pub fn inverse(&self) -> Option<QSeries> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return None;
        }
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        out[0] = c0.clone();
        for k in 1..=n {
            let mut s = BigInt::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &out[k - i];
            }
            out[k] = -s * c0;
        }
        Some(QSeries { coeffs: out })
    }

    /// Horner evaluation at `q`.
    pub fn eval(&self, q: &BigComplex) -> BigComplex {
        let p = q.precision();
        self.coeffs
            .iter()
            .rev()
            .fold(BigComplex::zero(p), |acc, c| {
                &(&acc * q) + &BigComplex::from_rational(&BigRational::from_integer(c.clone()), p)
            })
    }

    /// `E₄ = 1 + 240 Σ σ₃(k) q^k`.
    pub fn eisenstein_e4(order: usize) -> Result<QSeries> {
        let mut c = vec![BigInt::zero(); order + 1];
        c[0] = BigInt::one();
        for d in 1..=order {
            let d3 = BigInt::from(d as u64).pow(3);
            for m in (d..=order).step_by(d) {
                c[m] += &d3 * 240;
            }
        }
        QSeries::new(c, order)
    }

    /// `Π (1 − q^k)` from the pentagonal number theorem.
    pub fn euler_product(order: usize) -> Result<QSeries> {
        let mut c = vec![BigInt::zero(); order + 1];
        for k in 0i64.. {
            let mut any = false;
            for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
                if (g as usize) <= order {
                    any = true;
                    let s = if k % 2 == 0 { 1 } else { -1 };
                    c[g as usize] = BigInt::from(s);
                }
            }
            if !any {
                break;
            }
        }
        QSeries::new(c, order)
    }

    /// `Δ(q)/q = Π (1 − q^k)^24`.
    pub fn discriminant_over_q(order: usize) -> Result<QSeries> {
        Ok(QSeries::euler_product(order)?.pow(24))
    }

    /// `q·j(q) = E₄³ / Π (1 − q^k)^24`: coefficients 1, 744, 196884, …
    pub fn j_times_q(order: usize) -> Result<QSeries> {
        let e4 = QSeries::eisenstein_e4(order)?;
        let inv = QSeries::discriminant_over_q(order)?
            .inverse()
            .expect("unit constant term");
        Ok(e4.pow(3).mul(&inv))
    }
}

fn series_pair(order: usize) -> (QSeries, QSeries) {
    static CACHE: OnceLock<Mutex<HashMap<usize, (QSeries, QSeries)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("series cache");
    guard
        .entry(order)
        .or_insert_with(|| {
            (
                QSeries::eisenstein_e4(order).expect("order"),
                QSeries::discriminant_over_q(order).expect("order"),
            )
        })
        .clone()
}

/// Truncation order giving full accuracy at `prec` bits once `τ` is in the
/// fundamental domain, where `|q| ≤ e^{−π√3}`.
pub fn truncation_order(prec: usize) -> usize {
    let needed =
        (prec as f64 * std::f64::consts::LN_2 / (std::f64::consts::PI * 3f64.sqrt())).ceil();
    BASE_ORDER.max(needed as usize + 8)
}

fn f64_parts(z: &BigComplex) -> (f64, f64) {
    (real_to_f64(z.re()), real_to_f64(z.im()))
}

/// Moves `τ` into `|Re τ| ≤ ½`, `|τ| ≥ 1` by translations and `τ ↦ −1/τ`.
pub fn reduce_to_fundamental_domain(tau: &BigComplex) -> Result<BigComplex> {
    let p = tau.precision();
    let mut t = tau.clone();
    for _ in 0..10_000 {
        let (re, im) = f64_parts(&t);
        if im.is_nan() || im <= 0.0 {
            return Err(Error::NotUpperHalfPlane);
        }
        let shift = re.round();
        if shift != 0.0 {
            t = &t - &BigComplex::from_i64(shift as i64, p);
        }
        if t.abs_f64() < 1.0 - 1e-12 {
            t = -(&t.recip());
        } else {
            return Ok(t);
        }
    }
    Err(Error::PrecisionInsufficient(
        "fundamental domain reduction did not settle".into(),
    ))
}

/// `j(τ) = E₄(q)³ / (q·Π(1 − q^k)^24)` with `q = e^{2πiτ}`.
pub fn j_numeric(tau: &BigComplex) -> Result<BigComplex> {
    let (_, im) = f64_parts(tau);
    if im.is_nan() || im <= 0.0 || tau.im().is_zero() || tau.im().is_negative() {
        return Err(Error::NotUpperHalfPlane);
    }
    let p = tau.precision();
    let t = reduce_to_fundamental_domain(tau)?;
    let two_pi_i = BigComplex::new(BigFloat::from_i64(0, p), real_pi(p + 32), p)
        .scale(&BigFloat::from_i64(2, p));
    let q = (&two_pi_i * &t).exp();
    let (e4, delta) = series_pair(truncation_order(p));
    let e = e4.eval(&q);
    let d = delta.eval(&q);
    Ok(&(&(&e * &e) * &e) / &(&q * &d))
}

/// `(j(τ), j(−1/(nτ)))`.
pub fn fricke_pair(tau: &BigComplex, n: u32) -> Result<(BigComplex, BigComplex)> {
    if n == 0 {
        return Err(Error::UnsupportedLevel(0));
    }
    let p = tau.precision();
    let partner = -(&(&BigComplex::from_i64(n as i64, p) * tau).recip());
    Ok((j_numeric(tau)?, j_numeric(&partner)?))
}

/// `a`, `b` of the family member attached to `τ` and level `n`.
pub fn family_coefficients(
    c: &Constants,
    tau: &BigComplex,
    n: u32,
) -> Result<(BigComplex, BigComplex)> {
    let (j1, j2) = fricke_pair(tau, n)?;
    Ok(ab_numeric(c, &j1, &j2))
}

/// `Φₙ(X, Y) = Σ c_ij X^i Y^j` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPolynomial {
    pub n: u32,
    pub coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl ModularPolynomial {
    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&(i, j), c)| self.coeff(j, i) == *c)
    }

    /// Degree in `X`.
    pub fn degree_x(&self) -> u32 {
        self.coeffs.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn max_coefficient(&self) -> BigInt {
        self.coeffs
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn eval(&self, x: &BigComplex, y: &BigComplex) -> BigComplex {
        let p = x.precision().max(y.precision());
        let mut acc = BigComplex::zero(p);
        for (&(i, j), c) in &self.coeffs {
            let cz = BigComplex::from_rational(&BigRational::from_integer(c.clone()), p);
            acc = &acc + &(&(&cz * &x.powi(i)) * &y.powi(j));
        }
        acc
    }

    /// Largest monomial magnitude `|c_ij|·|x|^i·|y|^j`, for relative residues.
    pub fn scale(&self, x: &BigComplex, y: &BigComplex) -> f64 {
        let (ax, ay) = (x.abs_f64(), y.abs_f64());
        self.coeffs
            .iter()
            .map(|(&(i, j), c)| {
                c.to_f64().unwrap_or(f64::INFINITY).abs() * ax.powi(i as i32) * ay.powi(j as i32)
            })
            .fold(0.0, f64::max)
    }

    /// `|Φₙ(x, y)| / scale`.
    pub fn relative_residual(&self, x: &BigComplex, y: &BigComplex) -> f64 {
        let s = self.scale(x, y);
        let v = self.eval(x, y).abs_f64();
        if s == 0.0 {
            v
        } else {
            v / s
        }
    }

    /// Cache file text: `n=<n>`, then `i j c` per monomial in lexicographic order.
    pub fn to_cache_string(&self) -> String {
        let mut s = format!("n={}\n", self.n);
        for (&(i, j), c) in &self.coeffs {
            let _ = writeln!(s, "{i} {j} {c}");
        }
        s
    }

    pub fn parse_cache(text: &str) -> Result<ModularPolynomial> {
        let bad = |why: &str| Error::Cache(why.to_string());
        if !text.ends_with('\n') {
            return Err(bad("missing trailing newline"));
        }
        let mut lines = text.lines();
        let n: u32 = lines
            .next()
            .and_then(|l| l.strip_prefix("n="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad("missing `n=` header"))?;
        let mut coeffs = BTreeMap::new();
        let mut last: Option<(u32, u32)> = None;
        for line in lines {
            let parts: Vec<&str> = line.split(' ').collect();
            let [i, j, c] = parts.as_slice() else {
                return Err(bad(&format!("malformed line `{line}`")));
            };
            let key = (
                i.parse().map_err(|_| bad("bad exponent"))?,
                j.parse().map_err(|_| bad("bad exponent"))?,
            );
            let c: BigInt = c.parse().map_err(|_| bad("bad coefficient"))?;
            if last.is_some_and(|l| l >= key) {
                return Err(bad("monomials out of order"));
            }
            last = Some(key);
            coeffs.insert(key, c);
        }
        Ok(ModularPolynomial { n, coeffs })
    }
}

/// Coefficient audit of a reconstruction.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub poly: ModularPolynomial,
    /// Largest `|a − round(a)|` over all fitted coefficients.
    pub max_residue: f64,
    pub samples: usize,
}

fn sample_tau(k: usize, m: usize, p: usize) -> BigComplex {
    // Vertical strip Im τ ∈ [1.1, 2.5], small distinct real parts.
    let y = 1.1 + 1.4 * k as f64 / (m.max(2) - 1) as f64;
    let x = 0.03 + 0.37 * k as f64 / m as f64;
    BigComplex::from_f64(x, y, p)
}

/// Elementary symmetric polynomials `e₀ = 1, e₁, …` of the given values.
fn elementary_symmetric(values: &[BigComplex], p: usize) -> Vec<BigComplex> {
    let mut e = vec![BigComplex::one(p)];
    for v in values {
        let mut next = vec![BigComplex::zero(p); e.len() + 1];
        for (k, ek) in e.iter().enumerate() {
            next[k] = &next[k] + ek;
            next[k + 1] = &next[k + 1] + &(ek * v);
        }
        e = next;
    }
    e
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
#[allow(clippy::needless_range_loop)]
fn solve(mut a: Vec<Vec<BigComplex>>, mut b: Vec<BigComplex>) -> Result<Vec<BigComplex>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs_f64().total_cmp(&a[j][col].abs_f64()))
            .expect("non-empty");
        if a[piv][col].is_zero() {
            return Err(Error::PrecisionInsufficient(
                "singular sample matrix".into(),
            ));
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            for k in col..n {
                let v = &f * &a[col][k];
                a[r][k] = &a[r][k] - &v;
            }
            let v = &f * &b[col];
            b[r] = &b[r] - &v;
        }
    }
    let p = b[0].precision();
    let mut x = vec![BigComplex::zero(p); n];
    for r in (0..n).rev() {
        let mut s = b[r].clone();
        for k in r + 1..n {
            s = &s - &(&a[r][k] * &x[k]);
        }
        x[r] = &s / &a[r][r];
    }
    Ok(x)
}

fn round_real(z: &BigComplex) -> Option<(BigInt, f64)> {
    let r = real_round_to_bigint(z.re())?;
    let p = z.precision();
    let exact = BigComplex::from_rational(&BigRational::from_integer(r.clone()), p);
    Some((r, z.dist(&exact)))
}

/// `Φₙ` for `n ∈ {1, 2, 3}`.
///
/// For prime `n`, `Φₙ(X, j(τ)) = (X − j(nτ))·Π_k (X − j((τ + k)/n))`. Each
/// coefficient of `X^i` is a polynomial of degree `n + 1` in `j(τ)`, fitted
/// from `n + 2` samples and rounded.
pub fn build_modular_polynomial(n: u32) -> Result<Reconstruction> {
    match n {
        1 => {
            let mut coeffs = BTreeMap::new();
            coeffs.insert((0, 1), BigInt::from(-1));
            coeffs.insert((1, 0), BigInt::one());
            Ok(Reconstruction {
                poly: ModularPolynomial { n, coeffs },
                max_residue: 0.0,
                samples: 0,
            })
        }
        2 | 3 => reconstruct_prime(n, RECONSTRUCTION_PRECISION),
        _ => Err(Error::UnsupportedLevel(n)),
    }
}

pub fn reconstruct_prime(n: u32, p: usize) -> Result<Reconstruction> {
    let deg = n as usize + 1;
    let m = deg + 1;
    let nn = BigComplex::from_i64(n as i64, p);
    let mut rows = Vec::with_capacity(m);
    let mut sym = Vec::with_capacity(m);
    for s in 0..m {
        let tau = sample_tau(s, m, p);
        let j = j_numeric(&tau)?;
        let mut conj = vec![j_numeric(&(&nn * &tau))?];
        for k in 0..n {
            let shifted = &(&tau + &BigComplex::from_i64(k as i64, p)) / &nn;
            conj.push(j_numeric(&shifted)?);
        }
        // Π (X − r) = Σ (−1)^k e_k X^{deg − k}
        let e = elementary_symmetric(&conj, p);
        rows.push((0..m).map(|k| j.powi(k as u32)).collect::<Vec<_>>());
        sym.push(e);
    }
    let mut coeffs = BTreeMap::new();
    let mut max_residue: f64 = 0.0;
    for k in 0..=deg {
        let i = (deg - k) as u32;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let rhs: Vec<BigComplex> = sym
            .iter()
            .map(|e| &e[k] * &BigComplex::from_i64(sign, p))
            .collect();
        let sol = solve(rows.clone(), rhs)?;
        for (jdeg, a) in sol.iter().enumerate() {
            let (r, res) = round_real(a)
                .ok_or_else(|| Error::PrecisionInsufficient("non-finite coefficient".into()))?;
            let res = res.max(real_to_f64(&a.im().abs()));
            max_residue = max_residue.max(res);
            if !r.is_zero() {
                coeffs.insert((i, jdeg as u32), r);
            }
        }
    }
    if max_residue.is_nan() || max_residue >= ROUNDING_THRESHOLD {
        return Err(Error::PrecisionInsufficient(format!("{max_residue:e}")));
    }
    Ok(Reconstruction {
        poly: ModularPolynomial { n, coeffs },
        max_residue,
        samples: m,
    })
}

/// Cache directory: explicit override, then `K3LAB_CACHE_DIR`, then
/// `$HOME/.cache/k3lab`, then a directory under the system temp dir.
pub fn cache_dir(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Some(p) = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()) {
        return PathBuf::from(p);
    }
    if let Some(home) = std::env::var_os("HOME").filter(|v| !v.is_empty()) {
        return PathBuf::from(home).join(".cache").join("k3lab");
    }
    std::env::temp_dir().join("k3lab")
}

pub fn cache_path(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("modpoly_{n}.txt"))
}

/// Reads a cached `Φₙ`; `Ok(None)` when the file is absent.
pub fn load_cached(dir: &Path, n: u32) -> Result<Option<ModularPolynomial>> {
    let path = cache_path(dir, n);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
    };
    let poly = ModularPolynomial::parse_cache(&text)?;
    if poly.n != n {
        return Err(Error::Cache(format!(
            "{} holds level {}",
            path.display(),
            poly.n
        )));
    }
    Ok(Some(poly))
}

/// Writes through a temporary file and renames it into place.
pub fn store_cached(dir: &Path, poly: &ModularPolynomial) -> Result<PathBuf> {
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let path = cache_path(dir, poly.n);
    let tmp = dir.join(format!(".modpoly_{}.{}.tmp", poly.n, std::process::id()));
    fs::write(&tmp, poly.to_cache_string()).map_err(io)?;
    fs::rename(&tmp, &path).map_err(io)?;
    Ok(path)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Built,
}

/// Cached `Φₙ` if present and well formed, otherwise a fresh reconstruction
/// that is then stored.
pub fn modular_polynomial(
    dir: &Path,
    n: u32,
    rebuild: bool,
) -> Result<(ModularPolynomial, CacheStatus)> {
    if !(1..=3).contains(&n) {
        return Err(Error::UnsupportedLevel(n));
    }
    if !rebuild {
        if let Ok(Some(p)) = load_cached(dir, n) {
            if p.is_symmetric() || n == 1 {
                return Ok((p, CacheStatus::Hit));
            }
        }
    }
    let r = build_modular_polynomial(n)?;
    store_cached(dir, &r.poly)?;
    Ok((r.poly, CacheStatus::Built))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> BigComplex {
        BigComplex::from_f64(re, im, 256)
    }

    #[test]
    fn series_examples() {
        let j = QSeries::j_times_q(20).unwrap();
        let want = [1i64, 744, 196884, 21493760, 864299970];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(j.coeffs()[k], BigInt::from(*w));
        }
        let eta = QSeries::euler_product(20).unwrap();
        let direct = (1..=20).fold(QSeries::new(vec![BigInt::one()], 20).unwrap(), |acc, k| {
            let mut f = vec![BigInt::zero(); k + 1];
            f[0] = BigInt::one();
            f[k] = BigInt::from(-1);
            acc.mul(&QSeries::new(f, 20).unwrap())
        });
        assert_eq!(eta, direct);
        assert!(QSeries::new(vec![], 8).is_err());
    }

    #[test]
    fn j_examples() {
        let j = j_numeric(&c(0.0, 1.0)).unwrap();
        assert!(j.dist(&BigComplex::from_i64(1728, 256)) < 1e-20);
        let j = j_numeric(&c(0.0, 2.0)).unwrap();
        assert!(j.dist(&BigComplex::from_i64(287496, 256)) < 1e-15);
        let rho = BigComplex::parse(
            "0.5+0.86602540378443864676372317075293618347140262690519031402790348972596650845440i",
            256,
        )
        .unwrap();
        assert!(j_numeric(&rho).unwrap().abs_f64() < 1e-20);
        assert!(matches!(
            j_numeric(&c(0.3, -1.0)),
            Err(Error::NotUpperHalfPlane)
        ));
        assert!(matches!(
            j_numeric(&c(0.3, 0.0)),
            Err(Error::NotUpperHalfPlane)
        ));
    }

    #[test]
    fn modularity() {
        let t = c(0.123, 0.77);
        let j = j_numeric(&t).unwrap();
        let shifted = j_numeric(&(&t + &BigComplex::one(256))).unwrap();
        let inverted = j_numeric(&(-(&t.recip()))).unwrap();
        assert!(j.rel_dist(&shifted) < 1e-40);
        assert!(j.rel_dist(&inverted) < 1e-40);
    }

    #[test]
    fn fricke_examples() {
        let (a, b) = fricke_pair(&c(0.0, 1.0), 1).unwrap();
        assert!(a.dist(&b) < 1e-20);
        let (a, b) = fricke_pair(&c(0.0, 1.0), 2).unwrap();
        assert!(a.dist(&BigComplex::from_i64(1728, 256)) < 1e-20);
        assert!(b.dist(&BigComplex::from_i64(287496, 256)) < 1e-15);
        let (a, b) = fricke_pair(&c(0.0, std::f64::consts::FRAC_1_SQRT_2), 2).unwrap();
        assert!(a.rel_dist(&b) < 1e-12);
    }

    #[test]
    fn phi1_and_cache_format() {
        let p = build_modular_polynomial(1).unwrap().poly;
        assert_eq!(p.to_cache_string(), "n=1\n0 1 -1\n1 0 1\n");
        let x = c(5.0, 1.0);
        assert!(p.eval(&x, &x).is_zero());
        assert_eq!(
            ModularPolynomial::parse_cache(&p.to_cache_string()).unwrap(),
            p
        );
        assert!(ModularPolynomial::parse_cache("n=1\n0 1 -1").is_err());
        assert!(ModularPolynomial::parse_cache("n=1\n1 0 1\n0 1 -1\n").is_err());
        assert!(matches!(
            build_modular_polynomial(5),
            Err(Error::UnsupportedLevel(5))
        ));
    }

    #[test]
    fn phi2_reconstruction() {
        let r = build_modular_polynomial(2).unwrap();
        let p = &r.poly;
        assert!(r.max_residue < ROUNDING_THRESHOLD);
        assert!(p.is_symmetric());
        assert_eq!((p.degree_x(), p.degree_y()), (3, 3));
        assert_eq!(p.coeff(2, 2), BigInt::from(-1));
        assert_eq!(p.coeff(0, 0), BigInt::from(-157464000000000i64));
        let x = BigComplex::from_i64(1728, 256);
        let y = BigComplex::from_i64(287496, 256);
        assert!(p.relative_residual(&x, &y) < 1e-4);
        let y1 = BigComplex::from_i64(1729, 256);
        assert!(p.eval(&x, &y1).abs_f64() > 1.0);
    }

    #[test]
    fn phi3_reconstruction() {
        let r = build_modular_polynomial(3).unwrap();
        let p = &r.poly;
        assert!(p.is_symmetric());
        assert_eq!((p.degree_x(), p.degree_y()), (4, 4));
        let known: [((u32, u32), &str); 8] = [
            ((4, 0), "1"),
            ((3, 3), "-1"),
            ((3, 2), "2232"),
            ((3, 1), "-1069956"),
            ((2, 2), "2587918086"),
            ((2, 1), "8900222976000"),
            ((1, 1), "-770845966336000000"),
            ((1, 0), "1855425871872000000000"),
        ];
        for (k, v) in known {
            assert_eq!(p.coeff(k.0, k.1), v.parse::<BigInt>().unwrap(), "{k:?}");
        }
        assert_eq!(p.coeff(0, 0), BigInt::zero());
    }
}
