//! Explicit polynomial identities relating the Kummer surface of
//! `E(λ₁) × E(λ₂)` to the family `X(a, b)`, and the two parameterisations of
//! `(a, b)` by Legendre parameters and by j-invariants.
//!
//! Polynomials live in `ℚ[u1, v1, u2, v2, l1, l2]`, where `(u_i : v_i)` are
//! coordinates on the two ℙ¹ factors and `l_i` stands for `λ_i`.

use num_traits::{One, Zero};

use crate::constants::Constants;
use crate::exact::{
    int, rat, BigComplex, BigRational, FactoredSum, MultiPolynomial, RationalFunction, UniPoly,
    VarSet,
};
use crate::{Error, Result};

pub const VARS: [&str; 6] = ["u1", "v1", "u2", "v2", "l1", "l2"];
pub const LAMBDA_VARS: [&str; 2] = ["l1", "l2"];

pub fn var_set() -> VarSet {
    VarSet::new(&VARS)
}

pub fn lambda_var_set() -> VarSet {
    VarSet::new(&LAMBDA_VARS)
}

fn parse(vars: &VarSet, s: &str) -> Result<MultiPolynomial> {
    MultiPolynomial::parse(vars, s)
}

/// Splits `f₁^e₁ * f₂^e₂ * …` at top-level `*` into its factors.
///
/// Every factor is parsed on its own; the product is checked against the
/// parse of the whole string.
pub fn product_factors(vars: &VarSet, s: &str) -> Result<Vec<(MultiPolynomial, u32)>> {
    let mut pieces = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                pieces.push(&s[start..i]);
                start = i + 1;
            }
            '+' | '-' if depth == 0 && !s[start..i].trim().is_empty() => {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: "not a product of factors".into(),
                })
            }
            _ => {}
        }
    }
    pieces.push(&s[start..]);
    let mut out = Vec::new();
    for piece in pieces {
        let piece = piece.trim();
        let (base, exp) = match piece.rsplit_once('^') {
            Some((b, e)) if !b.ends_with(')') || b.starts_with('(') => {
                let e: u32 = e.trim().parse().map_err(|_| Error::Parse {
                    input: piece.to_string(),
                    reason: "bad exponent".into(),
                })?;
                (b, e)
            }
            _ => (piece, 1),
        };
        out.push((parse(vars, base)?, exp));
    }
    let product = out
        .iter()
        .fold(MultiPolynomial::one(vars), |acc, (f, e)| acc * f.pow(*e));
    if product != parse(vars, s)? {
        return Err(Error::Parse {
            input: s.to_string(),
            reason: "factors do not multiply back to the expression".into(),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct HPolys {
    pub h_inf: MultiPolynomial,
    pub h_plus: MultiPolynomial,
    pub h_minus: MultiPolynomial,
    /// The four (1,1)-curve factors `C₁ … C₄`.
    pub curves: [MultiPolynomial; 4],
}

/// `H_∞` as transcribed, `H₊ = u₁·C₁·C₂` and `H₋ = v₁·C₃·C₄`.
pub fn build_h_polys(c: &Constants) -> Result<HPolys> {
    let v = var_set();
    let curves = [
        parse(&v, &c.c1_poly)?,
        parse(&v, &c.c2_poly)?,
        parse(&v, &c.c3_poly)?,
        parse(&v, &c.c4_poly)?,
    ];
    let h_plus = parse(&v, "u1")? * &curves[0] * &curves[1];
    let h_minus = parse(&v, "v1")? * &curves[2] * &curves[3];
    Ok(HPolys {
        h_inf: parse(&v, &c.h_inf)?,
        h_plus,
        h_minus,
        curves,
    })
}

impl HPolys {
    pub fn all(&self) -> [&MultiPolynomial; 3] {
        [&self.h_inf, &self.h_plus, &self.h_minus]
    }

    /// Each polynomial is homogeneous of degree 4 in `(u1, v1)` and 3 in `(u2, v2)`.
    pub fn has_bidegree_4_3(&self) -> Result<bool> {
        for p in self.all() {
            if !p.is_homogeneous_in(&["u1", "v1"], 4)? || !p.is_homogeneous_in(&["u2", "v2"], 3)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self) -> MultiPolynomial {
        &(&self.h_inf + &self.h_plus) + &self.h_minus
    }
}

/// `H_∞ + H₊ + H₋ = 0` as polynomials.
pub fn verify_h_sum(h: &HPolys) -> bool {
    h.sum().is_zero()
}

/// `H_∞ + H₊ + H₋` vanishes at every given point.
pub fn h_sum_spot_check(h: &HPolys, points: &[Vec<BigRational>]) -> bool {
    let s = h.sum();
    points.iter().all(|p| s.evaluate_slice(p).is_zero())
}

/// `z + 1/z = scale·(H₊ − H₋)/H_∞`; the reference scale is `−2`.
pub fn z_invariant(c: &Constants, h: &HPolys) -> Result<RationalFunction> {
    let num = (&h.h_plus - &h.h_minus).scale(&int(c.zz_scale));
    RationalFunction::new(num, h.h_inf.clone())
}

/// `((z − 1)/(z + 1))² = (w − 2)/(w + 2)` for `w = z + 1/z`, which equals
/// `−H₋/H₊` when the scale is negative (`H₋ = 0` at `z = 1`) and `−H₊/H₋`
/// when it is positive.
pub fn square_root_relation(c: &Constants, h: &HPolys) -> Result<bool> {
    let v = var_set();
    let w = z_invariant(c, h)?;
    let two = RationalFunction::from_poly(MultiPolynomial::constant(&v, int(2)));
    let lhs = (&w - &two).checked_div(&(&w + &two))?;
    let rhs = if c.zz_scale < 0 {
        RationalFunction::new(-&h.h_minus, h.h_plus.clone())?
    } else {
        RationalFunction::new(-&h.h_plus, h.h_minus.clone())?
    };
    Ok(lhs.equals(&rhs))
}

#[derive(Clone, Debug)]
pub struct MasterIdentityData {
    pub x1: RationalFunction,
    pub y1_squared: RationalFunction,
    pub z_plus_zinv: RationalFunction,
    pub kappa: BigRational,
}

/// Denominator factors of `x₁`, `y₁²` and `z + 1/z`, in that order.
struct Denominators {
    x1: Vec<(MultiPolynomial, u32)>,
    y1: Vec<(MultiPolynomial, u32)>,
    z: Vec<(MultiPolynomial, u32)>,
}

fn denominators(c: &Constants) -> Result<Denominators> {
    let v = var_set();
    let y1 = c
        .y1_denominator_factors
        .iter()
        .map(|(s, e)| Ok((parse(&v, s)?, *e)))
        .collect::<Result<_>>()?;
    Ok(Denominators {
        x1: product_factors(&v, &c.x1_denominator)?,
        y1,
        z: product_factors(&v, &c.h_inf)?,
    })
}

fn product(v: &VarSet, factors: &[(MultiPolynomial, u32)]) -> MultiPolynomial {
    factors
        .iter()
        .fold(MultiPolynomial::one(v), |acc, (f, e)| acc * f.pow(*e))
}

fn x1_numerator(c: &Constants) -> Result<MultiPolynomial> {
    let v = var_set();
    let n = parse(&v, &c.x1_numerator)? + parse(&v, &c.x1_restored_term)?;
    Ok(n.scale(&int(c.x1_sign)))
}

fn y1_numerator(c: &Constants, h: &HPolys, kappa: &BigRational) -> Result<MultiPolynomial> {
    let v = var_set();
    Ok((parse(&v, &c.y1_numerator_factor)? * &h.h_plus * &h.h_minus).scale(kappa))
}

pub fn kappa(c: &Constants) -> BigRational {
    rat(c.kappa.0, c.kappa.1)
}

pub fn build_x1_y1(c: &Constants, h: &HPolys, kappa: &BigRational) -> Result<MasterIdentityData> {
    if kappa.is_zero() {
        return Err(Error::NoKappa);
    }
    let v = var_set();
    let d = denominators(c)?;
    Ok(MasterIdentityData {
        x1: RationalFunction::new(x1_numerator(c)?, product(&v, &d.x1))?,
        y1_squared: RationalFunction::new(y1_numerator(c, h, kappa)?, product(&v, &d.y1))?,
        z_plus_zinv: z_invariant(c, h)?,
        kappa: kappa.clone(),
    })
}

/// Coefficients `(c₂, c₁, c₀, c_z)` of the master identity
/// `x³ + c₂x² + c₁x + c₀ + y² + c_z·(z + 1/z) = 0`, over `ℚ[l1, l2]`.
pub struct MasterCoefficients {
    pub x2: MultiPolynomial,
    pub x1: MultiPolynomial,
    pub x0: MultiPolynomial,
    pub zz: MultiPolynomial,
}

pub fn master_coefficients(c: &Constants, vars: &VarSet) -> Result<MasterCoefficients> {
    Ok(MasterCoefficients {
        x2: parse(vars, &c.master_x2)?,
        x1: parse(vars, &c.master_x1)?,
        x0: parse(vars, &c.master_x0)?,
        zz: parse(vars, &c.master_zz)?,
    })
}

/// The left-hand side of the master identity at a point.
pub fn master_residual_at(
    c: &Constants,
    data: &MasterIdentityData,
    point: &[BigRational],
) -> Result<BigRational> {
    let m = master_coefficients(c, &var_set())?;
    let x = data.x1.evaluate_slice(point)?;
    let y2 = data.y1_squared.evaluate_slice(point)?;
    let w = data.z_plus_zinv.evaluate_slice(point)?;
    let ev = |p: &MultiPolynomial| p.evaluate_slice(point);
    Ok(&x * &x * &x + ev(&m.x2) * &x * &x + ev(&m.x1) * &x + ev(&m.x0) + y2 + ev(&m.zz) * w)
}

/// Solves the master identity for `κ` at one point.
pub fn fit_kappa_at(c: &Constants, h: &HPolys, point: &[BigRational]) -> Result<BigRational> {
    let data = build_x1_y1(c, h, &BigRational::one())?;
    let with_one = master_residual_at(c, &data, point)?;
    let y2 = data.y1_squared.evaluate_slice(point)?;
    if y2.is_zero() {
        return Err(Error::NoKappa);
    }
    // residual(κ) = residual(1) + (κ − 1)·y²
    let k = BigRational::one() - with_one / y2;
    if k.is_zero() {
        return Err(Error::NoKappa);
    }
    Ok(k)
}

/// Fits `κ` at the first point, requires agreement at the rest and the
/// symbolic identity.
pub fn fit_kappa(c: &Constants, h: &HPolys, points: &[Vec<BigRational>]) -> Result<BigRational> {
    let first = points.first().ok_or(Error::NoKappa)?;
    let k = fit_kappa_at(c, h, first)?;
    for p in &points[1..] {
        if fit_kappa_at(c, h, p)? != k {
            return Err(Error::NoKappa);
        }
    }
    if !verify_master_identity(c, h, &k)? {
        return Err(Error::NoKappa);
    }
    Ok(k)
}

/// The master identity with all denominators cleared over a shared factor
/// table.
pub fn master_sum(c: &Constants, h: &HPolys, kappa: &BigRational) -> Result<FactoredSum> {
    let v = var_set();
    let d = denominators(c)?;
    let m = master_coefficients(c, &v)?;
    let mut sum = FactoredSum::new(&v);
    let register = |sum: &mut FactoredSum,
                    fs: &[(MultiPolynomial, u32)],
                    k: u32|
     -> Result<Vec<(usize, u32)>> {
        fs.iter()
            .map(|(f, e)| Ok((sum.factor(f)?, e * k)))
            .collect()
    };
    let x1d: Vec<Vec<(usize, u32)>> = (0..=3)
        .map(|k| register(&mut sum, &d.x1, k))
        .collect::<Result<_>>()?;
    let yd = register(&mut sum, &d.y1, 1)?;
    let zd = register(&mut sum, &d.z, 1)?;

    let n = x1_numerator(c)?;
    let n2 = &n * &n;
    sum.push(&n2 * &n, &x1d[3]);
    sum.push(m.x2 * n2, &x1d[2]);
    sum.push(m.x1 * n, &x1d[1]);
    sum.push(m.x0, &x1d[0]);
    sum.push(y1_numerator(c, h, kappa)?, &yd);
    let wnum = (&h.h_plus - &h.h_minus).scale(&int(c.zz_scale));
    sum.push(m.zz * wnum, &zd);
    Ok(sum)
}

pub fn master_spot_check(
    c: &Constants,
    h: &HPolys,
    kappa: &BigRational,
    points: &[Vec<BigRational>],
) -> Result<bool> {
    let s = master_sum(c, h, kappa)?;
    Ok(points
        .iter()
        .all(|p| s.evaluate_slice(p).is_none_or(|v| v.is_zero())))
}

/// The cleared master identity is the zero polynomial.
pub fn verify_master_identity(c: &Constants, h: &HPolys, kappa: &BigRational) -> Result<bool> {
    Ok(master_sum(c, h, kappa)?.cleared_numerator().is_zero())
}

// Legendre and j parameterisations.

fn check_lambda(l: &BigRational) -> Result<()> {
    if l.is_zero() || l.is_one() {
        Err(Error::ForbiddenLambda(l.to_string()))
    } else {
        Ok(())
    }
}

/// `j(λ) = 256(λ² − λ + 1)³ / (λ²(λ − 1)²)`.
pub fn j_from_lambda(c: &Constants, l: &BigRational) -> Result<BigRational> {
    check_lambda(l)?;
    let one = BigRational::one();
    let q = l * l - l + &one;
    let d = l * (l - &one);
    Ok(int(c.j_lambda_coeff) * &q * &q * &q / (&d * &d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbPowers {
    pub a_cubed: BigRational,
    pub b_squared: BigRational,
}

/// `(λ + 1)(λ − 2)(2λ − 1)`.
fn harmonic_cubic(l: &BigRational) -> BigRational {
    let one = BigRational::one();
    (l + &one) * (l - int(2)) * (int(2) * l - &one)
}

pub fn ab_powers_from_lambda(
    c: &Constants,
    l1: &BigRational,
    l2: &BigRational,
) -> Result<AbPowers> {
    check_lambda(l1)?;
    check_lambda(l2)?;
    let one = BigRational::one();
    let q = |l: &BigRational| {
        let t = l * l - l + &one;
        &t * &t * &t
    };
    let d = l1 * (l1 - &one) * l2 * (l2 - &one);
    let d2 = &d * &d;
    let hc = harmonic_cubic(l1) * harmonic_cubic(l2);
    let (an, ad) = c.a_lambda_cube_coeff;
    let (bn, bd) = c.b_lambda_square_coeff;
    Ok(AbPowers {
        a_cubed: rat(an, ad) * q(l1) * q(l2) / &d2,
        b_squared: rat(bn, bd) * &hc * &hc / &d2,
    })
}

pub fn ab_powers_from_j(c: &Constants, j1: &BigRational, j2: &BigRational) -> AbPowers {
    let k = int(c.j_1728);
    AbPowers {
        a_cubed: -(j1 * j2) / int(c.a_j_cube_denominator),
        b_squared: (j1 - &k) * (j2 - &k) / int(c.b_j_square_denominator),
    }
}

/// `a = −∛j₁·∛j₂/48`, `b = −√(j₁ − 1728)·√(j₂ − 1728)/864` with principal
/// roots; one representative of the orbit under root choices.
pub fn ab_numeric(c: &Constants, j1: &BigComplex, j2: &BigComplex) -> (BigComplex, BigComplex) {
    let p = j1.precision().max(j2.precision());
    let k = BigComplex::from_i64(c.j_1728, p);
    let a = -(&(&j1.cbrt() * &j2.cbrt()) / &BigComplex::from_i64(c.a_j_denominator, p));
    let b =
        -(&(&(j1 - &k).sqrt() * &(j2 - &k).sqrt()) / &BigComplex::from_i64(c.b_j_denominator, p));
    (a, b)
}

/// `256(λ² − λ + 1)³ − 1728λ²(λ − 1)² − 64((λ + 1)(λ − 2)(2λ − 1))² = 0`.
pub fn j_minus_1728_factorization(c: &Constants) -> bool {
    let q = UniPoly::from_ints(&[1, -1, 1]);
    let d = UniPoly::from_ints(&[0, -1, 1]);
    let h = &(&UniPoly::from_ints(&[1, 1]) * &UniPoly::from_ints(&[-2, 1]))
        * &UniPoly::from_ints(&[-1, 2]);
    let lhs = q.pow(3).scale(&int(c.j_lambda_coeff));
    let rhs = &d.pow(2).scale(&int(c.j_1728)) + &h.pow(2).scale(&int(c.factorization_coeff));
    (&lhs - &rhs).is_zero()
}

/// `j(1/4)` and `j(1/4) − 1728` against the stored values.
pub fn j_quarter_check(c: &Constants) -> Result<(BigRational, bool)> {
    let j = j_from_lambda(c, &rat(1, 4))?;
    let ok = j == rat(c.j_quarter.0, c.j_quarter.1)
        && &j - int(c.j_1728) == rat(c.j_quarter_minus_1728.0, c.j_quarter_minus_1728.1);
    Ok((j, ok))
}

// Symbolic forms over ℚ(λ₁, λ₂).

fn lambda_poly(s: &str) -> Result<MultiPolynomial> {
    parse(&lambda_var_set(), s)
}

fn j_symbolic(c: &Constants, l: &str) -> Result<RationalFunction> {
    let num = lambda_poly(&format!("{}*({l}^2-{l}+1)^3", c.j_lambda_coeff))?;
    let den = lambda_poly(&format!("{l}^2*({l}-1)^2"))?;
    RationalFunction::new(num, den)
}

/// `(a³, b²)` of the λ-route as rational functions of `λ₁, λ₂`.
pub fn ab_powers_symbolic(c: &Constants) -> Result<(RationalFunction, RationalFunction)> {
    let den = lambda_poly("(l1*(l1-1)*l2*(l2-1))^2")?;
    let (an, ad) = c.a_lambda_cube_coeff;
    let (bn, bd) = c.b_lambda_square_coeff;
    let a = lambda_poly("(l1^2-l1+1)^3*(l2^2-l2+1)^3")?.scale(&rat(an, ad));
    let b = lambda_poly("((l1+1)*(l1-2)*(2*l1-1)*(l2+1)*(l2-2)*(2*l2-1))^2")?.scale(&rat(bn, bd));
    Ok((
        RationalFunction::new(a, den.clone())?,
        RationalFunction::new(b, den)?,
    ))
}

/// `a³ = −j₁j₂/110592` and `b² = (j₁ − 1728)(j₂ − 1728)/746496` as identities
/// in `ℚ(λ₁, λ₂)`.
pub fn route_independence_symbolic(c: &Constants) -> Result<(bool, bool)> {
    let v = lambda_var_set();
    let (a3, b2) = ab_powers_symbolic(c)?;
    let (j1, j2) = (j_symbolic(c, "l1")?, j_symbolic(c, "l2")?);
    let k = RationalFunction::from_poly(MultiPolynomial::constant(&v, int(c.j_1728)));
    let a_j = (&j1 * &j2).scale(&rat(-1, c.a_j_cube_denominator));
    let b_j = (&(&j1 - &k) * &(&j2 - &k)).scale(&rat(1, c.b_j_square_denominator));
    Ok((a3.equals(&a_j), b2.equals(&b_j)))
}

/// Completes the cube in the master cubic: with `x = X − c₂/3` the cubic
/// becomes `X³ + pX + q`, and rescaling by `s = c_z` gives
/// `a³ = p³/s²`, `b² = q²/s²`. Both must match the λ-route.
pub fn depressed_cubic_check(c: &Constants) -> Result<(bool, bool)> {
    let v = lambda_var_set();
    let m = master_coefficients(c, &v)?;
    let third = rat(1, 3);
    let p = &m.x1 - &(&m.x2 * &m.x2).scale(&third);
    let q = &(&(&m.x2 * &m.x2) * &m.x2).scale(&rat(2, 27)) - &(&m.x2 * &m.x1).scale(&third)
        + m.x0.clone();
    let s2 = &m.zz * &m.zz;
    let a3 = RationalFunction::new(p.pow(3), s2.clone())?;
    let b2 = RationalFunction::new(&q * &q, s2)?;
    let (want_a, want_b) = ab_powers_symbolic(c)?;
    Ok((a3.equals(&want_a), b2.equals(&want_b)))
}
