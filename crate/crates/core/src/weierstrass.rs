//! Weierstrass models of `y² + z + 1/z + x³ + a·x + b = 0` over the `z`-line
//! and their singular fibers.

use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{
    cubic_discriminant, int, BigComplex, BigRational, MultiPolynomial, UniPoly, VarSet,
};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub a: BigRational,
    pub b: BigRational,
}

impl FamilyMember {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        FamilyMember { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        FamilyMember::new(int(a), int(b))
    }
}

/// `η² = ξ³ + A(t)·ξ + B(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassModel {
    pub a: UniPoly,
    pub b: UniPoly,
}

/// Weight of `A` and `B` for the `t ↦ 1/t` chart change.
pub const A_WEIGHT: usize = 8;
pub const B_WEIGHT: usize = 12;
pub const DISC_WEIGHT: usize = 24;

impl WeierstrassModel {
    /// `−16(4A³ + 27B²)`.
    pub fn discriminant(&self) -> UniPoly {
        let s = &self.a.pow(3).scale(&int(4)) + &self.b.pow(2).scale(&int(27));
        s.scale(&int(-16))
    }

    /// The model in the chart `s = 1/t`.
    pub fn at_infinity(&self) -> WeierstrassModel {
        WeierstrassModel {
            a: self.a.reflect(A_WEIGHT),
            b: self.b.reflect(B_WEIGHT),
        }
    }

    /// `A(1/t)·t⁸ = A(t)` and `B(1/t)·t¹² = B(t)`.
    pub fn is_palindromic(&self) -> bool {
        self.at_infinity() == *self
            && self.discriminant().reflect(DISC_WEIGHT) == self.discriminant()
    }
}

/// `A = a·t⁴`, `B = −(t⁵ + b·t⁶ + t⁷)`.
pub fn to_weierstrass(m: &FamilyMember) -> WeierstrassModel {
    let mut b = vec![BigRational::zero(); 8];
    b[5] = -BigRational::one();
    b[6] = -m.b.clone();
    b[7] = -BigRational::one();
    WeierstrassModel {
        a: UniPoly::monomial(4, m.a.clone()),
        b: UniPoly::new(b),
    }
}

/// Checks the model against the surface equation by substituting
/// `x = −ξ/t²`, `y = η/t³`, `z = t` into `t·(y² + z + 1/z + x³ + a·x + b)`
/// and comparing `−t⁵` times the result with `ξ³ + A·ξ + B − η²`.
pub fn substitution_check(m: &FamilyMember) -> Result<bool> {
    let surface = VarSet::new(&["x", "y", "t"]);
    let mut eq = MultiPolynomial::parse(&surface, "t*y^2 + t^2 + 1 + t*x^3")?;
    eq = &eq + &MultiPolynomial::parse(&surface, "t*x")?.scale(&m.a);
    eq = &eq + &MultiPolynomial::parse(&surface, "t")?.scale(&m.b);

    let model_vars = VarSet::new(&["xi", "eta", "t"]);
    let mut substituted = Vec::new();
    for (e, c) in eq.terms() {
        // x^i y^j t^k · t⁵ ↦ (−1)^i ξ^i η^j t^(k − 2i − 3j + 5)
        let k = e[2] as i64 - 2 * e[0] as i64 - 3 * e[1] as i64 + 5;
        if k < 0 {
            return Ok(false);
        }
        let sign = if e[0] % 2 == 1 { -c.clone() } else { c.clone() };
        substituted.push((vec![e[0], e[1], k as u32], -sign));
    }
    let lhs = MultiPolynomial::from_terms(&model_vars, substituted);

    let w = to_weierstrass(m);
    let t_poly = |p: &UniPoly, xi_exp: u32| {
        MultiPolynomial::from_terms(
            &model_vars,
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (vec![xi_exp, 0, k as u32], c.clone())),
        )
    };
    let mut rhs = MultiPolynomial::parse(&model_vars, "xi^3 - eta^2")?;
    rhs = &rhs + &t_poly(&w.a, 1);
    rhs = &rhs + &t_poly(&w.b, 0);
    Ok((&lhs - &rhs).is_zero())
}

/// Order of vanishing; `None` stands for `∞` (the zero polynomial).
pub type Order = Option<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KodairaType {
    I0,
    In(u32),
    II,
    III,
    IV,
    I0Star,
    InStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    /// Euler number of the fiber, equal to its discriminant order.
    pub fn euler_number(&self) -> u32 {
        match *self {
            KodairaType::I0 => 0,
            KodairaType::In(n) => n,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::I0Star => 6,
            KodairaType::InStar(n) => n + 6,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I0 => write!(f, "I0"),
            KodairaType::In(n) => write!(f, "I{n}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::I0Star => write!(f, "I0*"),
            KodairaType::InStar(n) => write!(f, "I{n}*"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

impl std::str::FromStr for KodairaType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            input: s.to_string(),
            reason: "not a Kodaira symbol".into(),
        };
        Ok(match s {
            "I0" => KodairaType::I0,
            "II" => KodairaType::II,
            "III" => KodairaType::III,
            "IV" => KodairaType::IV,
            "I0*" => KodairaType::I0Star,
            "IV*" => KodairaType::IVStar,
            "III*" => KodairaType::IIIStar,
            "II*" => KodairaType::IIStar,
            _ => {
                let body = s.strip_prefix('I').ok_or_else(bad)?;
                match body.strip_suffix('*') {
                    Some(n) => KodairaType::InStar(n.parse().map_err(|_| bad())?),
                    None => KodairaType::In(body.parse().map_err(|_| bad())?),
                }
            }
        })
    }
}

fn ge(o: Order, k: u32) -> bool {
    o.is_none_or(|v| v >= k)
}

fn show(o: Order) -> String {
    o.map_or_else(|| "inf".to_string(), |v| v.to_string())
}

/// Kodaira symbol from `(ord A, ord B, ord Δ)` in characteristic zero.
pub fn kodaira_type(ord_a: Order, ord_b: Order, ord_disc: u32) -> Result<KodairaType> {
    if ge(ord_a, 4) && ge(ord_b, 6) {
        return Err(Error::NonMinimalModel(
            show(ord_a),
            show(ord_b),
            ord_disc.to_string(),
        ));
    }
    let inconsistent =
        || Error::InconsistentValuations(show(ord_a), show(ord_b), ord_disc.to_string());
    // ord Δ ≥ min(3·ord A, 2·ord B), with equality unless the two are equal.
    let three_a = ord_a.map(|v| 3 * v);
    let two_b = ord_b.map(|v| 2 * v);
    let floor = match (three_a, two_b) {
        (Some(x), Some(y)) => x.min(y),
        (Some(x), None) => x,
        (None, Some(y)) => y,
        (None, None) => return Err(inconsistent()),
    };
    let tied = three_a == two_b;
    if ord_disc < floor || (!tied && ord_disc != floor) {
        return Err(inconsistent());
    }
    let t = if ord_disc == 0 {
        KodairaType::I0
    } else if ord_a == Some(0) && ord_b == Some(0) {
        KodairaType::In(ord_disc)
    } else if ord_b == Some(1) {
        KodairaType::II
    } else if ord_a == Some(1) {
        KodairaType::III
    } else if ord_b == Some(2) {
        KodairaType::IV
    } else if ord_a == Some(2) && ord_b == Some(3) {
        if ord_disc == 6 {
            KodairaType::I0Star
        } else {
            KodairaType::InStar(ord_disc - 6)
        }
    } else if ord_b == Some(3) || ord_a == Some(2) {
        KodairaType::I0Star
    } else if ord_b == Some(4) {
        KodairaType::IVStar
    } else if ord_a == Some(3) {
        KodairaType::IIIStar
    } else if ord_b == Some(5) {
        KodairaType::IIStar
    } else {
        return Err(inconsistent());
    };
    if t.euler_number() != ord_disc {
        return Err(inconsistent());
    }
    Ok(t)
}

fn order_at_zero(p: &UniPoly) -> Order {
    p.order_at_zero().map(|v| v as u32)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberLocation {
    Zero,
    Infinity,
    /// The roots of a monic square-free polynomial; one fiber per root.
    Roots(UniPoly),
}

impl FiberLocation {
    pub fn count(&self) -> u32 {
        match self {
            FiberLocation::Roots(p) => p.degree().unwrap_or(0) as u32,
            _ => 1,
        }
    }
}

impl fmt::Display for FiberLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberLocation::Zero => write!(f, "t=0"),
            FiberLocation::Infinity => write!(f, "t=inf"),
            FiberLocation::Roots(p) => write!(f, "{} roots of {:?}", self.count(), p),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FiberAnalysis {
    pub fibers: Vec<(FiberLocation, KodairaType)>,
}

impl FiberAnalysis {
    pub fn at(&self, loc: &FiberLocation) -> Option<KodairaType> {
        self.fibers.iter().find(|(l, _)| l == loc).map(|(_, t)| *t)
    }

    /// Fibers away from `0` and `∞`, counted with multiplicity of roots.
    pub fn extra(&self) -> Vec<(u32, KodairaType)> {
        self.fibers
            .iter()
            .filter_map(|(l, t)| match l {
                FiberLocation::Roots(_) => Some((l.count(), *t)),
                _ => None,
            })
            .collect()
    }

    /// Σ discriminant orders over all singular fibers.
    pub fn euler_total(&self) -> u32 {
        self.fibers
            .iter()
            .map(|(l, t)| l.count() * t.euler_number())
            .sum()
    }
}

/// Splits the roots of the square-free `g` by their order of vanishing in `p`.
fn split_by_order(g: &UniPoly, p: &UniPoly) -> Vec<(UniPoly, Order)> {
    if p.is_zero() {
        return vec![(g.clone(), None)];
    }
    let mut out = Vec::new();
    let mut rest = g.clone();
    let mut deriv = p.clone();
    let mut order = 0u32;
    while rest.degree().is_some_and(|d| d > 0) {
        let vanishing = rest.gcd(&deriv);
        let exact = rest.div_rem(&vanishing).0;
        if exact.degree().is_some_and(|d| d > 0) {
            out.push((exact.monic(), Some(order)));
        }
        rest = vanishing;
        deriv = deriv.derivative();
        order += 1;
    }
    out
}

/// Singular fibers of the elliptic fibration, including `t = 0` and `t = ∞`.
pub fn fiber_analysis(m: &FamilyMember) -> Result<FiberAnalysis> {
    let w = to_weierstrass(m);
    let disc = w.discriminant();
    if disc.is_zero() {
        return Err(Error::DegenerateFamily);
    }
    let mut fibers = Vec::new();
    for (loc, model) in [
        (FiberLocation::Zero, w.clone()),
        (FiberLocation::Infinity, w.at_infinity()),
    ] {
        let d = model.discriminant();
        let od = d.order_at_zero().expect("nonzero") as u32;
        let t = kodaira_type(order_at_zero(&model.a), order_at_zero(&model.b), od)?;
        if t != KodairaType::I0 {
            fibers.push((loc, t));
        }
    }
    let od0 = disc.order_at_zero().expect("nonzero");
    let finite = disc.div_rem(&UniPoly::monomial(od0, BigRational::one())).0;
    for (mult, g) in finite.square_free_decomposition() {
        for (ga, oa) in split_by_order(&g, &w.a) {
            for (gab, ob) in split_by_order(&ga, &w.b) {
                let t = kodaira_type(oa, ob, mult as u32)?;
                fibers.push((FiberLocation::Roots(gab), t));
            }
        }
    }
    Ok(FiberAnalysis { fibers })
}

/// `x³ + a·x + b ± 2` has a repeated root for one of the signs.
pub fn is_degenerate(m: &FamilyMember) -> bool {
    let two = int(2);
    cubic_discriminant(&m.a, &(&m.b - &two)).is_zero()
        || cubic_discriminant(&m.a, &(&m.b + &two)).is_zero()
}

/// `disc(a, b − 2)·disc(a, b + 2)` written in `α = a³` and `β = b²`:
/// `(4α + 27β + 108)² − 108²·β`.
pub fn degeneracy_product(a_cube: &BigRational, b_square: &BigRational) -> BigRational {
    let u = int(4) * a_cube + int(27) * b_square + int(108);
    &u * &u - int(108 * 108) * b_square
}

/// Degeneracy decided from `a³` and `b²` alone, free of root choices.
pub fn is_degenerate_from_powers(a_cube: &BigRational, b_square: &BigRational) -> bool {
    degeneracy_product(a_cube, b_square).is_zero()
}

/// Numeric variant for complex parameters: relative size of the smaller
/// discriminant against `tol`.
pub fn is_degenerate_numeric(a: &BigComplex, b: &BigComplex, tol: f64) -> bool {
    let p = a.precision();
    let two = BigComplex::from_i64(2, p);
    let four = BigComplex::from_i64(4, p);
    let tw7 = BigComplex::from_i64(27, p);
    let a3 = a * &(a * a);
    let scale = 1.0 + 4.0 * a3.abs_f64() + 27.0 * (b.abs_f64() + 2.0).powi(2);
    [&(b - &two), &(b + &two)].iter().any(|q| {
        let d = -(&(&four * &a3) + &(&tw7 * &(*q * *q)));
        d.abs_f64() / scale < tol
    })
}
