use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::{MultiPolynomial, VarSet};
use super::BigRational;
use crate::{Error, Result};

/// A quotient of two polynomials.
///
/// Nothing is ever reduced: equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPolynomial,
    den: MultiPolynomial,
}

impl RationalFunction {
    pub fn new(num: MultiPolynomial, den: MultiPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: MultiPolynomial) -> Self {
        let den = MultiPolynomial::one(p.vars());
        RationalFunction { num: p, den }
    }

    pub fn numerator(&self) -> &MultiPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPolynomial {
        &self.den
    }

    pub fn vars(&self) -> &VarSet {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `f.num·g.den − g.num·f.den = 0`.
    pub fn equals(&self, other: &Self) -> bool {
        (&self.num * &other.den - &other.num * &self.den).is_zero()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn pow(&self, n: u32) -> Self {
        RationalFunction {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    pub fn evaluate(&self, point: &HashMap<String, BigRational>) -> Result<BigRational> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.evaluate(point)? / d)
    }

    pub fn evaluate_slice(&self, values: &[BigRational]) -> Result<BigRational> {
        let d = self.den.evaluate_slice(values);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.evaluate_slice(values) / d)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Numerator `N` of `Σ terms = N / D`, where `D` is the product of all term
/// denominators; the sum vanishes iff `N` does.
pub fn clear_denominators(terms: &[RationalFunction]) -> Result<MultiPolynomial> {
    let first = terms.first().ok_or(Error::ZeroDenominator)?;
    if terms.iter().any(|t| t.den.is_zero()) {
        return Err(Error::ZeroDenominator);
    }
    let mut acc = MultiPolynomial::zero(first.vars());
    for (i, t) in terms.iter().enumerate() {
        let mut prod = t.num.clone();
        for (k, other) in terms.iter().enumerate() {
            if k != i {
                prod = prod * &other.den;
            }
        }
        acc = acc + prod;
    }
    Ok(acc)
}

/// A sum of fractions whose denominators are products of powers of a shared
/// table of factors.
///
/// Clearing multiplies through by the least common multiple of the factor
/// exponent vectors. Factors are compared structurally; no gcd is computed, so
/// the result is exact but may keep common factors that are not syntactically
/// shared.
#[derive(Clone, Debug)]
pub struct FactoredSum {
    vars: VarSet,
    factors: Vec<MultiPolynomial>,
    terms: Vec<(MultiPolynomial, Vec<u32>)>,
}

impl FactoredSum {
    pub fn new(vars: &VarSet) -> Self {
        FactoredSum {
            vars: vars.clone(),
            factors: Vec::new(),
            terms: Vec::new(),
        }
    }

    /// Registers a denominator factor, returning its index. Equal factors share one index.
    pub fn factor(&mut self, f: &MultiPolynomial) -> Result<usize> {
        if f.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if let Some(i) = self.factors.iter().position(|g| g == f) {
            return Ok(i);
        }
        self.factors.push(f.clone());
        Ok(self.factors.len() - 1)
    }

    /// Adds `numerator / Π factor[i]^e`.
    pub fn push(&mut self, numerator: MultiPolynomial, denominator: &[(usize, u32)]) {
        let mut exps = vec![0; self.factors.len()];
        for &(i, e) in denominator {
            exps[i] += e;
        }
        self.terms.push((numerator, exps));
    }

    /// Exponents of the common denominator, indexed like the factor table.
    pub fn common_denominator(&self) -> Vec<u32> {
        let n = self.factors.len();
        let mut lcm = vec![0u32; n];
        for (_, e) in &self.terms {
            for (i, &x) in e.iter().enumerate() {
                lcm[i] = lcm[i].max(x);
            }
        }
        lcm
    }

    pub fn factors(&self) -> &[MultiPolynomial] {
        &self.factors
    }

    /// Numerator over the common denominator.
    pub fn cleared_numerator(&self) -> MultiPolynomial {
        let lcm = self.common_denominator();
        let mut acc = MultiPolynomial::zero(&self.vars);
        let mut power_cache: HashMap<(usize, u32), MultiPolynomial> = HashMap::new();
        for (num, exps) in &self.terms {
            if num.is_zero() {
                continue;
            }
            let mut t = num.clone();
            for (i, &have) in exps
                .iter()
                .enumerate()
                .chain((exps.len()..lcm.len()).map(|i| (i, &0u32)))
            {
                let need = lcm[i] - have;
                if need > 0 {
                    let f = power_cache
                        .entry((i, need))
                        .or_insert_with(|| self.factors[i].pow(need));
                    t = t * &*f;
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Exact value at a point, or `None` when the common denominator vanishes there.
    pub fn evaluate_slice(&self, values: &[BigRational]) -> Option<BigRational> {
        let fvals: Vec<BigRational> = self
            .factors
            .iter()
            .map(|f| f.evaluate_slice(values))
            .collect();
        let mut acc = BigRational::zero();
        for (num, exps) in &self.terms {
            let mut d = BigRational::from_integer(1.into());
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    d *= &fvals[i];
                }
            }
            if d.is_zero() {
                return None;
            }
            acc += num.evaluate_slice(values) / d;
        }
        Some(acc)
    }
}
