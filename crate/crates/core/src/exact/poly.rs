use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{int, BigRational};
use crate::{Error, Result};

/// An ordered list of variable names shared by a family of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        VarSet(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A polynomial over ℚ with a fixed variable set.
///
/// Terms are kept in a sorted map from dense exponent vectors to nonzero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPolynomial {
    vars: VarSet,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MultiPolynomial {
    pub fn zero(vars: &VarSet) -> Self {
        MultiPolynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        let i = vars.index_of(name)?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Ok(Self::monomial(vars, e, BigRational::one()))
    }

    pub fn monomial(vars: &VarSet, exponents: Vec<u32>, coeff: BigRational) -> Self {
        assert_eq!(exponents.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exponents, coeff);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn parse(vars: &VarSet, expr: &str) -> Result<Self> {
        super::parse::parse_polynomial(vars, expr)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigRational {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The constant value if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            self.vars == other.vars,
            "{}",
            Error::VariableMismatch(self.vars.names().to_vec(), other.vars.names().to_vec())
        );
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Total degree in the given variables, `None` for the zero polynomial.
    pub fn degree_in(&self, names: &[&str]) -> Result<Option<u32>> {
        let idx = names
            .iter()
            .map(|n| self.vars.index_of(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(self
            .terms
            .keys()
            .map(|e| idx.iter().map(|&i| e[i]).sum::<u32>())
            .max())
    }

    /// True iff every term has total degree exactly `degree` in `names`.
    pub fn is_homogeneous_in(&self, names: &[&str], degree: u32) -> Result<bool> {
        let idx = names
            .iter()
            .map(|n| self.vars.index_of(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(self
            .terms
            .keys()
            .all(|e| idx.iter().map(|&i| e[i]).sum::<u32>() == degree))
    }

    /// True iff the variable divides the polynomial.
    pub fn is_divisible_by_var(&self, name: &str) -> Result<bool> {
        let i = self.vars.index_of(name)?;
        Ok(self.terms.keys().all(|e| e[i] > 0))
    }

    /// Evaluates at a named point; every variable must be assigned.
    pub fn evaluate(&self, point: &HashMap<String, BigRational>) -> Result<BigRational> {
        let values = self
            .vars
            .names()
            .iter()
            .map(|v| {
                point
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::MissingAssignment(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.evaluate_slice(&values))
    }

    /// Evaluates at values listed in variable order.
    pub fn evaluate_slice(&self, values: &[BigRational]) -> BigRational {
        assert_eq!(values.len(), self.vars.len(), "point dimension");
        let max_exp = self
            .terms
            .keys()
            .flat_map(|e| e.iter().copied())
            .max()
            .unwrap_or(0) as usize;
        // powers[i][k] = values[i]^k
        let powers: Vec<Vec<BigRational>> = values
            .iter()
            .map(|v| {
                let mut row = Vec::with_capacity(max_exp + 1);
                row.push(BigRational::one());
                for k in 1..=max_exp {
                    let next = &row[k - 1] * v;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= &powers[i][k as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes exact values for some variables, keeping the variable set.
    pub fn partial_evaluate(&self, assignments: &[(&str, BigRational)]) -> Result<Self> {
        let idx = assignments
            .iter()
            .map(|(n, v)| Ok((self.vars.index_of(n)?, v.clone())))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let mut c2 = c.clone();
            for (i, v) in &idx {
                let k = e2[*i];
                if k > 0 {
                    c2 *= num_traits::pow(v.clone(), k as usize);
                    e2[*i] = 0;
                }
            }
            out.add_term(e2, c2);
        }
        Ok(out)
    }
}

impl fmt::Debug for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest exponents first reads more naturally
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &BigRational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars.names()[i].clone()
                    } else {
                        format!("{}^{}", self.vars.names()[i], x)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else if mag.denom().is_one() {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            } else {
                write!(f, "({})*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPolynomial> for &'a MultiPolynomial {
    type Output = MultiPolynomial;
    fn add(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPolynomial> for &'a MultiPolynomial {
    type Output = MultiPolynomial;
    fn sub(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPolynomial> for &'a MultiPolynomial {
    type Output = MultiPolynomial;
    fn mul(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self.check_vars(rhs);
        let mut acc: HashMap<Vec<u32>, BigRational> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                match acc.get_mut(&e) {
                    Some(slot) => *slot += c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        MultiPolynomial {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn neg(self) -> MultiPolynomial {
        self.scale(&int(-1))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPolynomial> for MultiPolynomial {
            type Output = MultiPolynomial;
            fn $m(self, rhs: MultiPolynomial) -> MultiPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPolynomial> for MultiPolynomial {
            type Output = MultiPolynomial;
            fn $m(self, rhs: &MultiPolynomial) -> MultiPolynomial {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<MultiPolynomial> for &'a MultiPolynomial {
            type Output = MultiPolynomial;
            fn $m(self, rhs: MultiPolynomial) -> MultiPolynomial {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPolynomial {
    type Output = MultiPolynomial;
    fn neg(self) -> MultiPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn vars() -> VarSet {
        VarSet::new(&["u1", "v1", "u2", "v2", "l1", "l2"])
    }

    fn p(s: &str) -> MultiPolynomial {
        MultiPolynomial::parse(&vars(), s).unwrap()
    }

    #[test]
    fn zero_tests() {
        assert!(MultiPolynomial::zero(&vars()).is_zero());
        assert!(p("(u1+v1)^2 - u1^2 - 2*u1*v1 - v1^2").is_zero());
        assert!(!p("l1*l2 - l2*l1 + u1").is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let mut pt = HashMap::new();
        pt.insert("u1".to_string(), int(2));
        pt.insert("v1".to_string(), int(3));
        let vs = VarSet::new(&["u1", "v1"]);
        let q = MultiPolynomial::parse(&vs, "u1*v1").unwrap();
        assert_eq!(q.evaluate(&pt).unwrap(), int(6));

        let lv = VarSet::new(&["l"]);
        let f = MultiPolynomial::parse(&lv, "l^2 - l + 1").unwrap();
        let mut at = HashMap::new();
        at.insert("l".to_string(), int(-1));
        assert_eq!(f.evaluate(&at).unwrap(), int(3));

        let g = MultiPolynomial::parse(&lv, "l^2*(l-1)^2").unwrap();
        at.insert("l".to_string(), rat(1, 4));
        // (1/16)·(9/16) computed by hand
        assert_eq!(g.evaluate(&at).unwrap(), rat(1, 16) * rat(9, 16));
        assert_eq!(g.evaluate(&at).unwrap(), rat(9, 256));
    }

    #[test]
    fn missing_assignment_is_reported() {
        let vs = VarSet::new(&["u1", "v1"]);
        let q = MultiPolynomial::parse(&vs, "u1*v1").unwrap();
        let mut pt = HashMap::new();
        pt.insert("u1".to_string(), int(2));
        assert_eq!(q.evaluate(&pt), Err(Error::MissingAssignment("v1".into())));
    }

    #[test]
    fn degrees_and_divisibility() {
        let q = p("u1^2*v2 + u1*v1*u2 - 3*l1*v1^2*v2");
        assert!(q.is_homogeneous_in(&["u1", "v1"], 2).unwrap());
        assert!(q.is_homogeneous_in(&["u2", "v2"], 1).unwrap());
        assert_eq!(q.degree_in(&["l1"]).unwrap(), Some(1));
        assert!(!q.is_divisible_by_var("u1").unwrap());
        assert!(p("u1*v1 + u1^3").is_divisible_by_var("u1").unwrap());
    }

    #[test]
    fn partial_evaluation() {
        let q = p("l1*u1 + l2^2*v1");
        let r = q
            .partial_evaluate(&[("l1", int(3)), ("l2", int(2))])
            .unwrap();
        assert_eq!(r, p("3*u1 + 4*v1"));
    }

    #[test]
    fn display_round_trips_through_parser() {
        let q = p("-(1/2)*u1^2*l2 + 3*v1 - 7 + u1*v1");
        assert_eq!(p(&q.to_string()), q);
    }

    #[test]
    fn constant_detection() {
        assert_eq!(p("3 + u1 - u1").as_constant(), Some(int(3)));
        assert_eq!(p("u1").as_constant(), None);
    }
}
