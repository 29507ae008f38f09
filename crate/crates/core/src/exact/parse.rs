//! A small recursive-descent parser for polynomial expressions such as
//! `(l2-1)*(u1-l1*v1)^3*(u1-v1)*u2*v2^2`.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := unary (('*'|'/') unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' integer)?`,
//! `atom := integer | identifier | '(' expr ')'`. Division is only allowed by
//! nonzero constants.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{MultiPolynomial, VarSet};
use super::BigRational;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Num(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse {
                input: input.to_string(),
                reason: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    vars: &'a VarSet,
    tokens: Vec<Token>,
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: reason.into(),
        }
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<MultiPolynomial> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPolynomial> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == '*' {
                acc = acc * rhs;
            } else {
                let c = rhs
                    .as_constant()
                    .ok_or_else(|| self.err("division by a non-constant"))?;
                if c.is_zero() {
                    return Err(self.err("division by zero"));
                }
                acc = acc.scale(&(BigRational::from_integer(1.into()) / c));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPolynomial> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPolynomial> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPolynomial> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Token::Num(n) => Ok(MultiPolynomial::constant(
                self.vars,
                BigRational::from_integer(n),
            )),
            Token::Ident(name) => MultiPolynomial::var(self.vars, &name),
            Token::Op('(') => {
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Token::Op(c) => Err(self.err(format!("unexpected `{c}`"))),
        }
    }
}

pub(crate) fn parse_polynomial(vars: &VarSet, input: &str) -> Result<MultiPolynomial> {
    let tokens = tokenize(input)?;
    let mut p = Parser {
        vars,
        tokens,
        pos: 0,
        input,
    };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn parses_products_and_powers() {
        let vs = VarSet::new(&["x", "y"]);
        let p = parse_polynomial(&vs, "(x+y)^2 - 2*x*y").unwrap();
        let q = parse_polynomial(&vs, "x^2 + y^2").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn division_by_constants() {
        let vs = VarSet::new(&["x"]);
        let p = parse_polynomial(&vs, "-1/2*x + 3/4").unwrap();
        assert_eq!(p.coeff(&[1]), rat(-1, 2));
        assert_eq!(p.coeff(&[0]), rat(3, 4));
        assert!(parse_polynomial(&vs, "1/x").is_err());
        assert!(parse_polynomial(&vs, "x/0").is_err());
    }

    #[test]
    fn rejects_garbage() {
        let vs = VarSet::new(&["x"]);
        assert!(parse_polynomial(&vs, "x +").is_err());
        assert!(parse_polynomial(&vs, "(x").is_err());
        assert!(parse_polynomial(&vs, "x ? 2").is_err());
        assert_eq!(
            parse_polynomial(&vs, "z"),
            Err(Error::UnknownVariable("z".into()))
        );
        assert_eq!(parse_polynomial(&vs, "--x").unwrap().coeff(&[1]), int(1));
    }
}
