use num_rational::BigRational;

use k3lab::constants::Constants;
use k3lab::exact::BigComplex;
use k3lab::modular;
use k3lab::shioda_inose as si;
use k3lab::weierstrass;
use k3lab::Result;

/// Relative tolerance for the numeric degeneracy flag on the τ route.
const DEGENERACY_TOL: f64 = 1e-40;

pub enum Input {
    J(BigRational, BigRational),
    Lambda(BigRational, BigRational),
    Tau(BigComplex, u32),
}

pub struct Options {
    pub precision: usize,
    pub digits: usize,
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    out.push_str(&format!("{key} = {value}\n"));
}

fn numeric_lines(out: &mut String, c: &Constants, j1: &BigComplex, j2: &BigComplex, o: &Options) {
    let (a, b) = si::ab_numeric(c, j1, j2);
    line(out, "a", a.to_string_digits(o.digits));
    line(out, "b", b.to_string_digits(o.digits));
}

fn exact_lines(out: &mut String, c: &Constants, j1: &BigRational, j2: &BigRational, o: &Options) {
    let p = si::ab_powers_from_j(c, j1, j2);
    line(out, "j1", j1);
    line(out, "j2", j2);
    line(out, "a_cubed", &p.a_cubed);
    line(out, "b_squared", &p.b_squared);
    let (z1, z2) = (
        BigComplex::from_rational(j1, o.precision),
        BigComplex::from_rational(j2, o.precision),
    );
    numeric_lines(out, c, &z1, &z2, o);
    line(
        out,
        "degenerate",
        weierstrass::is_degenerate_from_powers(&p.a_cubed, &p.b_squared),
    );
}

pub fn run(c: &Constants, input: &Input, o: &Options) -> Result<String> {
    let mut out = String::new();
    match input {
        Input::J(j1, j2) => exact_lines(&mut out, c, j1, j2, o),
        Input::Lambda(l1, l2) => {
            let by_lambda = si::ab_powers_from_lambda(c, l1, l2)?;
            let (j1, j2) = (si::j_from_lambda(c, l1)?, si::j_from_lambda(c, l2)?);
            line(&mut out, "lambda1", l1);
            line(&mut out, "lambda2", l2);
            exact_lines(&mut out, c, &j1, &j2, o);
            line(
                &mut out,
                "routes_agree",
                by_lambda == si::ab_powers_from_j(c, &j1, &j2),
            );
        }
        Input::Tau(tau, n) => {
            let (j1, j2) = modular::fricke_pair(tau, *n)?;
            line(&mut out, "tau", tau.to_string_digits(o.digits));
            line(&mut out, "n", n);
            line(&mut out, "j1", j1.to_string_digits(o.digits));
            line(&mut out, "j2", j2.to_string_digits(o.digits));
            let (a, b) = si::ab_numeric(c, &j1, &j2);
            line(&mut out, "a", a.to_string_digits(o.digits));
            line(&mut out, "b", b.to_string_digits(o.digits));
            line(
                &mut out,
                "degenerate",
                weierstrass::is_degenerate_numeric(&a, &b, DEGENERACY_TOL),
            );
        }
    }
    Ok(out)
}
