use num_bigint::BigInt;
use proptest::prelude::*;

use k3lab::exact::BigComplex;
use k3lab::modular::{self, ModularPolynomial, QSeries};

const P: usize = 192;

#[test]
fn j_expansion_oracle() {
    let s = QSeries::j_times_q(modular::MIN_ORDER).unwrap();
    let want = [1i64, 744, 196884, 21493760, 864299970, 20245856256];
    let got: Vec<BigInt> = s.coeffs()[..6].to_vec();
    assert_eq!(got, want.map(BigInt::from).to_vec());
}

#[test]
fn cm_values() {
    let tau = |re: f64, im: f64| BigComplex::from_f64(re, im, P);
    let rho = tau(-0.5, 3f64.sqrt() / 2.0);
    assert!(modular::j_numeric(&rho).unwrap().abs_f64() < 1e-10);
    let j = modular::j_numeric(&tau(0.0, 2f64.sqrt())).unwrap();
    assert!(j.dist(&BigComplex::from_i64(8000, P)) < 1e-8);
    assert!(modular::j_numeric(&tau(0.0, -1.0)).is_err());
}

#[test]
fn cache_text_round_trips() {
    let poly = modular::build_modular_polynomial(2).unwrap().poly;
    let text = poly.to_cache_string();
    assert!(text.starts_with("n=2\n0 0 -157464000000000\n"));
    assert_eq!(ModularPolynomial::parse_cache(&text).unwrap(), poly);
    assert!(ModularPolynomial::parse_cache("n=2\n0 0 x\n").is_err());
    assert!(ModularPolynomial::parse_cache("0 0 1\n").is_err());
}

#[test]
fn level_one_and_unsupported_levels() {
    let one = modular::build_modular_polynomial(1).unwrap().poly;
    assert_eq!(one.coeff(1, 0), BigInt::from(1));
    assert_eq!(one.coeff(0, 1), BigInt::from(-1));
    assert!(modular::build_modular_polynomial(4).is_err());
}

#[test]
fn truncation_grows_with_precision() {
    assert!(modular::truncation_order(4096) > modular::truncation_order(256));
    assert!(modular::truncation_order(64) >= modular::MIN_ORDER);
}

fn tau() -> impl Strategy<Value = BigComplex> {
    (-2.0f64..2.0, 0.3f64..2.0).prop_map(|(x, y)| BigComplex::from_f64(x, y, P))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn j_is_modular(t in tau()) {
        let j = modular::j_numeric(&t).unwrap();
        let shifted = modular::j_numeric(&(&t + &BigComplex::one(P))).unwrap();
        let inverted = modular::j_numeric(&(-&t.recip())).unwrap();
        prop_assert!(shifted.rel_dist(&j) < 1e-30);
        prop_assert!(inverted.rel_dist(&j) < 1e-30);
    }

    #[test]
    fn fricke_pairs_swap(t in tau(), n in 2u32..4) {
        let (a, b) = modular::fricke_pair(&t, n).unwrap();
        let partner = -(&(&BigComplex::from_i64(n as i64, P) * &t).recip());
        let (c, d) = modular::fricke_pair(&partner, n).unwrap();
        prop_assert!(a.rel_dist(&d) < 1e-25);
        prop_assert!(b.rel_dist(&c) < 1e-25);
    }
}
