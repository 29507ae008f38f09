use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use k3lab::exact::{
    cubic_discriminant, parse_rational, rat, BigComplex, MultiPolynomial, RationalFunction,
    UniPoly, VarSet,
};

fn vars() -> VarSet {
    VarSet::new(&["x", "y", "z"])
}

fn poly() -> impl Strategy<Value = MultiPolynomial> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..=5), 0..5).prop_map(|terms| {
        MultiPolynomial::from_terms(
            &vars(),
            terms
                .into_iter()
                .map(|((a, b, c), k)| (vec![a, b, c], rat(k, 1))),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = MultiPolynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

#[test]
fn parser_oracles() {
    let v = vars();
    let p = MultiPolynomial::parse(&v, "(x+y)^2 - x^2 - 2*x*y").unwrap();
    assert_eq!(p, MultiPolynomial::parse(&v, "y^2").unwrap());
    let q = MultiPolynomial::parse(&v, "1/2*x - (1/2)*x").unwrap();
    assert!(q.is_zero());
    assert!(MultiPolynomial::parse(&v, "w + 1").is_err());
    assert_eq!(parse_rational("-35152/9").unwrap(), rat(-35152, 9));
    assert_eq!(parse_rational(" 7 ").unwrap(), rat(7, 1));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("abc").is_err());
}

#[test]
fn cubic_discriminant_oracles() {
    // x³ − 3x + 2 = (x − 1)²(x + 2)
    assert!(cubic_discriminant(&rat(-3, 1), &rat(2, 1)).is_zero());
    // x³ − x has three distinct roots: −4(−1)³ = 4
    assert_eq!(cubic_discriminant(&rat(-1, 1), &rat(0, 1)), rat(4, 1));
}

#[test]
fn univariate_oracles() {
    let f = UniPoly::from_ints(&[-1, 0, 1]); // x² − 1
    let g = UniPoly::from_ints(&[1, 2, 1]); // (x + 1)²
    assert_eq!(f.gcd(&g), UniPoly::from_ints(&[1, 1]));
    let sq = UniPoly::from_ints(&[0, 0, 1, 1]).square_free_decomposition(); // x²(x + 1)
    assert!(sq.contains(&(2, UniPoly::from_ints(&[0, 1]))));
    assert!(sq.contains(&(1, UniPoly::from_ints(&[1, 1]))));
}

#[test]
fn complex_oracles() {
    let p = 256;
    let i = BigComplex::i(p);
    assert!((&i * &i).dist(&BigComplex::from_i64(-1, p)) < 1e-70);
    let m = BigComplex::from_i64(-8, p).cbrt();
    // principal cube root of −8 is 1 + √3·i
    let want = BigComplex::from_f64(1.0, 3f64.sqrt(), p);
    assert!(m.dist(&want) < 1e-12);
    assert!(
        BigComplex::parse("0.5+1.25i", p)
            .unwrap()
            .dist(&BigComplex::from_f64(0.5, 1.25, p))
            == 0.0
    );
    assert!(BigComplex::parse("1+2j", p).is_err());
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in -9i64..9, y in -9i64..9, z in 1i64..9) {
        let pt = [rat(x, 1), rat(y, 1), rat(1, z)];
        let prod = (a.clone() * b.clone()).evaluate_slice(&pt);
        prop_assert_eq!(prod, a.evaluate_slice(&pt) * b.evaluate_slice(&pt));
    }

    #[test]
    fn rational_functions_cancel(a in poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let f = RationalFunction::new(a.clone() * c.clone(), b.clone() * c).unwrap();
        let g = RationalFunction::new(a, b).unwrap();
        prop_assert!(f.equals(&g));
    }

    #[test]
    fn division_with_remainder(n in prop::collection::vec(-6i64..6, 1..6), d in prop::collection::vec(-6i64..6, 1..4)) {
        let (n, d) = (UniPoly::from_ints(&n), UniPoly::from_ints(&d));
        prop_assume!(!d.is_zero());
        let (q, r) = n.div_rem(&d);
        prop_assert_eq!(&(&q * &d) + &r, n);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn sqrt_and_cbrt_invert_powers(re in -50.0f64..50.0, im in -50.0f64..50.0) {
        let z = BigComplex::from_f64(re, im, 192);
        prop_assume!(z.abs_f64() > 1e-3);
        prop_assert!(z.sqrt().powi(2).rel_dist(&z) < 1e-40);
        prop_assert!(z.cbrt().powi(3).rel_dist(&z) < 1e-40);
    }

    #[test]
    fn rationals_round_trip_through_strings(n in -10_000i64..10_000, d in 1i64..10_000) {
        let q: BigRational = rat(n, d);
        prop_assert_eq!(parse_rational(&q.to_string()).unwrap(), q);
    }
}
