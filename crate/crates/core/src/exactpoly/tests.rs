use super::*;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) fn p(s: &str) -> MultiPoly {
    parse_poly(s).unwrap()
}

#[test]
fn add_cancellation_and_identity() {
    // (x+1) + (-x) = 1
    assert_eq!(p("x + 1").add(&p("-x")), p("1"));
    // P + 0 = P
    let q = p("3*x*y^2 - 7");
    assert_eq!(q.add(&MultiPoly::zero()), q);
    // 3xy^2 + 4xy^2 = 7xy^2, height 7
    let s = p("3*x*y^2").add(&p("4*x*y^2"));
    assert_eq!(s, p("7*x*y^2"));
    assert_eq!(s.height(), &BigUint::from(7u32));
}

#[test]
fn mul_examples() {
    assert_eq!(p("y+1").mul(&p("y-1")), p("y^2-1"));
    let q = p("5*x^2*z - 3");
    assert_eq!(q.mul(&MultiPoly::one()), q);
    let r = p("2*x+3").mul(&p("5*x+7"));
    assert_eq!(r, p("10*x^2 + 29*x + 21"));
    assert_eq!(r.height(), &BigUint::from(29u32));
}

#[test]
fn height_examples() {
    assert_eq!(p("y^2-1").height(), &BigUint::from(1u32));
    assert_eq!(p("7*x*y^2").height(), &BigUint::from(7u32));
    assert_eq!(p("10*x^2+29*x+21").height(), &BigUint::from(29u32));
    assert_eq!(MultiPoly::zero().height(), &BigUint::zero());
}

#[test]
fn type_of_examples() {
    assert!((p("y-1").type_of().unwrap() - 1.0).abs() < 1e-12);
    assert!((p("1").type_of().unwrap() - 0.0).abs() < 1e-12);
    let t = p("10*x^2+29*x+21").type_of().unwrap();
    assert!((t - (2.0 + 29f64.ln())).abs() < 1e-12);
    assert!((t - 5.3673).abs() < 1e-3);
    assert_eq!(MultiPoly::zero().type_of(), Err(PolyError::ZeroPolyType));
}

#[test]
fn gelfond_bound_examples() {
    let b = gelfond_product_bound(&[p("y+1"), p("y+1")]);
    assert_eq!(b, BigUint::from(4u32));
    assert!(b >= p("y+1").mul(&p("y+1")).height().clone());

    assert_eq!(gelfond_product_bound(&[p("3")]), BigUint::from(3u32));

    let b = gelfond_product_bound(&[p("2*x+3"), p("5*x+7")]);
    assert_eq!(b, BigUint::from(84u32));
    assert!(b >= BigUint::from(29u32));
}

fn random_poly(rng: &mut ChaCha8Rng, vars: &[&str], maxdeg: u32, maxh: i64) -> MultiPoly {
    let nterms = rng.gen_range(0..=6);
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let exps: Vec<u32> = vars.iter().map(|_| rng.gen_range(0..=maxdeg)).collect();
        let c = rng.gen_range(-maxh..=maxh);
        terms.push((exps, BigInt::from(c)));
    }
    MultiPoly::from_terms(vars.iter().map(|s| s.to_string()).collect(), terms)
        .unwrap()
        .compress_vars()
}

#[test]
fn gelfond_bound_holds_on_random_pairs() {
    // spec asks >= 1e4 random pairs
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..10_000 {
        let a = random_poly(&mut rng, &["x", "y"], 3, 8);
        let b = random_poly(&mut rng, &["x", "y"], 3, 8);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let prod = a.mul(&b);
        assert!(prod.height() <= &gelfond_product_bound(&[a, b]));
    }
}

#[test]
fn degree_additivity_and_commutativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2000 {
        let a = random_poly(&mut rng, &["x", "y", "z"], 3, 5);
        let b = random_poly(&mut rng, &["x", "y", "z"], 3, 5);
        let c = random_poly(&mut rng, &["x", "y", "z"], 2, 5);
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        if !a.is_zero() && !b.is_zero() {
            for v in ["x", "y", "z"] {
                assert_eq!(a.mul(&b).deg_var(v), a.deg_var(v) + b.deg_var(v));
            }
        }
    }
}

#[test]
fn cache_consistency_after_ops() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..500 {
        let a = random_poly(&mut rng, &["x", "y"], 4, 9);
        let b = random_poly(&mut rng, &["y", "z"], 4, 9);
        for r in [a.add(&b), a.mul(&b), a.sub(&b), a.neg(), a.pow(3)] {
            assert!(r.caches_consistent());
        }
    }
}

#[test]
fn exact_division() {
    let a = p("x^2 - y^2");
    let b = p("x - y");
    assert_eq!(a.div_exact(&b), Some(p("x + y")));
    assert_eq!(a.div_exact(&p("x + 1")), None);
    assert_eq!(p("2*x + 2").div_exact(&p("2")), Some(p("x + 1")));
    assert_eq!(p("3*x").div_exact(&p("2")), None);
    let prod = p("2*x*y - 3").mul(&p("x^2 + x + 1"));
    assert_eq!(prod.div_exact(&p("x^2 + x + 1")), Some(p("2*x*y - 3")));
}

#[test]
fn coeffs_in_roundtrip() {
    let a = p("x^2*y + 3*x*z - y*z + 4");
    let cs = a.coeffs_in("x");
    assert_eq!(cs.len(), 3);
    assert_eq!(MultiPoly::from_coeffs_in("x", &cs), a);
    assert_eq!(a.leading_coeff_in("x"), p("y"));
}

#[test]
fn content_and_primitive() {
    assert_eq!(p("6*x + 4").content(), BigInt::from(2));
    assert_eq!(p("-6*x - 4").content(), BigInt::from(-2));
    assert_eq!(p("-6*x - 4").primitive_part(), p("3*x + 2"));
    assert_eq!(MultiPoly::zero().content(), BigInt::zero());
}

#[test]
fn eval_helpers() {
    let a = p("x^2 + 2*x + 3");
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let v = a.eval_rational_univar(&half);
    assert_eq!(v, BigRational::new(BigInt::from(17), BigInt::from(4)));
    let mut assign = std::collections::BTreeMap::new();
    assign.insert("x".to_string(), BigInt::from(2));
    assert_eq!(p("x*y + x^2").eval_ints(&assign), p("2*y + 4"));
}

#[test]
fn text_roundtrip_examples() {
    for s in [
        "0",
        "1",
        "-1",
        "x",
        "-x",
        "2*x^2 - x + 7",
        "x*y*z",
        "-3*alpha_1^4*beta + 2",
    ] {
        let q = p(s);
        assert_eq!(p(&q.to_string()), q);
    }
    assert!(parse_poly("").is_err());
    assert!(parse_poly("x^").is_err());
    assert!(parse_poly("$").is_err());
    assert!(parse_poly("x^99999999999999999999").is_err());
}

#[test]
fn json_roundtrip() {
    let a = p("10*x^2 + 29*x + 21");
    let s = serde_json::to_string(&a).unwrap();
    let b: MultiPoly = serde_json::from_str(&s).unwrap();
    assert_eq!(a, b);
    let c: MultiPoly =
        serde_json::from_str(r#"{"vars":["x"],"terms":[{"e":[1],"c":"5"},{"e":[0],"c":"-2"}]}"#)
            .unwrap();
    assert_eq!(c, p("5*x - 2"));
    assert!(serde_json::from_str::<MultiPoly>(r#"{"vars":["x"],"terms":[{"e":[1],"c":"zz"}]}"#).is_err());
}

proptest! {
    #[test]
    fn text_roundtrip_random(terms in proptest::collection::vec(
        (proptest::collection::vec(0u32..5, 3), -50i64..50), 0..8)) {
        let poly = MultiPoly::from_terms(
            vec!["x".into(), "y".into(), "z".into()],
            terms.into_iter().map(|(e, c)| (e, BigInt::from(c))),
        ).unwrap().compress_vars();
        let round = parse_poly(&poly.to_string()).unwrap();
        prop_assert_eq!(round, poly);
    }

    #[test]
    fn json_roundtrip_random(terms in proptest::collection::vec(
        (proptest::collection::vec(0u32..6, 2), -99i64..99), 0..8)) {
        let poly = MultiPoly::from_terms(
            vec!["u".into(), "v".into()],
            terms.into_iter().map(|(e, c)| (e, BigInt::from(c))),
        ).unwrap();
        let s = serde_json::to_string(&poly).unwrap();
        let round: MultiPoly = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(round, poly);
    }
}
