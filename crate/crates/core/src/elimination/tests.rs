use super::*;
use crate::algnum::{certified_roots, Mag};
use crate::exactpoly::gcd::{coprime, gcd};
use crate::exactpoly::parse_poly;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> MultiPoly {
    parse_poly(s).unwrap()
}

#[test]
fn resultant_examples() {
    assert_eq!(resultant(&p("y - 2"), &p("y - 3"), "y").unwrap(), p("-1"));
    assert_eq!(resultant(&p("y - x"), &p("y - z"), "y").unwrap(), p("x - z"));
    assert_eq!(
        resultant(&p("y^2 - 2"), &p("y^2 - x"), "y").unwrap(),
        p("x^2 - 4*x + 4")
    );
    assert!(matches!(
        resultant(&p("x + 1"), &p("x - 1"), "y"),
        Err(ElimError::BothConstantIn(_))
    ));
}

#[test]
fn resultant_zero_iff_common_factor() {
    // exhaustive small univariate check
    for a0 in -2i64..=2 {
        for a1 in -2i64..=2 {
            for b0 in -2i64..=2 {
                for b1 in 1i64..=2 {
                    let a = MultiPoly::var("y").scale(&a1.into()).add(&MultiPoly::constant(a0));
                    let b = MultiPoly::var("y").scale(&b1.into()).add(&MultiPoly::constant(b0));
                    if a.is_zero() || a.deg_var("y") == 0 {
                        continue;
                    }
                    let r = resultant(&a, &b, "y").unwrap();
                    let g = gcd(&a, &b);
                    assert_eq!(
                        r.is_zero(),
                        g.deg_var("y") >= 1,
                        "a={a} b={b} r={r} g={g}"
                    );
                }
            }
        }
    }
}

#[test]
fn semires_examples() {
    // coprime case equals resultant
    assert_eq!(semi_resultant(&p("y - 2"), &p("y - 3"), "y").unwrap(), p("-1"));
    // shared-root case: (1-3)(2-1)(2-3) = 2
    let a = p("y - 1").mul(&p("y - 2"));
    let b = p("y - 1").mul(&p("y - 3"));
    assert_eq!(semi_resultant(&a, &b, "y").unwrap(), p("2"));
    // identical linear factors: empty product
    assert_eq!(semi_resultant(&p("y - 1"), &p("y - 1"), "y").unwrap(), p("1"));
    assert!(matches!(
        semi_resultant(&p("3"), &p("y - 1"), "y"),
        Err(ElimError::ConstantIn(_))
    ));
}

#[test]
fn semires_multiplicity_cases() {
    // (y-1)^2 vs (y-1): all pairs equal -> product 1, prefactor 1
    let a = p("y - 1").pow(2);
    assert_eq!(semi_resultant(&a, &p("y - 1"), "y").unwrap(), p("1"));
    // (y-1)^2 vs (y-2): (1-2)^2 = 1
    assert_eq!(semi_resultant(&a, &p("y - 2"), "y").unwrap(), p("1"));
    // (y-1)^2 vs (y-3): (1-3)^2 = 4
    assert_eq!(semi_resultant(&a, &p("y - 3"), "y").unwrap(), p("4"));
    // 2(y-1) vs 3(y-1): p0^n q0^m = 2*3 = 6, empty root product
    assert_eq!(
        semi_resultant(&p("2*y - 2"), &p("3*y - 3"), "y").unwrap(),
        p("6")
    );
}

#[test]
fn semires_with_parameters() {
    // coprime multivariate: equals the resultant exactly
    let a = p("x*y + 1");
    let b = p("y^2 + x");
    assert_eq!(
        semi_resultant(&a, &b, "y").unwrap(),
        resultant(&a, &b, "y").unwrap()
    );
    // common factor (y - x): P = (y-x)(y-1), Q = (y-x)(y+1)
    let a = p("y - x").mul(&p("y - 1"));
    let b = p("y - x").mul(&p("y + 1"));
    // roots of P: {x, 1}; of Q: {x, -1}; distinct pairs:
    // (x -(-1))(1 - x)(1-(-1)) = (x+1)(1-x)*2
    let expect = p("x + 1").mul(&p("1 - x")).scale(&2.into());
    assert_eq!(semi_resultant(&a, &b, "y").unwrap(), expect);
}

/// Numeric oracle: semi-resultant of univariate integer polynomials via
/// high-precision root products with separation-certified grouping.
fn semires_numeric_oracle(a: &MultiPoly, b: &MultiPoly) -> f64 {
    let prec = 512u32;
    let to_balls = |q: &MultiPoly| -> Vec<crate::algnum::Ball> {
        crate::exactpoly::gcd::radical_in_var(q, "y")
            .coeffs_in("y")
            .iter()
            .map(|c| crate::algnum::Ball::from_bigint(&c.constant_value().unwrap(), prec))
            .collect()
    };
    // multiplicities via square-free decomposition
    let (_, aparts) = squarefree_in_var(a, "y");
    let (_, bparts) = squarefree_in_var(b, "y");
    let mut aroots: Vec<(crate::algnum::Ball, u32)> = Vec::new();
    for (part, mult) in &aparts {
        for r in certified_roots(&to_balls(part), prec).unwrap() {
            aroots.push((r, *mult));
        }
    }
    let mut broots: Vec<(crate::algnum::Ball, u32)> = Vec::new();
    for (part, mult) in &bparts {
        for r in certified_roots(&to_balls(part), prec).unwrap() {
            broots.push((r, *mult));
        }
    }
    let m = a.deg_var("y");
    let n = b.deg_var("y");
    let p0 = a.leading_coeff_in("y").constant_value().unwrap();
    let q0 = b.leading_coeff_in("y").constant_value().unwrap();
    let mut acc = crate::algnum::Ball::from_bigint(&p0.pow(n), prec)
        .mul(&crate::algnum::Ball::from_bigint(&q0.pow(m), prec));
    for (ra, ma) in &aroots {
        for (rb, mb) in &broots {
            let d = ra.sub(rb);
            if d.contains_zero() {
                continue; // certified-equal roots are skipped
            }
            acc = acc.mul(&d.powi((ma * mb) as u64));
        }
    }
    assert!(acc.mid_im_f64().abs() < 1e-9);
    acc.mid_re_f64()
}

#[test]
fn semires_matches_numeric_root_product() {
    let cases = [
        (p("y - 1").mul(&p("y - 2")), p("y - 1").mul(&p("y - 3"))),
        (p("y^2 - 2"), p("y^2 - 3")),
        (p("y - 1").pow(2).mul(&p("y + 2")), p("y - 1").mul(&p("y - 5"))),
        (p("2*y^2 + y - 3"), p("y^3 - y + 1")),
        (p("y^2 + 1"), p("y^2 + 4")),
    ];
    for (a, b) in cases {
        let exact = semi_resultant(&a, &b, "y").unwrap();
        let val = exact.constant_value().expect("constant").clone();
        let oracle = semires_numeric_oracle(&a, &b);
        let vf = val.to_string().parse::<f64>().unwrap();
        assert!(
            (vf - oracle).abs() <= 1e-6 * (1.0 + vf.abs()),
            "a={a} b={b}: exact {vf} vs oracle {oracle}"
        );
    }
}

#[test]
fn certify_examples() {
    let c = certify_semiresultant(&p("x*y + 1"), &p("y^2 + x"), "y").unwrap();
    assert!(c.ok);
    assert_eq!((c.m, c.n, c.k), (1, 2, 1));
    let c = certify_semiresultant(&p("y - 2"), &p("y - 3"), "y").unwrap();
    assert!(c.ok);
    let json = serde_json::to_string(&c).unwrap();
    assert!(json.contains("height_claimed"));
}

fn random_poly_in(rng: &mut ChaCha8Rng, vars: &[&str], dy: u32, dx: u32, h: i64) -> MultiPoly {
    loop {
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(2..=6) {
            let mut e = vec![0u32; vars.len()];
            for (i, v) in vars.iter().enumerate() {
                e[i] = if *v == "y" {
                    rng.gen_range(0..=dy)
                } else {
                    rng.gen_range(0..=dx)
                };
            }
            terms.push((e, BigInt::from(rng.gen_range(-h..=h))));
        }
        let q = MultiPoly::from_terms(vars.iter().map(|s| s.to_string()).collect(), terms)
            .unwrap()
            .compress_vars();
        if q.deg_var("y") >= 1 {
            return q;
        }
    }
}

#[test]
fn certify_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..120 {
        let a = random_poly_in(&mut rng, &["x1", "x2", "y"], 4, 3, 10);
        let b = random_poly_in(&mut rng, &["x1", "x2", "y"], 4, 3, 10);
        let c = certify_semiresultant(&a, &b, "y").unwrap();
        assert!(c.ok, "certificate failed for {a} and {b}: {c:?}");
    }
}

#[test]
fn oracle_equivalence_exhaustive_is_in_acceptance() {
    // the full exhaustive run lives in the acceptance suite; spot-check here
    let a = p("y^3 - 2*y + 1");
    let b = p("y^2 + y + 1");
    assert!(coprime(&a, &b));
    assert_eq!(
        semi_resultant(&a, &b, "y").unwrap(),
        resultant(&a, &b, "y").unwrap()
    );
}

#[test]
fn smallness_transfer_examples() {
    let theta = crate::algnum::Ball::from_f64(0.9, 128);
    // val=0.5, P1deg=Q1deg=1, H(P)=H(Q)=1, m=n=1 -> 0.5 * e^{k0}
    let b = smallness_transfer(&p("y - 1"), &p("y + 1"), &theta, 1, 1, 0.5, 2.0).unwrap();
    assert!((b - 0.5 * 2f64.exp()).abs() < 1e-9);

    // val=e^-100, |theta|=2, P1deg=2, Q1deg=1, H=1 -> e^-100 * 4 * e^{2 k0}
    let theta2 = crate::algnum::Ball::from_f64(2.0, 128);
    let b = smallness_transfer(
        &p("y^2 - 1"),
        &p("y + 1"),
        &theta2,
        2,
        1,
        (-100.0f64).exp(),
        2.0,
    )
    .unwrap();
    let expect = (-100.0f64).exp() * 4.0 * (2.0 * 2.0f64).exp();
    assert!((b - expect).abs() < 1e-9 * expect.max(1.0));

    // val=0.99, rest trivial -> 0.99 e^{k0}
    let b = smallness_transfer(&p("y - 1"), &p("y + 1"), &theta, 1, 1, 0.99, 2.0).unwrap();
    assert!((b - 0.99 * 2f64.exp()).abs() < 1e-9);

    assert!(matches!(
        smallness_transfer(&p("y - 1"), &p("y + 1"), &theta, 1, 1, 1.0, 2.0),
        Err(ElimError::HypothesisViolated(_))
    ));
}

#[test]
fn kronecker_examples() {
    assert_eq!(
        kronecker_factor(&p("y^2 - 1")).unwrap(),
        vec![(p("y - 1"), 1), (p("y + 1"), 1)]
    );
    assert_eq!(kronecker_factor(&p("y^2 - 2")).unwrap(), vec![(p("y^2 - 2"), 1)]);
    assert_eq!(
        kronecker_factor(&p("2*y^3 + 2*y^2")).unwrap(),
        vec![(p("2"), 1), (p("y"), 2), (p("y + 1"), 1)]
    );
    assert!(matches!(
        kronecker_factor(&p("y^11 + 1")),
        Err(ElimError::FactorCapExceeded(11))
    ));
}

#[test]
fn kronecker_product_reconstructs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let deg = rng.gen_range(1..=5);
        let mut terms = vec![(vec![deg], BigInt::from(rng.gen_range(1..=4)))];
        for e in 0..deg {
            terms.push((vec![e], BigInt::from(rng.gen_range(-6i64..=6))));
        }
        let q = MultiPoly::from_terms(vec!["y".into()], terms).unwrap();
        if q.is_zero() || q.deg_var("y") == 0 {
            continue;
        }
        let factors = kronecker_factor(&q).unwrap();
        let mut prod = MultiPoly::one();
        for (f, m) in &factors {
            prod = prod.mul(&f.pow(*m));
        }
        assert_eq!(prod, q, "reconstruction failed for {q}");
    }
}

#[test]
fn kronecker_higher_degree() {
    // (y^2+y+1)(y^3-2) irreducible factors
    let q = p("y^2 + y + 1").mul(&p("y^3 - 2"));
    let f = kronecker_factor(&q).unwrap();
    assert_eq!(f, vec![(p("y^2 + y + 1"), 1), (p("y^3 - 2"), 1)]);
    // quartic with quadratic split: (y^2-2)(y^2-3)
    let q = p("y^2 - 2").mul(&p("y^2 - 3"));
    let f = kronecker_factor(&q).unwrap();
    assert_eq!(f, vec![(p("y^2 - 2"), 1), (p("y^2 - 3"), 1)]);
}

#[test]
fn factor_small_at_point_examples() {
    // P = (y-1)^2 (y-5), w = 1 + 10^-50
    let poly = p("y - 1").pow(2).mul(&p("y - 5"));
    let w = {
        let eps = num_rational::BigRational::new(BigInt::from(1), BigInt::from(10).pow(50));
        let one = num_rational::BigRational::from(BigInt::from(1));
        crate::algnum::Ball::from_rationals(&(one + eps), &num_rational::BigRational::from(BigInt::from(0)), 512)
    };
    let budget = FactorBudget {
        lambda: 4.0,
        d: 3,
        h: 5f64.ln(),
    };
    let (u, v) = factor_small_at_point(&poly, &w, &budget).unwrap();
    assert_eq!(u, p("y - 1"));
    assert_eq!(v, 2);

    // already irreducible
    let (u, v) = factor_small_at_point(&p("y - 1"), &w, &FactorBudget { lambda: 4.0, d: 1, h: 0.0 }).unwrap();
    assert_eq!((u, v), (p("y - 1"), 1));

    // content discarded
    let (u, v) = factor_small_at_point(&p("2*y - 2"), &w, &FactorBudget { lambda: 4.0, d: 1, h: 2f64.ln() }).unwrap();
    assert_eq!((u, v), (p("y - 1"), 1));

    // precondition failure: w far from any root
    let far = crate::algnum::Ball::from_f64(10.0, 256);
    assert!(matches!(
        factor_small_at_point(&poly, &far, &budget),
        Err(ElimError::RefinePrecision(_))
    ));

    // invalid budgets
    assert!(matches!(
        factor_small_at_point(&poly, &w, &FactorBudget { lambda: 2.0, d: 3, h: 2.0 }),
        Err(ElimError::InvalidBudget(_))
    ));
    assert!(matches!(
        factor_small_at_point(&poly, &w, &FactorBudget { lambda: 4.0, d: 2, h: 2.0 }),
        Err(ElimError::InvalidBudget(_))
    ));
}

#[test]
fn factor_small_certifies_output_bound() {
    let poly = p("y - 1").pow(2).mul(&p("y - 5"));
    let w = {
        let eps = num_rational::BigRational::new(BigInt::from(1), BigInt::from(10).pow(50));
        let one = num_rational::BigRational::from(BigInt::from(1));
        crate::algnum::Ball::from_rationals(&(one + eps), &num_rational::BigRational::from(BigInt::from(0)), 512)
    };
    let budget = FactorBudget {
        lambda: 4.0,
        d: 3,
        h: 5f64.ln(),
    };
    let (u, v) = factor_small_at_point(&poly, &w, &budget).unwrap();
    let val = eval_univar_ball(&u, "y", &w).powi(v as u64);
    let target = -(budget.lambda - 1.0) * (budget.d as f64) * (budget.h + budget.d as f64);
    assert!(val.ln_abs_upper() < target);
    // violations_for reports the h shortfall on this input (e^h = 5 < H = 11)
    assert_eq!(budget.violations_for(&poly).len(), 1);
}

#[test]
fn eval_univar_ball_basics() {
    let q = p("y^2 - 2");
    let w = crate::algnum::Ball::from_f64(1.5, 128);
    let v = eval_univar_ball(&q, "y", &w);
    assert!((v.mid_re_f64() - 0.25).abs() < 1e-12);
    let exact = eval_univar_ball(&q, "y", &crate::algnum::Ball::from_i64(3, 128));
    assert_eq!(exact.mid_re_f64(), 7.0);
    assert!(exact.radius().cmp_mag(&Mag::ZERO) == std::cmp::Ordering::Equal);
}
