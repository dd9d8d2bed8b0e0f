use super::*;
use crate::exactpoly::parse_poly;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ones_system(m: usize, n: usize) -> PolyLinearSystem {
    let row: Vec<MultiPoly> = (0..n).map(|_| MultiPoly::one()).collect();
    PolyLinearSystem::new(vec![row; m], 0, BigUint::from(1u32)).unwrap()
}

#[test]
fn pigeonhole_pair() {
    let sys = ones_system(1, 16);
    let sol = siegel_solve(&sys).unwrap();
    let rep = verify_solution(&sys, &sol);
    assert!(rep.all(), "{rep:?}");
    // the shortest kernel vector of the all-ones row is a difference pair
    let h: BigUint = sol.xs.iter().map(|x| x.height().clone()).max().unwrap();
    assert!(h <= BigUint::from(1u32), "expected height-1 solution, got {h}");
    let nonzero = sol.xs.iter().filter(|x| !x.is_zero()).count();
    assert_eq!(nonzero, 2);
}

#[test]
fn weighted_constant_row() {
    // u = (1, 2, 1, ..., 1): exhaustive oracle over height-<=2 vectors shows
    // kernel vectors of height <= 2 exist, e.g. (2, -1, 0, ...) or (1, 0, -1, 0...).
    let mut row: Vec<MultiPoly> = (0..16).map(|_| MultiPoly::one()).collect();
    row[1] = MultiPoly::constant(2);
    let sys = PolyLinearSystem::new(vec![row], 0, BigUint::from(2u32)).unwrap();
    let sol = siegel_solve(&sys).unwrap();
    let rep = verify_solution(&sys, &sol);
    assert!(rep.all());
    let h: BigUint = sol.xs.iter().map(|x| x.height().clone()).max().unwrap();
    assert!(h <= BigUint::from(16u32), "H = {h} exceeds the example bound");
}

#[test]
fn polynomial_coefficients_system() {
    // M=2, N=32, coefficients drawn from {y1, y1+1, 1}, d=1, A=1
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let choices = [
        parse_poly("y1").unwrap(),
        parse_poly("y1 + 1").unwrap(),
        MultiPoly::one(),
    ];
    let coeffs: Vec<Vec<MultiPoly>> = (0..2)
        .map(|_| {
            (0..32)
                .map(|_| choices[rng.gen_range(0..3)].clone())
                .collect()
        })
        .collect();
    let sys = PolyLinearSystem::new(coeffs, 1, BigUint::from(1u32)).unwrap();
    let sol = siegel_solve(&sys).unwrap();
    let rep = verify_solution(&sys, &sol);
    assert!(rep.all(), "{rep:?}");
    assert!(sol.max_degree <= 3);
    let h: BigUint = sol.xs.iter().map(|x| x.height().clone()).max().unwrap();
    assert!(h <= BigUint::from(64u32 * 32u32));
}

#[test]
fn verify_detects_faults() {
    let sys = ones_system(1, 16);
    let mut sol = siegel_solve(&sys).unwrap();
    let good = verify_solution(&sys, &sol);
    assert!(good.all());

    // perturb one coefficient
    let mut bad = sol.clone();
    bad.xs[0] = bad.xs[0].add(&MultiPoly::one());
    let rep = verify_solution(&sys, &bad);
    assert!(!rep.residuals_zero);

    // scale far beyond the height bound
    let big = num_bigint::BigInt::from(10u64.pow(9));
    for x in &mut sol.xs {
        *x = x.scale(&big);
    }
    let rep = verify_solution(&sys, &sol);
    assert!(rep.residuals_zero);
    assert!(!rep.height_ok);
}

#[test]
fn determinism() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let coeffs: Vec<Vec<MultiPoly>> = (0..2)
        .map(|_| {
            (0..32)
                .map(|_| MultiPoly::constant(rng.gen_range(-3i64..=3)))
                .collect()
        })
        .collect();
    let sys = PolyLinearSystem::new_relaxed(coeffs, 0, BigUint::from(3u32)).unwrap();
    let a = siegel_solve(&sys).unwrap();
    let b = siegel_solve(&sys).unwrap();
    assert_eq!(a.xs, b.xs);
}

#[test]
fn invariant_validation() {
    let row: Vec<MultiPoly> = (0..8).map(|_| MultiPoly::one()).collect();
    assert!(matches!(
        PolyLinearSystem::new(vec![row.clone()], 0, BigUint::from(1u32)),
        Err(SiegelError::Invariant(_))
    ));
    let lax = PolyLinearSystem::new_relaxed(vec![row], 0, BigUint::from(1u32)).unwrap();
    assert!(!lax.lemma_regime);
    // degree violation
    let bad = vec![vec![parse_poly("y1^2").unwrap(); 16]];
    assert!(PolyLinearSystem::new(bad, 1, BigUint::from(1u32)).is_err());
    // height violation
    let bad = vec![vec![MultiPoly::constant(9); 16]];
    assert!(PolyLinearSystem::new(bad, 0, BigUint::from(3u32)).is_err());
}

#[test]
fn wide_polynomial_kernel_route() {
    // a wide system with structured monomial entries, below the 16M regime,
    // exercising the fraction-free route
    let y = parse_poly("y1").unwrap();
    let coeffs = vec![
        vec![
            MultiPoly::one(),
            y.clone(),
            y.pow(2),
            MultiPoly::constant(2),
            y.scale(&3.into()),
        ],
        vec![
            y.clone(),
            MultiPoly::one(),
            MultiPoly::zero(),
            y.pow(2),
            MultiPoly::constant(1),
        ],
    ];
    let sys = PolyLinearSystem::new_relaxed(coeffs, 2, BigUint::from(3u32)).unwrap();
    let sol = siegel_solve(&sys).unwrap();
    let rep = verify_solution(&sys, &sol);
    assert!(rep.residuals_zero);
    assert!(sol.nonzero);
}

#[test]
fn json_roundtrip() {
    let sys = ones_system(1, 16);
    let s = serde_json::to_string(&sys).unwrap();
    let back: PolyLinearSystem = serde_json::from_str(&s).unwrap();
    assert_eq!(back.m, 1);
    assert_eq!(back.n, 16);
    assert_eq!(back.a_bound, BigUint::from(1u32));
    let sol = siegel_solve(&sys).unwrap();
    let s = serde_json::to_string(&sol).unwrap();
    let back: SiegelSolution = serde_json::from_str(&s).unwrap();
    assert_eq!(back.xs, sol.xs);
}
