//! Complete factorization over Z for univariate polynomials of small degree:
//! content extraction, square-free decomposition, and Kronecker interpolation
//! for the irreducible splitting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{ElimError, FACTOR_DEGREE_CAP};
use crate::exactpoly::gcd::squarefree_in_var;
use crate::exactpoly::MultiPoly;

/// Hard cap on the divisor-combination search per candidate degree.
const COMBINATION_BUDGET: u64 = 2_000_000;

/// Complete factorization of a nonzero univariate integer polynomial into a
/// constant content (emitted when != 1) and irreducible primitive factors
/// with multiplicities, sorted deterministically.
pub fn kronecker_factor(p: &MultiPoly) -> Result<Vec<(MultiPoly, u32)>, ElimError> {
    if p.is_zero() {
        return Err(ElimError::ZeroInput);
    }
    let deg = p.total_degree();
    if deg > FACTOR_DEGREE_CAP {
        return Err(ElimError::FactorCapExceeded(deg));
    }
    if p.vars().len() > 1 {
        return Err(ElimError::Internal("factorization is univariate".into()));
    }
    let mut out: Vec<(MultiPoly, u32)> = Vec::new();
    if p.is_constant() {
        let c = p.constant_value().unwrap();
        if !c.is_one() {
            out.push((MultiPoly::constant(c), 1));
        }
        return Ok(out);
    }
    let var = p.vars()[0].clone();
    let (content, parts) = squarefree_in_var(p, &var);
    let cval = content
        .constant_value()
        .ok_or_else(|| ElimError::Internal("univariate content is constant".into()))?;
    if !cval.is_one() {
        out.push((MultiPoly::constant(cval), 1));
    }
    for (part, mult) in parts {
        let mut stack = vec![part];
        while let Some(a) = stack.pop() {
            if a.deg_var(&var) == 0 {
                debug_assert!(a.is_one());
                continue;
            }
            match find_factor(&a, &var)? {
                Some(f) => {
                    let q = a.div_exact(&f).expect("factor divides");
                    stack.push(f);
                    stack.push(q);
                }
                None => out.push((a, mult)),
            }
        }
    }
    let coeff_key = |q: &MultiPoly| -> Vec<BigInt> {
        if q.is_constant() {
            vec![q.constant_value().unwrap()]
        } else {
            let v = q.vars()[0].clone();
            q.coeffs_in(&v)
                .iter()
                .map(|c| c.constant_value().unwrap())
                .collect()
        }
    };
    out.sort_by(|(a, _), (b, _)| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| coeff_key(a).cmp(&coeff_key(b)))
    });
    Ok(out)
}

/// Finds a nontrivial factor of a primitive square-free polynomial, or None
/// when irreducible. Kronecker interpolation through divisor tuples.
fn find_factor(a: &MultiPoly, var: &str) -> Result<Option<MultiPoly>, ElimError> {
    let deg = a.deg_var(var);
    if deg <= 1 {
        return Ok(None);
    }
    for d in 1..=deg / 2 {
        // evaluation points 0, 1, -1, 2, -2, ... skipping roots (a root gives
        // an immediate linear factor)
        let mut points: Vec<BigInt> = Vec::new();
        let mut values: Vec<BigInt> = Vec::new();
        let mut next = 0i64;
        while points.len() < (d + 1) as usize {
            let x = BigInt::from(next);
            next = if next > 0 { -next } else { -next + 1 };
            let v = a.eval_rational_univar(&BigRational::from(x.clone()));
            debug_assert!(v.denom().is_one());
            let v = v.numer().clone();
            if v.is_zero() {
                // x is a rational integer root
                let lin = MultiPoly::var(var).sub(&MultiPoly::constant(x));
                return Ok(Some(lin));
            }
            points.push(x);
            values.push(v);
            if next.unsigned_abs() > 1_000 {
                return Err(ElimError::FactorSearchBudget);
            }
        }
        let divisor_sets: Vec<Vec<BigInt>> = values
            .iter()
            .map(|v| divisors_signed(v))
            .collect::<Result<_, _>>()?;
        let mut combos: u64 = 1;
        for (i, s) in divisor_sets.iter().enumerate() {
            let n = if i == 0 { s.len() as u64 / 2 } else { s.len() as u64 };
            combos = combos.saturating_mul(n.max(1));
            if combos > COMBINATION_BUDGET {
                return Err(ElimError::FactorSearchBudget);
            }
        }
        // odometer over divisor choices; first coordinate positive only
        // (factors come in +/- pairs and the sign is normalized anyway)
        let mut idx = vec![0usize; divisor_sets.len()];
        let limits: Vec<usize> = divisor_sets
            .iter()
            .enumerate()
            .map(|(i, s)| if i == 0 { s.len() / 2 } else { s.len() })
            .collect();
        loop {
            let choice: Vec<BigRational> = idx
                .iter()
                .enumerate()
                .map(|(i, &j)| BigRational::from(divisor_sets[i][j].clone()))
                .collect();
            if let Some(cand) = interpolate_integer(&points, &choice, var) {
                if cand.deg_var(var) == d && !cand.is_constant() {
                    let cand = cand.primitive_part();
                    if cand.deg_var(var) >= 1 {
                        if let Some(_q) = a.div_exact(&cand) {
                            return Ok(Some(cand));
                        }
                    }
                }
            }
            // advance odometer
            let mut k = 0usize;
            loop {
                idx[k] += 1;
                if idx[k] < limits[k] {
                    break;
                }
                idx[k] = 0;
                k += 1;
                if k == idx.len() {
                    break;
                }
            }
            if k == idx.len() {
                break;
            }
        }
    }
    Ok(None)
}

/// Lagrange interpolation; returns the polynomial when all coefficients are
/// integers.
fn interpolate_integer(xs: &[BigInt], ys: &[BigRational], var: &str) -> Option<MultiPoly> {
    let n = xs.len();
    // coefficients of the interpolating polynomial via Newton form
    let mut table: Vec<BigRational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let dx = BigRational::from(&xs[i] - &xs[i - j]);
            table[i] = (table[i].clone() - table[i - 1].clone()) / dx;
        }
    }
    // expand Newton form to monomial coefficients
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); n];
    let mut basis: Vec<BigRational> = vec![BigRational::one()];
    for (i, c) in table.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += c * b;
        }
        if i + 1 < n {
            // basis *= (x - xs[i])
            let mut nb = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                nb[k + 1] += b;
                nb[k] -= b * BigRational::from(xs[i].clone());
            }
            basis = nb;
        }
    }
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !c.denom().is_one() {
            return None;
        }
        terms.push((vec![k as u32], c.numer().clone()));
    }
    Some(MultiPoly::from_terms(vec![var.to_string()], terms).unwrap())
}

/// All divisors of |v| with both signs, sign-paired as [d, -d, ...], sorted by
/// magnitude.
fn divisors_signed(v: &BigInt) -> Result<Vec<BigInt>, ElimError> {
    let m = v.magnitude().clone();
    let m128 = m.to_u128().ok_or(ElimError::FactorSearchBudget)?;
    let primes = factorize_u128(m128);
    let mut divs: Vec<u128> = vec![1];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk: u128 = 1;
            for _ in 0..=e {
                next.push(d.saturating_mul(pk));
                pk = pk.saturating_mul(p);
            }
        }
        next.sort_unstable();
        next.dedup();
        divs = next;
        if divs.len() > 100_000 {
            return Err(ElimError::FactorSearchBudget);
        }
    }
    let mut out = Vec::with_capacity(divs.len() * 2);
    for d in divs {
        out.push(BigInt::from(d));
        out.push(-BigInt::from(d));
    }
    Ok(out)
}

fn factorize_u128(mut n: u128) -> Vec<(u128, u32)> {
    let mut out: Vec<(u128, u32)> = Vec::new();
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u128(m) {
            match out.iter_mut().find(|(p, _)| *p == m) {
                Some((_, e)) => *e += 1,
                None => out.push((m, 1)),
            }
            continue;
        }
        let f = pollard_rho(m);
        stack.push(f);
        stack.push(m / f);
    }
    out.sort_unstable();
    out
}

fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    // m < 2^126 in practice; use 128-bit splitting
    if let (Some(prod), true) = (a.checked_mul(b), m > 0) {
        return prod % m;
    }
    let mut result: u128 = 0;
    let mut a = a % m;
    let mut b = b;
    while b > 0 {
        if b & 1 == 1 {
            result = (result + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    result
}

fn powmod(mut a: u128, mut e: u128, m: u128) -> u128 {
    let mut r: u128 = 1;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c: u128 = 1;
    loop {
        let f = |x: u128| (mulmod(x, x, n) + c) % n;
        let mut x: u128 = 2;
        let mut y: u128 = 2;
        let mut d: u128 = 1;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            let diff = if x > y { x - y } else { y - x };
            d = gcd_u128(diff, n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

