//! Multivariate gcd over Z via the primitive PRS, plus square-free
//! decomposition with respect to one variable (Musser's algorithm).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::MultiPoly;

/// Pseudo-remainder of `u` by `w` with respect to `var` (deg_var w >= 1).
pub fn pseudo_rem(u: &MultiPoly, w: &MultiPoly, var: &str) -> MultiPoly {
    let dw = w.deg_var(var);
    assert!(dw >= 1, "pseudo_rem needs deg_var(w) >= 1");
    let lw = w.leading_coeff_in(var);
    let mut r = u.clone();
    let du = r.deg_var(var);
    if du < dw {
        return r;
    }
    let mut e = du - dw + 1;
    let v = MultiPoly::var(var);
    while !r.is_zero() && r.deg_var(var) >= dw {
        let dr = r.deg_var(var);
        let lr = r.leading_coeff_in(var);
        let t = lr.mul(&v.pow(dr - dw));
        r = r.mul(&lw).sub(&w.mul(&t));
        e -= 1;
    }
    for _ in 0..e {
        r = r.mul(&lw);
    }
    r
}

/// Content of `p` with respect to `var`: gcd of its coefficient polynomials.
pub fn content_in_var(p: &MultiPoly, var: &str) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for c in p.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn normalize_sign(p: MultiPoly) -> MultiPoly {
    if p
        .leading_coeff_grlex()
        .map(|c| c.is_negative())
        .unwrap_or(false)
    {
        p.neg()
    } else {
        p
    }
}

/// GCD over Z[vars], normalized to a positive graded-lex leading coefficient.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let ca = a.content();
    let cb = b.content();
    let gi: BigInt = BigInt::from(ca.magnitude().gcd(cb.magnitude()));
    let pa = a.div_exact(&MultiPoly::constant(ca)).unwrap();
    let pb = b.div_exact(&MultiPoly::constant(cb)).unwrap();
    let gp = gcd_primitive(&pa, &pb);
    normalize_sign(gp.scale(&gi))
}

fn gcd_primitive(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    // main variable: lexicographically last occurring in either
    let var = a
        .vars()
        .iter()
        .chain(b.vars().iter())
        .max()
        .unwrap()
        .clone();
    let da = a.deg_var(&var);
    let db = b.deg_var(&var);
    if da == 0 || db == 0 {
        // the main variable occurs in only one: gcd divides the other's content
        let (with, without) = if da == 0 { (b, a) } else { (a, b) };
        let c = content_in_var(with, &var);
        return gcd_primitive(&c, without);
    }
    let ca = content_in_var(a, &var);
    let cb = content_in_var(b, &var);
    let gc = gcd(&ca, &cb);
    let mut u = a.div_exact(&ca).unwrap();
    let mut w = b.div_exact(&cb).unwrap();
    if u.deg_var(&var) < w.deg_var(&var) {
        std::mem::swap(&mut u, &mut w);
    }
    loop {
        let r = pseudo_rem(&u, &w, &var);
        if r.is_zero() {
            break;
        }
        if r.deg_var(&var) == 0 {
            w = MultiPoly::one();
            break;
        }
        let rc = content_in_var(&r, &var);
        let rp = r.div_exact(&rc).unwrap();
        u = w;
        w = rp;
    }
    let wpp = normalize_sign(
        w.div_exact(&content_in_var(&w, &var)).unwrap_or_else(|| w.clone()),
    );
    normalize_sign(gc.mul(&wpp))
}

/// True when gcd(a, b) is a (nonzero) constant.
pub fn coprime(a: &MultiPoly, b: &MultiPoly) -> bool {
    gcd(a, b).is_constant()
}

/// Square-free decomposition with respect to `var`:
/// p = content * prod parts[k]^k with the parts primitive, square-free in
/// `var`, pairwise coprime, positive leading sign. `content` collects the
/// integer content, the sign, and everything free of `var`.
pub fn squarefree_in_var(p: &MultiPoly, var: &str) -> (MultiPoly, Vec<(MultiPoly, u32)>) {
    assert!(!p.is_zero(), "square-free decomposition of zero");
    if p.deg_var(var) == 0 {
        return (p.clone(), Vec::new());
    }
    let cont = content_in_var(p, var);
    let mut a = p.div_exact(&cont).unwrap();
    let mut content = cont;
    if a.leading_coeff_in(var)
        .leading_coeff_grlex()
        .map(|c| c.is_negative())
        .unwrap_or(false)
    {
        a = a.neg();
        content = content.neg();
    }
    let da = a.derivative(var);
    let mut g = gcd(&a, &da);
    let mut c = a.div_exact(&g).unwrap(); // rad(a)
    let mut out = Vec::new();
    let mut k = 1u32;
    while c.deg_var(var) > 0 {
        let y = gcd(&c, &g);
        let part = normalize_sign(c.div_exact(&y).unwrap());
        if part.deg_var(var) > 0 {
            out.push((part, k));
        }
        g = g.div_exact(&y).unwrap();
        c = y;
        k += 1;
        assert!(k <= p.deg_var(var) + 1, "square-free loop bound");
    }
    // residual constants from sign/unit churn fold into the content
    let mut rebuilt = MultiPoly::one();
    for (q, m) in &out {
        rebuilt = rebuilt.mul(&q.pow(*m));
    }
    let resid = p
        .div_exact(&rebuilt)
        .expect("square-free parts divide the input");
    (resid, out)
}

/// rad(p) in `var`: the product of the distinct irreducible factors involving
/// `var` (primitive, square-free).
pub fn radical_in_var(p: &MultiPoly, var: &str) -> MultiPoly {
    let (_, parts) = squarefree_in_var(p, var);
    let mut r = MultiPoly::one();
    for (q, _) in parts {
        r = r.mul(&q);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::super::tests::p;
    use super::*;

    #[test]
    fn gcd_univariate() {
        assert_eq!(gcd(&p("x^2 - 1"), &p("x - 1")), p("x - 1"));
        assert_eq!(gcd(&p("x^2 - 1"), &p("x + 2")), p("1"));
        assert_eq!(gcd(&p("6*x"), &p("4")), p("2"));
        assert_eq!(gcd(&p("0"), &p("-3*x")), p("3*x"));
        let a = p("x^2 + 2*x + 1").mul(&p("x - 5"));
        let b = p("x + 1").mul(&p("x + 7"));
        assert_eq!(gcd(&a, &b), p("x + 1"));
    }

    #[test]
    fn gcd_multivariate() {
        let a = p("x*y - y").mul(&p("x + z"));
        let b = p("x - 1").mul(&p("x*z + 1"));
        assert_eq!(gcd(&a, &b), p("x - 1"));
        assert!(coprime(&p("x + y"), &p("x - y")));
        assert!(!coprime(&p("x^2 - y^2"), &p("x + y")));
    }

    #[test]
    fn squarefree_examples() {
        // 2 y^3 + 2 y^2 = 2 * y^2 * (y + 1)
        let (c, parts) = squarefree_in_var(&p("2*y^3 + 2*y^2"), "y");
        assert_eq!(c, p("2"));
        assert_eq!(parts, vec![(p("y + 1"), 1), (p("y"), 2)]);

        let (c, parts) = squarefree_in_var(&p("y^2 - 1"), "y");
        assert_eq!(c, p("1"));
        assert_eq!(parts, vec![(p("y^2 - 1"), 1)]);

        // (y-1)^2 (y+3)^3, negative content
        let q = p("y - 1").pow(2).mul(&p("y + 3").pow(3)).scale(&(-2).into());
        let (c, parts) = squarefree_in_var(&q, "y");
        assert_eq!(c, p("-2"));
        assert_eq!(parts, vec![(p("y - 1"), 2), (p("y + 3"), 3)]);
    }

    #[test]
    fn squarefree_with_parameters() {
        // (x y + 1)^2 * (y - x) in y; parts are grlex-sign-normalized, so the
        // linear part prints as (x - y) with the sign in the content
        let q = p("x*y + 1").pow(2).mul(&p("y - x"));
        let (c, parts) = squarefree_in_var(&q, "y");
        assert_eq!(c, p("-1"));
        assert_eq!(parts, vec![(p("x - y"), 1), (p("x*y + 1"), 2)]);
        assert_eq!(
            radical_in_var(&q, "y"),
            p("x - y").mul(&p("x*y + 1"))
        );
        // the decomposition reconstructs the input exactly
        let mut rebuilt = c;
        for (part, mult) in &parts {
            rebuilt = rebuilt.mul(&part.pow(*mult));
        }
        assert_eq!(rebuilt, q);
    }
}
