//! Algebraic numbers, quadratic-irrational reduction data, and certified
//! evaluation of the transcendental triple (log a2/log a1, a1^b, a2^b).
//!
//! An algebraic number is its primitive minimal polynomial plus an isolating
//! complex box with exact rational corners containing exactly one root.
//! Evaluation refines certified root enclosures until the requested radius is
//! reached. The principal branch of the logarithm (Im in (-pi, pi]) is used
//! everywhere a branch choice matters.

mod ball;
mod fb;
mod mag;
mod roots;

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use ball::{Ball, BallJson};
pub use mag::Mag;
pub use roots::{certified_roots, nearest_root};

use crate::exactpoly::{gcd as polygcd, MultiPoly};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgnumError {
    #[error("refine precision: {0}")]
    RefinePrecision(String),
    #[error("ball crosses the branch cut of the principal log")]
    BranchCut,
    #[error("polynomial has no roots")]
    NoRoots,
    #[error("not quadratic: degree {0}")]
    NotQuadratic(u32),
    #[error("log undefined/zero divisor: {0}")]
    LogUndefined(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid algebraic number: {0}")]
    Invalid(String),
}

/// Hard ceiling for internal precision-doubling loops (bits).
pub const PRECISION_CAP: u32 = 1 << 16;

// ---------------------------------------------------------------------------
// AlgebraicNumber
// ---------------------------------------------------------------------------

/// Exact rational rectangle in the complex plane.
#[derive(Debug, Clone, PartialEq)]
pub struct IsolatingBox {
    pub re_lo: BigRational,
    pub re_hi: BigRational,
    pub im_lo: BigRational,
    pub im_hi: BigRational,
}

impl IsolatingBox {
    pub fn real_segment(lo: i64, hi: i64) -> IsolatingBox {
        IsolatingBox {
            re_lo: BigRational::from(BigInt::from(lo)),
            re_hi: BigRational::from(BigInt::from(hi)),
            im_lo: BigRational::from(BigInt::from(-1)),
            im_hi: BigRational::from(BigInt::from(1)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraicNumber {
    minpoly: MultiPoly,
    var: String,
    box_: IsolatingBox,
    degree: u32,
}

enum BoxPosition {
    Inside,
    Outside,
    Ambiguous,
}

fn ball_vs_box(b: &Ball, bx: &IsolatingBox) -> BoxPosition {
    let r = ball_rad_rational(b);
    let cre = fb::fb_to_bigrational(b.mid_re());
    let cim = fb::fb_to_bigrational(b.mid_im());
    let re_lo = &cre - &r;
    let re_hi = &cre + &r;
    let im_lo = &cim - &r;
    let im_hi = &cim + &r;
    if re_lo >= bx.re_lo && re_hi <= bx.re_hi && im_lo >= bx.im_lo && im_hi <= bx.im_hi {
        return BoxPosition::Inside;
    }
    if re_hi < bx.re_lo || re_lo > bx.re_hi || im_hi < bx.im_lo || im_lo > bx.im_hi {
        return BoxPosition::Outside;
    }
    BoxPosition::Ambiguous
}

fn ball_rad_rational(b: &Ball) -> BigRational {
    let l2 = b.radius().log2_upper();
    if l2 == f64::NEG_INFINITY {
        return BigRational::zero();
    }
    let e = l2.ceil() as i64;
    if e >= 0 {
        BigRational::from(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

impl AlgebraicNumber {
    /// Validates the minimal polynomial (nonzero, univariate, primitive with
    /// positive leading coefficient after normalization, irreducible for
    /// degrees up to the factor cap) and certifies that the box isolates
    /// exactly one root.
    pub fn new(minpoly: MultiPoly, box_: IsolatingBox) -> Result<AlgebraicNumber, AlgnumError> {
        if minpoly.is_zero() || minpoly.is_constant() {
            return Err(AlgnumError::Invalid("minpoly must be nonconstant".into()));
        }
        if minpoly.vars().len() != 1 {
            return Err(AlgnumError::Invalid("minpoly must be univariate".into()));
        }
        let var = minpoly.vars()[0].clone();
        let mp = {
            let prim = minpoly.primitive_part();
            if prim
                .leading_coeff_in(&var)
                .constant_value()
                .map(|c| c.is_negative())
                .unwrap_or(false)
            {
                prim.neg()
            } else {
                prim
            }
        };
        let degree = mp.deg_var(&var);
        if degree <= 10 {
            let factors = crate::elimination::kronecker_factor(&mp)
                .map_err(|e| AlgnumError::Invalid(format!("factorization failed: {e}")))?;
            let nontrivial: Vec<_> = factors.iter().filter(|(f, _)| !f.is_constant()).collect();
            if nontrivial.len() != 1 || nontrivial[0].1 != 1 {
                return Err(AlgnumError::Invalid("minpoly is not irreducible".into()));
            }
        }
        if box_.re_lo > box_.re_hi || box_.im_lo > box_.im_hi {
            return Err(AlgnumError::Invalid("empty box".into()));
        }
        let a = AlgebraicNumber {
            minpoly: mp,
            var,
            box_,
            degree,
        };
        // certify the box isolates exactly one root
        let mut prec = 128u32;
        loop {
            match a.try_count_roots_in_box(prec) {
                Ok(1) => return Ok(a),
                Ok(k) => {
                    return Err(AlgnumError::Invalid(format!(
                        "box contains {k} roots, expected exactly 1"
                    )))
                }
                Err(AlgnumError::RefinePrecision(_)) if prec < PRECISION_CAP => prec *= 2,
                Err(e) => return Err(e),
            }
        }
    }

    fn try_count_roots_in_box(&self, prec: u32) -> Result<usize, AlgnumError> {
        let coeffs = self.coeff_balls(prec);
        let discs = roots::certified_roots(&coeffs, prec)?;
        let mut inside = 0usize;
        for d in &discs {
            match ball_vs_box(d, &self.box_) {
                BoxPosition::Inside => inside += 1,
                BoxPosition::Outside => {}
                BoxPosition::Ambiguous => {
                    return Err(AlgnumError::RefinePrecision(
                        "root disc straddles the box boundary".into(),
                    ))
                }
            }
        }
        Ok(inside)
    }

    fn coeff_balls(&self, prec: u32) -> Vec<Ball> {
        self.minpoly
            .coeffs_in(&self.var)
            .iter()
            .map(|c| Ball::from_bigint(&c.constant_value().unwrap(), prec))
            .collect()
    }

    pub fn minpoly(&self) -> &MultiPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn isolating_box(&self) -> &IsolatingBox {
        &self.box_
    }

    /// Exact rational value for degree-1 numbers.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.degree != 1 {
            return None;
        }
        let cs = self.minpoly.coeffs_in(&self.var);
        let c0 = cs[0].constant_value().unwrap();
        let c1 = cs[1].constant_value().unwrap();
        Some(BigRational::new(-c0, c1))
    }

    pub fn from_rational(q: &BigRational) -> AlgebraicNumber {
        // minpoly: den*y - num
        let minpoly = MultiPoly::var("y")
            .scale(q.denom())
            .sub(&MultiPoly::constant(q.numer().clone()));
        let flo = q.floor().numer().clone();
        let box_ = IsolatingBox {
            re_lo: BigRational::from(flo.clone() - 1),
            re_hi: BigRational::from(flo + 2),
            im_lo: BigRational::from(BigInt::from(-1)),
            im_hi: BigRational::from(BigInt::one()),
        };
        AlgebraicNumber::new(minpoly, box_).expect("rational is always valid")
    }

    pub fn from_integer(n: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(&BigRational::from(BigInt::from(n)))
    }

    /// Certified enclosure with radius at most 2^-(prec+8).
    pub fn approximate(&self, prec: u32) -> Result<Ball, AlgnumError> {
        let target = -(prec as i64 + 8);
        let mut work = prec + 64;
        loop {
            if let Ok(discs) = roots::certified_roots(&self.coeff_balls(work), work) {
                for d in &discs {
                    if let BoxPosition::Inside = ball_vs_box(d, &self.box_) {
                        if d.radius().log2_upper() <= target as f64 {
                            return Ok(d.with_precision(prec));
                        }
                    }
                }
            }
            if work >= PRECISION_CAP {
                return Err(AlgnumError::RefinePrecision(format!(
                    "root refinement stalled at {work} bits"
                )));
            }
            work *= 2;
        }
    }

    fn is_value(&self, v: i64) -> bool {
        self.as_rational()
            .map(|q| q == BigRational::from(BigInt::from(v)))
            .unwrap_or(false)
    }
}

// JSON input: {"minpoly":[c0,...,cn], "box":{"re":[lo,hi],"im":[lo,hi]}}
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Int(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct BoxRepr {
    re: [String; 2],
    im: [String; 2],
}

#[derive(Serialize, Deserialize)]
struct AlgNumRepr {
    minpoly: Vec<CoeffRepr>,
    #[serde(rename = "box")]
    box_: BoxRepr,
}

/// Parses exact decimal rationals: "-1.25", "3", or "3/4".
pub fn parse_rational(s: &str) -> Result<BigRational, AlgnumError> {
    let s = s.trim();
    let bad = |m: &str| AlgnumError::Invalid(format!("bad rational `{s}`: {m}"));
    if let Some((n, d)) = s.split_once('/') {
        let num = BigInt::from_str(n.trim()).map_err(|_| bad("numerator"))?;
        let den = BigInt::from_str(d.trim()).map_err(|_| bad("denominator"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("fraction digits"));
        }
        if frac.len() > 10_000 {
            return Err(bad("too many digits"));
        }
        let neg = int.trim_start().starts_with('-');
        let int_part = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(int).map_err(|_| bad("integer part"))?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = BigInt::from_str(frac).map_err(|_| bad("fraction part"))?;
        let mag = int_part.magnitude() * scale.magnitude() + frac_part.magnitude();
        let signed = if neg {
            -BigInt::from(mag)
        } else {
            BigInt::from(mag)
        };
        return Ok(BigRational::new(signed, scale));
    }
    let n = BigInt::from_str(s).map_err(|_| bad("integer"))?;
    Ok(BigRational::from(n))
}

impl AlgebraicNumber {
    pub fn from_json(j: &str) -> Result<AlgebraicNumber, AlgnumError> {
        let repr: AlgNumRepr =
            serde_json::from_str(j).map_err(|e| AlgnumError::Invalid(format!("json: {e}")))?;
        let mut terms = Vec::new();
        for (i, c) in repr.minpoly.iter().enumerate() {
            let v = match c {
                CoeffRepr::Int(n) => BigInt::from(*n),
                CoeffRepr::Big(s) => BigInt::from_str(s)
                    .map_err(|_| AlgnumError::Invalid(format!("bad coefficient `{s}`")))?,
            };
            terms.push((vec![i as u32], v));
        }
        let minpoly = MultiPoly::from_terms(vec!["y".into()], terms)
            .map_err(|e| AlgnumError::Invalid(e.to_string()))?;
        let box_ = IsolatingBox {
            re_lo: parse_rational(&repr.box_.re[0])?,
            re_hi: parse_rational(&repr.box_.re[1])?,
            im_lo: parse_rational(&repr.box_.im[0])?,
            im_hi: parse_rational(&repr.box_.im[1])?,
        };
        AlgebraicNumber::new(minpoly, box_)
    }
}

// ---------------------------------------------------------------------------
// QuadraticData
// ---------------------------------------------------------------------------

/// Integer data (d, b0, b1) with (d*beta)^2 = b0 + b1*(d*beta) for a
/// quadratic irrational beta; d is the least positive integer making d*beta
/// an algebraic integer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadraticData {
    pub d: BigInt,
    pub b0: BigInt,
    pub b1: BigInt,
}

impl QuadraticData {
    pub fn d_i64(&self) -> i64 {
        i64::try_from(&self.d).expect("desk-scale d")
    }
    pub fn b0_i64(&self) -> i64 {
        i64::try_from(&self.b0).expect("desk-scale b0")
    }
    pub fn b1_i64(&self) -> i64 {
        i64::try_from(&self.b1).expect("desk-scale b1")
    }
}

/// Computes (d, b0, b1) for a quadratic irrational.
pub fn quadratic_data(beta: &AlgebraicNumber) -> Result<QuadraticData, AlgnumError> {
    if beta.degree() != 2 {
        return Err(AlgnumError::NotQuadratic(beta.degree()));
    }
    let cs = beta.minpoly.coeffs_in(&beta.var);
    let c = cs[0].constant_value().unwrap();
    let b = cs[1].constant_value().unwrap();
    let a = cs[2].constant_value().unwrap();
    debug_assert!(a.is_positive());
    let mut d = BigInt::one();
    loop {
        if ((&b * &d) % &a).is_zero() && ((&c * &d * &d) % &a).is_zero() {
            break;
        }
        d += 1;
        debug_assert!(d <= a, "d = a always satisfies the divisibility");
    }
    let b1 = -(&b * &d) / &a;
    let b0 = -(&c * &d * &d) / &a;
    Ok(QuadraticData { d, b0, b1 })
}

// ---------------------------------------------------------------------------
// TranscendentalTriple
// ---------------------------------------------------------------------------

/// Certified balls for L = log a2 / log a1, tau1 = a1^b, tau2 = a2^b.
#[derive(Debug, Clone)]
pub struct TranscendentalTriple {
    pub l: Ball,
    pub tau1: Ball,
    pub tau2: Ball,
    pub log_a1: Ball,
    pub log_a2: Ball,
    pub beta: Ball,
    pub precision_bits: u32,
}

/// Evaluates the triple at the requested precision; the radii come out below
/// 2^-(precision_bits + 4). Principal branch of log.
pub fn eval_triple(
    a1: &AlgebraicNumber,
    a2: &AlgebraicNumber,
    beta: &AlgebraicNumber,
    precision_bits: u32,
) -> Result<TranscendentalTriple, AlgnumError> {
    if a1.is_value(0) || a1.is_value(1) {
        return Err(AlgnumError::LogUndefined("alpha1 must avoid {0, 1}".into()));
    }
    if a2.is_value(0) {
        return Err(AlgnumError::LogUndefined("alpha2 must be nonzero".into()));
    }
    let target = -((precision_bits + 4) as f64);
    let mut work = precision_bits + 64;
    loop {
        let attempt = (|| -> Result<TranscendentalTriple, AlgnumError> {
            let va1 = a1.approximate(work)?;
            let va2 = a2.approximate(work)?;
            let vb = beta.approximate(work)?;
            let log_a1 = va1.ln()?;
            let log_a2 = va2.ln()?;
            if log_a1.contains_zero() {
                return Err(AlgnumError::LogUndefined("log alpha1 is zero".into()));
            }
            let l = log_a2.div(&log_a1)?;
            let tau1 = vb.mul(&log_a1).exp();
            let tau2 = vb.mul(&log_a2).exp();
            for b in [&l, &tau1, &tau2] {
                if b.radius().log2_upper() > target {
                    return Err(AlgnumError::RefinePrecision("triple radii too wide".into()));
                }
            }
            Ok(TranscendentalTriple {
                l: l.with_precision(precision_bits),
                tau1: tau1.with_precision(precision_bits),
                tau2: tau2.with_precision(precision_bits),
                log_a1: log_a1.with_precision(precision_bits),
                log_a2: log_a2.with_precision(precision_bits),
                beta: vb.with_precision(precision_bits),
                precision_bits,
            })
        })();
        match attempt {
            Ok(t) => return Ok(t),
            Err(AlgnumError::RefinePrecision(_)) if work < PRECISION_CAP => work *= 2,
            Err(e) => return Err(e),
        }
    }
}

/// Evaluates a polynomial in x, y, z at (L, tau1, tau2).
pub fn eval_poly_at_triple(p: &MultiPoly, t: &TranscendentalTriple) -> Result<Ball, AlgnumError> {
    let prec = t.precision_bits;
    for v in p.vars() {
        if v != "x" && v != "y" && v != "z" {
            return Err(AlgnumError::UnknownVariable(v.clone()));
        }
    }
    let mut acc = Ball::zero(prec);
    for (exps, c) in p.terms() {
        let mut term = Ball::from_bigint(c, prec);
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let base = match p.vars()[i].as_str() {
                "x" => &t.l,
                "y" => &t.tau1,
                "z" => &t.tau2,
                _ => unreachable!(),
            };
            term = term.mul(&base.powi(e as u64));
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Nearest root of an exact univariate polynomial (multiple roots are
/// reduced away first).
pub fn nearest_root_of_poly(
    p: &MultiPoly,
    var: &str,
    target: &Ball,
    prec: u32,
) -> Result<(Ball, Mag), AlgnumError> {
    if p.is_zero() || p.deg_var(var) == 0 {
        return Err(AlgnumError::NoRoots);
    }
    let rad = polygcd::radical_in_var(p, var);
    let coeffs: Vec<Ball> = rad
        .coeffs_in(var)
        .iter()
        .map(|c| Ball::from_bigint(&c.constant_value().expect("univariate polynomial"), prec))
        .collect();
    roots::nearest_root(&coeffs, target, prec)
}

// ---------------------------------------------------------------------------
// Multiplicative independence
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum IndependenceVerdict {
    IndependentUpToBound,
    Dependent { m: i64, n: i64 },
}

/// Exhaustively tests a1^m a2^n = 1 for 0 < max(|m|,|n|) <= bound. Rational
/// inputs are decided exactly; algebraic inputs are screened with balls and
/// confirmed exactly through resultant minimal polynomials plus a Mahler
/// root-separation bound.
pub fn mult_independence_check(
    a1: &AlgebraicNumber,
    a2: &AlgebraicNumber,
    exponent_bound: u32,
) -> Result<IndependenceVerdict, AlgnumError> {
    if a1.is_value(0) || a2.is_value(0) {
        return Err(AlgnumError::Invalid("inputs must be nonzero".into()));
    }
    let r1 = a1.as_rational();
    let r2 = a2.as_rational();
    let k_max = exponent_bound as i64;
    for k in 1..=k_max {
        for m in 0..=k {
            for n in -k..=k {
                if m.max(n.abs()) != k || (m == 0 && n <= 0) {
                    continue;
                }
                let dependent = match (&r1, &r2) {
                    (Some(q1), Some(q2)) => rational_relation(q1, q2, m, n),
                    _ => algebraic_relation(a1, a2, m, n)?,
                };
                if dependent {
                    return Ok(IndependenceVerdict::Dependent { m, n });
                }
            }
        }
    }
    Ok(IndependenceVerdict::IndependentUpToBound)
}

fn rational_relation(q1: &BigRational, q2: &BigRational, m: i64, n: i64) -> bool {
    fn powq(q: &BigRational, e: i64) -> BigRational {
        let p = q.pow(e.unsigned_abs().min(i32::MAX as u64) as i32);
        if e < 0 {
            p.recip()
        } else {
            p
        }
    }
    powq(q1, m) * powq(q2, n) == BigRational::one()
}

fn algebraic_relation(
    a1: &AlgebraicNumber,
    a2: &AlgebraicNumber,
    m: i64,
    n: i64,
) -> Result<bool, AlgnumError> {
    // fast screen: |a1^m a2^n - 1| excludes 0 at moderate precision
    let mut prec = 192u32;
    let value = |prec: u32| -> Result<Ball, AlgnumError> {
        let v1 = a1.approximate(prec)?;
        let v2 = a2.approximate(prec)?;
        let p1 = if m >= 0 {
            v1.powi(m as u64)
        } else {
            v1.powi((-m) as u64).recip()?
        };
        let p2 = if n >= 0 {
            v2.powi(n as u64)
        } else {
            v2.powi((-n) as u64).recip()?
        };
        Ok(p1.mul(&p2))
    };
    {
        let v = value(prec)?;
        let diff = v.sub(&Ball::one(prec));
        if !diff.contains_zero() {
            return Ok(false);
        }
    }
    // exact confirmation: the value is a root of an explicit integer
    // polynomial; compare against the root 1 via a separation bound.
    let p1 = power_minpoly_multiple(a1, m);
    let p2 = power_minpoly_multiple(a2, n);
    let r = product_vanishing_poly(&p1, &p2);
    let rsf = {
        let dr = r.derivative("t");
        let g = polygcd::gcd(&r, &dr);
        r.div_exact(&g).expect("radical division").primitive_part()
    };
    let at_one = rsf.eval_rational_univar(&BigRational::one());
    if !at_one.is_zero() {
        return Ok(false);
    }
    // Mahler separation: sep >= sqrt(3) d^-((d+2)/2) ||P||_2^-(d-1)
    let deg = rsf.deg_var("t") as f64;
    let mut norm2_sq: f64 = 0.0;
    for (_, c) in rsf.terms() {
        let l = crate::exactpoly::ln_biguint(c.magnitude());
        norm2_sq += (2.0 * l).exp().min(f64::MAX / 1e6);
    }
    let ln_norm2 = 0.5 * norm2_sq.ln();
    let ln_sep = 0.5 * 3f64.ln() - (deg + 2.0) / 2.0 * deg.ln() - (deg - 1.0) * ln_norm2 - 1.0;
    loop {
        let v = value(prec)?;
        let diff = v.sub(&Ball::one(prec));
        let hi = diff.ln_abs_upper();
        if hi < ln_sep - std::f64::consts::LN_2 {
            return Ok(true); // within sep/2 of the root 1, so it is the root 1
        }
        if !diff.contains_zero() {
            return Ok(false);
        }
        if prec >= PRECISION_CAP {
            return Err(AlgnumError::RefinePrecision(
                "independence check stalled".into(),
            ));
        }
        prec *= 2;
    }
}

/// Integer polynomial in `t` vanishing at a^|e| (e >= 0) or a^-|e| (e < 0).
fn power_minpoly_multiple(a: &AlgebraicNumber, e: i64) -> MultiPoly {
    let var = &a.var;
    if e == 0 {
        return MultiPoly::var("t").sub(&MultiPoly::one());
    }
    let k = e.unsigned_abs() as u32;
    let base = if k == 1 && var != "t" {
        rename_var(&a.minpoly, var, "t")
    } else if k == 1 {
        a.minpoly.clone()
    } else {
        // Res_y(minpoly(y), t - y^k)
        let y = MultiPoly::var(var);
        let t = MultiPoly::var("t");
        let q = t.sub(&y.pow(k));
        crate::elimination::resultant(&a.minpoly, &q, var).expect("power resultant")
    };
    let base = base.primitive_part();
    if e < 0 {
        reverse_coeffs(&base, "t")
    } else {
        base
    }
}

fn rename_var(p: &MultiPoly, from: &str, to: &str) -> MultiPoly {
    let vars: Vec<String> = p
        .vars()
        .iter()
        .map(|v| if v == from { to.to_string() } else { v.clone() })
        .collect();
    MultiPoly::from_terms(vars, p.terms().map(|(e, c)| (e.clone(), c.clone()))).expect("rename")
}

fn reverse_coeffs(p: &MultiPoly, var: &str) -> MultiPoly {
    let mut cs = p.coeffs_in(var);
    cs.reverse();
    MultiPoly::from_coeffs_in(var, &cs).primitive_part()
}

/// Integer polynomial vanishing at every product (root of pa)*(root of pb);
/// inputs are univariate in "t".
fn product_vanishing_poly(pa: &MultiPoly, pb: &MultiPoly) -> MultiPoly {
    // Res_u( pa(u), u^deg(pb) * pb(t/u) )
    let pa_u = rename_var(pa, "t", "u");
    let degb = pb.deg_var("t");
    let cs = pb.coeffs_in("t");
    let u = MultiPoly::var("u");
    let t = MultiPoly::var("t");
    let mut hom = MultiPoly::zero();
    for (j, c) in cs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        hom = hom.add(&c.mul(&t.pow(j as u32)).mul(&u.pow(degb - j as u32)));
    }
    crate::elimination::resultant(&pa_u, &hom, "u")
        .expect("product resultant")
        .primitive_part()
}
