//! Resultants, semi-resultants and their degree/height/modulus certificates,
//! plus integer factorization and small-value factor extraction.
//!
//! The semi-resultant of P and Q with respect to a variable is
//! p0^n q0^m prod_{sigma != tau} (sigma - tau), the product running over root
//! pairs counted with multiplicity, skipping equal roots; it coincides with
//! the resultant when P and Q share no root. It is computed exactly through
//! square-free decomposition and gcd splitting: all building blocks are
//! resultants of integer polynomials, and the final division is exact.

mod factor;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use factor::kronecker_factor;

use crate::algnum::Ball;
use crate::exactpoly::gcd::{gcd, squarefree_in_var};
use crate::exactpoly::MultiPoly;

/// Degree cap for the exact Kronecker factorizer.
pub const FACTOR_DEGREE_CAP: u32 = 10;

/// Default for the absolute constant k0 in the smallness-transfer bound.
pub const DEFAULT_K0: f64 = 2.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ElimError {
    #[error("zero polynomial input")]
    ZeroInput,
    #[error("both inputs are constant in `{0}`")]
    BothConstantIn(String),
    #[error("input constant in `{0}`")]
    ConstantIn(String),
    #[error("factor cap exceeded: degree {0} > {FACTOR_DEGREE_CAP}")]
    FactorCapExceeded(u32),
    #[error("factor search budget exceeded")]
    FactorSearchBudget,
    #[error("refine precision: {0}")]
    RefinePrecision(String),
    #[error("lemma violation: no factor meets the bound (implementation bug)")]
    LemmaViolation,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
    #[error("internal: {0}")]
    Internal(String),
}

// ---------------------------------------------------------------------------
// Resultant (Sylvester determinant via fraction-free Bareiss elimination)
// ---------------------------------------------------------------------------

/// Determinant of a square polynomial matrix, fraction-free.
pub(crate) fn det_bareiss(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut sign = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return MultiPoly::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

fn sylvester(p: &MultiPoly, q: &MultiPoly, var: &str) -> Vec<Vec<MultiPoly>> {
    let pc: Vec<MultiPoly> = p.coeffs_in(var).into_iter().rev().collect(); // descending
    let qc: Vec<MultiPoly> = q.coeffs_in(var).into_iter().rev().collect();
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    let size = m + n;
    let mut mat = vec![vec![MultiPoly::zero(); size]; size];
    for r in 0..n {
        for (j, c) in pc.iter().enumerate() {
            mat[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in qc.iter().enumerate() {
            mat[n + r][r + j] = c.clone();
        }
    }
    mat
}

/// Internal resultant allowing constants: Res(const c, Q) = c^{deg Q}.
fn res_in_var(p: &MultiPoly, q: &MultiPoly, var: &str) -> MultiPoly {
    let dp = p.deg_var(var);
    let dq = q.deg_var(var);
    if dp == 0 && dq == 0 {
        return MultiPoly::one();
    }
    if dp == 0 {
        return p.pow(dq);
    }
    if dq == 0 {
        return q.pow(dp);
    }
    det_bareiss(sylvester(p, q, var))
}

/// Sylvester resultant with respect to `var` (P-rows first).
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly, ElimError> {
    if p.is_zero() || q.is_zero() {
        return Err(ElimError::ZeroInput);
    }
    if p.deg_var(var) == 0 && q.deg_var(var) == 0 {
        return Err(ElimError::BothConstantIn(var.to_string()));
    }
    Ok(res_in_var(p, q, var))
}

// ---------------------------------------------------------------------------
// Semi-resultant
// ---------------------------------------------------------------------------

/// Exact semi-resultant with respect to `var`. Both inputs must be
/// nonconstant in `var`.
pub fn semi_resultant(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly, ElimError> {
    if p.is_zero() || q.is_zero() {
        return Err(ElimError::ZeroInput);
    }
    let m = p.deg_var(var);
    let n = q.deg_var(var);
    if m == 0 || n == 0 {
        return Err(ElimError::ConstantIn(var.to_string()));
    }
    let p0 = p.leading_coeff_in(var);
    let q0 = q.leading_coeff_in(var);
    let (_, pparts) = squarefree_in_var(p, var);
    let (_, qparts) = squarefree_in_var(q, var);

    let mut num = p0.pow(n).mul(&q0.pow(m));
    let mut den = MultiPoly::one();
    for (a, k) in &pparts {
        for (b, l) in &qparts {
            let e = k * l;
            let g = gcd(a, b);
            let c = g.deg_var(var);
            let a_t = a.div_exact(&g).expect("gcd divides");
            let b_t = b.div_exact(&g).expect("gcd divides");
            let da = a.deg_var(var);
            let db = b.deg_var(var);
            let alpha_t = a_t.leading_coeff_in(var);
            let beta = b.leading_coeff_in(var);
            let beta_t = b_t.leading_coeff_in(var);
            let gamma = g.leading_coeff_in(var);

            // rho*(A,B) = Res(A~,B) Res(g,B~) Res(g,g')
            //           / (alpha~^db beta^(da-c) gamma^(db-c) beta~^c gamma^(2c-1))
            num = num.mul(&res_in_var(&a_t, b, var).pow(e));
            num = num.mul(&res_in_var(&g, &b_t, var).pow(e));
            den = den.mul(&alpha_t.pow(db * e));
            den = den.mul(&beta.pow((da - c) * e));
            den = den.mul(&gamma.pow((db - c) * e));
            den = den.mul(&beta_t.pow(c * e));
            if c >= 1 {
                let dg = g.derivative(var);
                num = num.mul(&res_in_var(&g, &dg, var).pow(e));
                den = den.mul(&gamma.pow((2 * c - 1) * e));
            }
        }
    }
    num.div_exact(&den)
        .ok_or_else(|| ElimError::Internal("semi-resultant division not exact".into()))
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegreeBound {
    pub var: String,
    pub claimed: u32,
    pub computed: u32,
}

/// Degree/height certificate for a semi-resultant computation:
/// per-coefficient-variable degree bounds n*deg_xi(P) + m*deg_xi(Q) and the
/// height bound 81^{mn} 2^{k(n deg_x P + m deg_x Q)} H(P)^n H(Q)^m.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SemiResCertificate {
    pub var: String,
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub degree_bounds: Vec<DegreeBound>,
    pub height_claimed: String,
    pub height_computed: String,
    pub ok: bool,
}

pub fn certify_semiresultant(
    p: &MultiPoly,
    q: &MultiPoly,
    var: &str,
) -> Result<SemiResCertificate, ElimError> {
    let r = semi_resultant(p, q, var)?;
    let m = p.deg_var(var);
    let n = q.deg_var(var);
    let mut coeff_vars: Vec<String> = Vec::new();
    for v in p.vars().iter().chain(q.vars().iter()) {
        if v != var && !coeff_vars.contains(v) {
            coeff_vars.push(v.clone());
        }
    }
    coeff_vars.sort();
    let k = coeff_vars.len() as u32;
    let mut degree_bounds = Vec::new();
    let mut ok = true;
    for v in &coeff_vars {
        let claimed = n * p.deg_var(v) + m * q.deg_var(v);
        let computed = r.deg_var(v);
        if computed > claimed {
            ok = false;
        }
        degree_bounds.push(DegreeBound {
            var: v.clone(),
            claimed,
            computed,
        });
    }
    // max per-variable coefficient degree
    let dx_p = coeff_vars.iter().map(|v| p.deg_var(v)).max().unwrap_or(0);
    let dx_q = coeff_vars.iter().map(|v| q.deg_var(v)).max().unwrap_or(0);
    let mn = m * n;
    let pow2_exp = (k as u64) * ((n as u64) * dx_p as u64 + (m as u64) * dx_q as u64);
    let mut claimed_h: BigUint = BigUint::from(81u32).pow(mn);
    claimed_h <<= pow2_exp;
    claimed_h *= p.height().pow(n);
    claimed_h *= q.height().pow(m);
    let computed_h = r.height().clone();
    if computed_h > claimed_h {
        ok = false;
    }
    Ok(SemiResCertificate {
        var: var.to_string(),
        m,
        n,
        k,
        degree_bounds,
        height_claimed: claimed_h.to_string(),
        height_computed: computed_h.to_string(),
        ok,
    })
}

// ---------------------------------------------------------------------------
// Smallness transfer (coprime divisor bound)
// ---------------------------------------------------------------------------

/// Transfers smallness of coprime monic divisors at a point theta into a
/// semi-resultant modulus bound:
/// val * max{1,|theta|}^(P1deg*Q1deg) * H(P)^n * H(Q)^m * e^(m n k0).
pub fn smallness_transfer(
    p: &MultiPoly,
    q: &MultiPoly,
    theta: &Ball,
    p1deg: u32,
    q1deg: u32,
    val: f64,
    k0: f64,
) -> Result<f64, ElimError> {
    if !(val < 1.0) {
        return Err(ElimError::HypothesisViolated(format!(
            "val = {val} must be < 1"
        )));
    }
    let var = p
        .vars()
        .first()
        .or_else(|| q.vars().first())
        .cloned()
        .unwrap_or_else(|| "y".to_string());
    let m = p.deg_var(&var) as f64;
    let n = q.deg_var(&var) as f64;
    let theta_term = theta.ln_abs_upper().max(0.0) * (p1deg as f64) * (q1deg as f64);
    let ln_bound = val.ln() + theta_term + n * p.ln_height() + m * q.ln_height() + m * n * k0;
    Ok(ln_bound.exp())
}

// ---------------------------------------------------------------------------
// Lemma-7-style small factor extraction
// ---------------------------------------------------------------------------

/// Budget for the irreducible-power extraction: lambda > 3, d >= deg P, and
/// h intended to satisfy e^h >= H(P) (validated separately; see
/// `FactorBudget::violations_for`).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct FactorBudget {
    pub lambda: f64,
    pub d: u32,
    pub h: f64,
}

impl FactorBudget {
    pub fn violations_for(&self, p: &MultiPoly) -> Vec<String> {
        let mut v = Vec::new();
        if !(self.lambda > 3.0) {
            v.push(format!("lambda = {} must exceed 3", self.lambda));
        }
        if self.d < p.total_degree() {
            v.push(format!("d = {} below deg P = {}", self.d, p.total_degree()));
        }
        if self.h < p.ln_height() {
            v.push(format!("e^h = e^{} below H(P) = {}", self.h, p.height()));
        }
        v
    }
}

/// Extracts an irreducible power u^v of P with certified
/// log|u(w)^v| < -(lambda-1) d (h+d), given that log|P(w)| < -lambda d (h+d).
pub fn factor_small_at_point(
    p: &MultiPoly,
    w: &Ball,
    budget: &FactorBudget,
) -> Result<(MultiPoly, u32), ElimError> {
    if p.is_zero() {
        return Err(ElimError::ZeroInput);
    }
    if !(budget.lambda > 3.0) {
        return Err(ElimError::InvalidBudget(format!(
            "lambda = {} must exceed 3",
            budget.lambda
        )));
    }
    if budget.d < p.total_degree() {
        return Err(ElimError::InvalidBudget(format!(
            "d = {} below deg P = {}",
            budget.d,
            p.total_degree()
        )));
    }
    let var = p
        .vars()
        .first()
        .cloned()
        .ok_or_else(|| ElimError::InvalidBudget("constant polynomial".into()))?;
    let d = budget.d as f64;
    let h = budget.h;
    let gate = -budget.lambda * d * (h + d);
    let pw = eval_univar_ball(p, &var, w);
    if !(pw.ln_abs_upper() < gate) {
        return Err(ElimError::RefinePrecision(format!(
            "log|P(w)| <= {:.3} not below the required {:.3}",
            pw.ln_abs_upper(),
            gate
        )));
    }
    let factors = kronecker_factor(p)?;
    let target = -(budget.lambda - 1.0) * d * (h + d);
    let mut best: Option<(MultiPoly, u32, f64)> = None;
    for (u, mult) in &factors {
        if u.is_constant() {
            continue; // content discarded
        }
        let uw = eval_univar_ball(u, &var, w);
        for v in 1..=*mult {
            let ln_up = uw.powi(v as u64).ln_abs_upper();
            match &best {
                Some((_, _, b)) if *b <= ln_up => {}
                _ => best = Some((u.clone(), v, ln_up)),
            }
        }
    }
    match best {
        Some((u, v, ln_up)) if ln_up < target => Ok((u, v)),
        _ => Err(ElimError::LemmaViolation),
    }
}

/// Ball evaluation of a univariate polynomial.
pub fn eval_univar_ball(p: &MultiPoly, var: &str, w: &Ball) -> Ball {
    let prec = w.precision();
    let mut acc = Ball::zero(prec);
    for c in p.coeffs_in(var).iter().rev() {
        let cb = Ball::from_bigint(&c.constant_value().expect("univariate"), prec);
        acc = acc.mul(w).add(&cb);
    }
    acc
}

#[cfg(test)]
mod tests;
