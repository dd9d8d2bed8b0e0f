//! Small nontrivial solutions of homogeneous linear systems with integer
//! polynomial coefficients.
//!
//! Two routes back the existence guarantee at desk scale:
//!
//! * monomial expansion: unknown polynomials are expanded over monomials of
//!   growing degree, the resulting integer homogeneous system is solved by an
//!   exact kernel basis, and a short vector is picked after Hermite reduction
//!   and exact LLL — this hits the degree bound 3d and the height bound
//!   (1+d)^6 A N whenever the system obeys the N >= 16M regime;
//! * polynomial kernel: fraction-free elimination directly on the polynomial
//!   matrix with Cramer-style back substitution, used for wide systems whose
//!   expansion would be too large (the auxiliary-function construction).
//!   Bounds are then checked a posteriori and reported.

mod lattice;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::{gcd as polygcd, MultiPoly, PolyError};

pub use lattice::{hnf_reduce, kernel_basis, lll_reduce};

/// Maximum column count for the monomial-expansion route.
const EXPANSION_COLS_CAP: usize = 6_000;
/// Maximum kernel sub-basis fed to exact LLL.
const LLL_DIM_CAP: usize = 48;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SiegelError {
    #[error("system invariant violated: {0}")]
    Invariant(String),
    #[error("bound not met: best solution height exceeds (1+d)^6 A N")]
    BoundNotMet,
    #[error("no nontrivial solution found")]
    NoSolution,
    #[error("polynomial error: {0}")]
    Poly(#[from] PolyError),
    #[error("internal: {0}")]
    Internal(String),
}

/// Homogeneous system sum_j u_ij x_j = 0 with integer polynomial
/// coefficients in at most six variables.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyLinearSystem {
    pub m: usize,
    pub n: usize,
    pub d: u32,
    #[serde(with = "biguint_string")]
    pub a_bound: BigUint,
    pub coeffs: Vec<Vec<MultiPoly>>,
    /// Whether the N >= 16M hypothesis holds (recorded, not silently assumed).
    pub lemma_regime: bool,
}

mod biguint_string {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PolyLinearSystem {
    /// Validating constructor: enforces shape, arity, degree and height
    /// bounds, and the N >= 16M hypothesis.
    pub fn new(coeffs: Vec<Vec<MultiPoly>>, d: u32, a_bound: BigUint) -> Result<Self, SiegelError> {
        let sys = Self::new_relaxed(coeffs, d, a_bound)?;
        if !sys.lemma_regime {
            return Err(SiegelError::Invariant(format!(
                "N = {} < 16 M = {}",
                sys.n,
                16 * sys.m
            )));
        }
        Ok(sys)
    }

    /// Same checks except N >= 16M, which is recorded in `lemma_regime`.
    pub fn new_relaxed(
        coeffs: Vec<Vec<MultiPoly>>,
        d: u32,
        a_bound: BigUint,
    ) -> Result<Self, SiegelError> {
        let m = coeffs.len();
        if m == 0 {
            return Err(SiegelError::Invariant("no equations".into()));
        }
        let n = coeffs[0].len();
        if n == 0 || coeffs.iter().any(|r| r.len() != n) {
            return Err(SiegelError::Invariant("ragged coefficient matrix".into()));
        }
        if a_bound.is_zero() {
            return Err(SiegelError::Invariant("A must be >= 1".into()));
        }
        let vars = union_vars(coeffs.iter().flatten());
        if vars.len() > 6 {
            return Err(SiegelError::Invariant(format!(
                "arity {} exceeds 6",
                vars.len()
            )));
        }
        for row in &coeffs {
            for u in row {
                if u.total_degree() > d {
                    return Err(SiegelError::Invariant(format!(
                        "coefficient degree {} exceeds d = {}",
                        u.total_degree(),
                        d
                    )));
                }
                if u.height() > &a_bound {
                    return Err(SiegelError::Invariant(format!(
                        "coefficient height {} exceeds A = {}",
                        u.height(),
                        a_bound
                    )));
                }
            }
        }
        let lemma_regime = n >= 16 * m;
        Ok(PolyLinearSystem {
            m,
            n,
            d,
            a_bound,
            coeffs,
            lemma_regime,
        })
    }

    pub fn vars(&self) -> Vec<String> {
        union_vars(self.coeffs.iter().flatten())
    }

    /// Lemma height bound (1+d)^6 A N.
    pub fn height_bound(&self) -> BigUint {
        BigUint::from(1u32 + self.d).pow(6) * &self.a_bound * BigUint::from(self.n)
    }
}

fn union_vars<'a>(polys: impl Iterator<Item = &'a MultiPoly>) -> Vec<String> {
    let mut vars: Vec<String> = Vec::new();
    for p in polys {
        for v in p.vars() {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
    }
    vars.sort();
    vars
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveMethod {
    MonomialExpansion,
    PolynomialKernel,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SiegelSolution {
    pub xs: Vec<MultiPoly>,
    pub nonzero: bool,
    pub method: SolveMethod,
    pub max_degree: u32,
    pub max_height: String,
    pub degree_bound_met: bool,
    pub height_bound_met: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub residuals_zero: bool,
    pub deg_ok: bool,
    pub height_ok: bool,
}

impl VerifyReport {
    pub fn all(&self) -> bool {
        self.residuals_zero && self.deg_ok && self.height_ok
    }
}

/// Exact recomputation of the three solution guarantees.
pub fn verify_solution(sys: &PolyLinearSystem, sol: &SiegelSolution) -> VerifyReport {
    let mut residuals_zero = sol.xs.len() == sys.n && sol.xs.iter().any(|x| !x.is_zero());
    if residuals_zero {
        for row in &sys.coeffs {
            let mut acc = MultiPoly::zero();
            for (u, x) in row.iter().zip(&sol.xs) {
                acc = acc.add(&u.mul(x));
            }
            if !acc.is_zero() {
                residuals_zero = false;
                break;
            }
        }
    }
    let deg_ok = sol.xs.iter().all(|x| x.total_degree() <= 3 * sys.d);
    let bound = sys.height_bound();
    let height_ok = sol.xs.iter().all(|x| x.height() <= &bound);
    VerifyReport {
        residuals_zero,
        deg_ok,
        height_ok,
    }
}

/// Solves the system, preferring the monomial-expansion route with the
/// Lemma-grade bounds; falls back to the polynomial kernel for systems whose
/// expansion is too large.
pub fn siegel_solve(sys: &PolyLinearSystem) -> Result<SiegelSolution, SiegelError> {
    match solve_by_expansion(sys) {
        Ok(Some(sol)) => return Ok(sol),
        Ok(None) => {}
        Err(e @ SiegelError::BoundNotMet) => return Err(e),
        Err(_) => {}
    }
    solve_by_polynomial_kernel(sys)
}

// ---------------------------------------------------------------------------
// Route 1: monomial expansion + integer kernel + LLL
// ---------------------------------------------------------------------------

fn monomials_up_to(vars: usize, deg: u32) -> Vec<Vec<u32>> {
    fn rec(idx: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == cur.len() {
            cur[idx] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[idx] = e;
            rec(idx + 1, left - e, cur, out);
        }
        cur[idx] = 0;
    }
    let mut out = Vec::new();
    if vars == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur = vec![0u32; vars];
    for total in 0..=deg {
        rec(0, total, &mut cur, &mut out);
    }
    out
}

fn solve_by_expansion(sys: &PolyLinearSystem) -> Result<Option<SiegelSolution>, SiegelError> {
    let vars = sys.vars();
    let mut found_any = false;
    for cap in 0..=(3 * sys.d) {
        let monos = monomials_up_to(vars.len(), cap);
        let cols = sys.n * monos.len();
        if cols > EXPANSION_COLS_CAP {
            break;
        }
        // build integer rows: one per (equation, product monomial)
        let mut row_index: BTreeMap<(usize, Vec<u32>), usize> = BTreeMap::new();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (i, eq) in sys.coeffs.iter().enumerate() {
            for (j, u) in eq.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                let u_embedded = remap_to_vars(u, &vars);
                for (e, c) in u_embedded.terms() {
                    for (mi, mono) in monos.iter().enumerate() {
                        let prod: Vec<u32> = e.iter().zip(mono).map(|(a, b)| a + b).collect();
                        let ridx = *row_index.entry((i, prod)).or_insert_with(|| {
                            rows.push(vec![BigInt::zero(); cols]);
                            rows.len() - 1
                        });
                        let cidx = j * monos.len() + mi;
                        rows[ridx][cidx] += c;
                    }
                }
            }
        }
        if rows.len() > 4_000 {
            break;
        }
        let kernel = kernel_basis(&rows, cols);
        if kernel.is_empty() {
            continue;
        }
        let reduced = hnf_reduce(kernel);
        // LLL the smallest few basis vectors
        let mut pool = reduced;
        pool.sort_by_key(|v| v.iter().map(|x| x.magnitude().clone()).max().unwrap());
        pool.truncate(LLL_DIM_CAP);
        let pool = lll_reduce(pool);
        let shortest = pool
            .first()
            .ok_or_else(|| SiegelError::Internal("empty reduced kernel".into()))?;
        let xs = unexpand(shortest, sys.n, &monos, &vars)?;
        let h = xs.iter().map(|x| x.height().clone()).max().unwrap();
        found_any = true;
        if h <= sys.height_bound() {
            return Ok(Some(finish_solution(sys, xs, SolveMethod::MonomialExpansion)));
        }
    }
    if found_any {
        // solutions exist but the height bound was missed at every degree
        return Err(SiegelError::BoundNotMet);
    }
    Ok(None)
}

fn remap_to_vars(p: &MultiPoly, vars: &[String]) -> MultiPoly {
    MultiPoly::from_terms(
        vars.to_vec(),
        p.terms().map(|(e, c)| {
            let mut full = vec![0u32; vars.len()];
            for (i, v) in p.vars().iter().enumerate() {
                let k = vars.iter().position(|w| w == v).expect("var subset");
                full[k] = e[i];
            }
            (full, c.clone())
        }),
    )
    .expect("remap")
}

fn unexpand(
    vec: &[BigInt],
    n: usize,
    monos: &[Vec<u32>],
    vars: &[String],
) -> Result<Vec<MultiPoly>, SiegelError> {
    let mut xs = Vec::with_capacity(n);
    for j in 0..n {
        let mut terms = Vec::new();
        for (mi, mono) in monos.iter().enumerate() {
            let c = &vec[j * monos.len() + mi];
            if !c.is_zero() {
                terms.push((mono.clone(), c.clone()));
            }
        }
        xs.push(MultiPoly::from_terms(vars.to_vec(), terms)?.compress_vars());
    }
    Ok(xs)
}

fn finish_solution(
    sys: &PolyLinearSystem,
    xs: Vec<MultiPoly>,
    method: SolveMethod,
) -> SiegelSolution {
    let max_degree = xs.iter().map(|x| x.total_degree()).max().unwrap_or(0);
    let max_height = xs
        .iter()
        .map(|x| x.height().clone())
        .max()
        .unwrap_or_else(BigUint::zero);
    let nonzero = xs.iter().any(|x| !x.is_zero());
    SiegelSolution {
        nonzero,
        method,
        max_degree,
        degree_bound_met: max_degree <= 3 * sys.d,
        height_bound_met: max_height <= sys.height_bound(),
        max_height: max_height.to_string(),
        xs,
    }
}

// ---------------------------------------------------------------------------
// Route 2: fraction-free polynomial kernel
// ---------------------------------------------------------------------------

/// Forward fraction-free elimination on the submatrix spanned by `cols`,
/// returning (pivot rows, pivot columns local to `cols`).
fn rank_profile(coeffs: &[Vec<MultiPoly>], cols: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = coeffs.len();
    let mut work: Vec<Vec<MultiPoly>> = coeffs
        .iter()
        .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
        .collect();
    let mut prev = MultiPoly::one();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row_of: Vec<usize> = (0..m).collect();
    let mut r = 0usize;
    for ci in 0..cols.len() {
        // pivot: nonzero entry in column ci at row >= r with fewest terms
        let mut pick: Option<usize> = None;
        for i in r..m {
            if work[i][ci].is_zero() {
                continue;
            }
            match pick {
                None => pick = Some(i),
                Some(p) => {
                    if work[i][ci].num_terms() < work[p][ci].num_terms() {
                        pick = Some(i);
                    }
                }
            }
        }
        let Some(p) = pick else { continue };
        work.swap(r, p);
        row_of.swap(r, p);
        for i in r + 1..m {
            for j in ci + 1..cols.len() {
                let t = work[r][ci].mul(&work[i][j]).sub(&work[i][ci].mul(&work[r][j]));
                work[i][j] = t.div_exact(&prev).expect("Bareiss step");
            }
            work[i][ci] = MultiPoly::zero();
        }
        prev = work[r][ci].clone();
        pivot_rows.push(row_of[r]);
        pivot_cols.push(ci);
        r += 1;
        if r == m {
            break;
        }
    }
    (pivot_rows, pivot_cols)
}

fn solve_by_polynomial_kernel(sys: &PolyLinearSystem) -> Result<SiegelSolution, SiegelError> {
    // column order: simplest first (fewest terms, lowest degree)
    let mut order: Vec<usize> = (0..sys.n).collect();
    let weight = |c: usize| -> (u64, usize) {
        let mut w = 0u64;
        for row in &sys.coeffs {
            let p = &row[c];
            w += (p.num_terms() as u64) * (1 + p.total_degree() as u64);
        }
        (w, c)
    };
    order.sort_by_key(|&c| weight(c));

    let mut t = 4usize.min(sys.n);
    loop {
        let cols: Vec<usize> = order[..t].to_vec();
        let (pivot_rows, pivot_cols) = rank_profile(&sys.coeffs, &cols);
        let rank = pivot_cols.len();
        if rank < t {
            let free_local = (0..t)
                .find(|ci| !pivot_cols.contains(ci))
                .expect("rank < t implies a free column");
            let xs = cramer_kernel(sys, &cols, &pivot_rows, &pivot_cols, free_local)?;
            // exact residual check
            let mut ok = true;
            for row in &sys.coeffs {
                let mut acc = MultiPoly::zero();
                for (u, x) in row.iter().zip(&xs) {
                    acc = acc.add(&u.mul(x));
                }
                if !acc.is_zero() {
                    ok = false;
                    break;
                }
            }
            if ok && xs.iter().any(|x| !x.is_zero()) {
                return Ok(finish_solution(sys, xs, SolveMethod::PolynomialKernel));
            }
            return Err(SiegelError::Internal(
                "polynomial kernel residual nonzero".into(),
            ));
        }
        if t == sys.n {
            return Err(SiegelError::NoSolution);
        }
        let next = if rank == sys.m && sys.m + 1 > t {
            (sys.m + 1).min(sys.n)
        } else {
            (t * 2).min(sys.n)
        };
        t = next;
    }
}

/// Kernel vector of the full system supported on `cols`: Cramer's rule on the
/// pivot square plus the first free column.
fn cramer_kernel(
    sys: &PolyLinearSystem,
    cols: &[usize],
    pivot_rows: &[usize],
    pivot_cols_local: &[usize],
    free_local: usize,
) -> Result<Vec<MultiPoly>, SiegelError> {
    let r = pivot_rows.len();
    let sub = |rows: &[usize], cs: &[usize]| -> Vec<Vec<MultiPoly>> {
        rows.iter()
            .map(|&i| cs.iter().map(|&c| sys.coeffs[i][c].clone()).collect())
            .collect()
    };
    let pivot_global: Vec<usize> = pivot_cols_local.iter().map(|&c| cols[c]).collect();
    let free_global = cols[free_local];
    let det_main = crate::elimination::det_bareiss(sub(pivot_rows, &pivot_global));
    if det_main.is_zero() {
        return Err(SiegelError::Internal("pivot minor is singular".into()));
    }
    let mut xs = vec![MultiPoly::zero(); sys.n];
    xs[free_global] = det_main;
    for i in 0..r {
        // replace pivot column i by the free column; sign per Cramer
        let mut cs = pivot_global.clone();
        cs[i] = free_global;
        let det_i = crate::elimination::det_bareiss(sub(pivot_rows, &cs));
        xs[pivot_global[i]] = det_i.neg();
    }
    // strip common content and polynomial gcd across entries
    let mut g = MultiPoly::zero();
    for x in &xs {
        if !x.is_zero() {
            g = polygcd::gcd(&g, x);
        }
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in &mut xs {
            if !x.is_zero() {
                *x = x.div_exact(&g).expect("gcd divides");
            }
        }
    }
    Ok(xs)
}

#[cfg(test)]
mod tests;
