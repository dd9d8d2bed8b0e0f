//! Exact sparse multivariate polynomials over the integers.
//!
//! The representation is a map from exponent vectors to nonzero `BigInt`
//! coefficients, together with an ordered duplicate-free variable list.
//! Per-variable degrees, the total degree and the height (max |coefficient|)
//! are cached at construction and kept consistent by every operation.
//!
//! Conventions: the zero polynomial has an empty term map, total degree 0 and
//! height 0; `deg` with no variable subscript means total degree; logarithms
//! of heights are natural logs throughout.

pub mod gcd;
mod text;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use text::parse_poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("undefined type: zero polynomial")]
    ZeroPolyType,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("exponent vector arity {got} does not match variable count {want}")]
    ArityMismatch { got: usize, want: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division is not exact")]
    InexactDivision,
}

/// Sparse multivariate polynomial over Z with cached degree/height data.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
    var_degs: Vec<u32>,
    total_deg: u32,
    height: BigUint,
}

impl MultiPoly {
    /// The zero polynomial with an empty variable list.
    pub fn zero() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
            var_degs: Vec::new(),
            total_deg: 0,
            height: BigUint::zero(),
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self::from_map(Vec::new(), terms)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The monomial `var`.
    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1u32], BigInt::one());
        Self::from_map(vec![name.to_string()], terms)
    }

    /// Builds a polynomial from raw terms; merges duplicates, drops zeros,
    /// sorts variables and validates arity.
    pub fn from_terms(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
    ) -> Result<Self, PolyError> {
        for i in 1..vars.len() {
            if vars[i..].contains(&vars[i - 1]) {
                return Err(PolyError::DuplicateVariable(vars[i - 1].clone()));
            }
        }
        // Sort variables, remapping exponents.
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&a, &b| vars[a].cmp(&vars[b]));
        let sorted_vars: Vec<String> = order.iter().map(|&i| vars[i].clone()).collect();
        let mut map: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(PolyError::ArityMismatch {
                    got: exps.len(),
                    want: vars.len(),
                });
            }
            let remapped: Vec<u32> = order.iter().map(|&i| exps[i]).collect();
            let entry = map.entry(remapped).or_insert_with(BigInt::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self::from_map(sorted_vars, map))
    }

    /// Internal constructor: `vars` sorted and duplicate-free, `terms` free of
    /// zero coefficients with matching arity. Computes the caches.
    fn from_map(vars: Vec<String>, terms: BTreeMap<Vec<u32>, BigInt>) -> Self {
        debug_assert!(vars.windows(2).all(|w| w[0] < w[1]));
        let mut var_degs = vec![0u32; vars.len()];
        let mut total_deg = 0u32;
        let mut height = BigUint::zero();
        for (exps, c) in &terms {
            debug_assert_eq!(exps.len(), vars.len());
            debug_assert!(!c.is_zero());
            let mut t = 0u32;
            for (i, &e) in exps.iter().enumerate() {
                var_degs[i] = var_degs[i].max(e);
                t += e;
            }
            total_deg = total_deg.max(t);
            let m = c.magnitude();
            if *m > height {
                height = m.clone();
            }
        }
        MultiPoly {
            vars,
            terms,
            var_degs,
            total_deg,
            height,
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Degree in one variable; 0 if the variable does not occur.
    pub fn deg_var(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.var_degs[i],
            None => 0,
        }
    }

    /// Total degree (0 for the zero polynomial by convention).
    pub fn total_degree(&self) -> u32 {
        self.total_deg
    }

    /// Height: maximum modulus of the coefficients.
    pub fn height(&self) -> &BigUint {
        &self.height
    }

    /// Natural log of the height, as f64 (handles heights beyond f64 range).
    pub fn ln_height(&self) -> f64 {
        ln_biguint(&self.height)
    }

    /// Type t(P) = total degree + ln height. Undefined for the zero polynomial.
    pub fn type_of(&self) -> Result<f64, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolyType);
        }
        Ok(self.total_deg as f64 + self.ln_height())
    }

    /// Recomputes all caches from the term map and checks they match.
    /// Used by tests; cheap enough to call in debug assertions.
    pub fn caches_consistent(&self) -> bool {
        let fresh = Self::from_map(self.vars.clone(), self.terms.clone());
        fresh.var_degs == self.var_degs
            && fresh.total_deg == self.total_deg
            && fresh.height == self.height
    }

    /// Extends both polynomials to the union variable list.
    fn unify(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut vars: Vec<String> = a.vars.clone();
        for v in &b.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars.sort();
        (a.embed(&vars), b.embed(&vars))
    }

    /// Re-expresses the polynomial over a superset variable list (sorted).
    fn embed(&self, vars: &[String]) -> MultiPoly {
        if self.vars == vars {
            return self.clone();
        }
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        let mut terms = BTreeMap::new();
        for (exps, c) in &self.terms {
            let mut e = vec![0u32; vars.len()];
            for (i, &x) in exps.iter().enumerate() {
                e[idx[i]] = x;
            }
            terms.insert(e, c.clone());
        }
        MultiPoly::from_map(vars.to_vec(), terms)
    }

    /// Drops variables that no longer occur (after e.g. elimination).
    pub fn compress_vars(&self) -> MultiPoly {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        if keep.len() == self.vars.len() {
            return self.clone();
        }
        let vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let mut terms = BTreeMap::new();
        for (exps, c) in &self.terms {
            let e: Vec<u32> = keep.iter().map(|&i| exps[i]).collect();
            terms.insert(e, c.clone());
        }
        MultiPoly::from_map(vars, terms)
    }

    pub fn neg(&self) -> MultiPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        MultiPoly::from_map(self.vars.clone(), terms)
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (a, b) = Self::unify(self, other);
        let mut terms = a.terms;
        for (e, c) in b.terms {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly::from_map(a.vars, terms).compress_vars()
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let (a, b) = Self::unify(self, other);
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly::from_map(a.vars, terms).compress_vars()
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        MultiPoly::from_map(self.vars.clone(), terms)
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// GCD of all coefficients, with the sign of the leading (graded-lex
    /// largest) coefficient. Zero polynomial has content 0.
    pub fn content(&self) -> BigInt {
        let mut g = BigUint::zero();
        for c in self.terms.values() {
            g = g.gcd(c.magnitude());
            if g.is_one() {
                break;
            }
        }
        let g = BigInt::from(g);
        if self.leading_coeff_grlex().map(|c| c.is_negative()).unwrap_or(false) {
            -g
        } else {
            g
        }
    }

    /// Coefficient of the graded-lex leading term.
    pub fn leading_coeff_grlex(&self) -> Option<&BigInt> {
        self.terms
            .iter()
            .max_by(|(ea, _), (eb, _)| {
                let ta: u32 = ea.iter().sum();
                let tb: u32 = eb.iter().sum();
                ta.cmp(&tb).then_with(|| ea.cmp(eb))
            })
            .map(|(_, c)| c)
    }

    /// Primitive part: self / content. Zero stays zero.
    pub fn primitive_part(&self) -> MultiPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (e.clone(), k / &c))
            .collect();
        MultiPoly::from_map(self.vars.clone(), terms)
    }

    /// Exact division; `None` when the division does not come out exact.
    /// Graded-lex leading-term division over the union variable set.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = divisor.constant_value() {
            let mut terms = BTreeMap::new();
            for (e, k) in &self.terms {
                let (q, r) = k.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                terms.insert(e.clone(), q);
            }
            return Some(MultiPoly::from_map(self.vars.clone(), terms).compress_vars());
        }
        let (mut rem, div) = Self::unify(self, divisor);
        let vars = rem.vars.clone();
        let (dlead_e, dlead_c) = div
            .terms
            .iter()
            .max_by(|(ea, _), (eb, _)| grlex_cmp(ea, eb))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut qterms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        while !rem.is_zero() {
            let (rlead_e, rlead_c) = rem
                .terms
                .iter()
                .max_by(|(ea, _), (eb, _)| grlex_cmp(ea, eb))
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            if rlead_e.len() != dlead_e.len() {
                return None;
            }
            let mut mono = Vec::with_capacity(rlead_e.len());
            for (a, b) in rlead_e.iter().zip(&dlead_e) {
                if a < b {
                    return None;
                }
                mono.push(a - b);
            }
            let (qc, qr) = rlead_c.div_rem(&dlead_c);
            if !qr.is_zero() {
                return None;
            }
            let mut qt = BTreeMap::new();
            qt.insert(mono, qc);
            let qmono = MultiPoly::from_map(vars.clone(), qt);
            rem = rem.sub(&qmono.mul(&div)).embed(&vars);
            for (e, c) in &qmono.terms {
                let entry = qterms.entry(e.clone()).or_insert_with(BigInt::zero);
                *entry += c;
            }
        }
        qterms.retain(|_, c| !c.is_zero());
        Some(MultiPoly::from_map(vars, qterms).compress_vars())
    }

    /// Formal derivative with respect to `var`.
    pub fn derivative(&self, var: &str) -> MultiPoly {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return MultiPoly::zero();
        };
        let mut terms = BTreeMap::new();
        for (exps, c) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[i] -= 1;
            terms.insert(e, c * BigInt::from(exps[i]));
        }
        MultiPoly::from_map(self.vars.clone(), terms).compress_vars()
    }

    /// Coefficient vector with respect to `var`: index = power of `var`,
    /// entries are polynomials in the remaining variables.
    pub fn coeffs_in(&self, var: &str) -> Vec<MultiPoly> {
        let d = self.deg_var(var) as usize;
        let pos = self.vars.iter().position(|v| v == var);
        let other_vars: Vec<String> = self
            .vars
            .iter()
            .filter(|v| v.as_str() != var)
            .cloned()
            .collect();
        let mut out: Vec<BTreeMap<Vec<u32>, BigInt>> = vec![BTreeMap::new(); d + 1];
        for (exps, c) in &self.terms {
            let (k, e): (usize, Vec<u32>) = match pos {
                Some(i) => (
                    exps[i] as usize,
                    exps.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, &x)| x)
                        .collect(),
                ),
                None => (0, exps.clone()),
            };
            out[k].insert(e, c.clone());
        }
        out.into_iter()
            .map(|m| MultiPoly::from_map(other_vars.clone(), m).compress_vars())
            .collect()
    }

    /// Inverse of `coeffs_in`: sum of coeffs[k] * var^k.
    pub fn from_coeffs_in(var: &str, coeffs: &[MultiPoly]) -> MultiPoly {
        let v = MultiPoly::var(var);
        let mut acc = MultiPoly::zero();
        let mut p = MultiPoly::one();
        for (k, c) in coeffs.iter().enumerate() {
            if k > 0 {
                p = p.mul(&v);
            }
            if !c.is_zero() {
                acc = acc.add(&c.mul(&p));
            }
        }
        acc
    }

    /// Leading coefficient with respect to `var` as a polynomial in the
    /// other variables. Zero polynomial input gives zero.
    pub fn leading_coeff_in(&self, var: &str) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        self.coeffs_in(var).pop().unwrap()
    }

    /// Substitutes integer values for a subset of variables.
    pub fn eval_ints(&self, assign: &BTreeMap<String, BigInt>) -> MultiPoly {
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|i| !assign.contains_key(&self.vars[*i]))
            .collect();
        let kept_vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        for (exps, c) in &self.terms {
            let mut coef = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                if let Some(val) = assign.get(&self.vars[i]) {
                    coef *= val.pow(e);
                }
            }
            if coef.is_zero() {
                continue;
            }
            let e: Vec<u32> = keep.iter().map(|&i| exps[i]).collect();
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += coef;
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly::from_map(kept_vars, terms).compress_vars()
    }

    /// Univariate evaluation at a rational point (exact).
    pub fn eval_rational_univar(&self, x: &num_rational::BigRational) -> num_rational::BigRational {
        use num_rational::BigRational;
        assert!(self.vars.len() <= 1, "univariate evaluation");
        let mut acc = BigRational::zero();
        let coeffs = if self.vars.is_empty() {
            vec![self.constant_value().unwrap_or_else(BigInt::zero)]
        } else {
            self.coeffs_in(&self.vars[0].clone())
                .iter()
                .map(|c| c.constant_value().unwrap())
                .collect()
        };
        for c in coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }
}

/// Graded lexicographic comparison of exponent vectors (same arity).
pub(crate) fn grlex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let ta: u32 = a.iter().sum();
    let tb: u32 = b.iter().sum();
    ta.cmp(&tb).then_with(|| a.cmp(b))
}

/// Natural log of a BigUint (0 maps to -inf; 1 maps to 0).
pub fn ln_biguint(n: &BigUint) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits <= 52 {
        let v: u64 = n.try_into().ok().map(|v: u64| v).unwrap_or(0);
        return (v as f64).ln();
    }
    // top 64 bits as mantissa, rest as exponent
    let shift = bits - 53;
    let top: BigUint = n >> shift;
    let top_u: u64 = (&top).try_into().unwrap();
    (top_u as f64).ln() + (shift as f64) * std::f64::consts::LN_2
}

/// Gelfond-style bound for the height of a product: 2^d * prod H(f_i),
/// where d is the sum over variables of the summed per-variable degrees.
/// Always at least H(prod f_i).
pub fn gelfond_product_bound(factors: &[MultiPoly]) -> BigUint {
    assert!(!factors.is_empty(), "nonempty factor list");
    let mut vars: Vec<String> = Vec::new();
    for f in factors {
        for v in f.vars() {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
    }
    let mut d: u64 = 0;
    for v in &vars {
        for f in factors {
            d += f.deg_var(v) as u64;
        }
    }
    let mut bound = BigUint::one() << d;
    for f in factors {
        let h = if f.height().is_zero() {
            BigUint::zero()
        } else {
            f.height().clone()
        };
        bound *= h;
    }
    bound
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

// ---------------------------------------------------------------------------
// JSON form: {"vars":[...], "terms":[{"e":[...],"c":"<decimal>"}]}
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermRepr {
    e: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    e: e.clone(),
                    c: c.to_string(),
                })
                .collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = PolyRepr::deserialize(d)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad integer `{}`", t.c)))?;
            terms.push((t.e, c));
        }
        MultiPoly::from_terms(repr.vars, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests;
