//! Thin helpers over `astro_float::BigFloat` centers: exact conversions from
//! big integers and rationals, ulp-sized error magnitudes, exact conversion
//! back to rationals, and deterministic decimal formatting.
//!
//! astro-float rounds to nearest (the rounding-mode choices only pick the tie
//! rule), so every center operation contributes at most one ulp of error;
//! `ulp_err` returns a four-ulp magnitude to keep a comfortable margin.

use std::cell::RefCell;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint, Sign as NumSign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::mag::Mag;

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

pub(crate) fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

pub(crate) fn fb_zero() -> BigFloat {
    BigFloat::from_i64(0, 64)
}

pub(crate) fn fb_from_i64(v: i64, p: usize) -> BigFloat {
    BigFloat::from_i64(v, p)
}

/// Exact conversion (no rounding): the result carries every bit of `n`.
pub(crate) fn fb_from_bigint(n: &BigInt) -> BigFloat {
    if n.is_zero() {
        return fb_zero();
    }
    let (sign, mag) = (n.sign(), n.magnitude());
    let digits = mag.to_u64_digits();
    // 2^64 as a BigFloat
    let mut two64 = BigFloat::from_i64(1, 64);
    two64.set_exponent(two64.exponent().unwrap() + 64);
    // start from the top digit (nonzero); full-precision ops keep exactness
    let mut acc = BigFloat::from_u64(*digits.last().unwrap(), 64);
    for d in digits.iter().rev().skip(1) {
        acc = acc.mul_full_prec(&two64);
        if *d != 0 {
            acc = acc.add_full_prec(&BigFloat::from_u64(*d, 64));
        }
    }
    if sign == NumSign::Minus {
        acc = acc.neg();
    }
    acc
}

/// Rounded conversion of a rational; returns the center and an error bound.
pub(crate) fn fb_from_bigrational(q: &BigRational, p: usize) -> (BigFloat, Mag) {
    if q.is_zero() {
        return (fb_zero(), Mag::ZERO);
    }
    let num = fb_from_bigint(q.numer());
    let den = fb_from_bigint(q.denom());
    let v = num.div(&den, p, RM);
    let e = ulp_err(&v, p);
    (v, e)
}

/// Error magnitude of a nearest-rounded result at precision `p`: 4 ulps.
pub(crate) fn ulp_err(x: &BigFloat, p: usize) -> Mag {
    if x.is_zero() || !x.inexact() {
        return Mag::ZERO;
    }
    match x.exponent() {
        Some(e) => Mag::pow2(e as i64 - p as i64 + 2),
        None => Mag::ZERO,
    }
}

/// Upper-bound magnitude of |x|.
pub(crate) fn fb_mag_upper(x: &BigFloat) -> Mag {
    if x.is_zero() {
        return Mag::ZERO;
    }
    let Some((words, _n, _s, e, _inexact)) = x.as_raw_parts() else {
        // infinity or nan: saturate
        return Mag::from_f64_upper(f64::INFINITY);
    };
    let top = *words.last().unwrap();
    // |x| = 0.m * 2^e with top bit of `top` set; bound by (top33+1) * 2^(e-33)
    let top33 = (top >> 31) as u128 + 1;
    Mag::from_u128_2exp(top33, e as i64 - 33)
}

pub(crate) fn fb_cmp(a: &BigFloat, b: &BigFloat) -> std::cmp::Ordering {
    let c = a.cmp(b).expect("NaN in comparison");
    c.cmp(&0)
}

pub(crate) fn fb_abs(a: &BigFloat) -> BigFloat {
    if a.is_negative() {
        a.neg()
    } else {
        a.clone()
    }
}

pub(crate) fn fb_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    let Some((words, _n, s, e, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    let top = *words.last().unwrap();
    let frac = top as f64 / 2f64.powi(64); // in [0.5, 1)
    let sgn = if s == Sign::Neg { -1.0 } else { 1.0 };
    if e > 1023 {
        return sgn * f64::INFINITY;
    }
    if e < -1020 {
        return sgn * frac * (e as f64).exp2(); // may underflow to 0
    }
    sgn * frac * (e as f64).exp2()
}

/// Exact value of a (finite) BigFloat as a rational.
pub(crate) fn fb_to_bigrational(x: &BigFloat) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let (words, _n, s, e, _) = x.as_raw_parts().expect("finite");
    let mut m = BigUint::zero();
    for d in words.iter().rev() {
        m = (m << 64) | BigUint::from(*d);
    }
    let bits = (words.len() * 64) as i64;
    let mut q = BigRational::from(BigInt::from(m));
    let shift = e as i64 - bits;
    if shift >= 0 {
        q *= BigRational::from(BigInt::one() << shift as usize);
    } else {
        q /= BigRational::from(BigInt::one() << (-shift) as usize);
    }
    if s == Sign::Neg {
        q = -q;
    }
    q
}

/// Deterministic scientific-notation rendering with `digits` significant
/// digits (truncated toward zero).
pub(crate) fn decimal_of_rational(q: &BigRational, digits: usize) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let neg = q.is_negative();
    let aq = q.abs();
    // decimal exponent k with 10^k <= aq < 10^(k+1)
    let num_bits = aq.numer().bits() as i64;
    let den_bits = aq.denom().bits() as i64;
    let mut k = ((num_bits - den_bits) as f64 * std::f64::consts::LOG10_2).floor() as i64;
    let ten = BigInt::from(10);
    let pow10 = |e: i64| -> BigRational {
        if e >= 0 {
            BigRational::from(ten.pow(e as u32))
        } else {
            BigRational::new(BigInt::one(), ten.pow((-e) as u32))
        }
    };
    while aq >= pow10(k + 1) {
        k += 1;
    }
    while aq < pow10(k) {
        k -= 1;
    }
    let scaled = (&aq * pow10(digits as i64 - 1 - k)).trunc();
    let mut s = scaled.numer().to_string();
    while s.len() < digits {
        s.push('0');
    }
    let (head, tail) = s.split_at(1);
    let sign = if neg { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{k}")
    } else {
        format!("{sign}{head}.{tail}e{k}")
    }
}

pub(crate) fn fb_pi(p: usize) -> BigFloat {
    with_consts(|cc| cc.pi(p, RM))
}

pub(crate) fn fb_ln2(p: usize) -> BigFloat {
    with_consts(|cc| cc.ln_2(p, RM))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_roundtrip() {
        for v in ["0", "1", "-3", "123456789123456789123456789", "-18446744073709551616"] {
            let n: BigInt = v.parse().unwrap();
            let f = fb_from_bigint(&n);
            assert_eq!(fb_to_bigrational(&f), BigRational::from(n));
        }
    }

    #[test]
    fn rational_conversion_error_bound() {
        let q = BigRational::new(BigInt::from(1), BigInt::from(3));
        let (f, err) = fb_from_bigrational(&q, 128);
        let back = fb_to_bigrational(&f);
        let diff = (back - q).abs();
        let bound = BigRational::new(BigInt::one(), BigInt::one() << 120);
        assert!(diff < bound);
        assert!(!err.is_zero());
    }

    #[test]
    fn mag_upper_bounds_value() {
        let n: BigInt = "987654321987654321".parse().unwrap();
        let f = fb_from_bigint(&n);
        let m = fb_mag_upper(&f);
        assert!(m.ln_upper() >= 987654321987654321f64.ln());
        assert!(m.ln_upper() <= 987654321987654321f64.ln() + 1e-6);
    }

    #[test]
    fn decimal_rendering() {
        let q = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(decimal_of_rational(&q, 5), "3.3333e-1");
        let q = BigRational::from(BigInt::from(1234));
        assert_eq!(decimal_of_rational(&q, 3), "1.23e3");
        assert_eq!(decimal_of_rational(&BigRational::zero(), 5), "0");
        let q = BigRational::new(BigInt::from(-1), BigInt::from(8));
        assert_eq!(decimal_of_rational(&q, 4), "-1.250e-1");
    }

    #[test]
    fn pi_value() {
        let pi = fb_pi(128);
        let v = fb_to_f64(&pi);
        assert!((v - std::f64::consts::PI).abs() < 1e-15);
    }
}
