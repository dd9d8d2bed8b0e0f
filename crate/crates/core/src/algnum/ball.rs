//! Complex disc ("ball") arithmetic with outward rounding.
//!
//! A ball is a complex center at a stated precision plus a radius magnitude.
//! Every operation returns a ball that contains the exact image of the input
//! balls: center rounding errors are absorbed into the radius via 4-ulp
//! bounds, and propagation terms use mean-value estimates with upward-rounded
//! magnitudes. Operations that require excluding a point (division, logs)
//! fail with `RefinePrecision` when the ball cannot certify the exclusion.

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::fb::*;
use super::mag::Mag;
use super::AlgnumError;

#[derive(Clone)]
pub struct Ball {
    re: BigFloat,
    im: BigFloat,
    rad: Mag,
    prec: u32,
}

impl std::fmt::Debug for Ball {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Ball({} + {}i ± 2^{:.1})",
            fb_to_f64(&self.re),
            fb_to_f64(&self.im),
            self.rad.log2_upper()
        )
    }
}

/// Working precision: padding absorbs accumulated ulp noise so that the
/// advertised precision is honest.
fn pw(prec: u32) -> usize {
    prec as usize + 32
}

impl Ball {
    pub fn zero(prec: u32) -> Ball {
        Ball {
            re: fb_zero(),
            im: fb_zero(),
            rad: Mag::ZERO,
            prec,
        }
    }

    pub fn one(prec: u32) -> Ball {
        Ball::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Ball {
        Ball {
            re: fb_from_i64(v, pw(prec)),
            im: fb_zero(),
            rad: Mag::ZERO,
            prec,
        }
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Ball {
        Ball {
            re: fb_from_bigint(v),
            im: fb_zero(),
            rad: Mag::ZERO,
            prec,
        }
    }

    /// Exact rational center, rounded to precision with the rounding absorbed
    /// in the radius.
    pub fn from_rationals(re: &BigRational, im: &BigRational, prec: u32) -> Ball {
        let (r, er) = fb_from_bigrational(re, pw(prec));
        let (i, ei) = fb_from_bigrational(im, pw(prec));
        Ball {
            re: r,
            im: i,
            rad: er.add(&ei),
            prec,
        }
    }

    pub fn from_f64(v: f64, prec: u32) -> Ball {
        assert!(v.is_finite());
        Ball {
            re: BigFloat::from_f64(v, pw(prec)),
            im: fb_zero(),
            rad: Mag::ZERO,
            prec,
        }
    }

    pub(crate) fn from_parts(re: BigFloat, im: BigFloat, rad: Mag, prec: u32) -> Ball {
        Ball { re, im, rad, prec }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn radius(&self) -> Mag {
        self.rad
    }

    pub fn mid_re(&self) -> &BigFloat {
        &self.re
    }

    pub fn mid_im(&self) -> &BigFloat {
        &self.im
    }

    pub fn mid_re_f64(&self) -> f64 {
        fb_to_f64(&self.re)
    }

    pub fn mid_im_f64(&self) -> f64 {
        fb_to_f64(&self.im)
    }

    /// Inflates the radius by an extra magnitude.
    pub fn inflate(&self, extra: Mag) -> Ball {
        Ball {
            re: self.re.clone(),
            im: self.im.clone(),
            rad: self.rad.add(&extra),
            prec: self.prec,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    fn p2(a: &Ball, b: &Ball) -> (u32, usize) {
        let prec = a.prec.min(b.prec);
        (prec, pw(prec))
    }

    pub fn neg(&self) -> Ball {
        Ball {
            re: self.re.neg(),
            im: self.im.neg(),
            rad: self.rad,
            prec: self.prec,
        }
    }

    pub fn conj(&self) -> Ball {
        Ball {
            re: self.re.clone(),
            im: self.im.neg(),
            rad: self.rad,
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &Ball) -> Ball {
        let (prec, p) = Ball::p2(self, other);
        let re = self.re.add(&other.re, p, RM);
        let im = self.im.add(&other.im, p, RM);
        let rad = self
            .rad
            .add(&other.rad)
            .add(&ulp_err(&re, p))
            .add(&ulp_err(&im, p));
        Ball { re, im, rad, prec }
    }

    pub fn sub(&self, other: &Ball) -> Ball {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Ball) -> Ball {
        let (prec, p) = Ball::p2(self, other);
        let ac = self.re.mul(&other.re, p, RM);
        let bd = self.im.mul(&other.im, p, RM);
        let ad = self.re.mul(&other.im, p, RM);
        let bc = self.im.mul(&other.re, p, RM);
        let re = ac.sub(&bd, p, RM);
        let im = ad.add(&bc, p, RM);
        let mut err = Mag::ZERO;
        for t in [&ac, &bd, &ad, &bc, &re, &im] {
            err = err.add(&ulp_err(t, p));
        }
        let ra = self.rad;
        let rb = other.rad;
        let prop = self
            .center_abs_upper()
            .mul(&rb)
            .add(&other.center_abs_upper().mul(&ra))
            .add(&ra.mul(&rb));
        Ball {
            re,
            im,
            rad: err.add(&prop),
            prec,
        }
    }

    pub fn mul_i64(&self, k: i64) -> Ball {
        self.mul(&Ball::from_i64(k, self.prec))
    }

    /// Upper bound on the modulus of the center.
    fn center_abs_upper(&self) -> Mag {
        let p = 64usize;
        if self.im.is_zero() {
            return fb_mag_upper(&self.re);
        }
        if self.re.is_zero() {
            return fb_mag_upper(&self.im);
        }
        let rr = self.re.mul(&self.re, p, RM);
        let ii = self.im.mul(&self.im, p, RM);
        let s = rr.add(&ii, p, RM);
        let h = s.sqrt(p, RM);
        fb_mag_upper(&h).mul(&Mag::from_f64_upper(1.0 + 1e-12))
    }

    /// Lower bound on the modulus of the center (a nonnegative f64-free
    /// BigFloat at low precision).
    fn center_abs_lower(&self) -> BigFloat {
        let p = 64usize;
        let h = if self.im.is_zero() {
            fb_abs(&self.re)
        } else if self.re.is_zero() {
            fb_abs(&self.im)
        } else {
            let rr = self.re.mul(&self.re, p, RM);
            let ii = self.im.mul(&self.im, p, RM);
            rr.add(&ii, p, RM).sqrt(p, RM)
        };
        // back off 3 ulps to stay a lower bound
        let eps = mag_to_bigfloat(&ulp_err(&h, p).mul_2exp(2));
        let lo = h.sub(&eps, p, RM);
        if lo.is_negative() {
            fb_zero()
        } else {
            lo
        }
    }

    /// Upper bound on |z| over the whole ball.
    pub fn abs_upper(&self) -> Mag {
        self.center_abs_upper().add(&self.rad)
    }

    /// Lower bound on |z| over the whole ball (>= 0).
    pub fn abs_lower(&self) -> BigFloat {
        let lo = self.center_abs_lower();
        let r = mag_to_bigfloat(&self.rad);
        let v = lo.sub(&r, 64, RM);
        if v.is_negative() {
            fb_zero()
        } else {
            v
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.abs_lower().is_zero()
    }

    /// Natural log of the modulus upper bound (log-scale reporting).
    pub fn ln_abs_upper(&self) -> f64 {
        self.abs_upper().ln_upper()
    }

    /// Natural log of the modulus lower bound; -inf when zero not excluded.
    pub fn ln_abs_lower(&self) -> f64 {
        let lo = self.abs_lower();
        if lo.is_zero() {
            return f64::NEG_INFINITY;
        }
        // under-approximate: mag upper of lo minus a hair
        fb_mag_upper(&lo).ln_upper() - 1e-9
    }

    pub fn recip(&self) -> Result<Ball, AlgnumError> {
        let prec = self.prec;
        let p = pw(prec);
        let m_lo = self.center_abs_lower();
        let r = self.rad;
        // need r < |c|
        if m_lo.is_zero() || fb_cmp(&mag_to_bigfloat(&r), &m_lo) != std::cmp::Ordering::Less {
            return Err(AlgnumError::RefinePrecision(
                "reciprocal of a ball containing zero".into(),
            ));
        }
        let rr = self.re.mul(&self.re, p, RM);
        let ii = self.im.mul(&self.im, p, RM);
        let den = rr.add(&ii, p, RM);
        let re = self.re.div(&den, p, RM);
        let im = self.im.neg().div(&den, p, RM);
        let mut err = ulp_err(&re, p).add(&ulp_err(&im, p));
        err = err.add(&ulp_err(&den, p).mul(&Mag::pow2(
            2 - 2 * (fb_mag_upper(&m_lo).log2_upper().floor() as i64),
        )));
        // propagation: |1/z - 1/c| <= r / (|c| (|c| - r))
        let gap = m_lo.sub(&mag_to_bigfloat(&r), 64, RM);
        let prop = div_mag_by_lower(&r, &m_lo.mul(&gap, 64, RM));
        Ok(Ball {
            re,
            im,
            rad: err.add(&prop),
            prec,
        })
    }

    pub fn div(&self, other: &Ball) -> Result<Ball, AlgnumError> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn powi(&self, n: u64) -> Ball {
        let mut acc = Ball::one(self.prec);
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

    /// exp(z) with certified enclosure.
    pub fn exp(&self) -> Ball {
        let prec = self.prec;
        let p = pw(prec);
        let er = with_consts(|cc| self.re.exp(p, RM, cc));
        let (cos, sin) = if self.im.is_zero() {
            (fb_from_i64(1, p), fb_zero())
        } else {
            with_consts(|cc| (self.im.cos(p, RM, cc), self.im.sin(p, RM, cc)))
        };
        let re = er.mul(&cos, p, RM);
        let im = er.mul(&sin, p, RM);
        let mut err = Mag::ZERO;
        // |exp(c)| <= e^{re}; each of er, cos, sin carries ulps; products too.
        let e_up = fb_mag_upper(&er).mul(&Mag::from_f64_upper(1.0 + 1e-9));
        for t in [&er, &cos, &sin, &re, &im] {
            err = err.add(&ulp_err(t, p));
        }
        err = err.add(&ulp_err(&er, p).mul_2exp(1)); // cos/sin products scale by er
        let prop = e_up.mul(&self.rad.expm1_upper());
        Ball {
            re,
            im,
            rad: err.add(&prop),
            prec,
        }
    }

    /// Principal natural log. Errors when the ball contains 0 or crosses the
    /// branch cut (negative real axis).
    pub fn ln(&self) -> Result<Ball, AlgnumError> {
        let prec = self.prec;
        let p = pw(prec);
        let m_lo = self.abs_lower();
        if m_lo.is_zero() {
            return Err(AlgnumError::RefinePrecision(
                "log of a ball containing zero".into(),
            ));
        }
        // branch cut: ball meets {re <= 0, im = 0}?
        let r_bf = mag_to_bigfloat(&self.rad);
        let im_lo = self.im.sub(&r_bf, 64, RM);
        let im_hi = self.im.add(&r_bf, 64, RM);
        let re_lo = self.re.sub(&r_bf, 64, RM);
        let im_straddles = !im_lo.is_positive() && !im_hi.is_negative();
        if im_straddles && !re_lo.is_positive() && !self.im.is_zero() {
            return Err(AlgnumError::BranchCut);
        }
        if im_straddles && self.im.is_zero() && !re_lo.is_positive() {
            // real interval touching (-inf, 0]
            return Err(AlgnumError::BranchCut);
        }
        let rr = self.re.mul(&self.re, p, RM);
        let ii = self.im.mul(&self.im, p, RM);
        let sum = rr.add(&ii, p, RM);
        let lnmod = with_consts(|cc| sum.ln(p, RM, cc)).mul(&half(p), p, RM);
        let arg = atan2(&self.im, &self.re, p)?;
        let mut err = ulp_err(&lnmod, p).add(&ulp_err(&sum, p)).add(&arg.1);
        err = err.add(&Mag::pow2(-(p as i64) + 4));
        // |ln(z) - ln(c)| <= r / (|z|_lo) with |z|_lo = m_lo (already r-reduced)
        let prop = div_mag_by_lower(&self.rad, &m_lo);
        Ok(Ball {
            re: lnmod,
            im: arg.0,
            rad: err.add(&prop),
            prec,
        })
    }

    /// self^e via exp(e ln self).
    pub fn pow_ball(&self, e: &Ball) -> Result<Ball, AlgnumError> {
        Ok(e.mul(&self.ln()?).exp())
    }

    /// (cos t, sin t) for a real ball t; the chord bound makes the radius
    /// essentially the input radius.
    pub fn cis(theta: &Ball) -> Ball {
        let prec = theta.prec;
        let p = pw(prec);
        debug_assert!(theta.im.is_zero());
        let (cos, sin) = with_consts(|cc| (theta.re.cos(p, RM, cc), theta.re.sin(p, RM, cc)));
        let rad = theta
            .rad
            .add(&ulp_err(&cos, p))
            .add(&ulp_err(&sin, p))
            .add(&Mag::pow2(-(p as i64) + 2));
        Ball {
            re: cos,
            im: sin,
            rad,
            prec,
        }
    }

    /// Exact containment test for a rational point (dyadic centers make this
    /// decidable): |c - q|^2 <= rad^2.
    pub fn contains_rational_point(&self, re: &BigRational, im: &BigRational) -> bool {
        let cre = fb_to_bigrational(&self.re);
        let cim = fb_to_bigrational(&self.im);
        let dr = cre - re;
        let di = cim - im;
        let d2 = &dr * &dr + &di * &di;
        let r2 = mag_to_bigrational(&self.rad);
        d2 <= &r2 * &r2
    }

    /// Conservative ball-in-ball test: dist(centers) + r_inner <= r_outer.
    pub fn contains_ball(&self, inner: &Ball) -> bool {
        let p = 96usize;
        let dr = self.re.sub(&inner.re, p, RM);
        let di = self.im.sub(&inner.im, p, RM);
        let d2 = dr.mul(&dr, p, RM).add(&di.mul(&di, p, RM), p, RM);
        let d = d2.sqrt(p, RM);
        let d_up = fb_mag_upper(&d)
            .mul(&Mag::from_f64_upper(1.0 + 1e-12))
            .add(&Mag::pow2((d.exponent().unwrap_or(0) as i64) - 60));
        d_up.add(&inner.rad).cmp_mag(&self.rad) != std::cmp::Ordering::Greater
    }

    /// Distance bounds between ball centers, as (lower BigFloat, upper Mag).
    pub fn center_distance(&self, other: &Ball) -> (BigFloat, Mag) {
        let p = 96usize;
        let dr = self.re.sub(&other.re, p, RM);
        let di = self.im.sub(&other.im, p, RM);
        let tmp = Ball {
            re: dr,
            im: di,
            rad: Mag::ZERO,
            prec: 64,
        };
        (tmp.center_abs_lower(), tmp.center_abs_upper())
    }

    /// Distance interval between two balls: ([dist_lo], [dist_hi]).
    pub fn distance_interval(&self, other: &Ball) -> (BigFloat, Mag) {
        let (clo, cup) = self.center_distance(other);
        let rsum = self.rad.add(&other.rad);
        let lo = clo.sub(&mag_to_bigfloat(&rsum), 64, RM);
        let lo = if lo.is_negative() { fb_zero() } else { lo };
        (lo, cup.add(&rsum))
    }

    /// Real-part interval as f64s (outward).
    pub fn re_interval_f64(&self) -> (f64, f64) {
        let r = self.rad.to_f64_upper();
        (fb_to_f64(&self.re) - r, fb_to_f64(&self.re) + r)
    }

    /// Rounds (up) the stated precision; radius unchanged.
    pub fn with_precision(&self, prec: u32) -> Ball {
        let mut b = self.clone();
        b.prec = prec;
        b
    }

    /// Midpoints as decimal strings plus the radius in log2 scale.
    pub fn to_json(&self, digits: usize) -> BallJson {
        BallJson {
            re: decimal_of_rational(&fb_to_bigrational(&self.re), digits),
            im: decimal_of_rational(&fb_to_bigrational(&self.im), digits),
            rad_log2: if self.rad.is_zero() {
                f64::NEG_INFINITY
            } else {
                self.rad.log2_upper()
            },
        }
    }
}

/// Serialized ball: decimal centers and the radius magnitude in log2 scale.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BallJson {
    pub re: String,
    pub im: String,
    pub rad_log2: f64,
}

fn half(p: usize) -> BigFloat {
    let mut h = fb_from_i64(1, p);
    h.set_exponent(0);
    h
}

/// Upper-bound BigFloat for a Mag.
pub(crate) fn mag_to_bigfloat(m: &Mag) -> BigFloat {
    if m.is_zero() {
        return fb_zero();
    }
    let l2 = m.log2_upper();
    let e = l2.floor() as i64;
    let frac = (l2 - e as f64).exp2() * (1.0 + 1e-12);
    let mut f = BigFloat::from_f64(frac, 64);
    if let Some(fe) = f.exponent() {
        let ne = fe as i64 + e;
        assert!(ne <= i32::MAX as i64 && ne >= i32::MIN as i64);
        f.set_exponent(ne as i32);
    }
    f
}

fn mag_to_bigrational(m: &Mag) -> BigRational {
    fb_to_bigrational(&mag_to_bigfloat(m))
}

/// Upper bound of num / den_lower for positive lower bound den.
pub(crate) fn div_mag_by_lower(num: &Mag, den_lo: &BigFloat) -> Mag {
    if num.is_zero() {
        return Mag::ZERO;
    }
    assert!(den_lo.is_positive(), "need positive denominator lower bound");
    let inv = fb_from_i64(1, 64).div(den_lo, 64, RM);
    let inv_up = fb_mag_upper(&inv).mul(&Mag::from_f64_upper(1.0 + 1e-12));
    num.mul(&inv_up)
}

/// atan2 at an exact dyadic point, principal value in (-pi, pi]; returns the
/// value and an error magnitude.
fn atan2(y: &BigFloat, x: &BigFloat, p: usize) -> Result<(BigFloat, Mag), AlgnumError> {
    if y.is_zero() {
        if x.is_negative() {
            let pi = fb_pi(p);
            return Ok((pi.clone(), ulp_err(&pi, p)));
        }
        if x.is_zero() {
            return Err(AlgnumError::RefinePrecision("atan2(0, 0)".into()));
        }
        return Ok((fb_zero(), Mag::ZERO));
    }
    if x.is_zero() {
        let pi = fb_pi(p);
        let mut v = pi.clone();
        v.set_exponent(v.exponent().unwrap() - 1); // pi/2
        let e = ulp_err(&v, p);
        return Ok(if y.is_positive() { (v, e) } else { (v.neg(), e) });
    }
    let q = y.div(x, p, RM);
    let at = with_consts(|cc| q.atan(p, RM, cc));
    let mut err = ulp_err(&q, p).add(&ulp_err(&at, p)).add(&Mag::pow2(-(p as i64) + 4));
    if x.is_positive() {
        return Ok((at, err));
    }
    let pi = fb_pi(p);
    err = err.add(&ulp_err(&pi, p));
    if y.is_positive() {
        Ok((at.add(&pi, p, RM), err))
    } else {
        Ok((at.sub(&pi, p, RM), err))
    }
}
