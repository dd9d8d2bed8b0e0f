//! Certified complex root enclosures for polynomials with ball coefficients.
//!
//! Approximations come from a Durand-Kerner sweep on the coefficient centers;
//! certification uses Weierstrass-style inclusion discs: with pairwise
//! distinct approximations z_1..z_n the discs D(z_k, n |p(z_k)| / (|lc| prod
//! |z_k - z_j|)) jointly contain all roots, and pairwise disjoint discs
//! contain exactly one root each. Overlapping discs at the requested
//! precision surface as `RefinePrecision`.

use astro_float::BigFloat;

use super::ball::{div_mag_by_lower, mag_to_bigfloat, Ball};
use super::fb::*;
use super::mag::Mag;
use super::AlgnumError;

#[derive(Clone)]
struct Cx {
    re: BigFloat,
    im: BigFloat,
}

impl Cx {
    fn from_f64(re: f64, im: f64, p: usize) -> Cx {
        Cx {
            re: BigFloat::from_f64(re, p),
            im: BigFloat::from_f64(im, p),
        }
    }

    fn add(&self, o: &Cx, p: usize) -> Cx {
        Cx {
            re: self.re.add(&o.re, p, RM),
            im: self.im.add(&o.im, p, RM),
        }
    }

    fn sub(&self, o: &Cx, p: usize) -> Cx {
        Cx {
            re: self.re.sub(&o.re, p, RM),
            im: self.im.sub(&o.im, p, RM),
        }
    }

    fn mul(&self, o: &Cx, p: usize) -> Cx {
        let ac = self.re.mul(&o.re, p, RM);
        let bd = self.im.mul(&o.im, p, RM);
        let ad = self.re.mul(&o.im, p, RM);
        let bc = self.im.mul(&o.re, p, RM);
        Cx {
            re: ac.sub(&bd, p, RM),
            im: ad.add(&bc, p, RM),
        }
    }

    fn div(&self, o: &Cx, p: usize) -> Cx {
        let d = o.re.mul(&o.re, p, RM).add(&o.im.mul(&o.im, p, RM), p, RM);
        let n = self.mul(&Cx { re: o.re.clone(), im: o.im.neg() }, p);
        Cx {
            re: n.re.div(&d, p, RM),
            im: n.im.div(&d, p, RM),
        }
    }

    fn abs2_f64(&self) -> f64 {
        let r = fb_to_f64(&self.re);
        let i = fb_to_f64(&self.im);
        r * r + i * i
    }
}

/// Certified enclosures for all roots (leading coefficient must exclude zero,
/// discs must separate at this precision).
pub fn certified_roots(coeffs: &[Ball], prec: u32) -> Result<Vec<Ball>, AlgnumError> {
    let mut cs: Vec<Ball> = coeffs.to_vec();
    // drop exactly-zero leading coefficients
    while let Some(last) = cs.last() {
        if last.is_exact() && last.mid_re().is_zero() && last.mid_im().is_zero() {
            cs.pop();
        } else {
            break;
        }
    }
    if cs.len() <= 1 {
        return Err(AlgnumError::NoRoots);
    }
    let lc = cs.last().unwrap();
    let lc_lo = lc.abs_lower();
    if lc_lo.is_zero() {
        return Err(AlgnumError::RefinePrecision(
            "leading coefficient not certified nonzero".into(),
        ));
    }
    let n = cs.len() - 1;
    let p = prec as usize + 64;

    if n == 1 {
        let root = cs[0].neg().div(&cs[1])?;
        return Ok(vec![root]);
    }

    // Durand-Kerner on centers.
    let centers: Vec<Cx> = cs
        .iter()
        .map(|b| Cx {
            re: b.mid_re().clone(),
            im: b.mid_im().clone(),
        })
        .collect();
    let scale = {
        let lcm = fb_to_f64(&lc_lo).abs().max(1e-300);
        let mut m: f64 = 0.0;
        for b in &cs[..n] {
            m = m.max(b.abs_upper().to_f64_upper() / lcm);
        }
        1.0 + m.min(1e300)
    };
    let mut zs: Vec<Cx> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64;
            Cx::from_f64(scale * 0.7 * ang.cos(), scale * 0.7 * ang.sin(), p)
        })
        .collect();
    let tol = 2f64.powi(-((p as i32) / 2)) * scale.max(1.0);
    for _ in 0..(80 + 12 * n) {
        let mut max_corr: f64 = 0.0;
        for k in 0..n {
            // p(z_k) by Horner on centers
            let mut val = centers[n].clone();
            for i in (0..n).rev() {
                val = val.mul(&zs[k], p).add(&centers[i], p);
            }
            let mut den = centers[n].clone();
            for j in 0..n {
                if j != k {
                    den = den.mul(&zs[k].sub(&zs[j], p), p);
                }
            }
            if den.abs2_f64() == 0.0 {
                // perturb coincident iterates
                zs[k] = zs[k].add(&Cx::from_f64(1e-3 * scale, 1e-3 * scale, p), p);
                max_corr = f64::INFINITY;
                continue;
            }
            let w = val.div(&den, p);
            zs[k] = zs[k].sub(&w, p);
            max_corr = max_corr.max(w.abs2_f64().sqrt());
        }
        if max_corr < tol {
            break;
        }
    }

    // Weierstrass inclusion discs.
    let mut discs: Vec<Ball> = Vec::with_capacity(n);
    for k in 0..n {
        let zk = Ball::from_parts(zs[k].re.clone(), zs[k].im.clone(), Mag::ZERO, prec);
        // |p(z_k)| upper via ball Horner with the true coefficient balls
        let mut val = cs[n].clone();
        for i in (0..n).rev() {
            val = val.mul(&zk).add(&cs[i]);
        }
        let num = val.abs_upper().mul(&Mag::from_u128_2exp(n as u128, 0));
        let mut den_lo = lc_lo.clone();
        for j in 0..n {
            if j == k {
                continue;
            }
            let d = zs[k].sub(&zs[j], p);
            let db = Ball::from_parts(d.re, d.im, Mag::ZERO, prec);
            let dlo = db.abs_lower();
            if dlo.is_zero() {
                return Err(AlgnumError::RefinePrecision(
                    "coincident root approximations".into(),
                ));
            }
            den_lo = den_lo.mul(&dlo, 64, RM);
            // keep den_lo a lower bound: back off 2 ulps
            den_lo = den_lo.sub(&mag_to_bigfloat(&ulp_err(&den_lo, 64).mul_2exp(1)), 64, RM);
            if !den_lo.is_positive() {
                return Err(AlgnumError::RefinePrecision(
                    "denominator underflow in disc certification".into(),
                ));
            }
        }
        let rk = div_mag_by_lower(&num, &den_lo);
        discs.push(zk.inflate(rk));
    }

    // pairwise disjointness
    for a in 0..n {
        for b in a + 1..n {
            let (lo, _) = discs[a].distance_interval(&discs[b]);
            if lo.is_zero() {
                return Err(AlgnumError::RefinePrecision(
                    "root discs overlap at this precision".into(),
                ));
            }
        }
    }
    Ok(discs)
}

/// Nearest root of a polynomial (ball coefficients, ascending powers) to a
/// target ball, with a certified upper bound on the distance. Ties break
/// lexicographically on (Re, Im) of the root centers.
pub fn nearest_root(
    coeffs: &[Ball],
    target: &Ball,
    prec: u32,
) -> Result<(Ball, Mag), AlgnumError> {
    let roots = certified_roots(coeffs, prec)?;
    if roots.is_empty() {
        return Err(AlgnumError::NoRoots);
    }
    let mut best: Option<(usize, BigFloat, Mag)> = None;
    let mut intervals = Vec::with_capacity(roots.len());
    for (i, r) in roots.iter().enumerate() {
        let (lo, hi) = target.distance_interval(r);
        intervals.push((lo.clone(), hi));
        match &best {
            None => best = Some((i, lo, hi)),
            Some((_, _, bh)) => {
                if hi.cmp_mag(bh) == std::cmp::Ordering::Less {
                    best = Some((i, lo, hi));
                }
            }
        }
    }
    let (_, _, best_hi) = best.clone().unwrap();
    // candidates whose lower bound does not exceed the best upper bound
    let mut cand: Vec<usize> = (0..roots.len())
        .filter(|&i| {
            fb_cmp(&intervals[i].0, &mag_to_bigfloat(&best_hi)) != std::cmp::Ordering::Greater
        })
        .collect();
    if cand.len() > 1 {
        // tie-break: lexicographic on (Re, Im) of centers at working precision
        cand.sort_by(|&a, &b| {
            fb_cmp(roots[a].mid_re(), roots[b].mid_re())
                .then_with(|| fb_cmp(roots[a].mid_im(), roots[b].mid_im()))
        });
    }
    let pick = cand[0];
    Ok((roots[pick].clone(), intervals[pick].1))
}
