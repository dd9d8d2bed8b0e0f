//! Upward-rounded magnitude type for ball radii and error bounds.
//!
//! A `Mag` stores a nonnegative value `man * 2^exp` with `man` normalized to
//! [2^31, 2^32). Every operation rounds up, so a `Mag` computed from upper
//! bounds stays an upper bound. The exponent range (i64) comfortably covers
//! every precision this crate uses.

use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mag {
    man: u64, // 0, or in [2^31, 2^32)
    exp: i64,
}

const MAN_BITS: u32 = 32;

impl Mag {
    pub const ZERO: Mag = Mag { man: 0, exp: 0 };

    pub fn zero() -> Mag {
        Mag::ZERO
    }

    pub fn is_zero(&self) -> bool {
        self.man == 0
    }

    /// 2^e.
    pub fn pow2(e: i64) -> Mag {
        Mag {
            man: 1u64 << (MAN_BITS - 1),
            exp: e - (MAN_BITS as i64 - 1),
        }
    }

    /// Upper bound for `m * 2^e`.
    pub fn from_u128_2exp(mut m: u128, mut e: i64) -> Mag {
        if m == 0 {
            return Mag::ZERO;
        }
        let bits = 128 - m.leading_zeros();
        if bits > MAN_BITS {
            let shift = bits - MAN_BITS;
            let lost = m & ((1u128 << shift) - 1);
            m >>= shift;
            if lost != 0 {
                m += 1; // round up
            }
            e += shift as i64;
            if m >> MAN_BITS != 0 {
                m >>= 1;
                e += 1;
            }
        } else if bits < MAN_BITS {
            let shift = MAN_BITS - bits;
            m <<= shift;
            e -= shift as i64;
        }
        Mag { man: m as u64, exp: e }
    }

    /// Upper bound for an f64 (must be finite and >= 0; infinity saturates).
    pub fn from_f64_upper(x: f64) -> Mag {
        assert!(!x.is_nan(), "Mag::from_f64_upper(NaN)");
        if x <= 0.0 {
            return Mag::ZERO;
        }
        if x.is_infinite() {
            return Mag {
                man: (1u64 << MAN_BITS) - 1,
                exp: i64::MAX / 2,
            };
        }
        let bits = x.to_bits();
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac as u128, -1074i64)
        } else {
            ((frac | (1u64 << 52)) as u128, raw_exp - 1075)
        };
        Mag::from_u128_2exp(m, e)
    }

    pub fn add(&self, other: &Mag) -> Mag {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (hi, lo) = if self.position() >= other.position() {
            (self, other)
        } else {
            (other, self)
        };
        let delta = hi.exp - lo.exp;
        let lo_man: u128 = if delta >= 96 {
            1 // any positive tail rounds up to one ulp at hi scale
        } else {
            let d = delta as u32;
            let shifted = (lo.man as u128) >> d.min(127);
            let lost = if d >= 128 {
                lo.man != 0
            } else {
                (lo.man as u128) & (((1u128) << d) - 1) != 0
            };
            shifted + if lost || shifted == 0 { 1 } else { 0 }
        };
        Mag::from_u128_2exp(hi.man as u128 + lo_man, hi.exp)
    }

    pub fn mul(&self, other: &Mag) -> Mag {
        if self.is_zero() || other.is_zero() {
            return Mag::ZERO;
        }
        Mag::from_u128_2exp(self.man as u128 * other.man as u128, self.exp + other.exp)
    }

    pub fn mul_2exp(&self, k: i64) -> Mag {
        if self.is_zero() {
            return *self;
        }
        Mag {
            man: self.man,
            exp: self.exp + k,
        }
    }

    pub fn max(&self, other: &Mag) -> Mag {
        if self.cmp_mag(other) == Ordering::Less {
            *other
        } else {
            *self
        }
    }

    fn position(&self) -> i64 {
        self.exp // mantissas share normalization, exp orders magnitudes up to man compare
    }

    pub fn cmp_mag(&self, other: &Mag) -> Ordering {
        if self.is_zero() {
            return if other.is_zero() {
                Ordering::Equal
            } else {
                Ordering::Less
            };
        }
        if other.is_zero() {
            return Ordering::Greater;
        }
        self.exp
            .cmp(&other.exp)
            .then_with(|| self.man.cmp(&other.man))
    }

    /// Upper-bounded conversion to f64 (saturates to infinity; nonzero values
    /// below f64 range map to the smallest positive normal, staying an upper
    /// bound direction-wise for reporting).
    pub fn to_f64_upper(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        if self.exp > 1020 {
            return f64::INFINITY;
        }
        if self.exp < -1060 {
            return f64::MIN_POSITIVE;
        }
        self.man as f64 * (self.exp as f64).exp2()
    }

    /// Upper bound on log2 of the value (-inf for zero).
    pub fn log2_upper(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.exp as f64 + (self.man as f64).log2() + 1e-9
    }

    /// Upper bound on the natural log of the value.
    pub fn ln_upper(&self) -> f64 {
        self.log2_upper() * std::f64::consts::LN_2
    }

    /// Upper bound on e^x where x is this magnitude (used for exp propagation).
    pub fn exp_upper(&self) -> Mag {
        Mag::from_f64_upper(self.to_f64_upper().exp() * (1.0 + 1e-9))
    }

    /// Upper bound on e^x - 1 for x = self.
    pub fn expm1_upper(&self) -> Mag {
        if self.is_zero() {
            return Mag::ZERO;
        }
        if self.log2_upper() <= -1.0 {
            // x <= 1/2: e^x - 1 <= 2x
            self.mul_2exp(1)
        } else {
            self.exp_upper()
        }
    }
}
