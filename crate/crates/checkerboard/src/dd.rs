//! Double-double arithmetic: a value is the unevaluated sum `hi + lo` of two
//! floats, giving roughly 106 bits of mantissa. This is just enough numerics
//! to expand eigenvalue products whose integer answers are far past the
//! resolution of a plain `f64`, without dragging in a bignum-float crate for
//! what amounts to cosines and polynomial expansion.
//!
//! The primitives (`two_sum`, `two_prod` via fused multiply-add) are the
//! classical error-free transformations.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, ToPrimitive};

/// A double-double float: the exact sum `hi + lo`, normalized so
/// `hi = fl(hi + lo)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// s + err = a + b exactly, with no assumption on magnitudes.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// s + err = a + b exactly, requiring |a| >= |b|.
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// p + err = a * b exactly (fused multiply-add supplies the residue).
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// π to double-double precision; the low word is the classical
    /// correction term (π − fl(π)).
    pub const PI: Dd = Dd { hi: std::f64::consts::PI, lo: 1.2246467991473532e-16 };

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    /// Collapse to the nearest f64.
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Exact conversion of a big integer, splitting it across the two words.
    /// Values beyond f64 range collapse to ±infinity.
    pub fn from_bigint(x: &BigInt) -> Dd {
        let hi = x.to_f64().unwrap_or(f64::INFINITY);
        if !hi.is_finite() {
            return Dd { hi, lo: 0.0 };
        }
        // hi is x rounded to 53 bits; for |x| < 2^53 it is exact and the
        // remainder is zero, otherwise hi is integer-valued and converts
        // back exactly.
        let rounded = BigInt::from_f64(hi).expect("finite float");
        let rem = x - rounded;
        let lo = rem.to_f64().expect("remainder fits");
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    /// Integer power by repeated squaring.
    pub fn powi(self, mut e: u32) -> Dd {
        let mut base = self;
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }

    /// cos(jπ/d), exact at the quarter turns: the result is bit-for-bit 0
    /// when the angle is an odd multiple of π/2, and ±1 at multiples of π.
    /// Symmetry reduction brings the angle into [0, π/2), then a Taylor
    /// series (which converges to below 1e-35 within ~25 terms there) does
    /// the rest.
    pub fn cos_pi_frac(j: u64, d: u64) -> Dd {
        assert!(d > 0 && d < u64::MAX / 2, "denominator out of range");
        let j = j % (2 * d);
        if j > d {
            return Dd::cos_pi_frac(2 * d - j, d); // cos(2π − θ) = cos θ
        }
        if 2 * j == d {
            return Dd::ZERO; // cos(π/2), exactly
        }
        if 2 * j > d {
            return -Dd::cos_pi_frac(d - j, d); // cos(π − θ) = −cos θ
        }
        if j == 0 {
            return Dd::ONE;
        }
        debug_assert!(j < (1 << 53) && d < (1 << 53));
        let x = Dd::PI * Dd::from(j as f64) / Dd::from(d as f64);
        let x2 = x * x;
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for k in 1..=40u32 {
            term = -(term * x2) / Dd::from(((2 * k - 1) * (2 * k)) as f64);
            sum = sum + term;
            if term.abs().hi < 1e-35 {
                break;
            }
        }
        sum
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        // Long division: three f64 quotient digits cover 106 bits.
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::from(q2);
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from(q3)
    }
}

impl PartialEq for Dd {
    fn eq(&self, other: &Dd) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl std::fmt::Display for Dd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}
