//! Double-double (≈106-bit) real and complex arithmetic for the
//! cancellation-prone convergent CHF series.

use num_complex::Complex64;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub const PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
pub const HALF_PI: Dd = Dd { hi: 1.5707963267948966, lo: 6.123233995736766e-17 };
pub const LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };
pub const EULER: Dd = Dd { hi: 0.5772156649015329, lo: -4.942915152430645e-18 };

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    pub fn ldexp(self, k: i32) -> Self {
        let s = 2f64.powi(k);
        Dd { hi: self.hi * s, lo: self.lo * s }
    }

    pub fn recip(self) -> Self {
        Dd::ONE / self
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    /// `e^x` by range reduction on `ln 2` and a Taylor series.
    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Dd::new(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        let r = self - LN2.mul_f64(k);
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for n in 1..40 {
            term = (term * r) / Dd::new(n as f64);
            sum = sum + term;
            if term.hi.abs() < 1e-34 {
                break;
            }
        }
        sum.ldexp(k as i32)
    }

    /// Natural logarithm of a positive number (one Newton step on `exp`).
    pub fn ln(self) -> Self {
        let y = Dd::new(self.to_f64().ln());
        y + self * (-y).exp() - Dd::ONE
    }

    /// `(sin x, cos x)` by reduction modulo `π/2` and Taylor series.
    pub fn sin_cos(self) -> (Self, Self) {
        let k = (self.hi / HALF_PI.hi).round();
        let r = self - HALF_PI.mul_f64(k);
        let r2 = r * r;
        let mut s = r;
        let mut c = Dd::ONE;
        let mut ts = r;
        let mut tc = Dd::ONE;
        for n in 1..30 {
            let nf = n as f64;
            ts = -(ts * r2) / Dd::new((2.0 * nf) * (2.0 * nf + 1.0));
            tc = -(tc * r2) / Dd::new((2.0 * nf - 1.0) * (2.0 * nf));
            s = s + ts;
            c = c + tc;
            if tc.hi.abs() < 1e-34 && ts.hi.abs() < 1e-34 {
                break;
            }
        }
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    /// `atan2(y, x)` refined by one rotation step.
    pub fn atan2(y: Dd, x: Dd) -> Dd {
        let t0 = Dd::new(y.to_f64().atan2(x.to_f64()));
        let (s, c) = t0.sin_cos();
        let xr = x * c + y * s;
        let yr = y * c - x * s;
        t0 + yr / xr
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * b.lo + self.lo * b.hi));
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

/// Complex number with double-double parts.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: Cdd = Cdd { re: Dd::ONE, im: Dd::ZERO };

    pub fn new(re: Dd, im: Dd) -> Self {
        Cdd { re, im }
    }

    pub fn from_c64(z: Complex64) -> Self {
        Cdd { re: Dd::new(z.re), im: Dd::new(z.im) }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn norm_sqr(self) -> Dd {
        self.re * self.re + self.im * self.im
    }

    /// Magnitude as a double (for monitoring only).
    pub fn abs_f64(self) -> f64 {
        self.to_c64().norm()
    }

    pub fn scale(self, s: Dd) -> Self {
        Cdd { re: self.re * s, im: self.im * s }
    }

    pub fn scale_f64(self, s: f64) -> Self {
        Cdd { re: self.re.mul_f64(s), im: self.im.mul_f64(s) }
    }

    pub fn recip(self) -> Self {
        let d = self.norm_sqr();
        Cdd { re: self.re / d, im: -(self.im / d) }
    }

    /// Principal logarithm.
    pub fn ln(self) -> Self {
        Cdd {
            re: self.norm_sqr().ln().mul_f64(0.5),
            im: Dd::atan2(self.im, self.re),
        }
    }
}

impl Add for Cdd {
    type Output = Cdd;
    fn add(self, b: Cdd) -> Cdd {
        Cdd { re: self.re + b.re, im: self.im + b.im }
    }
}

impl Sub for Cdd {
    type Output = Cdd;
    fn sub(self, b: Cdd) -> Cdd {
        Cdd { re: self.re - b.re, im: self.im - b.im }
    }
}

impl Neg for Cdd {
    type Output = Cdd;
    fn neg(self) -> Cdd {
        Cdd { re: -self.re, im: -self.im }
    }
}

impl Mul for Cdd {
    type Output = Cdd;
    fn mul(self, b: Cdd) -> Cdd {
        Cdd {
            re: self.re * b.re - self.im * b.im,
            im: self.re * b.im + self.im * b.re,
        }
    }
}

impl Div for Cdd {
    type Output = Cdd;
    fn div(self, b: Cdd) -> Cdd {
        self * b.recip()
    }
}

/// Bernoulli numbers `B_{2k}`, `k = 1..=15`, as exact numerator/denominator pairs.
const BERNOULLI: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
];

/// Digamma in double-double for complex argument away from the poles.
pub fn digamma(z: Cdd) -> Cdd {
    if z.re.hi < 0.5 {
        // ψ(z) = ψ(1-z) - π cot(πz)
        let w = Cdd::ONE - z;
        let pz = z.scale(PI);
        let (s, c) = sin_cos_complex(pz);
        return digamma(w) - (c / s).scale(PI);
    }
    let mut w = z;
    let mut acc = Cdd::ZERO;
    while w.abs_f64() < 25.0 {
        acc = acc - w.recip();
        w = w + Cdd::ONE;
    }
    let inv = w.recip();
    let inv2 = inv * inv;
    let mut pw = inv2;
    let mut series = Cdd::ZERO;
    for (k, &(num, den)) in BERNOULLI.iter().enumerate() {
        let coef = Dd::new(num) / Dd::new(den * (2 * (k + 1)) as f64);
        series = series + pw.scale(coef);
        pw = pw * inv2;
    }
    acc + w.ln() - inv.scale_f64(0.5) - series
}

/// `(sin z, cos z)` for complex double-double `z`.
fn sin_cos_complex(z: Cdd) -> (Cdd, Cdd) {
    let (s, c) = z.re.sin_cos();
    let e = z.im.exp();
    let ei = e.recip();
    let ch = (e + ei).mul_f64(0.5);
    let sh = (e - ei).mul_f64(0.5);
    (
        Cdd { re: s * ch, im: c * sh },
        Cdd { re: c * ch, im: -(s * sh) },
    )
}
