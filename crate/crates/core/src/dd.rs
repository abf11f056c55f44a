//! Double-double arithmetic (an unevaluated sum `hi + lo` of two f64 values,
//! about 32 significant digits).
//!
//! The closed-form symplectic eigenvalues of the squashed output subtract
//! quantities of size `N²` to produce eigenvalues of size 1, and near
//! `T → 0` the conditional entropy is a difference of O(1) entropies that is
//! itself tiny. Plain f64 loses every significant digit in both regimes, so
//! that evaluation runs in this type.

use core::cmp::Ordering;
use core::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub(crate) const LN2: Dd = Dd {
    hi: core::f64::consts::LN_2,
    lo: 2.3190468138462996e-17,
};

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
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

    pub fn is_positive(self) -> bool {
        self.hi > 0.0 || (self.hi == 0.0 && self.lo > 0.0)
    }

    fn scale_pow2(self, k: i32) -> Self {
        Dd {
            hi: libm::scalbn(self.hi, k),
            lo: libm::scalbn(self.lo, k),
        }
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let x = libm::sqrt(self.hi);
        let xd = Dd::from_f64(x);
        // One Newton step: x + (a − x²)/(2x).
        let (p, e) = two_prod(x, x);
        let residual = (self - Dd { hi: p, lo: e }).to_f64();
        xd + Dd::from_f64(residual / (2.0 * x))
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        const SQUARINGS: i32 = 10;
        let k = libm::round(self.hi / LN2.hi);
        let r = (self - LN2 * k).scale_pow2(-SQUARINGS);
        // expm1 on the reduced argument, |r| < 3.4e-4.
        let mut term = r;
        let mut sum = r;
        for n in 2..=12 {
            term = term * r / (n as f64);
            sum = sum + term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        // (1 + s)² − 1 = 2s + s², keeping the small part separate.
        for _ in 0..SQUARINGS {
            sum = sum * 2.0 + sum.sqr();
        }
        (sum + 1.0).scale_pow2(k as i32)
    }

    pub fn ln(self) -> Self {
        if !self.is_positive() {
            return Dd::from_f64(f64::NEG_INFINITY);
        }
        let y0 = Dd::from_f64(libm::log(self.hi));
        // Newton on exp(y) = a: y ← y + a·exp(−y) − 1.
        y0 + self * (-y0).exp() - 1.0
    }

    pub fn log2(self) -> Self {
        self.ln() / LN2
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd::from_f64(x)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    fn add(self, b: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    fn sub(self, b: f64) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    fn mul(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * b);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + q3
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    fn div(self, b: f64) -> Dd {
        self / Dd::from_f64(b)
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

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: Dd, hi: f64, lo: f64, tol: f64) {
        let err = (x - Dd { hi, lo }).to_f64().abs();
        assert!(err <= tol * hi.abs().max(1.0), "{x:?} vs ({hi}, {lo}): err {err:e}");
    }

    // Reference splits computed with 50-digit arithmetic.
    #[test]
    fn transcendental_functions_reach_double_double_accuracy() {
        close(Dd::from_f64(3.0).ln(), 1.0986122886681098, -9.07129723500153e-17, 1e-30);
        close(
            Dd::from_f64(0.7).exp(),
            2.0137527074704766,
            -2.0058243549764793e-16,
            1e-30,
        );
        close(
            Dd::from_f64(-20.0).exp(),
            2.061153622438558e-09,
            -4.19755767595054e-26,
            1e-30,
        );
        close(
            Dd::from_f64(2.0).sqrt(),
            core::f64::consts::SQRT_2,
            -9.667293313452913e-17,
            1e-30,
        );
        close(
            Dd::from_f64(10.0).log2(),
            core::f64::consts::LOG2_10,
            1.661617516973592e-16,
            1e-30,
        );
        close(Dd::from_f64(2.0).ln(), LN2.hi, LN2.lo, 1e-31);
    }

    #[test]
    fn arithmetic_keeps_the_low_word() {
        let one_third = Dd::ONE / 3.0;
        let back = one_third * 3.0 - 1.0;
        assert!(back.to_f64().abs() < 1e-31);

        let big = Dd::from_f64(1e16);
        let s = (big + 1.0) - big;
        assert_eq!(s.to_f64(), 1.0);
    }

    #[test]
    fn log_of_tiny_power_of_two_is_exact_multiple_of_ln2() {
        let x = Dd::from_f64(libm::scalbn(1.0, -70));
        let expected = LN2 * -70.0;
        assert!((x.ln() - expected).to_f64().abs() < 1e-29);
    }
}
