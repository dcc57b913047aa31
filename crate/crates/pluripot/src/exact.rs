//! Exact scalar arithmetic: Gaussian rationals and robust conversions to f64.
//!
//! All degree and Lelong-number bookkeeping in this crate is exact; floating
//! point enters only at the final logarithm. The conversions here stay finite
//! for rationals whose numerator/denominator exceed the f64 exponent range.

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Shorthand used throughout the crate.
pub type Rat = BigRational;

/// Parse "p/q" or "p" into an exact rational.
pub fn rat_from_str(s: &str) -> Result<Rat, String> {
    Rat::from_str(s.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Convert a big rational to f64 without overflowing on huge numerator or
/// denominator. `Ratio::to_f64` divides the parts separately, which turns
/// e.g. 10^400 / 10^399 into inf/inf = NaN.
pub fn rat_to_f64(r: &Rat) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let num = r.numer();
    let den = r.denom();
    let sign = if (num.sign() == Sign::Minus) != (den.sign() == Sign::Minus) {
        -1.0
    } else {
        1.0
    };
    let (na, da) = (num.abs(), den.abs());
    // Shift so the integer quotient carries ~80 significant bits.
    let shift: i64 = 80 + da.bits() as i64 - na.bits() as i64;
    let q = if shift >= 0 {
        (na << shift as u64) / da
    } else {
        na / (da << (-shift) as u64)
    };
    let qf = q.to_f64().unwrap_or(f64::INFINITY);
    sign * qf * 2f64.powi(-shift as i32)
}

/// Natural log of a positive rational, accurate even when the parts are huge.
pub fn rat_ln(r: &Rat) -> f64 {
    assert!(r.is_positive(), "rat_ln needs a positive rational");
    ln_big(&r.numer().abs()) - ln_big(&r.denom().abs())
}

fn ln_big(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 52 {
        return n.to_f64().unwrap().ln();
    }
    let shift = bits - 52;
    let head = (n >> shift).to_f64().unwrap();
    head.ln() + shift as f64 * std::f64::consts::LN_2
}

/// A Gaussian rational a + b·i with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat {
            re: rat_int(n),
            im: Rat::zero(),
        }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat {
            re,
            im: Rat::zero(),
        }
    }

    pub fn zero() -> Self {
        GaussRat::from_int(0)
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn i() -> Self {
        GaussRat {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|^2 as an exact rational.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero GaussRat");
        GaussRat {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRat::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True if both parts are integers (a Gaussian integer).
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.denom().is_one() && self.im.denom().is_one()
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({})+({})i", self.re, self.im)
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &GaussRat) -> GaussRat {
                (&self).$method(rhs)
            }
        }
    };
}

impl Add<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}
forward_binop!(Add, add);

impl Sub<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}
forward_binop!(Sub, sub);

impl Mul<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}
forward_binop!(Mul, mul);

impl Div<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self * &rhs.inv()
    }
}
forward_binop!(Div, div);

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

/// Deterministic pairwise summation; the result does not depend on how the
/// slice was produced in parallel, only on its order.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

/// Best rational approximation p/q of x with q <= max_den (continued fractions).
pub fn reconstruct_rational(x: f64, max_den: u64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let neg = x < 0.0;
    let mut x = x.abs();
    let (mut p0, mut q0, mut p1, mut q1): (i128, i128, i128, i128) = (0, 1, 1, 0);
    for _ in 0..64 {
        let a = x.floor();
        if a > 1e18 {
            break;
        }
        let ai = a as i128;
        let p2 = ai * p1 + p0;
        let q2 = ai * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = x - a;
        if frac < 1e-13 {
            break;
        }
        x = 1.0 / frac;
    }
    if q1 == 0 {
        return None;
    }
    let mut r = Rat::new(BigInt::from(p1), BigInt::from(q1));
    if neg {
        r = -r;
    }
    Some(r)
}

/// Reconstruct a Gaussian rational near the complex value `z`, or None.
pub fn reconstruct_gauss(z: Complex64, max_den: u64, tol: f64) -> Option<GaussRat> {
    let re = reconstruct_rational(z.re, max_den)?;
    let im = reconstruct_rational(z.im, max_den)?;
    let g = GaussRat::new(re, im);
    let back = g.to_complex();
    if (back - z).norm() <= tol {
        Some(g)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_conversion_handles_huge_parts() {
        let big = BigInt::from(10).pow(400);
        let r = Rat::new(big.clone() * 3, big);
        assert!((rat_to_f64(&r) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn ln_of_huge_rational() {
        let r = Rat::new(BigInt::from(10).pow(350), BigInt::one());
        let expected = 350.0 * 10f64.ln();
        assert!((rat_ln(&r) - expected).abs() < 1e-8 * expected);
    }

    #[test]
    fn gauss_field_ops() {
        let a = GaussRat::new(rat(1, 2), rat(-3, 4));
        let b = GaussRat::new(rat(2, 3), rat(5, 7));
        let prod = &a * &b;
        let back = &prod / &b;
        assert_eq!(back, a);
        assert_eq!(a.norm_sqr(), rat(1, 4) + rat(9, 16));
    }

    #[test]
    fn reconstruct_simple() {
        let r = reconstruct_rational(0.6666666666666666, 1000).unwrap();
        assert_eq!(r, rat(2, 3));
        let g = reconstruct_gauss(Complex64::new(0.5, -1.25), 1000, 1e-9).unwrap();
        assert_eq!(g, GaussRat::new(rat(1, 2), rat(-5, 4)));
    }

    #[test]
    fn pairwise_sum_matches_naive() {
        let xs: Vec<f64> = (0..1000).map(|i| (i as f64) * 0.1).collect();
        let naive: f64 = xs.iter().sum();
        assert!((pairwise_sum(&xs) - naive).abs() < 1e-9);
    }
}
