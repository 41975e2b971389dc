//! The quadratic extension `Q[phi][s]`, `s = sin(2*pi/5)`, `s^2 = (2 + phi)/4`.
//!
//! Only needed for the planar (unit circumradius) pentagon coordinates; every
//! cosine of a multiple of `2*pi/5` lies in `Q[phi]` and every sine in `s*Q[phi]`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::golden::GoldenNum;

/// `p + q*s`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PentaReal {
    p: GoldenNum,
    q: GoldenNum,
}

/// `s^2 = (2 + phi)/4`.
pub fn s_squared() -> GoldenNum {
    GoldenNum::from_fracs(1, 2, 1, 4)
}

impl PentaReal {
    pub fn new(p: GoldenNum, q: GoldenNum) -> Self {
        PentaReal { p, q }
    }

    pub fn from_golden(p: GoldenNum) -> Self {
        PentaReal { p, q: GoldenNum::zero() }
    }

    /// `sin(2*pi/5)`.
    pub fn s() -> Self {
        PentaReal { p: GoldenNum::zero(), q: GoldenNum::one() }
    }

    pub fn zero() -> Self {
        PentaReal::default()
    }

    pub fn rational_part(&self) -> &GoldenNum {
        &self.p
    }

    pub fn s_part(&self) -> &GoldenNum {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn inv(&self) -> Result<Self, Error> {
        // (p - q s) / (p^2 - q^2 s^2)
        let den = &(&self.p * &self.p) - &(&(&self.q * &self.q) * &s_squared());
        let inv = den.inv()?;
        Ok(PentaReal { p: &self.p * &inv, q: -(&self.q * &inv) })
    }

    pub fn signum(&self) -> i8 {
        let sp = self.p.signum();
        let sq = self.q.signum();
        if sp >= 0 && sq >= 0 {
            return if sp == 0 && sq == 0 { 0 } else { 1 };
        }
        if sp <= 0 && sq <= 0 {
            return -1;
        }
        let p2 = &self.p * &self.p;
        let q2 = &(&self.q * &self.q) * &s_squared();
        match p2.cmp(&q2) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.p.to_f64() + self.q.to_f64() * s_squared().to_f64().sqrt_approx()
    }
}

trait SqrtApprox {
    fn sqrt_approx(self) -> f64;
}

impl SqrtApprox for f64 {
    /// Newton iteration; `f64::sqrt` is not available without std.
    fn sqrt_approx(self) -> f64 {
        if self <= 0.0 {
            return 0.0;
        }
        let mut x = if self > 1.0 { self } else { 1.0 };
        for _ in 0..64 {
            let next = 0.5 * (x + self / x);
            if next == x {
                break;
            }
            x = next;
        }
        x
    }
}

impl<'a> Add<&'a PentaReal> for &'a PentaReal {
    type Output = PentaReal;
    fn add(self, rhs: &PentaReal) -> PentaReal {
        PentaReal { p: &self.p + &rhs.p, q: &self.q + &rhs.q }
    }
}

impl<'a> Sub<&'a PentaReal> for &'a PentaReal {
    type Output = PentaReal;
    fn sub(self, rhs: &PentaReal) -> PentaReal {
        PentaReal { p: &self.p - &rhs.p, q: &self.q - &rhs.q }
    }
}

impl<'a> Mul<&'a PentaReal> for &'a PentaReal {
    type Output = PentaReal;
    fn mul(self, rhs: &PentaReal) -> PentaReal {
        let qq = &(&self.q * &rhs.q) * &s_squared();
        PentaReal {
            p: &(&self.p * &rhs.p) + &qq,
            q: &(&self.p * &rhs.q) + &(&self.q * &rhs.p),
        }
    }
}

impl Neg for &PentaReal {
    type Output = PentaReal;
    fn neg(self) -> PentaReal {
        PentaReal { p: -&self.p, q: -&self.q }
    }
}

impl fmt::Debug for PentaReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*s", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_squared_relation() {
        let s = PentaReal::s();
        let sq = &s * &s;
        assert_eq!(sq, PentaReal::from_golden(s_squared()));
        assert!((&sq - &PentaReal::from_golden(s_squared())).is_zero());
        // sin^2(72 deg) to double precision
        assert!((s.to_f64() - 0.951_056_516_295_153_5).abs() < 1e-14);
    }

    #[test]
    fn cos_sin_identity() {
        // ((phi - 1)/2)^2 + s^2 = 1
        let c = PentaReal::from_golden(GoldenNum::from_fracs(-1, 2, 1, 2));
        let s = PentaReal::s();
        let one = &(&c * &c) + &(&s * &s);
        assert_eq!(one, PentaReal::from_golden(GoldenNum::one()));
    }

    #[test]
    fn inverse_and_sign() {
        let x = PentaReal::new(GoldenNum::from_ints(1, -1), GoldenNum::from_ints(2, 0));
        let y = &x * &x.inv().unwrap();
        assert_eq!(y, PentaReal::from_golden(GoldenNum::one()));
        assert_eq!(x.signum(), 1);
        assert_eq!((-&x).signum(), -1);
        assert!(PentaReal::zero().inv().is_err());
    }
}
