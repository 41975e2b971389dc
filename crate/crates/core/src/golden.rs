//! Exact arithmetic in the golden field `Q[phi]`, `phi^2 = phi + 1`.
//!
//! Every value is stored as a pair of reduced rationals `a + b*phi`. Since
//! `phi` is irrational the representation is unique, so structural equality
//! and hashing coincide with numeric equality.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational; `Ratio` keeps it reduced with a positive denominator.
pub type Rational = BigRational;

pub(crate) const PHI_F64: f64 = 1.618_033_988_749_895;

/// Element `a + b*phi` of `Q[phi]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenNum {
    a: Rational,
    b: Rational,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl GoldenNum {
    pub fn new(a: Rational, b: Rational) -> Self {
        GoldenNum { a, b }
    }

    /// `a + b*phi` from small integers.
    pub fn from_ints(a: i64, b: i64) -> Self {
        GoldenNum { a: rat(a), b: rat(b) }
    }

    /// `an/ad + (bn/bd)*phi`.
    pub fn from_fracs(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        GoldenNum { a: frac(an, ad), b: frac(bn, bd) }
    }

    pub fn from_rational(a: Rational) -> Self {
        GoldenNum { a, b: Rational::zero() }
    }

    pub fn zero() -> Self {
        GoldenNum::default()
    }

    pub fn one() -> Self {
        GoldenNum::from_ints(1, 0)
    }

    pub fn phi() -> Self {
        GoldenNum::from_ints(0, 1)
    }

    /// `sqrt(5) = 2*phi - 1`.
    pub fn sqrt5() -> Self {
        GoldenNum::from_ints(-1, 2)
    }

    /// Rational part.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of `phi`.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate, `phi -> 1 - phi`.
    pub fn conjugate(&self) -> Self {
        GoldenNum { a: &self.a + &self.b, b: -&self.b }
    }

    /// Field norm `x * conj(x) = a^2 + ab - b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(GoldenNum { a: c.a / &n, b: c.b / n })
    }

    pub fn checked_div(&self, rhs: &GoldenNum) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GoldenNum { a: &self.a * r, b: &self.b * r }
    }

    pub fn half(&self) -> Self {
        self.scale(&frac(1, 2))
    }

    /// Floating-point approximation (for display and rendering only).
    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * PHI_F64
    }

    /// Exact sign of `a + b*phi`: -1, 0 or +1.
    ///
    /// A double-precision evaluation settles the sign when the value is far
    /// from zero relative to the rounding error; otherwise the radical is
    /// isolated, `a + b*phi = ((2a + b) + b*sqrt(5)) / 2`, and squares are compared.
    pub fn signum(&self) -> i8 {
        if let (Some(af), Some(bf)) = (self.a.to_f64(), self.b.to_f64()) {
            if af.is_finite() && bf.is_finite() {
                let v = af + bf * PHI_F64;
                let bound = 1e-12 * (af.abs() + bf.abs() * PHI_F64);
                if v > bound {
                    return 1;
                }
                if v < -bound {
                    return -1;
                }
            }
        }
        self.exact_signum()
    }

    pub(crate) fn exact_signum(&self) -> i8 {
        let p = &self.a + &self.a + &self.b;
        let q = &self.b;
        let sp = sign_of(&p);
        let sq = sign_of(q);
        if sp >= 0 && sq >= 0 {
            return if sp == 0 && sq == 0 { 0 } else { 1 };
        }
        if sp <= 0 && sq <= 0 {
            return -1;
        }
        // opposite signs: compare p^2 with 5 q^2
        let p2 = &p * &p;
        let q2 = q * q * rat(5);
        match p2.cmp(&q2) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Least common multiple of the two denominators.
    pub fn common_denominator(&self) -> BigInt {
        num_integer::Integer::lcm(self.a.denom(), self.b.denom())
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `x` as -1, 0, +1.
pub fn gf_sign(x: &GoldenNum) -> i8 {
    x.signum()
}

impl Ord for GoldenNum {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl PartialOrd for GoldenNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: &GoldenNum) -> GoldenNum {
        GoldenNum { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: &GoldenNum) -> GoldenNum {
        GoldenNum { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: &GoldenNum) -> GoldenNum {
        // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        let bd = &self.b * &rhs.b;
        GoldenNum {
            a: &self.a * &rhs.a + &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl Neg for &GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum { a: -&self.a, b: -&self.b }
    }
}

impl Neg for GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum { a: -self.a, b: -self.b }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr<GoldenNum> for GoldenNum {
            type Output = GoldenNum;
            fn $f(self, rhs: GoldenNum) -> GoldenNum { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a GoldenNum> for GoldenNum {
            type Output = GoldenNum;
            fn $f(self, rhs: &GoldenNum) -> GoldenNum { (&self).$f(rhs) }
        }
        impl<'a> $tr<GoldenNum> for &'a GoldenNum {
            type Output = GoldenNum;
            fn $f(self, rhs: GoldenNum) -> GoldenNum { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl From<i64> for GoldenNum {
    fn from(n: i64) -> Self {
        GoldenNum::from_ints(n, 0)
    }
}

impl From<Rational> for GoldenNum {
    fn from(r: Rational) -> Self {
        GoldenNum::from_rational(r)
    }
}

impl fmt::Display for GoldenNum {
    /// Canonical text form `a+b*phi` (or `a-b*phi`), rationals reduced.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}*phi", self.a, -&self.b)
        } else {
            write!(f, "{}+{}*phi", self.a, self.b)
        }
    }
}

impl fmt::Debug for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(String::from(s));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl FromStr for GoldenNum {
    type Err = Error;

    /// Accepts the canonical `a+b*phi` / `a-b*phi` form, a bare rational, or `b*phi`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix("*phi") else {
            return Ok(GoldenNum::from_rational(parse_rational(&t)?));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => {
                let a = parse_rational(&body[..i])?;
                let (sign, rest) = body[i..].split_at(1);
                let mut b = parse_rational(rest)?;
                if sign == "-" {
                    b = -b;
                }
                Ok(GoldenNum { a, b })
            }
            None => Ok(GoldenNum { a: Rational::zero(), b: parse_rational(body)? }),
        }
    }
}

impl GoldenNum {
    /// Canonical string, same as `Display`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

impl One for GoldenNum {
    fn one() -> Self {
        GoldenNum::from_ints(1, 0)
    }
}

impl Zero for GoldenNum {
    fn zero() -> Self {
        GoldenNum::default()
    }
    fn is_zero(&self) -> bool {
        GoldenNum::is_zero(self)
    }
}
