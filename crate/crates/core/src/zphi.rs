//! Integer pairs `a + b*phi` used by the tracer after clearing denominators.
//! A fixed-width instance runs first; overflow is reported so the caller can
//! redo the work with big integers.

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::Error;

pub(crate) trait ZInt: Clone + Eq + Ord {
    fn zero() -> Self;
    fn from_big(x: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn small(v: i64) -> Self;
}

impl ZInt for i128 {
    fn zero() -> Self {
        0
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        x.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn small(v: i64) -> Self {
        v.into()
    }
}

impl ZInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn small(v: i64) -> Self {
        BigInt::from(v)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct ZPhi<T> {
    pub a: T,
    pub b: T,
}

impl<T: ZInt> ZPhi<T> {
    pub fn new(a: T, b: T) -> Self {
        ZPhi { a, b }
    }

    pub fn add(&self, o: &Self) -> Result<Self, Error> {
        Ok(ZPhi { a: self.a.add(&o.a).ok_or(Error::Overflow)?, b: self.b.add(&o.b).ok_or(Error::Overflow)? })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, Error> {
        Ok(ZPhi { a: self.a.sub(&o.a).ok_or(Error::Overflow)?, b: self.b.sub(&o.b).ok_or(Error::Overflow)? })
    }

    pub fn neg(&self) -> Result<Self, Error> {
        ZPhi { a: T::zero(), b: T::zero() }.sub(self)
    }

    /// Sign of `a + b*phi`, via `2(a + b*phi) = (2a + b) + b*sqrt5`.
    pub fn signum(&self) -> Result<Ordering, Error> {
        let zero = T::zero();
        let p = self.a.add(&self.a).and_then(|x| x.add(&self.b)).ok_or(Error::Overflow)?;
        let q = &self.b;
        let (sp, sq) = (p.cmp(&zero), q.cmp(&zero));
        match (sp, sq) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => Ok(s),
            (x, y) if x == y => Ok(x),
            _ => {
                let pp = p.mul(&p).ok_or(Error::Overflow)?;
                let qq = q.mul(q).and_then(|x| x.mul(&T::small(5))).ok_or(Error::Overflow)?;
                Ok(if pp > qq { sp } else { sq })
            }
        }
    }

    pub fn cmp(&self, o: &Self) -> Result<Ordering, Error> {
        self.sub(o)?.signum()
    }
}

impl ZPhi<BigInt> {
    pub fn narrow(&self) -> Option<ZPhi<i128>> {
        Some(ZPhi { a: i128::from_big(&self.a)?, b: i128::from_big(&self.b)? })
    }
}

impl<T: ZInt> ZPhi<T> {
    pub fn widen(&self) -> ZPhi<BigInt> {
        ZPhi { a: self.a.to_big(), b: self.b.to_big() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs_agree_across_widths() {
        let cases: [(i64, i64); 8] = [(0, 0), (1, 0), (-1, 1), (1, -1), (-2, 1), (2, -1), (-89, 55), (144, -89)];
        for (a, b) in cases {
            let small = ZPhi::new(a as i128, b as i128);
            let big = small.widen();
            let s = small.signum().unwrap();
            assert_eq!(s, big.signum().unwrap());
            let f = a as f64 + b as f64 * 1.618_033_988_749_895;
            assert_eq!(s, f.partial_cmp(&0.0).unwrap(), "{a} {b}");
        }
    }

    #[test]
    fn overflow_is_reported() {
        let x = ZPhi::new(i128::MAX, 1);
        assert_eq!(x.add(&x), Err(Error::Overflow));
        assert!(ZPhi::new(i128::MAX / 2, -(i128::MAX / 2)).signum().is_err());
    }
}
