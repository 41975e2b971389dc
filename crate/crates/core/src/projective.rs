//! Points of the projective line of directions and the projective maps acting on them.

use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;
use crate::golden::GoldenNum;

/// A direction, in the affine boundary coordinate of the tiling.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ProjPoint {
    Finite(GoldenNum),
    Infinity,
}

impl ProjPoint {
    pub fn finite(x: GoldenNum) -> Self {
        ProjPoint::Finite(x)
    }

    pub fn as_finite(&self) -> Option<&GoldenNum> {
        match self {
            ProjPoint::Finite(x) => Some(x),
            ProjPoint::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ProjPoint::Finite(x) => x.to_f64(),
            ProjPoint::Infinity => f64::INFINITY,
        }
    }

    pub fn neg(&self) -> ProjPoint {
        match self {
            ProjPoint::Finite(x) => ProjPoint::Finite(-x),
            ProjPoint::Infinity => ProjPoint::Infinity,
        }
    }
}

/// Finite points are ordered by their real value; infinity sorts last.
impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ProjPoint::Finite(x), ProjPoint::Finite(y)) => x.cmp(y),
            (ProjPoint::Finite(_), ProjPoint::Infinity) => Ordering::Less,
            (ProjPoint::Infinity, ProjPoint::Finite(_)) => Ordering::Greater,
            (ProjPoint::Infinity, ProjPoint::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(x) => write!(f, "{x}"),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// `x -> (a x + b) / (c x + d)` with golden-field entries and nonzero determinant.
///
/// A negative determinant reverses the cyclic order of the projective line
/// (a reflection of the hyperbolic plane).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mobius {
    m: [[GoldenNum; 2]; 2],
}

impl Mobius {
    pub fn new(a: GoldenNum, b: GoldenNum, c: GoldenNum, d: GoldenNum) -> Result<Self, Error> {
        let mob = Mobius { m: [[a, b], [c, d]] };
        if mob.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(mob)
    }

    pub fn identity() -> Self {
        Mobius {
            m: [[GoldenNum::one(), GoldenNum::zero()], [GoldenNum::zero(), GoldenNum::one()]],
        }
    }

    pub fn entries(&self) -> &[[GoldenNum; 2]; 2] {
        &self.m
    }

    pub fn det(&self) -> GoldenNum {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn preserves_orientation(&self) -> bool {
        self.det().is_positive()
    }

    pub fn apply(&self, x: &ProjPoint) -> ProjPoint {
        let [[a, b], [c, d]] = &self.m;
        match x {
            ProjPoint::Infinity => {
                if c.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(a.checked_div(c).expect("c != 0"))
                }
            }
            ProjPoint::Finite(x) => {
                let den = c * x + d;
                if den.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite((a * x + b).checked_div(&den).expect("den != 0"))
                }
            }
        }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Mobius) -> Mobius {
        let p = &self.m;
        let q = &other.m;
        let e = |i: usize, j: usize| &p[i][0] * &q[0][j] + &p[i][1] * &q[1][j];
        Mobius { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    /// Projective inverse (the adjugate).
    pub fn inverse(&self) -> Mobius {
        let [[a, b], [c, d]] = &self.m;
        Mobius { m: [[d.clone(), -b], [-c, a.clone()]] }
    }

    /// Sends `z1 -> 0`, `z2 -> 1`, `z3 -> inf`, for distinct finite points.
    fn normalizer(z: &[GoldenNum; 3]) -> Result<Mobius, Error> {
        let [z1, z2, z3] = z;
        let d23 = z2 - z3;
        let d21 = z2 - z1;
        Mobius::new(d23.clone(), -(z1 * &d23), d21.clone(), -(z3 * &d21))
    }

    /// The unique projective map sending each `src[i]` to `dst[i]`.
    pub fn from_three_points(src: &[GoldenNum; 3], dst: &[GoldenNum; 3]) -> Result<Mobius, Error> {
        let s = Mobius::normalizer(src)?;
        let t = Mobius::normalizer(dst)?;
        Ok(t.inverse().compose(&s))
    }
}

/// Boundary action of the reflection in the geodesic with ideal endpoints `p`, `q`.
pub fn reflection(p: &ProjPoint, q: &ProjPoint) -> Result<Mobius, Error> {
    let two = GoldenNum::from_ints(2, 0);
    match (p, q) {
        _ if p == q => Err(Error::DegenerateGeodesic),
        (ProjPoint::Finite(p), ProjPoint::Finite(q)) => {
            let s = p + q;
            Mobius::new(s.clone(), -(&two * &(p * q)), two, -s)
        }
        // x -> 2p - x
        (ProjPoint::Finite(p), ProjPoint::Infinity) | (ProjPoint::Infinity, ProjPoint::Finite(p)) => {
            Mobius::new(-GoldenNum::one(), &two * p, GoldenNum::zero(), GoldenNum::one())
        }
        (ProjPoint::Infinity, ProjPoint::Infinity) => unreachable!(),
    }
}

/// Reflect `x` across the geodesic `(p, q)`.
pub fn reflect_across(p: &ProjPoint, q: &ProjPoint, x: &ProjPoint) -> Result<ProjPoint, Error> {
    Ok(reflection(p, q)?.apply(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(an: i64, ad: i64, bn: i64, bd: i64) -> ProjPoint {
        ProjPoint::Finite(GoldenNum::from_fracs(an, ad, bn, bd))
    }

    #[test]
    fn mobius_examples() {
        let half_phi = g(0, 1, 1, 2);
        assert_eq!(Mobius::identity().apply(&half_phi), half_phi);
        let swap = Mobius::new(GoldenNum::zero(), GoldenNum::one(), GoldenNum::one(), GoldenNum::zero()).unwrap();
        assert_eq!(swap.apply(&ProjPoint::Infinity), g(0, 1, 0, 1));
        let shift = Mobius::new(GoldenNum::one(), GoldenNum::one(), GoldenNum::zero(), GoldenNum::one()).unwrap();
        assert_eq!(shift.apply(&ProjPoint::Infinity), ProjPoint::Infinity);
        assert_eq!(
            Mobius::new(GoldenNum::one(), GoldenNum::one(), GoldenNum::one(), GoldenNum::one()),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn reflection_examples() {
        let x = g(0, 1, 1, 2);
        let r = reflect_across(&g(0, 1, 0, 1), &ProjPoint::Infinity, &x).unwrap();
        assert_eq!(r, g(0, 1, -1, 2));
        let p = g(1, 1, -1, 2);
        let q = g(-1, 1, 1, 2);
        assert_eq!(reflect_across(&p, &q, &p).unwrap(), p);
        assert_eq!(reflect_across(&p, &q, &ProjPoint::Infinity).unwrap(), g(0, 1, 0, 1));
        let back = reflect_across(&p, &q, &g(0, 1, 0, 1)).unwrap();
        assert_eq!(back, ProjPoint::Infinity);
        assert_eq!(reflect_across(&p, &p, &x), Err(Error::DegenerateGeodesic));
        assert!(!reflection(&p, &q).unwrap().preserves_orientation());
    }

    #[test]
    fn three_point_map() {
        let src = [GoldenNum::from_ints(0, 0), GoldenNum::from_ints(1, 0), GoldenNum::phi()];
        let dst = [GoldenNum::from_ints(2, 1), GoldenNum::from_ints(-1, 0), GoldenNum::from_fracs(1, 3, 0, 1)];
        let m = Mobius::from_three_points(&src, &dst).unwrap();
        for (s, d) in src.iter().zip(&dst) {
            assert_eq!(m.apply(&ProjPoint::Finite(s.clone())), ProjPoint::Finite(d.clone()));
        }
    }
}
