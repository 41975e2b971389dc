//! The double pentagon: two copies of the regular pentagon, one rotated by a
//! half turn, with parallel sides glued by translations.
//!
//! Pentagon 0 has vertices `V_k` at angles `2*pi*k/5` on the unit circle and
//! pentagon 1 has vertices `-V_k`. Side `k` runs from `V_k` to `V_{k+1}`, and
//! side `k` of pentagon 0 is glued to side `k` of pentagon 1 by the
//! translation `p -> p - (V_k + V_{k+1})`.

use alloc::vec::Vec;

use crate::golden::GoldenNum;
use crate::penta::PentaReal;
use crate::projective::ProjPoint;

pub type Vector = (PentaReal, PentaReal);

/// Labels of sides `0..5`, fixed by matching traced words against the
/// orbits of alpha, the far endpoint and the three generation-one vertices.
pub const SIDE_LABELS: [u8; 5] = [4, 1, 3, 5, 2];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    /// Vertices of pentagon 0 and pentagon 1.
    pub pentagons: [[Vector; 5]; 2],
    /// Label of side `k`, shared by both pentagons.
    pub labels: [u8; 5],
}

fn half(x: GoldenNum) -> GoldenNum {
    x.half()
}

/// `cos(2*pi*k/5)`.
pub fn cos_k(k: usize) -> GoldenNum {
    let phi = GoldenNum::phi();
    match k % 5 {
        0 => GoldenNum::one(),
        1 | 4 => half(&phi - &GoldenNum::one()),
        _ => half(-phi),
    }
}

/// `sin(2*pi*k/5) / sin(2*pi/5)`.
pub fn sin_over_s(k: usize) -> GoldenNum {
    let tau = &GoldenNum::phi() - &GoldenNum::one();
    match k % 5 {
        0 => GoldenNum::zero(),
        1 => GoldenNum::one(),
        2 => tau,
        3 => -tau,
        _ => -GoldenNum::one(),
    }
}

pub fn build_surface() -> SurfaceModel {
    SurfaceModel::with_labels(SIDE_LABELS)
}

impl SurfaceModel {
    pub fn with_labels(labels: [u8; 5]) -> Self {
        let v0: [Vector; 5] = core::array::from_fn(|k| {
            (PentaReal::from_golden(cos_k(k)), PentaReal::new(GoldenNum::zero(), sin_over_s(k)))
        });
        let v1 = v0.clone().map(|(x, y)| (-&x, -&y));
        SurfaceModel { pentagons: [v0, v1], labels }
    }

    /// Translation carrying side `k` of `from` onto side `k` of the other pentagon.
    pub fn gluing(&self, from: usize, k: usize) -> Vector {
        let v = &self.pentagons[0];
        let (a, b) = (&v[k % 5], &v[(k + 1) % 5]);
        let t = (-&(&a.0 + &b.0), -&(&a.1 + &b.1));
        if from == 0 {
            t
        } else {
            (-&t.0, -&t.1)
        }
    }

    /// Vertices of pentagon 0 in the frame `(x, y/s)`, where they lie in `Q[phi]^2`.
    pub fn scaled_vertices(&self) -> [(GoldenNum, GoldenNum); 5] {
        core::array::from_fn(|k| (cos_k(k), sin_over_s(k)))
    }

    pub fn side_vector(&self, pentagon: usize, k: usize) -> Vector {
        let v = &self.pentagons[pentagon];
        let (a, b) = (&v[k % 5], &v[(k + 1) % 5]);
        (&b.0 - &a.0, &b.1 - &a.1)
    }
}

/// Planar direction for the boundary coordinate `x`: `((phi - 1)*s, x)`,
/// with infinity vertical. Opposite vectors name the same direction.
pub fn coordinate_to_vector(x: &ProjPoint) -> Vector {
    match x {
        ProjPoint::Infinity => (PentaReal::zero(), PentaReal::from_golden(GoldenNum::one())),
        ProjPoint::Finite(x) => (
            PentaReal::new(GoldenNum::zero(), &GoldenNum::phi() - &GoldenNum::one()),
            PentaReal::from_golden(x.clone()),
        ),
    }
}

/// The same direction in the frame `(x, y/s)`, scaled by `s`: `(sqrt5/4, x)`.
pub fn scaled_direction(x: &ProjPoint) -> (GoldenNum, GoldenNum) {
    match x {
        ProjPoint::Infinity => (GoldenNum::zero(), GoldenNum::one()),
        ProjPoint::Finite(x) => (GoldenNum::from_fracs(-1, 4, 1, 2), x.clone()),
    }
}

pub fn cross(u: &Vector, v: &Vector) -> PentaReal {
    &(&u.0 * &v.1) - &(&u.1 * &v.0)
}

/// All label assignments whose traced words agree with `expected` at every
/// given direction. `raw` holds, per direction, the words traced with side
/// indices `1..=5` as letters.
pub fn matching_labelings<W: PartialEq>(
    raw: &[Vec<Vec<u8>>],
    expected: &[Vec<W>],
    relabel: impl Fn(&[u8]) -> W,
) -> Vec<[u8; 5]> {
    let mut out = Vec::new();
    let mut perm = [1u8, 2, 3, 4, 5];
    permutations(&mut perm, 0, &mut |labels| {
        let ok = raw.iter().zip(expected).all(|(words, want)| {
            words.len() == want.len()
                && words.iter().all(|w| {
                    let mapped: Vec<u8> = w.iter().map(|&i| labels[i as usize - 1]).collect();
                    want.contains(&relabel(&mapped))
                })
        });
        if ok {
            out.push(*labels);
        }
    });
    out.sort();
    out
}

fn permutations(p: &mut [u8; 5], k: usize, f: &mut impl FnMut(&[u8; 5])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::root_pentagon;

    #[test]
    fn vertices_on_unit_circle() {
        let s = build_surface();
        let one = PentaReal::from_golden(GoldenNum::one());
        for pent in &s.pentagons {
            for (x, y) in pent {
                assert_eq!(&(x * x) + &(y * y), one);
            }
        }
    }

    #[test]
    fn glued_sides_are_opposite() {
        let s = build_surface();
        for k in 0..5 {
            let a = s.side_vector(0, k);
            let b = s.side_vector(1, k);
            assert_eq!(a.0, -&b.0);
            assert_eq!(a.1, -&b.1);
            let t = s.gluing(0, k);
            let v = &s.pentagons[0];
            let moved = (&v[k].0 + &t.0, &v[k].1 + &t.1);
            assert_eq!(moved, s.pentagons[1][(k + 1) % 5]);
        }
    }

    #[test]
    fn root_vertices_are_side_directions() {
        let s = build_surface();
        let mut hit = [false; 5];
        for x in root_pentagon().vertices {
            let d = coordinate_to_vector(&x);
            let sides: Vec<usize> = (0..5).filter(|&k| cross(&s.side_vector(0, k), &d).is_zero()).collect();
            assert_eq!(sides.len(), 1, "{x}");
            hit[sides[0]] = true;
        }
        assert!(hit.iter().all(|&h| h));
    }

    #[test]
    fn scaled_frame_is_consistent() {
        let s = build_surface();
        let sv = s.scaled_vertices();
        for (k, (x, y)) in s.pentagons[0].iter().enumerate() {
            assert_eq!(x.rational_part(), &sv[k].0);
            assert_eq!(y.s_part(), &sv[k].1);
        }
    }
}
