//! The reflection tiling by ideal pentagons and the index scheme for its
//! vertices on the fundamental arc.
//!
//! The arc runs from `alpha = phi/2 - 1` to the far endpoint `1 - phi/2`. A
//! path `n1 n2 ... nk` names the vertex whose position along the arc, in the
//! combinatorial sense, is the base-4 fraction `0.n1n2...nk`: alpha is `0`,
//! the far endpoint is `1`, and base-4 order agrees with the order of the
//! real coordinates. In that picture `R` is `t -> 1 - t` and `T_j` is
//! `t -> (j - t)/4`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::golden::GoldenNum;
use crate::projective::{reflection, Mobius, ProjPoint};

/// Longest path the base-4 helpers accept (`4^60` fits in a `u128`).
pub const MAX_PATH_LEN: usize = 60;

/// A nonempty-or-empty digit sequence over `0..=3` that never ends in `0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexPath {
    digits: Vec<u8>,
}

impl IndexPath {
    pub fn new(digits: Vec<u8>) -> Result<Self, Error> {
        if digits.iter().any(|&d| d > 3) || digits.last() == Some(&0) {
            let text: String = digits.iter().map(|&d| char::from(b'0' + d.min(9))).collect();
            return Err(Error::InvalidPath(text));
        }
        Ok(IndexPath { digits })
    }

    pub fn empty() -> Self {
        IndexPath { digits: Vec::new() }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

impl fmt::Display for IndexPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return f.write_str("-");
        }
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IndexPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexPath({self})")
    }
}

impl FromStr for IndexPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(IndexPath::empty());
        }
        let mut digits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c.to_digit(10) {
                Some(d) if d <= 3 => digits.push(d as u8),
                _ => return Err(Error::InvalidPath(s.into())),
            }
        }
        IndexPath::new(digits).map_err(|_| Error::InvalidPath(s.into()))
    }
}

/// A vertex of the tiling on the closed fundamental arc.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ArcVertex {
    Indexed(IndexPath),
    /// The endpoint `1 - phi/2`, opposite to alpha; it carries no index.
    Far,
}

impl ArcVertex {
    pub fn alpha() -> Self {
        ArcVertex::Indexed(IndexPath::empty())
    }

    pub fn path(&self) -> Option<&IndexPath> {
        match self {
            ArcVertex::Indexed(p) => Some(p),
            ArcVertex::Far => None,
        }
    }

    /// Length of the index, with both endpoints at depth 0.
    pub fn depth(&self) -> usize {
        self.path().map_or(0, IndexPath::len)
    }

    /// Position `num / 4^depth` along the arc.
    pub fn base4(&self) -> Result<(u128, u32), Error> {
        match self {
            ArcVertex::Far => Ok((1, 0)),
            ArcVertex::Indexed(p) => {
                if p.len() > MAX_PATH_LEN {
                    return Err(Error::Overflow);
                }
                let num = p.digits().iter().fold(0u128, |acc, &d| acc * 4 + u128::from(d));
                Ok((num, p.len() as u32))
            }
        }
    }

    /// Inverse of [`ArcVertex::base4`]; `num / 4^depth` must lie in `[0, 1]`.
    pub fn from_base4(mut num: u128, mut depth: u32) -> Result<Self, Error> {
        if depth as usize > MAX_PATH_LEN {
            return Err(Error::Overflow);
        }
        let full = 1u128 << (2 * depth);
        if num > full {
            return Err(Error::UnnameableVertex);
        }
        if num == full {
            return Ok(ArcVertex::Far);
        }
        while depth > 0 && num.is_multiple_of(4) {
            num /= 4;
            depth -= 1;
        }
        let mut digits = Vec::with_capacity(depth as usize);
        for k in (0..depth).rev() {
            digits.push(((num >> (2 * k)) & 3) as u8);
        }
        Ok(ArcVertex::Indexed(IndexPath { digits }))
    }

    /// The vertical reflection.
    pub fn apply_r(&self) -> ArcVertex {
        match self {
            ArcVertex::Far => ArcVertex::alpha(),
            ArcVertex::Indexed(p) if p.is_empty() => ArcVertex::Far,
            ArcVertex::Indexed(p) => ArcVertex::Indexed(apply_r(p)),
        }
    }

    pub fn apply_tj(&self, j: u8) -> Result<ArcVertex, Error> {
        check_j(j)?;
        Ok(match self {
            ArcVertex::Far if j == 1 => ArcVertex::alpha(),
            ArcVertex::Far => ArcVertex::Indexed(IndexPath { digits: alloc::vec![j - 1] }),
            ArcVertex::Indexed(p) if p.is_empty() && j == 4 => ArcVertex::Far,
            ArcVertex::Indexed(p) if p.is_empty() => ArcVertex::Indexed(IndexPath { digits: alloc::vec![j] }),
            ArcVertex::Indexed(p) => ArcVertex::Indexed(apply_tj_index(j, p)?),
        })
    }

    pub fn direction(&self) -> ProjPoint {
        match self {
            ArcVertex::Far => far_point(),
            ArcVertex::Indexed(p) => index_to_direction(p),
        }
    }
}

impl fmt::Display for ArcVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcVertex::Indexed(p) => write!(f, "{p}"),
            ArcVertex::Far => f.write_str("far"),
        }
    }
}

impl FromStr for ArcVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.trim().eq_ignore_ascii_case("far") {
            Ok(ArcVertex::Far)
        } else {
            s.parse().map(ArcVertex::Indexed)
        }
    }
}

fn check_j(j: u8) -> Result<(), Error> {
    if (1..=4).contains(&j) {
        Ok(())
    } else {
        Err(Error::InvalidTransform(j))
    }
}

/// `n1..nk -> (3-n1)..(3-n_{k-1})(4-nk)`; the empty path is fixed.
pub fn apply_r(path: &IndexPath) -> IndexPath {
    let d = path.digits();
    let mut out: Vec<u8> = d.iter().map(|&n| 3 - n).collect();
    if let Some(last) = out.last_mut() {
        *last += 1;
    }
    IndexPath { digits: out }
}

/// Prepends `j - 1` to the reflected path.
///
/// Fails when the result would end in 0, i.e. for `j = 1` on the empty path;
/// see [`ArcVertex::apply_tj`] for the total version.
pub fn apply_tj_index(j: u8, path: &IndexPath) -> Result<IndexPath, Error> {
    check_j(j)?;
    let mut digits = Vec::with_capacity(path.len() + 1);
    digits.push(j - 1);
    digits.extend_from_slice(apply_r(path).digits());
    IndexPath::new(digits).map_err(|_| Error::UnnameableVertex)
}

/// Five vertices in positive cyclic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealPentagon {
    pub vertices: [ProjPoint; 5],
    pub generation: u32,
}

fn g(an: i64, ad: i64, bn: i64, bd: i64) -> ProjPoint {
    ProjPoint::Finite(GoldenNum::from_fracs(an, ad, bn, bd))
}

pub fn alpha_point() -> ProjPoint {
    g(-1, 1, 1, 2)
}

pub fn far_point() -> ProjPoint {
    g(1, 1, -1, 2)
}

/// Side directions of the pentagon: `1-phi/2, phi/2, inf, -phi/2, phi/2-1`.
pub fn root_pentagon() -> IdealPentagon {
    IdealPentagon {
        vertices: [far_point(), g(0, 1, 1, 2), ProjPoint::Infinity, g(0, 1, -1, 2), alpha_point()],
        generation: 0,
    }
}

/// Side `i` joins `vertices[i]` and `vertices[i + 1]`; the fundamental arc is side 4.
pub const ROOT_SIDE: usize = 4;

/// Reflects `p` across side `side`.
///
/// The child lists the side's endpoints first and last, `[L, x, y, z, R]`,
/// so that `x, y, z` are the new vertices in order from `L` to `R`.
pub fn child_pentagon(p: &IdealPentagon, side: usize) -> IdealPentagon {
    let v = &p.vertices;
    let l = &v[side % 5];
    let r = &v[(side + 1) % 5];
    let sigma = reflection(l, r).expect("pentagon vertices are distinct");
    IdealPentagon {
        vertices: [
            l.clone(),
            sigma.apply(&v[(side + 4) % 5]),
            sigma.apply(&v[(side + 3) % 5]),
            sigma.apply(&v[(side + 2) % 5]),
            r.clone(),
        ],
        generation: p.generation + 1,
    }
}

/// The pentagon born on the arc `[0.p, 0.p + 4^-|p|]` for a digit prefix `p`
/// (trailing zeros allowed). The empty prefix gives the generation-1 pentagon
/// on the whole fundamental arc.
pub fn pentagon_for_prefix(prefix: &[u8]) -> IdealPentagon {
    let mut pent = root_pentagon();
    let mut side = ROOT_SIDE;
    for &n in prefix {
        pent = child_pentagon(&pent, side);
        side = n as usize;
    }
    child_pentagon(&pent, side)
}

/// Exact coordinate of the vertex named by `path`.
pub fn index_to_direction(path: &IndexPath) -> ProjPoint {
    match path.digits().split_last() {
        None => alpha_point(),
        Some((&last, prefix)) => pentagon_for_prefix(prefix).vertices[last as usize].clone(),
    }
}

/// A side of a pentagon of generation `>= 1`, seen from the arc it cuts off.
#[derive(Clone, Debug)]
pub struct Edge {
    /// Digits of the arc; may end in zeros.
    pub prefix: Vec<u8>,
    pub lower: ArcVertex,
    pub upper: ArcVertex,
    /// Children of the edge in increasing order.
    pub intermediates: [ArcVertex; 3],
    /// The pentagon `[lower, x, y, z, upper]` reflected across the edge.
    pub pentagon: IdealPentagon,
}

/// Every edge whose child pentagon has generation at most `max_generation`.
pub fn edges(max_generation: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    let mut prefixes: Vec<Vec<u8>> = alloc::vec![Vec::new()];
    for _ in 0..max_generation {
        let mut next = Vec::with_capacity(prefixes.len() * 4);
        for prefix in prefixes {
            out.push(edge_for_prefix(&prefix));
            for n in 0..4u8 {
                let mut p = prefix.clone();
                p.push(n);
                next.push(p);
            }
        }
        prefixes = next;
    }
    out
}

pub fn edge_for_prefix(prefix: &[u8]) -> Edge {
    let depth = prefix.len() as u32 + 1;
    let base = prefix.iter().fold(0u128, |acc, &d| acc * 4 + u128::from(d)) * 4;
    let at = |k: u128| ArcVertex::from_base4(base + k, depth).expect("prefix within range");
    Edge {
        prefix: prefix.to_vec(),
        lower: at(0),
        upper: at(4),
        intermediates: [at(1), at(2), at(3)],
        pentagon: pentagon_for_prefix(prefix),
    }
}

/// All arc vertices with index length at most `max_generation`, both
/// endpoints included, grouped by index length and with their coordinates.
pub fn enumerate_vertices(max_generation: usize) -> Vec<(ArcVertex, ProjPoint)> {
    let mut out = alloc::vec![(ArcVertex::alpha(), alpha_point()), (ArcVertex::Far, far_point())];
    let mut level: Vec<(Vec<u8>, IdealPentagon)> = alloc::vec![(Vec::new(), pentagon_for_prefix(&[]))];
    for _ in 0..max_generation {
        let mut next = Vec::with_capacity(level.len() * 4);
        for (prefix, pent) in &level {
            for n in 1..4u8 {
                let mut digits = prefix.clone();
                digits.push(n);
                out.push((ArcVertex::Indexed(IndexPath { digits }), pent.vertices[n as usize].clone()));
            }
        }
        for (prefix, pent) in level {
            for n in 0..4u8 {
                let mut p = prefix.clone();
                p.push(n);
                let child = child_pentagon(&pent, n as usize);
                next.push((p, child));
            }
        }
        level = next;
    }
    out
}

/// `x -> -x`, the direction-level action of `R`.
pub fn r_mobius() -> Mobius {
    Mobius::new(-GoldenNum::one(), GoldenNum::zero(), GoldenNum::zero(), GoldenNum::one()).expect("invertible")
}

/// The direction-level action of `T_j`, pinned by its values on alpha, the
/// far endpoint and `alpha_2`. It reverses orientation.
pub fn tj_mobius(j: u8) -> Result<Mobius, Error> {
    check_j(j)?;
    let two = ArcVertex::Indexed(IndexPath { digits: alloc::vec![2] });
    let src = [ArcVertex::alpha(), ArcVertex::Far, two];
    let mut s = Vec::with_capacity(3);
    let mut d = Vec::with_capacity(3);
    for v in &src {
        s.push(finite(v.direction())?);
        d.push(finite(v.apply_tj(j)?.direction())?);
    }
    let arr = |v: Vec<GoldenNum>| -> [GoldenNum; 3] { [v[0].clone(), v[1].clone(), v[2].clone()] };
    Mobius::from_three_points(&arr(s), &arr(d))
}

fn finite(p: ProjPoint) -> Result<GoldenNum, Error> {
    match p {
        ProjPoint::Finite(x) => Ok(x),
        ProjPoint::Infinity => Err(Error::UnsupportedDirection("inf".into())),
    }
}
