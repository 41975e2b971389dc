//! Laws around one center vertex `beta` of index length `k`.
//!
//! The vertices joined to `beta` by pentagon sides are `beta + 4^-(k+i)` on
//! the right and `beta - 4^-(k+i)` on the left, `i = 0, 1, 2, ...`, in the
//! base-4 arc picture of [`crate::tree`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::orbits::OrbitPair;
use crate::tree::{ArcVertex, IndexPath};
use crate::word::{CyclicWord, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FanContext {
    pub center: IndexPath,
    pub center_orbits: OrbitPair,
    /// `right[i]` is `beta + 4^-(k+i)`.
    pub right: Vec<(ArcVertex, OrbitPair)>,
    /// `left[i]` is `beta - 4^-(k+i)`.
    pub left: Vec<(ArcVertex, OrbitPair)>,
}

impl FanContext {
    /// The first `count` neighbors on each side of a nonempty center.
    pub fn new(center: &IndexPath, count: usize, mut orbits: impl FnMut(&ArcVertex) -> OrbitPair) -> Result<Self, Error> {
        if center.is_empty() {
            return Err(Error::InvalidPath("a fan center needs a nonempty index".into()));
        }
        let cv = ArcVertex::Indexed(center.clone());
        let (num, depth) = cv.base4()?;
        let mut right = Vec::with_capacity(count);
        let mut left = Vec::with_capacity(count);
        for i in 0..count as u32 {
            let scaled = num.checked_shl(2 * i).ok_or(Error::Overflow)?;
            for (list, n) in [(&mut right, scaled + 1), (&mut left, scaled - 1)] {
                let v = ArcVertex::from_base4(n, depth + i)?;
                let o = orbits(&v);
                list.push((v, o));
            }
        }
        Ok(FanContext { center: center.clone(), center_orbits: orbits(&cv), right, left })
    }

    pub fn side(&self, s: Side) -> &[(ArcVertex, OrbitPair)] {
        match s {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }
}

fn signed(p: (usize, usize), sign: i64) -> (i64, i64) {
    (sign * p.0 as i64, sign * p.1 as i64)
}

/// Signed period pairs `c_i`, `-range <= i <= range`: `c_i` is the `i`-th
/// neighbor on the positive side for `i >= 0` and `c_{-i}` is minus the
/// `(i-1)`-th on the other side.
pub fn progression(fan: &FanContext, positive: Side, range: usize) -> Option<Vec<(i64, i64)>> {
    let (pos, neg) = match positive {
        Side::Right => (&fan.right, &fan.left),
        Side::Left => (&fan.left, &fan.right),
    };
    if pos.len() < range + 1 || neg.len() < range {
        return None;
    }
    let mut out: Vec<(i64, i64)> = (1..=range).rev().map(|i| signed(neg[i - 1].1.periods(), -1)).collect();
    out.extend((0..=range).map(|i| signed(pos[i].1.periods(), 1)));
    Some(out)
}

/// Returns the orientations for which the signed periods around the center
/// step by `(B, b + B)`, `(b, B)` being the center's periods.
pub fn verify_theorem2(fan: &FanContext, range: usize) -> Result<Vec<Side>, String> {
    let (b, big_b) = fan.center_orbits.periods();
    let diff = (big_b as i64, (b + big_b) as i64);
    let mut good = Vec::new();
    let mut last = Vec::new();
    for side in [Side::Right, Side::Left] {
        let seq = progression(fan, side, range).ok_or_else(|| String::from("not enough neighbors for the range"))?;
        if seq.windows(2).all(|p| (p[1].0 - p[0].0, p[1].1 - p[0].1) == diff) {
            good.push(side);
        }
        last = seq;
    }
    if good.is_empty() {
        Err(format!("no orientation steps by {diff:?}; left-positive sequence {last:?}"))
    } else {
        Ok(good)
    }
}

/// Witnesses for the splitting law at one center, `a` and `A` being its
/// short and long words. With `p_n`, `q_n` the `n`-th neighbors on the
/// positive and negative side, every `(x, y)` in `short` satisfies
/// `short(q_n) = A^n x` and `short(p_n) = y A^n` for `A = xy`, and every
/// `(u, v, z, w)` in `long` satisfies `long(q_n) = Abar^n z v a^n` and
/// `long(p_n) = a^n u w Abar^n` for `a = uv`, `Abar = zw`, as cyclic words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Theorem4Witnesses {
    pub positive: Side,
    pub short: Vec<(Word, Word)>,
    pub long: Vec<(Word, Word, Word, Word)>,
}

fn power(w: &Word, n: usize) -> Word {
    let parts: Vec<&Word> = core::iter::repeat_n(w, n).collect();
    Word::concat(&parts)
}

fn split(w: &Word, at: usize) -> (Word, Word) {
    let l = w.letters();
    (Word::new(l[..at].to_vec()).expect("letters"), Word::new(l[at..].to_vec()).expect("letters"))
}

fn distinct_rotations(c: &CyclicWord) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for r in c.rotations() {
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

fn witnesses_for(fan: &FanContext, positive: Side, max_n: usize) -> Option<Theorem4Witnesses> {
    let (pos, neg) = match positive {
        Side::Right => (&fan.right, &fan.left),
        Side::Left => (&fan.left, &fan.right),
    };
    if pos.len() <= max_n || neg.len() <= max_n {
        return None;
    }
    let a = &fan.center_orbits.short;
    let big_a = &fan.center_orbits.long;
    let rot_big_a = distinct_rotations(big_a);

    let x_len = neg[0].1.short.len();
    let mut short = Vec::new();
    if x_len <= big_a.len() {
        for r in &rot_big_a {
            let (x, y) = split(r, x_len);
            let ok = (0..=max_n).all(|n| {
                let an = power(r, n);
                neg[n].1.short.matches(&Word::concat(&[&an, &x])) && pos[n].1.short.matches(&Word::concat(&[&y, &an]))
            });
            if ok {
                short.push((x, y));
            }
        }
    }

    let zv_len = neg[0].1.long.len();
    let mut long = Vec::new();
    for ra in distinct_rotations(a) {
        for u_len in 0..=a.len() {
            let (u, v) = split(&ra, u_len);
            let Some(z_len) = zv_len.checked_sub(v.len()).filter(|&z| z <= big_a.len()) else { continue };
            for rb in &rot_big_a {
                let (z, w) = split(rb, z_len);
                let ok = (0..=max_n).all(|n| {
                    let an = power(&ra, n);
                    let bn = power(rb, n);
                    neg[n].1.long.matches(&Word::concat(&[&bn, &z, &v, &an]))
                        && pos[n].1.long.matches(&Word::concat(&[&an, &u, &w, &bn]))
                });
                if ok {
                    long.push((u.clone(), v.clone(), z, w));
                }
            }
        }
    }
    Some(Theorem4Witnesses { positive, short, long })
}

/// Collects all splitting witnesses valid for every `n <= max_n`, trying
/// both sides as the positive one.
pub fn verify_theorem4(fan: &FanContext, max_n: usize) -> Result<Vec<Theorem4Witnesses>, String> {
    let found: Vec<Theorem4Witnesses> = [Side::Right, Side::Left]
        .into_iter()
        .filter_map(|s| witnesses_for(fan, s, max_n))
        .filter(|w| !w.short.is_empty() && !w.long.is_empty())
        .collect();
    if found.is_empty() {
        Err(format!("no splitting of a={} A={} fits n <= {max_n}", fan.center_orbits.short, fan.center_orbits.long))
    } else {
        Ok(found)
    }
}

fn common_prefix(x: &Word, y: &Word) -> usize {
    x.letters().iter().zip(y.letters()).take_while(|(p, q)| p == q).count()
}

/// Longest common beginning of `x` and `w` over all witness combinations,
/// with a pair attaining it.
pub fn check_prefix_conjecture(found: &[Theorem4Witnesses]) -> Option<(usize, Word, Word)> {
    let mut best: Option<(usize, Word, Word)> = None;
    for wit in found {
        for (x, _) in &wit.short {
            for (_, _, _, w) in &wit.long {
                let n = common_prefix(x, w);
                if best.as_ref().is_none_or(|b| n > b.0) {
                    best = Some((n, x.clone(), w.clone()));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::orbits_for_vertex;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn fan(s: &str, count: usize) -> FanContext {
        FanContext::new(&s.parse().unwrap(), count, orbits_for_vertex).unwrap()
    }

    #[test]
    fn neighbors() {
        let f = fan("1", 3);
        let names: Vec<String> = f.right.iter().map(|(v, _)| format!("{v}")).collect();
        assert_eq!(names, ["2", "11", "101"]);
        let names: Vec<String> = f.left.iter().map(|(v, _)| format!("{v}")).collect();
        assert_eq!(names, ["-", "03", "033"]);
        assert_eq!(fan("3", 1).right[0].0, ArcVertex::Far);
    }

    #[test]
    fn progression_at_alpha1() {
        let f = fan("1", 5);
        assert_eq!(f.center_orbits.periods(), (4, 6));
        let sides = verify_theorem2(&f, 4).unwrap();
        assert!(!sides.is_empty());
        let seq = progression(&f, sides[0], 4).unwrap();
        for p in seq.windows(2) {
            assert_eq!((p[1].0 - p[0].0, p[1].1 - p[0].1), (6, 10));
        }
    }

    #[test]
    fn table_rows() {
        let rows = [
            ("1", "41", "4323", "2523", "-", "23", "4143"),
            ("2", "2523", "4143", "43", "23", "4143", "2523"),
            ("3", "25", "2343", "4143", "-", "43", "2523"),
        ];
        for (c, x, y, u, v, z, wv) in rows {
            let found = verify_theorem4(&fan(c, 4), 3).unwrap();
            let hit = found.iter().any(|f| {
                f.short.contains(&(w(x), w(y))) && f.long.contains(&(w(u), w(v), w(z), w(wv)))
            });
            assert!(hit, "center {c}: {found:?}");
        }
    }

    #[test]
    fn prefix_lengths() {
        for (c, n) in [("1", 2), ("2", 4), ("3", 2)] {
            let found = verify_theorem4(&fan(c, 4), 3).unwrap();
            assert_eq!(check_prefix_conjecture(&found).unwrap().0, n, "center {c}");
        }
    }

    #[test]
    fn empty_center_rejected() {
        assert!(FanContext::new(&IndexPath::empty(), 2, orbits_for_vertex).is_err());
    }
}
