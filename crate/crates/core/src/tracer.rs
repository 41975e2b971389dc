//! Exact straight-line flow on the double pentagon.
//!
//! For a fixed direction `d`, a point `p` is tracked only through its
//! transverse coordinate `w = cross(p, d)`, which is constant along the
//! trajectory inside a pentagon. The pentagon vertices have transverse
//! coordinates `omega_k`; a trajectory entering through one side leaves
//! through the unique other side whose `omega` interval contains `w`, and
//! the gluing translation shifts `w` by `omega_k + omega_{k+1}`. So the flow
//! is an interval exchange on `w`, computed here in `Z[phi]` after clearing
//! denominators. A trajectory closes when `(pentagon, w, entry side)`
//! repeats, and hits the cone point when `w` equals a vertex coordinate.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::Error;
use crate::golden::{GoldenNum, Rational};
use crate::orbits::{orbits_for_vertex, OrbitPair};
use crate::projective::ProjPoint;
use crate::surface::{matching_labelings, scaled_direction, SurfaceModel, Vector};
use crate::tree::ArcVertex;
use crate::word::{CyclicWord, Word};
use crate::zphi::{ZInt, ZPhi};

/// A point on side `side` of pentagon 0, at parameter `t` from `V_side`
/// towards `V_{side+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TracePoint {
    pub side: usize,
    pub t: GoldenNum,
}

impl TracePoint {
    pub fn position(&self, surface: &SurfaceModel) -> Vector {
        let v = &surface.pentagons[0];
        let e = surface.side_vector(0, self.side);
        let t = crate::penta::PentaReal::from_golden(self.t.clone());
        let a = &v[self.side % 5];
        (&a.0 + &(&t * &e.0), &a.1 + &(&t * &e.1))
    }
}

/// The trajectory leaves `pentagon` through `side` at parameter `t` along
/// that side, with transverse coordinate `w` inside that pentagon.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub pentagon: u8,
    pub side: u8,
    pub t: GoldenNum,
    pub w: GoldenNum,
}

impl Crossing {
    /// The same point as a parameter on side `side` of pentagon 0.
    pub fn t_on_pentagon0(&self) -> GoldenNum {
        if self.pentagon == 0 {
            self.t.clone()
        } else {
            &GoldenNum::one() - &self.t
        }
    }
}

#[derive(Clone, Debug)]
pub struct TraceResult {
    pub word: CyclicWord,
    pub combinatorial_period: usize,
    pub closed: bool,
    pub steps_used: usize,
    /// One entry per letter of `word`, in order.
    pub crossings: Vec<Crossing>,
}

/// Flow in one fixed direction.
#[derive(Clone, Debug)]
pub struct Tracer<'a> {
    surface: &'a SurfaceModel,
    omega: [GoldenNum; 5],
}

struct Raw<T> {
    exits: Vec<(u8, u8, ZPhi<T>)>,
    closed: bool,
}

fn run<T: ZInt>(omega: &[ZPhi<T>; 5], w0: ZPhi<T>, k0: usize, max_steps: usize) -> Result<Raw<T>, Error> {
    let neg: Vec<ZPhi<T>> = omega.iter().map(ZPhi::neg).collect::<Result<_, _>>()?;
    let om = [omega.to_vec(), neg];
    let shifts: Vec<ZPhi<T>> = (0..5).map(|k| omega[k].add(&omega[(k + 1) % 5])).collect::<Result<_, _>>()?;

    let inward = omega[(k0 + 1) % 5].cmp(&omega[k0])?;
    let start = match inward {
        Ordering::Greater => (0usize, w0, k0),
        Ordering::Less => (1usize, w0.sub(&shifts[k0])?, k0),
        Ordering::Equal => return Err(Error::UnsupportedDirection("parallel to the start side".into())),
    };
    let (mut pid, mut w, mut ent) = start.clone();
    let mut exits = Vec::new();
    for step in 0..max_steps {
        let o = &om[pid];
        let mut exit = None;
        for k in 0..5 {
            let (a, b) = (&o[k], &o[(k + 1) % 5]);
            let (ca, cb) = (w.cmp(a)?, w.cmp(b)?);
            if ca == Ordering::Equal || cb == Ordering::Equal {
                return Err(Error::SingularHit { steps: step });
            }
            if k != ent && ca != cb {
                exit = Some(k);
            }
        }
        let ex = exit.ok_or(Error::SingularHit { steps: step })?;
        exits.push((pid as u8, ex as u8, w.clone()));
        w = if pid == 0 { w.sub(&shifts[ex])? } else { w.add(&shifts[ex])? };
        pid = 1 - pid;
        ent = ex;
        if pid == start.0 && ent == start.2 && w == start.1 {
            return Ok(Raw { exits, closed: true });
        }
    }
    Ok(Raw { exits, closed: false })
}

fn scaled(x: &GoldenNum, l: &BigInt) -> ZPhi<BigInt> {
    let part = |r: &Rational| r.numer() * (l / r.denom());
    ZPhi::new(part(x.a()), part(x.b()))
}

impl<'a> Tracer<'a> {
    pub fn new(surface: &'a SurfaceModel, x: &ProjPoint) -> Self {
        Tracer::with_scaled_direction(surface, &scaled_direction(x))
    }

    /// Direction given in the frame `(x, y/s)`.
    pub fn with_scaled_direction(surface: &'a SurfaceModel, d: &(GoldenNum, GoldenNum)) -> Self {
        let v = surface.scaled_vertices();
        let omega = core::array::from_fn(|k| &(&v[k].0 * &d.1) - &(&v[k].1 * &d.0));
        Tracer { surface, omega }
    }

    /// Transverse coordinates of the vertices of pentagon 0.
    pub fn omega(&self) -> &[GoldenNum; 5] {
        &self.omega
    }

    /// The side of pentagon 0 crossed most steeply by the flow.
    pub fn transverse_side(&self) -> usize {
        (0..5)
            .max_by(|&i, &j| self.side_width(i).cmp(&self.side_width(j)).then(j.cmp(&i)))
            .unwrap_or(0)
    }

    fn side_width(&self, k: usize) -> GoldenNum {
        (&self.omega[(k + 1) % 5] - &self.omega[k]).abs()
    }

    /// The cylinder around the closed trajectory through `start`: every
    /// parallel trajectory whose transverse coordinate differs by less than
    /// `below` (downwards) or `above` (upwards) crosses the same sides.
    pub fn cylinder(&self, start: &TracePoint, max_steps: usize) -> Result<Cylinder, Error> {
        let trace = self.trace(start, max_steps)?;
        if !trace.closed {
            return Err(Error::NotClosed { steps: trace.steps_used });
        }
        let mut below: Option<GoldenNum> = None;
        let mut above: Option<GoldenNum> = None;
        for c in &trace.crossings {
            for k in 0..5 {
                let d = &c.w - &self.omega_of(c.pentagon, k);
                if d.is_positive() && below.as_ref().is_none_or(|b| d < *b) {
                    below = Some(d);
                } else if d.is_negative() && above.as_ref().is_none_or(|a| -&d < *a) {
                    above = Some(-&d);
                }
            }
        }
        let (Some(below), Some(above)) = (below, above) else {
            return Err(Error::SingularHit { steps: 0 });
        };
        Ok(Cylinder { trace, below, above })
    }

    fn omega_of(&self, pentagon: u8, k: usize) -> GoldenNum {
        if pentagon == 0 {
            self.omega[k % 5].clone()
        } else {
            -&self.omega[k % 5]
        }
    }

    pub fn trace(&self, start: &TracePoint, max_steps: usize) -> Result<TraceResult, Error> {
        let k0 = start.side % 5;
        let w0 = &self.omega[k0] + &(&start.t * &(&self.omega[(k0 + 1) % 5] - &self.omega[k0]));
        let mut l = w0.common_denominator();
        for o in &self.omega {
            l = l.lcm(&o.common_denominator());
        }
        let om_big: [ZPhi<BigInt>; 5] = core::array::from_fn(|k| scaled(&self.omega[k], &l));
        let w_big = scaled(&w0, &l);

        let narrow: Option<([ZPhi<i128>; 5], ZPhi<i128>)> = (|| {
            let mut arr = Vec::with_capacity(5);
            for o in &om_big {
                arr.push(o.narrow()?);
            }
            Some((core::array::from_fn(|k| arr[k].clone()), w_big.narrow()?))
        })();
        let exits: Vec<(u8, u8, ZPhi<BigInt>)>;
        let closed;
        let fast = match narrow {
            Some((om, w)) => match run(&om, w, k0, max_steps) {
                Err(Error::Overflow) => None,
                other => Some(other?),
            },
            None => None,
        };
        match fast {
            Some(raw) => {
                closed = raw.closed;
                exits = raw.exits.into_iter().map(|(p, s, w)| (p, s, w.widen())).collect();
            }
            None => {
                let raw = run(&om_big, w_big, k0, max_steps)?;
                closed = raw.closed;
                exits = raw.exits;
            }
        }

        let denom = Rational::from_integer(l);
        let mut letters = Vec::with_capacity(exits.len());
        let mut crossings = Vec::with_capacity(exits.len());
        for (pentagon, side, w) in exits {
            letters.push(self.surface.labels[side as usize]);
            let w = GoldenNum::new(Rational::from_integer(w.a) / &denom, Rational::from_integer(w.b) / &denom);
            let a = self.omega_of(pentagon, side as usize);
            let b = self.omega_of(pentagon, side as usize + 1);
            let t = (&w - &a).checked_div(&(&b - &a))?;
            crossings.push(Crossing { pentagon, side, t, w });
        }
        let steps_used = letters.len();
        Ok(TraceResult {
            word: CyclicWord::new(Word::new(letters)?),
            combinatorial_period: steps_used,
            closed,
            steps_used,
            crossings,
        })
    }
}

/// A closed trajectory and the extent of its cylinder in transverse coordinate.
#[derive(Clone, Debug)]
pub struct Cylinder {
    pub trace: TraceResult,
    pub below: GoldenNum,
    pub above: GoldenNum,
}

impl Cylinder {
    pub fn width(&self) -> GoldenNum {
        &self.below + &self.above
    }
}

/// The two strips of a periodic direction.
#[derive(Clone, Debug)]
pub struct StripReport {
    pub orbit_pair: OrbitPair,
    pub periods: (usize, usize),
    /// A start point inside the short strip and one inside the long strip.
    pub sample_points: [TracePoint; 2],
    /// Traces run, including confirmation samples and restarts.
    pub traces: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct StripOptions {
    pub max_steps: usize,
    /// Further samples traced after both words have been seen.
    pub confirmations: usize,
    pub max_traces: usize,
}

impl Default for StripOptions {
    fn default() -> Self {
        StripOptions { max_steps: 200_000, confirmations: 4, max_traces: 256 }
    }
}

/// Finds both strip words of direction `x`. Starts are midpoints of the
/// widest gap, over all sides not parallel to `x`, between crossings seen so
/// far; a start on a saddle connection is moved to the one-third point of
/// its gap, and the gap is dropped if that fails too.
pub fn strips_for_direction(surface: &SurfaceModel, x: &ProjPoint, opts: StripOptions) -> Result<StripReport, Error> {
    let tracer = Tracer::new(surface, x);
    let sides: Vec<usize> = (0..5).filter(|&k| !tracer.side_width(k).is_zero()).collect();
    let mut cuts: Vec<BTreeSet<GoldenNum>> =
        (0..5).map(|_| [GoldenNum::zero(), GoldenNum::one()].into_iter().collect()).collect();
    let mut dead: Vec<(usize, GoldenNum, GoldenNum)> = Vec::new();
    let mut found: Vec<(CyclicWord, TracePoint)> = Vec::new();
    let mut traces = 0usize;
    let mut confirmations = 0usize;
    let fractions = [GoldenNum::from_fracs(1, 2, 0, 1), GoldenNum::from_fracs(1, 3, 0, 1)];

    while traces < opts.max_traces && !(found.len() >= 2 && confirmations >= opts.confirmations) {
        let mut best: Option<(usize, GoldenNum, GoldenNum)> = None;
        for &k in &sides {
            let pts: Vec<&GoldenNum> = cuts[k].iter().collect();
            for p in pts.windows(2) {
                let gap = (k, p[0].clone(), p[1].clone());
                if dead.contains(&gap) {
                    continue;
                }
                let wider = match &best {
                    None => true,
                    Some((_, lo, hi)) => &gap.2 - &gap.1 > hi - lo,
                };
                if wider {
                    best = Some(gap);
                }
            }
        }
        let Some((side, lo, hi)) = best else { break };
        let width = &hi - &lo;
        let mut result = None;
        for frac in &fractions {
            let start = TracePoint { side, t: &lo + &(&width * frac) };
            traces += 1;
            match tracer.trace(&start, opts.max_steps) {
                Ok(r) if r.closed => {
                    result = Some((r, start));
                    break;
                }
                Ok(r) => return Err(Error::NotClosed { steps: r.steps_used }),
                Err(Error::SingularHit { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        let Some((r, start)) = result else {
            dead.push((side, lo, hi));
            continue;
        };
        cuts[side].insert(start.t.clone());
        for c in &r.crossings {
            cuts[c.side as usize].insert(c.t_on_pentagon0());
        }
        if found.len() >= 2 {
            confirmations += 1;
        }
        if !found.iter().any(|(w, _)| *w == r.word) {
            found.push((r.word, start));
            if found.len() > 2 {
                return Err(Error::StripCount { found: found.len() });
            }
        }
    }
    if found.len() != 2 {
        return Err(Error::StripCount { found: found.len() });
    }
    let (b, pb) = found.pop().expect("two words");
    let (a, pa) = found.pop().expect("two words");
    let orbit_pair = OrbitPair::from_unordered(a.clone(), b);
    let sample_points = if orbit_pair.short == a { [pa, pb] } else { [pb, pa] };
    Ok(StripReport { periods: orbit_pair.periods(), orbit_pair, sample_points, traces })
}

/// Side labelings under which the traced strips of alpha, the far endpoint
/// and the three generation-one vertices reproduce their orbit pairs.
pub fn calibrate_labels() -> Result<Vec<[u8; 5]>, Error> {
    let raw_surface = SurfaceModel::with_labels([1, 2, 3, 4, 5]);
    let anchors = ["-", "far", "1", "2", "3"];
    let mut raw = Vec::new();
    let mut expected = Vec::new();
    for a in anchors {
        let v: ArcVertex = a.parse()?;
        let r = strips_for_direction(&raw_surface, &v.direction(), StripOptions::default())?;
        let words = [&r.orbit_pair.short, &r.orbit_pair.long];
        raw.push(words.iter().map(|w| w.representative().letters().to_vec()).collect());
        let o = orbits_for_vertex(&v);
        expected.push(alloc::vec![o.short, o.long]);
    }
    Ok(matching_labelings(&raw, &expected, |w| CyclicWord::new(Word::new(w.to_vec()).expect("labels in range"))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_surface;
    use crate::surface::SIDE_LABELS;
    use crate::tree::root_pentagon;

    fn c(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    fn strips(v: &str) -> StripReport {
        let s = build_surface();
        let x = v.parse::<ArcVertex>().unwrap().direction();
        strips_for_direction(&s, &x, StripOptions::default()).unwrap()
    }

    #[test]
    fn side_directions() {
        let s = build_surface();
        for x in root_pentagon().vertices {
            let r = strips_for_direction(&s, &x, StripOptions::default()).unwrap();
            assert_eq!(r.periods, (2, 2), "{x}");
        }
        let r = strips("far");
        assert_eq!(r.orbit_pair, OrbitPair { short: c("25"), long: c("43") });
    }

    #[test]
    fn alpha_and_first_generation() {
        assert_eq!(strips("-").orbit_pair, OrbitPair { short: c("41"), long: c("23") });
        assert_eq!(strips("1").orbit_pair, OrbitPair { short: c("2523"), long: c("414323") });
        assert_eq!(strips("2").periods, (4, 8));
        assert_eq!(strips("3").orbit_pair, orbits_for_vertex(&"3".parse().unwrap()));
    }

    #[test]
    fn sample_points_lie_in_their_strips() {
        let s = build_surface();
        let x = "13".parse::<ArcVertex>().unwrap().direction();
        let r = strips_for_direction(&s, &x, StripOptions::default()).unwrap();
        let t = Tracer::new(&s, &x);
        assert_eq!(t.trace(&r.sample_points[0], 1000).unwrap().word, r.orbit_pair.short);
        assert_eq!(t.trace(&r.sample_points[1], 1000).unwrap().word, r.orbit_pair.long);
    }

    #[test]
    fn reversed_direction_gives_same_words() {
        let s = build_surface();
        let x = "21".parse::<ArcVertex>().unwrap().direction();
        let d = scaled_direction(&x);
        let fwd = Tracer::with_scaled_direction(&s, &d);
        let back = Tracer::with_scaled_direction(&s, &(-&d.0, -&d.1));
        for i in 1..8 {
            let p = TracePoint { side: fwd.transverse_side(), t: GoldenNum::from_fracs(i, 8, 0, 1) };
            let (Ok(a), Ok(b)) = (fwd.trace(&p, 10_000), back.trace(&p, 10_000)) else { continue };
            assert_eq!(a.word, b.word.reversed());
            assert_eq!(a.word, b.word);
        }
    }

    #[test]
    fn vertex_start_is_singular() {
        let s = build_surface();
        let t = Tracer::new(&s, &"2".parse::<ArcVertex>().unwrap().direction());
        let p = TracePoint { side: 0, t: GoldenNum::zero() };
        assert!(matches!(t.trace(&p, 100), Err(Error::SingularHit { .. })));
    }

    #[test]
    fn step_budget() {
        let s = build_surface();
        let x = "2".parse::<ArcVertex>().unwrap().direction();
        let t = Tracer::new(&s, &x);
        let p = TracePoint { side: t.transverse_side(), t: GoldenNum::from_fracs(2, 7, 0, 1) };
        let r = t.trace(&p, 3).unwrap();
        assert!(!r.closed);
        assert_eq!(r.steps_used, 3);
    }

    #[test]
    fn calibration_is_unique() {
        assert_eq!(calibrate_labels().unwrap(), alloc::vec![SIDE_LABELS]);
    }

    #[test]
    fn cylinders_of_a_side_direction() {
        let s = build_surface();
        let x = ArcVertex::Far.direction();
        let r = strips_for_direction(&s, &x, StripOptions::default()).unwrap();
        let t = Tracer::new(&s, &x);
        let short = t.cylinder(&r.sample_points[0], 100).unwrap();
        let long = t.cylinder(&r.sample_points[1], 100).unwrap();
        assert!(short.width().is_positive() && long.width().is_positive());
        // Widths of the two strips of a side direction are in golden ratio.
        assert_eq!(long.width().checked_div(&short.width()).ok().map(|q| q == GoldenNum::phi() || q == &GoldenNum::phi() - &GoldenNum::one()), Some(true));
    }
}
