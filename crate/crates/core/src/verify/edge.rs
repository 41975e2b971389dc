//! Laws along one edge: the orbit pairs of the three vertices a pentagon adds
//! between the two ends of its parent side.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::orbits::OrbitPair;
use crate::tree::{ArcVertex, Edge};
use crate::word::{cyclic_occurrences, cyclic_slice, CyclicWord, Word};

/// Orbit pairs around one edge. `first` is the lower end `(a, A)`,
/// `second` the upper end `(b, B)`, intermediates in increasing order.
#[derive(Clone, Debug)]
pub struct EdgeContext {
    pub edge: Edge,
    pub first: OrbitPair,
    pub second: OrbitPair,
    pub intermediates: [OrbitPair; 3],
}

impl EdgeContext {
    pub fn new(edge: Edge, mut orbits: impl FnMut(&ArcVertex) -> OrbitPair) -> Self {
        let first = orbits(&edge.lower);
        let second = orbits(&edge.upper);
        let intermediates = [orbits(&edge.intermediates[0]), orbits(&edge.intermediates[1]), orbits(&edge.intermediates[2])];
        EdgeContext { edge, first, second, intermediates }
    }

    pub fn label(&self) -> String {
        format!("{}..{}", self.edge.lower, self.edge.upper)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Piece {
    A,
    BigA,
    B,
    BigB,
}

/// Which long words the cuts must produce. The short words are always
/// `bA`, `AB`, `aB`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum ConcatPattern {
    /// Long words `BaA`, `bBaA`, `AbB`.
    #[default]
    Statement,
    /// Long words `AaB`, `AaBb`, `BbA`.
    Induction,
}

impl ConcatPattern {
    fn longs(self) -> [&'static [Piece]; 3] {
        use Piece::*;
        match self {
            ConcatPattern::Statement => [&[BigB, A, BigA], &[B, BigB, A, BigA], &[BigA, B, BigB]],
            ConcatPattern::Induction => [&[BigA, A, BigB], &[BigA, A, BigB, B], &[BigB, B, BigA]],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConcatPattern::Statement => "statement",
            ConcatPattern::Induction => "induction",
        }
    }
}

/// Linear cuts of the four end words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cuts {
    pub a: Word,
    pub big_a: Word,
    pub b: Word,
    pub big_b: Word,
}

impl Cuts {
    fn piece(&self, p: Piece) -> &Word {
        match p {
            Piece::A => &self.a,
            Piece::BigA => &self.big_a,
            Piece::B => &self.b,
            Piece::BigB => &self.big_b,
        }
    }

    fn build(&self, pieces: &[Piece]) -> Word {
        let parts: Vec<&Word> = pieces.iter().map(|&p| self.piece(p)).collect();
        Word::concat(&parts)
    }

    /// The six intermediate words, short and long for each vertex.
    pub fn words(&self, pattern: ConcatPattern) -> [(Word, Word); 3] {
        use Piece::*;
        let longs = pattern.longs();
        [
            (self.build(&[B, BigA]), self.build(longs[0])),
            (self.build(&[BigA, BigB]), self.build(longs[1])),
            (self.build(&[A, BigB]), self.build(longs[2])),
        ]
    }
}

/// Searches cuts of `a, A, b, B` reproducing all six intermediate words.
///
/// Every rotation of the middle short word is split as `A B`; then `b` is
/// read off the first short word after an occurrence of that `A`, and `a`
/// off the third after an occurrence of `B`. Lengths are checked first.
pub fn verify_theorem3(ctx: &EdgeContext, pattern: ConcatPattern) -> Result<Cuts, String> {
    let (a, big_a) = (&ctx.first.short, &ctx.first.long);
    let (b, big_b) = (&ctx.second.short, &ctx.second.long);
    let [s1, s2, s3] = [&ctx.intermediates[0].short, &ctx.intermediates[1].short, &ctx.intermediates[2].short];
    if s1.len() != b.len() + big_a.len() || s2.len() != big_a.len() + big_b.len() || s3.len() != a.len() + big_b.len() {
        return Err(format!("short lengths {:?} do not fit the ends", [s1.len(), s2.len(), s3.len()]));
    }
    let longs = [&ctx.intermediates[0].long, &ctx.intermediates[1].long, &ctx.intermediates[2].long];
    let mut seen: Vec<Word> = Vec::new();
    for rot in s2.rotations() {
        if seen.contains(&rot) {
            continue;
        }
        seen.push(rot.clone());
        let cut_a = Word::new(rot.letters()[..big_a.len()].to_vec()).expect("letters");
        let cut_b = Word::new(rot.letters()[big_a.len()..].to_vec()).expect("letters");
        if !big_a.matches(&cut_a) || !big_b.matches(&cut_b) {
            continue;
        }
        let s1l = s1.representative().letters();
        let s3l = s3.representative().letters();
        for i in cyclic_occurrences(s1l, cut_a.letters()) {
            let cut_small_b = cyclic_slice(s1l, i + cut_a.len(), b.len());
            if !b.matches(&cut_small_b) {
                continue;
            }
            for k in cyclic_occurrences(s3l, cut_b.letters()) {
                let cut_small_a = cyclic_slice(s3l, k + cut_b.len(), a.len());
                if !a.matches(&cut_small_a) {
                    continue;
                }
                let cuts = Cuts { a: cut_small_a, big_a: cut_a.clone(), b: cut_small_b.clone(), big_b: cut_b.clone() };
                let words = cuts.words(pattern);
                if words.iter().zip(longs).all(|((_, l), want)| want.matches(l)) {
                    return Ok(cuts);
                }
            }
        }
    }
    Err(format!("no cuts of a={} A={} b={} B={} give the {} pattern", a, big_a, b, big_b, pattern.name()))
}

/// Intermediate periods `(b+A, B+a+A)`, `(A+B, b+B+a+A)`, `(a+B, A+b+B)`.
pub fn theorem1_periods(first: (usize, usize), second: (usize, usize)) -> [(usize, usize); 3] {
    let ((a, big_a), (b, big_b)) = (first, second);
    [(b + big_a, big_b + a + big_a), (big_a + big_b, b + big_b + a + big_a), (a + big_b, big_a + b + big_b)]
}

pub fn verify_theorem1(ctx: &EdgeContext) -> Result<(), String> {
    let want = theorem1_periods(ctx.first.periods(), ctx.second.periods());
    let got = [ctx.intermediates[0].periods(), ctx.intermediates[1].periods(), ctx.intermediates[2].periods()];
    if want == got {
        Ok(())
    } else {
        Err(format!("periods {got:?}, expected {want:?}"))
    }
}

/// True when every cut word is an orbit-shaped word on its own.
pub fn cuts_are_block_words(cuts: &Cuts, pattern: ConcatPattern) -> bool {
    cuts.words(pattern)
        .iter()
        .all(|(s, l)| CyclicWord::new(s.clone()).is_block_word() && CyclicWord::new(l.clone()).is_block_word())
}
