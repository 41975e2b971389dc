//! Words over the side labels `1..=5` and the rewriting maps acting on them.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::str::FromStr;

use crate::error::Error;

/// A side label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter(u8);

impl Letter {
    pub fn new(v: u8) -> Result<Self, Error> {
        if (1..=5).contains(&v) {
            Ok(Letter(v))
        } else {
            Err(Error::InvalidLetter(v))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

/// The generating graph is the chain `1 - 4 - 3 - 2 - 5`.
const CHAIN: [u8; 5] = [1, 4, 3, 2, 5];
const CHAIN_POS: [usize; 6] = [usize::MAX, 0, 3, 2, 1, 4];

fn path_slice(from: u8, to: u8) -> impl Iterator<Item = u8> {
    let (i, j) = (CHAIN_POS[from as usize], CHAIN_POS[to as usize]);
    let (lo, hi, rev) = if i <= j { (i + 1, j, false) } else { (j + 1, i, true) };
    let slice = if lo < hi { &CHAIN[lo..hi] } else { &CHAIN[0..0] };
    let n = slice.len();
    (0..n).map(move |k| if rev { slice[n - 1 - k] } else { slice[k] })
}

/// Interior vertices of the path from `from` to `to` in the generating graph.
pub fn graph_path(from: Letter, to: Letter) -> Word {
    Word(path_slice(from.0, to.0).collect())
}

fn shift(v: u8, j: u8) -> u8 {
    (v + 10 - j - 1) % 5 + 1
}

fn check_j(j: u8) -> Result<(), Error> {
    if (1..=4).contains(&j) {
        Ok(())
    } else {
        Err(Error::InvalidTransform(j))
    }
}

/// A linear word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self, Error> {
        if let Some(&bad) = letters.iter().find(|&&v| !(1..=5).contains(&v)) {
            return Err(Error::InvalidLetter(bad));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(parts: &[&Word]) -> Word {
        Word(parts.iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn complement(&self) -> Word {
        Word(self.0.iter().map(|&m| 6 - m).collect())
    }

    /// Letter shift followed by the path insertions between consecutive
    /// letters, without the closing path and without any rotation.
    pub fn tj_interior(&self, j: u8) -> Result<Word, Error> {
        check_j(j)?;
        let s: Vec<u8> = self.0.iter().map(|&v| shift(v, j)).collect();
        let mut out = Vec::with_capacity(s.len() * 3);
        for (i, &v) in s.iter().enumerate() {
            out.push(v);
            if let Some(&next) = s.get(i + 1) {
                out.extend(path_slice(v, next));
            }
        }
        Ok(Word(out))
    }

    /// Linear `T_j`: interior transform, the path from the last letter back
    /// to the first placed after the last letter, then normalized.
    pub fn tj_linear(&self, j: u8) -> Result<Word, Error> {
        let mut w = self.tj_interior(j)?;
        if let (Some(&first), Some(&last)) = (self.0.first(), self.0.last()) {
            w.0.extend(path_slice(shift(last, j), shift(first, j)));
        }
        Ok(w.normalized())
    }

    /// A leading 3 moves to the end; otherwise a trailing 2 or 4 moves to the front.
    pub fn normalized(&self) -> Word {
        let mut v = self.0.clone();
        match (v.first().copied(), v.last().copied()) {
            (Some(3), _) => v.rotate_left(1),
            (_, Some(2 | 4)) => v.rotate_right(1),
            _ => {}
        }
        Word(v)
    }

    pub fn starts_with(&self, p: &[u8]) -> bool {
        self.0.starts_with(p)
    }

    pub fn ends_with(&self, p: &[u8]) -> bool {
        self.0.ends_with(p)
    }

    /// Whether the word splits into blocks `43, 41, 25, 23` from its first letter.
    pub fn is_block_form(&self) -> bool {
        self.0.len().is_multiple_of(2) && self.0.chunks(2).all(is_block)
    }
}

fn is_block(pair: &[u8]) -> bool {
    matches!(pair, [4, 3] | [4, 1] | [2, 5] | [2, 3])
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for v in &self.0 {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "-" {
            return Ok(Word::default());
        }
        let letters = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Parse(String::from(s))))
            .collect::<Result<Vec<_>, _>>()?;
        Word::new(letters)
    }
}

/// Start of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation(s: &[u8]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut f = alloc::vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = s[j % n];
        let mut i = f[j - k - 1];
        while i != usize::MAX && sj != s[(k + i + 1) % n] {
            if sj < s[(k + i + 1) % n] {
                k = j - i - 1;
            }
            i = f[i];
        }
        if i == usize::MAX && sj != s[(k + i.wrapping_add(1)) % n] {
            if sj < s[(k + i.wrapping_add(1)) % n] {
                k = j;
            }
            f[j - k] = usize::MAX;
        } else {
            f[j - k] = i.wrapping_add(1);
        }
    }
    k
}

/// A word up to rotation. The stored representative is kept as given;
/// comparison, ordering and hashing go through the least rotation.
#[derive(Clone)]
pub struct CyclicWord {
    word: Word,
    start: usize,
}

impl CyclicWord {
    pub fn new(word: Word) -> Self {
        let start = least_rotation(&word.0);
        CyclicWord { word, start }
    }

    /// The representative this word was built from.
    pub fn representative(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn canon_iter(&self) -> impl Iterator<Item = u8> + '_ {
        let n = self.word.0.len();
        (0..n).map(move |i| self.word.0[(self.start + i) % n])
    }

    /// The least rotation.
    pub fn canonical(&self) -> Word {
        self.word.rotate(self.start)
    }

    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.word.len().max(1)).map(move |k| self.word.rotate(k))
    }

    /// True iff `w` is some rotation of this word.
    pub fn matches(&self, w: &Word) -> bool {
        w.len() == self.len() && CyclicWord::new(w.clone()) == *self
    }

    pub fn apply_tj(&self, j: u8) -> Result<CyclicWord, Error> {
        check_j(j)?;
        let s: Vec<u8> = self.word.0.iter().map(|&v| shift(v, j)).collect();
        let n = s.len();
        let mut out = Vec::with_capacity(n * 3);
        for i in 0..n {
            out.push(s[i]);
            out.extend(path_slice(s[i], s[(i + 1) % n]));
        }
        Ok(CyclicWord::new(Word(out)))
    }

    pub fn apply_r(&self) -> CyclicWord {
        CyclicWord::new(self.word.complement())
    }

    pub fn reversed(&self) -> CyclicWord {
        let mut v = self.word.0.clone();
        v.reverse();
        CyclicWord::new(Word(v))
    }

    /// Even length and a rotation splitting into blocks `43, 41, 25, 23`.
    pub fn is_block_word(&self) -> bool {
        let w = &self.word;
        !w.is_empty() && (w.is_block_form() || w.rotate(1).is_block_form())
    }
}

impl From<Word> for CyclicWord {
    fn from(w: Word) -> Self {
        CyclicWord::new(w)
    }
}

impl FromStr for CyclicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.parse::<Word>().map(CyclicWord::new)
    }
}

impl PartialEq for CyclicWord {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.canon_iter().eq(other.canon_iter())
    }
}

impl Eq for CyclicWord {}

impl Ord for CyclicWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canon_iter().cmp(other.canon_iter())
    }
}

impl PartialOrd for CyclicWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for CyclicWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.len().hash(state);
        for v in self.canon_iter() {
            v.hash(state);
        }
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.word)
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicWord({})", self.word)
    }
}

pub fn cyclic_equal(u: &CyclicWord, v: &CyclicWord) -> bool {
    u == v
}

/// All positions where `pat` starts inside the cyclic word `text`.
pub(crate) fn cyclic_occurrences(text: &[u8], pat: &[u8]) -> Vec<usize> {
    let n = text.len();
    let m = pat.len();
    if m > n || n == 0 {
        return Vec::new();
    }
    (0..n).filter(|&i| (0..m).all(|k| text[(i + k) % n] == pat[k])).collect()
}

/// Letters `start..start+len` of a cyclic word.
pub(crate) fn cyclic_slice(text: &[u8], start: usize, len: usize) -> Word {
    let n = text.len();
    Word((0..len).map(|k| text[(start + k) % n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn c(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    fn l(v: u8) -> Letter {
        Letter::new(v).unwrap()
    }

    #[test]
    fn letters() {
        assert!(Letter::new(0).is_err());
        assert!(Letter::new(6).is_err());
        assert!("1263".parse::<Word>().is_err());
    }

    #[test]
    fn graph_paths() {
        assert_eq!(graph_path(l(1), l(2)), w("43"));
        assert_eq!(graph_path(l(2), l(1)), w("34"));
        assert_eq!(graph_path(l(3), l(2)), Word::default());
        assert_eq!(graph_path(l(3), l(5)), w("2"));
        assert_eq!(graph_path(l(5), l(1)), w("234"));
        assert_eq!(graph_path(l(4), l(4)), Word::default());
    }

    #[test]
    fn worked_rewrite() {
        assert_eq!(c("2343").apply_tj(1).unwrap(), c("14323234"));
        assert_eq!(c("2343").apply_tj(1).unwrap().representative(), &w("14323234"));
    }

    #[test]
    fn booth() {
        for s in ["414323", "25", "2121", "3", "33133", "14323234", "552552"] {
            let word = w(s);
            let best = (0..word.len()).map(|k| word.rotate(k)).min().unwrap();
            assert_eq!(word.rotate(least_rotation(word.letters())), best, "{s}");
        }
        assert_eq!(c("414323").canonical(), w("143234"));
        assert_eq!(c("25").canonical(), w("25"));
    }

    #[test]
    fn cyclic_equality() {
        assert_eq!(c("2343"), c("4323"));
        assert!(cyclic_equal(&c("25"), &c("52")));
        assert_ne!(c("25"), c("43"));
        assert_ne!(c("2525"), c("25"));
    }

    #[test]
    fn complement() {
        assert_eq!(c("41").apply_r(), c("25"));
        assert_eq!(c("25").apply_r(), c("41"));
        let r = c("414323").apply_r();
        assert_eq!(r, c("252343"));
        assert!(r.is_block_word());
    }

    #[test]
    fn linear_rewrite() {
        assert_eq!(w("4143").tj_linear(2).unwrap(), w("2343234143"));
        assert_eq!(w("23").tj_linear(1).unwrap(), w("414323"));
        for s in ["4143", "23", "2523", "43414325"] {
            for j in 1..=4 {
                let t = w(s).tj_linear(j).unwrap();
                assert_eq!(CyclicWord::new(t.clone()), c(s).apply_tj(j).unwrap());
                assert_eq!(t.normalized().normalized(), t.normalized());
            }
        }
    }

    #[test]
    fn block_words() {
        assert!(c("414323").is_block_word());
        assert!(c("3414").is_block_word());
        assert!(!c("4412").is_block_word());
        assert!(!c("414").is_block_word());
    }

    #[test]
    fn display() {
        assert_eq!(w("2523").to_string(), "2523");
        assert_eq!(c("2523").to_string(), "(2523)");
    }
}
