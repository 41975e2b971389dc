//! The short and long symbolic orbit attached to each arc vertex.
//!
//! A vertex `n1 tail` is the image of `R(tail)` under `T_{n1+1}`, so its
//! orbits are the `T_{n1+1}` images of the orbits of `R(tail)`, short to short
//! and long to long. The recursion bottoms out at the two arc endpoints:
//! alpha carries `(41, 23)` and the far endpoint `(25, 43)`.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::error::Error;
use crate::tree::{ArcVertex, IndexPath};
use crate::word::{CyclicWord, Word};

/// The two strip words of a periodic direction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrbitPair {
    pub short: CyclicWord,
    pub long: CyclicWord,
}

impl OrbitPair {
    /// Orders the two words by length, breaking ties by least rotation.
    pub fn from_unordered(x: CyclicWord, y: CyclicWord) -> Self {
        if (x.len(), &x) <= (y.len(), &y) {
            OrbitPair { short: x, long: y }
        } else {
            OrbitPair { short: y, long: x }
        }
    }

    /// Combinatorial periods `(short, long)`.
    pub fn periods(&self) -> (usize, usize) {
        (self.short.len(), self.long.len())
    }

    /// Both words have the same length, so the order came from the tie rule.
    pub fn is_tie(&self) -> bool {
        self.short.len() == self.long.len()
    }

    pub fn apply_tj(&self, j: u8) -> Result<OrbitPair, Error> {
        Ok(OrbitPair { short: self.short.apply_tj(j)?, long: self.long.apply_tj(j)? })
    }

    pub fn apply_r(&self) -> OrbitPair {
        OrbitPair { short: self.short.apply_r(), long: self.long.apply_r() }
    }
}

impl fmt::Display for OrbitPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.short, self.long)
    }
}

fn pair(short: &[u8], long: &[u8]) -> OrbitPair {
    OrbitPair {
        short: CyclicWord::new(Word::new(short.to_vec()).expect("valid letters")),
        long: CyclicWord::new(Word::new(long.to_vec()).expect("valid letters")),
    }
}

pub fn alpha_orbits() -> OrbitPair {
    pair(&[4, 1], &[2, 3])
}

pub fn far_orbits() -> OrbitPair {
    pair(&[2, 5], &[4, 3])
}

/// Orbit pair of any arc vertex, without caching.
pub fn orbits_for_vertex(v: &ArcVertex) -> OrbitPair {
    let path = match v {
        ArcVertex::Far => return far_orbits(),
        ArcVertex::Indexed(p) => p,
    };
    let Some((&n1, tail)) = path.digits().split_first() else {
        return alpha_orbits();
    };
    // `tail` is a suffix of a valid path, hence valid itself.
    let tail = ArcVertex::Indexed(IndexPath::new(tail.to_vec()).expect("suffix of a valid path"));
    orbits_for_vertex(&tail.apply_r()).apply_tj(n1 + 1).expect("digit below 4")
}

pub fn orbits_for_index(path: &IndexPath) -> OrbitPair {
    orbits_for_vertex(&ArcVertex::Indexed(path.clone()))
}

/// Memoizing front end for [`orbits_for_vertex`].
#[derive(Default, Debug)]
pub struct OrbitTable {
    cache: BTreeMap<IndexPath, OrbitPair>,
}

impl OrbitTable {
    pub fn new() -> Self {
        OrbitTable::default()
    }

    pub fn get(&mut self, v: &ArcVertex) -> OrbitPair {
        let path = match v {
            ArcVertex::Far => return far_orbits(),
            ArcVertex::Indexed(p) => p,
        };
        if let Some(hit) = self.cache.get(path) {
            return hit.clone();
        }
        let out = match path.digits().split_first() {
            None => alpha_orbits(),
            Some((&n1, tail)) => {
                let tail = ArcVertex::Indexed(IndexPath::new(tail.to_vec()).expect("suffix of a valid path"));
                self.get(&tail.apply_r()).apply_tj(n1 + 1).expect("digit below 4")
            }
        };
        self.cache.insert(path.clone(), out.clone());
        out
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndexPath, &OrbitPair)> {
        self.cache.iter()
    }

    pub fn insert(&mut self, path: IndexPath, orbits: OrbitPair) {
        self.cache.insert(path, orbits);
    }
}
