//! Exact kernels for periodic directions of the double pentagon.
//!
//! * [`golden`] and [`penta`]: arithmetic in `Q[phi]` and `Q[phi][sin(2pi/5)]`.
//! * [`projective`]: directions as points of the projective line, Mobius maps.
//! * [`tree`]: the ideal pentagon tiling and its index scheme.
//! * [`word`] and [`orbits`]: cyclic words, the rewriting maps `T_j` and `R`,
//!   and the short/long orbit pair of every arc vertex.
//! * [`surface`] and [`tracer`]: the translation surface and an exact
//!   trajectory tracer used as an independent oracle.
//! * [`verify`]: checkers for the concatenation, period and splitting laws.

#![no_std]

extern crate alloc;

pub mod error;
pub mod golden;
pub mod orbits;
pub mod penta;
pub mod projective;
pub mod surface;
pub mod tracer;
pub mod tree;
pub mod verify;
pub mod word;
mod zphi;

pub use error::Error;
pub use golden::{gf_sign, GoldenNum, Rational};
pub use orbits::{orbits_for_index, orbits_for_vertex, OrbitPair, OrbitTable};
pub use penta::PentaReal;
pub use projective::{reflect_across, Mobius, ProjPoint};
pub use tree::{ArcVertex, IdealPentagon, IndexPath};
pub use word::{cyclic_equal, CyclicWord, Letter, Word};
