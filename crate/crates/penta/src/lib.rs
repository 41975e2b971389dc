//! Std front end for `penta-core`: parallel verification runs, JSON output,
//! an on-disk orbit cache and SVG figures.

pub mod cache;
pub mod json;
pub mod suite;
pub mod svg;

pub use cache::OrbitCache;
pub use suite::{run_suite, SuiteConfig, SuiteReport};
