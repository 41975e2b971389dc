use alloc::string::String;
use core::fmt;

/// Errors raised by the core kernels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// A 2x2 matrix with zero determinant was used as a projective map.
    SingularMatrix,
    /// Reflection across a geodesic whose two endpoints coincide.
    DegenerateGeodesic,
    /// Index paths use digits 0..=3 and never end in 0.
    InvalidPath(String),
    InvalidLetter(u8),
    InvalidTransform(u8),
    /// The image of an index-level transformation is not a nameable arc vertex.
    UnnameableVertex,
    Parse(String),
    /// An exact trajectory ran into the cone point.
    SingularHit { steps: usize },
    /// No return to the start state within the step budget.
    NotClosed { steps: usize },
    /// Integer overflow in the fixed-width tracer arithmetic.
    Overflow,
    /// Strip detection found a number of distinct words other than two.
    StripCount { found: usize },
    /// A direction outside the set the operation supports.
    UnsupportedDirection(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::SingularMatrix => write!(f, "singular matrix"),
            Error::DegenerateGeodesic => write!(f, "geodesic endpoints coincide"),
            Error::InvalidPath(p) => write!(f, "invalid index path `{p}`"),
            Error::InvalidLetter(l) => write!(f, "invalid letter {l}, expected 1..=5"),
            Error::InvalidTransform(j) => write!(f, "invalid transformation index {j}, expected 1..=4"),
            Error::UnnameableVertex => write!(f, "image is not an indexed arc vertex"),
            Error::Parse(s) => write!(f, "cannot parse `{s}`"),
            Error::SingularHit { steps } => write!(f, "trajectory hit the cone point after {steps} crossings"),
            Error::NotClosed { steps } => write!(f, "trajectory did not close within {steps} crossings"),
            Error::Overflow => write!(f, "fixed-width arithmetic overflow"),
            Error::StripCount { found } => write!(f, "expected two strip words, found {found}"),
            Error::UnsupportedDirection(d) => write!(f, "unsupported direction {d}"),
        }
    }
}

impl core::error::Error for Error {}
