//! Checkers for the laws relating orbit pairs of neighboring vertices.
//!
//! [`edge`] handles the three vertices a pentagon adds between the ends of
//! one of its parent's sides, [`fan`] the vertices joined to a fixed center
//! by sides of pentagons.

pub mod edge;
pub mod fan;
pub mod report;

pub use edge::{cuts_are_block_words, theorem1_periods, verify_theorem1, verify_theorem3, ConcatPattern, Cuts, EdgeContext};
pub use fan::{check_prefix_conjecture, verify_theorem2, verify_theorem4, FanContext, Side, Theorem4Witnesses};
pub use report::{Failure, TheoremId, VerificationReport};
