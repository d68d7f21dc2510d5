//! Lower bounds for ropelength, embedding thickness and crossing number
//! in terms of invariants, with reports that compare them to measured
//! values.

mod catalog;
mod constants;
mod report;
mod verify;

pub use catalog::*;
pub use constants::{binomial, c_n, c_tilde, d0, pairs, six_sqrt_six_pi};
pub use report::{round_sig, BoundEntry, BoundReport, Status, TOLERANCE};
pub use verify::{verify_geometry, VerifyOptions};
