//! Finite type invariants of knots and links from Gauss diagrams, and
//! ropelength / crossing-number lower bounds checked against polygonal
//! realizations.
//!
//! * [`diagram`] holds Gauss diagrams, arrow patterns and the text codecs.
//! * [`arrowgen`] generates the Conway arrow polynomials `C_2n` and the
//!   Milnor tree polynomials `Z_{n;1}`.
//! * [`pairing`] counts signed embeddings of patterns into diagrams.
//! * [`invariants`] computes linking numbers, Conway coefficients and
//!   Milnor invariants with their indeterminacy.
//! * [`geometry`] measures polygonal links and projects them to diagrams.
//! * [`bounds`] evaluates the lower bounds and assembles reports.

pub mod arrowgen;
pub mod bounds;
pub mod diagram;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod pairing;

pub use diagram::{ArrowPattern, Carrier, GaussDiagram, Sign};
pub use error::{Error, Result};
