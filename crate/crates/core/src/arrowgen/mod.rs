//! Generators for the arrow polynomials paired against Gauss diagrams.

mod chord;
mod conway;
mod milnor;
mod polynomial;

pub use chord::{
    enumerate_chord_diagrams, for_each_chord_diagram, ChordDiagram, DEFAULT_CHORD_CAP,
};
pub use conway::{build_c, DEFAULT_CONWAY_CAP};
pub use milnor::{build_z, permute_polynomial, stack, z21, ElementaryTree, DEFAULT_MILNOR_CAP};
pub use polynomial::ArrowPolynomial;
