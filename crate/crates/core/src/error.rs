use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("arrow {label} appears {count} times (expected exactly 2)")]
    DanglingArrow { label: u32, count: usize },
    #[error("arrow {label} must have exactly one head (U) and one tail (O)")]
    RoleError { label: u32 },
    #[error("arrow {label} carries inconsistent signs")]
    SignMismatch { label: u32 },
    #[error("diagram must have at least one component")]
    NoComponents,
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("not a permutation of 0..{n}")]
    BadPermutation { n: usize },
    #[error("offset {offset} out of range for component of length {len}")]
    OffsetRange { offset: usize, len: usize },
    #[error("component {index} out of range (diagram has {n} components)")]
    ComponentRange { index: usize, n: usize },
    #[error("pretzel parameters do not describe a knot: {0}")]
    NotAKnot(String),
    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("chord diagram doubles to {0} components, expected 1")]
    NotOneComponent(usize),
    #[error("string index {index} out of range (pattern has {n} strings)")]
    BadString { index: usize, n: usize },
    #[error("pattern carrier has {pattern} components but diagram has {diagram}")]
    ComponentMismatch { pattern: usize, diagram: usize },
    #[error("index {index} out of range (link has {n} components)")]
    IndexRange { index: usize, n: usize },
    #[error("index {0} repeated in Milnor index sequence")]
    DuplicateIndex(usize),
    #[error("Milnor index sequence needs at least 2 indices")]
    ShortIndex,
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("projection direction is not generic ({0}); perturb the direction and retry")]
    NonGenericDirection(String),
    #[error("quadrature resolution {got} below minimum {min}")]
    ResolutionTooLow { got: usize, min: usize },
    #[error("unknown built-in link '{0}'")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("no bound is applicable to the given inputs")]
    NoApplicableBounds,
    #[error("value must be positive, got {0}")]
    NonPositive(f64),
    #[error("malformed polynomial file: {0}")]
    PolynomialFormat(String),
}
