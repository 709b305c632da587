use thiserror::Error;

use crate::algebra::Var;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a bijection: point {0} is hit twice")]
    NotBijection(usize),

    #[error("point {point} out of range 1..={m}")]
    PointOutOfRange { point: usize, m: usize },

    #[error("not a chord diagram (fixed-point-free involution)")]
    NotChordDiagram,

    #[error("({0} {1}) is not a 2-cycle of the permutation")]
    NotTwoCycle(usize, usize),

    #[error("2-cycles ({0} {1}) and ({2} {3}) do not interlace")]
    NotInterlacing(usize, usize, usize, usize),

    #[error("points {0} and {1} are not adjacent on the circle")]
    NotAdjacent(usize, usize),

    #[error("points {0} and {1} are ends of the same chord")]
    SameChord(usize, usize),

    #[error("vertices {0} and {1} are not joined by an edge")]
    NotAnEdge(usize, usize),

    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("size {size} exceeds the supported maximum {max}")]
    TooLarge { size: usize, max: usize },

    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },

    #[error("element {0} is a coloop and cannot be deleted")]
    DeleteColoop(usize),

    #[error("set system has no admissible sets")]
    EmptySetSystem,

    #[error("permutation size {m} exceeds the configured cap {cap}")]
    CapExceeded { m: usize, cap: usize },

    #[error("variable {0} has no binding")]
    UnboundVariable(Var),

    #[error("expected a polynomial in z only")]
    NotUnivariate,

    #[error("need at least {need} chords, got {got}")]
    TooFewChords { need: usize, got: usize },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

impl Error {
    /// True for malformed input text, as opposed to well-formed input outside
    /// an operation's domain.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::NotBijection(_)
                | Error::PointOutOfRange { .. }
                | Error::VertexOutOfRange(_)
                | Error::Loop(_)
                | Error::DuplicateEdge(..)
        )
    }
}
