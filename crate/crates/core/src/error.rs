use thiserror::Error;

use crate::metric::Colour;

/// Every failure the geometry kernel can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different fields ({0} and {1})")]
    MixedFields(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid field modulus {0}: must be an odd prime")]
    InvalidModulus(u64),

    #[error("a line needs (a, b) != (0, 0)")]
    DegenerateLine,

    #[error("points coincide")]
    CoincidentPoints,

    #[error("lines are parallel")]
    ParallelLines,

    #[error("points are coincident or collinear, not a triangle")]
    DegenerateTriangle,

    #[error("operation needs 3 to be invertible; the field has characteristic three")]
    CharacteristicThree,

    #[error("line argument {position} is {colour} null")]
    NullLine { colour: Colour, position: u8 },

    #[error("spread at vertex {vertex} is undefined (null line)")]
    UndefinedSpread { vertex: u8 },

    #[error("{0} orthocenter and circumcenter coincide; no unique Euler line")]
    EulerDegenerate(Colour),

    #[error("the three orthocenters are collinear")]
    OmegaDegenerate,

    #[error("internal invariant violated: {0}")]
    InvariantViolated(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
