use thiserror::Error;

use crate::polyring::IntPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Dynkin type {series}{rank}")]
    InvalidCartanType { series: char, rank: usize },

    #[error("outer twist {twist} is not available for {ctype}")]
    InvalidTwist { ctype: String, twist: u8 },

    #[error("node {node} is out of range for a rank {rank} diagram")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("node permutation {0} is not an automorphism of the Dynkin diagram")]
    NotADiagramAutomorphism(String),

    #[error("diagram automorphism does not stabilize the node set {0}")]
    StarDoesNotStabilize(String),

    #[error("full Weyl group enumeration is limited to rank <= 7 (got {0})")]
    EnumerationTooLarge(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("division is not exact; remainder {remainder}")]
    NonExactDivision { remainder: IntPoly },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not specified by source: {0}")]
    NotSpecifiedBySource(String),

    #[error("unsupported group label {0}")]
    UnsupportedGroup(String),

    #[error("inadmissible J-invariant: {0}")]
    InadmissibleProfile(String),

    #[error("unknown label {0}")]
    UnknownLabel(String),

    #[error("no fixture matches {pattern}; available: {}", available.join(", "))]
    UnknownFixture { pattern: String, available: Vec<String> },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
