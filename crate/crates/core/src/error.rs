use thiserror::Error;

/// Errors raised anywhere in the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("singularity is not isolated (Milnor number is infinite)")]
    NonIsolated,
    #[error("hypersurface is smooth at the origin")]
    Smooth,
    #[error("polynomial does not vanish at the origin")]
    NotThroughOrigin,
    #[error("polynomial is not weighted homogeneous for the given weights")]
    WeightCheck,
    #[error("truncation insufficient (K = {k}, Dx = {dx}): {reason}")]
    TruncationInsufficient { k: usize, dx: u32, reason: String },
    #[error("residue has a non-rational eigenvalue")]
    IrrationalExponent,
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("derivation has a nonzero constant coefficient (germ splits off a smooth factor)")]
    NotInMDelta,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
