//! Crate-wide error type.

/// Errors shared by the parsing, pairing and representation-variety
/// modules.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Malformed monomial text; `offset` is the byte position of the
    /// offending token.
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    /// A `b` index above `2g` or a `gamma` index above `g`.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Genus below 1 (or below the minimum a given operation supports).
    #[error("genus out of range: {0}")]
    GenusOutOfRange(String),

    /// Cohomological degree outside `0..=6g-6`.
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: i64, max: u32 },

    /// No complementary monomial pairs nonzero against the generator.
    /// Poincaré duality guarantees one exists, so this signals an engine
    /// bug rather than a user error.
    #[error("no dual partner found for {0}")]
    NoDualFound(String),

    /// Finite-difference step too coarse to trust.
    #[error("finite-difference step {0:e} too large (maximum 1e-2)")]
    StepTooLarge(f64),

    /// All singular values numerically zero; rank is meaningless.
    #[error("degenerate input: largest singular value {0:e} below 1e-12")]
    DegenerateInput(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
