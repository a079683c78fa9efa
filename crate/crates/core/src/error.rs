use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("colon by the zero polynomial")]
    ZeroDivisor,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("ideal is not primary to the maximal ideal at the origin (no stabilization up to N = {cutoff})")]
    NotLocallyFinite { cutoff: u32 },
    #[error("saturation quotient did not stabilize up to N = {cutoff}")]
    NotFinite { cutoff: u32 },
    #[error("no polynomial tail in the samples: {0}")]
    NoPolynomialTail(String),
    #[error("fitted Hilbert coefficient is not an integer: {0}")]
    NonIntegerCoefficient(String),
    #[error("could only find {found} of {wanted} reductions after {tried} candidates")]
    SamplingExhausted {
        found: usize,
        wanted: usize,
        tried: usize,
    },
    #[error("bound violated: {0}")]
    BoundViolation(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that mean "ran out of room" rather than "bad input".
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ResourceLimit(_)
                | Error::NotLocallyFinite { .. }
                | Error::NotFinite { .. }
                | Error::SamplingExhausted { .. }
        )
    }
}
