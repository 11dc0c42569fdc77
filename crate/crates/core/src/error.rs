use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An element of Q(w) had a nonzero w component where a rational was required.
    #[error("value {0} is not rational (nonzero w component)")]
    NotRational(String),

    #[error("sequence {kind} is not defined for negative index {n}")]
    NegativeIndexUnsupported { kind: &'static str, n: i64 },

    /// r divisible by 3 makes the sum denominator and the eigenvector scale vanish.
    #[error("r = {r} is divisible by 3; the closed form is degenerate")]
    DegenerateModulus { r: i64 },

    #[error("unknown identity tag `{0}`")]
    UnknownIdentity(String),

    #[error("identity {identity} is not stated for {detail}")]
    DomainError { identity: String, detail: String },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}
