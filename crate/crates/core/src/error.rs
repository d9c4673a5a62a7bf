use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A fixed-width scalar could not hold an intermediate or final value.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// A `MonotoneSource` misbehaved (bounded, or observed decreasing).
    #[error("contract violation: {0}")]
    Contract(String),

    /// The call itself was malformed (wrong argument count, missing inverse).
    #[error("usage error: {0}")]
    Usage(String),

    /// A decoded value is not the image of the structure it was decoded with.
    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("unknown curve `{name}` (valid names: {valid})")]
    UnknownCurve { name: String, valid: String },

    /// A JSON document failed validation; `field` names the offending path.
    #[error("invalid `{field}`: {reason}")]
    InvalidField { field: String, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn field(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidField {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
