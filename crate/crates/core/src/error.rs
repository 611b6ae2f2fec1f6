use alloc::string::String;
use core::fmt;

/// Errors surfaced by the algebraic core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two objects had incompatible shapes.
    Shape {
        context: &'static str,
        expected: String,
        actual: String,
    },
    /// A germ that should fix the origin has a nonzero constant term.
    NotPointed { context: String },
    /// The presentation failed validation; the payload is the rendered report.
    InvalidPresentation(String),
    UnknownChart(String),
    /// Form degree does not match what the operation requires.
    Degree { expected: usize, actual: usize },
    MissingAmbient,
    /// A family of chart forms fails to be compatible along the named arrow.
    IncompatibleForm { form: String, arrow: String },
    NotWedgeType,
    /// A presented map does not induce a well-defined map on the fragment colimit.
    InvalidMap(String),
    UnknownCatalogEntry(String),
    BadParameter(String),
    /// An identity that must hold by construction failed. Always a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape {
                context,
                expected,
                actual,
            } => write!(f, "{context}: expected shape {expected}, got {actual}"),
            Error::NotPointed { context } => write!(f, "{context}: germ is not pointed"),
            Error::InvalidPresentation(report) => write!(f, "invalid presentation:\n{report}"),
            Error::UnknownChart(id) => write!(f, "unknown chart `{id}`"),
            Error::Degree { expected, actual } => {
                write!(f, "degree mismatch: expected {expected}, got {actual}")
            }
            Error::MissingAmbient => write!(f, "presentation carries no ambient realization"),
            Error::IncompatibleForm { form, arrow } => {
                write!(f, "form `{form}` is not compatible along arrow `{arrow}`")
            }
            Error::NotWedgeType => write!(f, "presentation is not flagged as wedge-type"),
            Error::InvalidMap(msg) => write!(f, "invalid presented map: {msg}"),
            Error::UnknownCatalogEntry(name) => write!(f, "unknown catalog space `{name}`"),
            Error::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            Error::Internal(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn shape_err(
    context: &'static str,
    expected: impl fmt::Display,
    actual: impl fmt::Display,
) -> Error {
    use alloc::string::ToString;
    Error::Shape {
        context,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}
