use std::fmt;

use diagram_core::DiagramError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    /// Diagram size does not match the family spec.
    SizeMismatch { expected: usize, got: usize },
    /// Missing, superfluous or out-of-range family parameters.
    BadParams(String),
    /// A cell label that is not in the family's label set.
    UnknownLabel(String),
    /// The requested data is not defined for this family.
    Unsupported(String),
    /// An enumeration exceeds the configured size bound.
    ResourceLimit(String),
    /// Malformed textual input.
    Parse(String),
    Diagram(DiagramError),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::SizeMismatch { expected, got } => {
                write!(f, "diagram has size {got}, expected {expected}")
            }
            FamilyError::BadParams(m) => write!(f, "bad family parameters: {m}"),
            FamilyError::UnknownLabel(m) => write!(f, "unknown cell label: {m}"),
            FamilyError::Unsupported(m) => write!(f, "unsupported: {m}"),
            FamilyError::ResourceLimit(m) => write!(f, "resource limit: {m}"),
            FamilyError::Parse(m) => write!(f, "parse error: {m}"),
            FamilyError::Diagram(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FamilyError {}

impl From<DiagramError> for FamilyError {
    fn from(e: DiagramError) -> Self {
        FamilyError::Diagram(e)
    }
}
