use std::fmt;

use diagram_core::DiagramError;
use families::FamilyError;
use specht::SpechtError;

#[derive(Debug)]
pub enum EngineError {
    /// Operands disagree on family, label, or parameter constraints.
    Mismatch(String),
    /// The operation is not defined for this family.
    Unsupported(String),
    /// A computation exceeds the configured size bound.
    ResourceLimit(String),
    Diagram(DiagramError),
    Family(FamilyError),
    Specht(SpechtError),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::Mismatch(m) => write!(f, "mismatch: {m}"),
            EngineError::Unsupported(m) => write!(f, "unsupported: {m}"),
            EngineError::ResourceLimit(m) => write!(f, "resource limit: {m}"),
            EngineError::Diagram(e) => write!(f, "{e}"),
            EngineError::Family(e) => write!(f, "{e}"),
            EngineError::Specht(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for EngineError {}

impl From<DiagramError> for EngineError {
    fn from(e: DiagramError) -> Self {
        EngineError::Diagram(e)
    }
}

impl From<FamilyError> for EngineError {
    fn from(e: FamilyError) -> Self {
        EngineError::Family(e)
    }
}

impl From<SpechtError> for EngineError {
    fn from(e: SpechtError) -> Self {
        EngineError::Specht(e)
    }
}
