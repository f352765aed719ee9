use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    /// Operands have different sizes.
    Dimension(String),
    /// Defect counts do not match.
    Defect(String),
    /// Malformed textual input.
    Parse(String),
    /// Blocks do not form a valid partition of the vertex set.
    Invalid(String),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::Dimension(m) => write!(f, "dimension error: {m}"),
            DiagramError::Defect(m) => write!(f, "defect error: {m}"),
            DiagramError::Parse(m) => write!(f, "parse error: {m}"),
            DiagramError::Invalid(m) => write!(f, "invalid diagram: {m}"),
        }
    }
}

impl std::error::Error for DiagramError {}
