use std::fmt;

/// Error for arguments outside a function's domain (e.g. a triangle entry
/// with `k > n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainError(pub String);

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "domain error: {}", self.0)
    }
}

impl std::error::Error for DomainError {}
