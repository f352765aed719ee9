use std::error::Error;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpechtError {
    /// Not a valid tableau, or two tableaux of different shapes were mixed.
    Shape(String),
    /// Permutation degree does not match the number of cells.
    Degree(String),
}

impl fmt::Display for SpechtError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpechtError::Shape(msg) => write!(f, "shape error: {msg}"),
            SpechtError::Degree(msg) => write!(f, "degree error: {msg}"),
        }
    }
}

impl Error for SpechtError {}
