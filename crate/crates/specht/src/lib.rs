//! Specht modules of the symmetric group over exact rationals.
//!
//! A standard tableau indexes a standard polytabloid; permutations act by
//! relabelling entries and re-expressing the result in the standard basis
//! through Garnir straightening. The bilinear form is evaluated directly on
//! signed tabloid expansions, so every value is an exact rational with no
//! radicals anywhere.

mod error;
mod form;
mod straighten;
mod tableau;
mod vector;

pub use error::SpechtError;
pub use form::{polytabloid_expansion, specht_form, Tabloid};
pub use straighten::{act, straighten};
pub use tableau::{standard_tableaux, StandardTableau};
pub use vector::SpechtVector;

/// Coefficient field.
pub type Coeff = num::BigRational;
