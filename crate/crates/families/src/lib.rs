//! Registry of the diagram algebra families: membership predicates, basis
//! enumeration, cell labels, cell-basis (half diagram) enumeration, and
//! exact dimensions.
//!
//! Every family lives inside the partition algebra on `n` strands; a family
//! is a set of diagrams closed under the algebra operations (two of the
//! registered index sets are not closed and carry only bases and dimensions,
//! see [`FamilyId::supports_products`]). Closed-form dimensions are the
//! primary implementations; the enumerators double as brute-force oracles
//! and the integration tests hold the two routes equal.

mod cells;
mod dims;
mod enumerate;
mod error;
mod label;
mod membership;
mod spec;

pub use cells::{
    cell_symmetry, enumerate_cell_basis, enumerate_cell_halves, CellElement, CellSymmetry,
};
pub use dims::{algebra_dim, cell_dim, cell_labels};
pub use enumerate::{enumerate_basis, for_each_basis_diagram, max_enumerable_n};
pub use error::FamilyError;
pub use label::CellLabel;
pub use membership::contains;
pub use spec::{FamilyId, FamilySpec};

pub use combinatorics::Int;
