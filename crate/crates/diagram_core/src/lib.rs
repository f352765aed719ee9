//! Set-partition diagrams on two rows of `n` vertices, their two-parameter
//! composition, and the half-diagram calculus used to build cell modules.
//!
//! A diagram is a set partition of `{1..n, 1'..n'}`. Internally vertex `j`
//! is slot `j-1` and `j'` is slot `n+j-1`, so slots `0..n` form the top row
//! and `n..2n` the bottom row. The textual form is an array of arrays with
//! `k'` written as `-k`, e.g. `[[1,-2],[2,-1]]`.
//!
//! Composition stacks one diagram on top of another and removes interior
//! components. An interior component counts as a loop when every middle
//! vertex in it lies in a block of size at least two on both constituents;
//! it is a path when some vertex sits in a singleton on one side. Products
//! carry the scalar `beta^loops * gamma^paths`, though the two exponents can
//! only be kept distinct consistently (associatively) on families whose
//! blocks have at most two vertices; larger-block families tie `gamma` to
//! `beta` and only the total count matters.

mod diagram;
mod dsu;
pub mod enumerate;
mod error;
mod half;
mod ops;

pub use diagram::Diagram;
pub use error::DiagramError;
pub use half::{top_level_flags, HalfDiagram};
pub use ops::{
    compose, glue_onto_half, join, pair_halves, split, Composition, HalfAction, HalfPairing,
    SplitData,
};

pub use combinatorics::Perm;
