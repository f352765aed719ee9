//! Exact integer sequences, triangles, integer partitions and permutations
//! shared by the diagram-algebra crates.
//!
//! Everything here is arbitrary-precision integer arithmetic; there is no
//! floating point anywhere. Recursions are the primary implementations and
//! the alternating-sum closed forms are kept alongside them as independent
//! oracles (the test suites assert the two routes agree).

pub mod error;
pub mod partitions;
pub mod perm;
pub mod sequences;
pub mod triangles;

pub use error::DomainError;
pub use partitions::{
    compositions_of, compositions_with_sum, num_standard_tableaux, partitions_of,
    IntegerPartition,
};
pub use perm::{all_perms, Perm};
pub use sequences::{
    bell, binomial, catalan, count_set_partitions, double_factorial, exact_div, factorial,
    fuss_catalan, motzkin_number, parity_block_counts, parity_block_counts_rec,
    parity_matching_dim, partial_matching_count, planar_even_dim, planar_even_interior,
    riordan_number, stirling2, stirling2_closed, stirling2_min2, BlockCount, MinBlock, Parity,
};
pub use triangles::{triangle, TriangleKind};

/// Arbitrary-precision integer used for every sequence value.
pub type Int = num::BigInt;
