//! Exact integer linear algebra: dense and column-sparse matrices, Hermite and
//! Smith normal forms, integer kernels, and finitely generated abelian groups.
//!
//! Relation matrices store relations as columns throughout.

mod group;
mod matrix;
mod normal_form;

pub use group::{ab_structure, ab_structure_dense, AbGroup, Exponent, FPGroup};
pub use matrix::{IntMatrix, SparseMatrix, SparseTriplets};
pub use normal_form::{hnf, hnf_with_transform, integer_kernel, invariant_factors, snf, ColumnLattice, SmithDecomposition};
