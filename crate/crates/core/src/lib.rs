//! Exact computations with strict polynomial functors over the integers.
//!
//! The crate evaluates divided, symmetric, exterior and tensor powers on free
//! modules and integer matrices, builds presentations of the cokernel functors
//! `Q^s` and `C_{s,d+1}`, and computes the abelian group structure of their values
//! together with their weight decompositions and degrees. The [`harness`] module
//! runs verification campaigns for the torsion bounds over parameter grids.

pub mod divpow;
pub mod error;
pub mod functors;
pub mod harness;
pub mod padic;
pub mod structure;
pub mod zlinalg;

pub use error::{Error, Result};
