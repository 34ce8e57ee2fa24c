//! Exact graded Lie algebra computations over the integers.
//!
//! The crate builds Hall bases of free Lie algebras on degree-weighted
//! generators, rewrites brackets into Hall coordinates, and works with
//! graded ideals as integer lattices degree by degree. On top of that it
//! implements elimination for partially commutative Lie algebras, the
//! relator ideal of the Formanek-Procesi group over a right-angled Artin
//! group, and free-module checks for relation modules.
//!
//! All arithmetic is exact (`num_bigint::BigInt`).

pub mod cli;
pub mod core_lie;
pub mod fp_ideal;
pub mod module_freeness;
pub mod pcommute;
pub mod tensor_oracle;
pub mod zmodule;

mod error;

pub use error::{LieError, Result};
