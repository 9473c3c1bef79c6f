//! Exact-arithmetic toolkit for semigroup algebras.
//!
//! The crate builds semigroup algebras over prime fields and the rationals,
//! runs structural checks on finite Cayley tables and on two built-in
//! presented families, decides or witnesses the centrally essential property,
//! and localizes at central regular denominators to form rings of fractions.
//! All arithmetic is exact; there is no floating point anywhere.

pub mod algebra;
pub mod essentiality;
pub mod families;
pub mod field;
pub mod findim;
pub mod fractions;
pub mod linalg;
pub mod matrix_ring;
pub mod parallel;
pub mod semigroup;

pub use field::{FieldElement, FieldSpec};
pub use parallel::ExecMode;
