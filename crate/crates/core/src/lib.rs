//! Exact arithmetic for the integral lattices attached to holomorphic
//! symplectic fourfolds of K3^[2] type.
//!
//! The crate computes, purely in integer and rational arithmetic:
//! distinguished divisor classes and their curve-class duals, predicted
//! nodal classes and ample cones of rank-2 Picard lattices, reflection
//! fundamental domains and their chamber decompositions, and the scroll
//! and discriminant calculus of special cubic fourfolds.
//!
//! All types are immutable after construction and all operations are pure
//! functions; everything is freely shareable across threads.

pub mod beauville;
pub mod cone;
pub mod cubic;
pub mod error;
mod mat;
pub mod preset;
pub mod qlattice;
pub mod ray;

pub use error::{Error, Result};
pub use qlattice::{
    divisibility, is_primitive, pair, square, standard_lattice, DiscriminantGroup,
    DivisibilityProfile, GramLattice, LatticeVector, StandardLattice,
};
pub use ray::{ConeSector, IVec2, Ray};
