//! Exact arithmetic for Salem polynomials, integer lattices and lattice
//! isometries, with a verified construction of a rank-19 parabolic lattice
//! inside the K3 lattice and its rank-18 free abelian isometry group.

pub mod arith;
pub mod cli;
pub mod error;
pub mod isomgroup;
pub mod json;
pub mod k3pipeline;
pub mod linalg;
pub mod latticecore;
pub mod polyalg;
pub mod rankkit;

pub use error::{Error, Result};
