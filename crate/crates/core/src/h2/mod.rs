//! Coordinatization of unital Jordan algebras containing `H₂(F)`.

pub mod coordinates;
pub mod frame;
pub mod graded;
pub mod identities;
pub mod reconstruct;
