//! Exact structure-constant algebra for unital Jordan algebras that contain
//! `H₂(F)`: Peirce decomposition, extraction of the coordinate algebra
//! `S = Z + N` with its partial odd bracket, and reconstruction as
//! `H₂(F)⊗Z + Fk⊗N`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod constructions;
pub mod element;
pub mod error;
pub mod field;
pub mod h2;
pub mod identities;
pub mod linalg;
pub mod m2;
pub mod peirce;
pub mod report;

pub use algebra::Algebra;
pub use constructions::bilinear::{build_bilinear_form_algebra, BilinearFormData};
pub use constructions::involutive::{build_h2_matrix, cohn_envelope, split_involution, InvolutiveAlgebra};
pub use constructions::lemma4::verify_lemma4;
pub use constructions::tensor::build_tensor_algebra;
pub use element::Element;
pub use error::{Error, Result};
pub use field::{FieldSpec, OddPrime, Scalar};
pub use h2::coordinates::{
    check_module_decomposition, compute_n, compute_z, coordinatize, extract_brackets, DecompositionResult,
};
pub use h2::frame::{verify_h2_frame, H2Frame};
pub use h2::graded::{BilinearTable, Convention, GradedBracketAlgebra, GradedTables};
pub use h2::identities::verify_bracket_identities;
pub use h2::reconstruct::{
    check_isomorphism, isomorphism, reconstruct, rescale_bracket, roundtrip, same_structure,
    transport_structure, verify_isomorphism, Roundtrip,
};
pub use linalg::{LinearMap, Subspace};
pub use peirce::{check_peirce_rules, peirce_decompose, PeirceDecomposition};
pub use report::{Check, Report};
