//! Converse constructions and the example catalog.

pub mod bilinear;
pub mod catalog;
pub mod involutive;
pub mod lemma4;
pub mod tensor;
