//! Cyclotomic KLR algebras of type A_ell^(1) at level one: polynomial data, matrix
//! representations, relation checking and a collection of explicit modules.

pub mod analysis;
pub mod data;
pub mod rep;
pub mod verify;
pub mod zoo;

pub use data::KlrData;
pub use rep::{MatrixRep, RepJson};
pub use verify::{rescale_rep, verify_rep, VerifyReport};
