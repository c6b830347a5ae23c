//! Bounded quiver algebras: presentations, rewriting, structure and homological algebra.

pub mod algebra;
pub mod catalog;
pub mod groebner;
pub mod homological;
pub mod induce;
pub mod klr_quiver;
pub mod oracle;
pub mod presentation;
pub mod structure;

pub use algebra::{normalize, normalize_with, BasisElem, FDAlgebra};
pub use presentation::{Path, Presentation, Quiver};
