pub mod cartan;
pub mod error;
pub mod klr;
pub mod linalg;
pub mod module;
pub mod path_algebra;
pub mod reproduce;
pub mod string_ar;
pub mod poly;
pub mod rational;
pub mod tableaux;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use rational::Q;
