pub mod algebra;
pub mod boson;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod symfunc;
pub mod verifier;

pub use error::{Error, Result};
