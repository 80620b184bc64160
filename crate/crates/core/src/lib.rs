pub mod cfrac;
pub mod cli;
pub mod error;
pub mod families;
pub mod lattice;
pub mod rset;
pub mod search;

pub use error::{Error, Result};
