//! Text formats, seeded instance generators and the command-line front end
//! for [`cubicity_core`].

pub mod cli;
mod error;
pub mod format;
pub mod generate;

pub use error::{Error, Result};
