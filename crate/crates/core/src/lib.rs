pub mod classify;
pub mod cli;
pub mod dirac;
pub mod error;
pub mod exact;
pub mod expr;
pub mod hecke;
pub mod prinseries;
pub mod rootdata;
pub mod wchar;

pub use error::{Error, Result};
