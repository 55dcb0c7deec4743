pub mod error;
pub mod field;
pub mod geometry;
pub mod curve;
pub mod galois;
pub mod report;
pub mod criterion;
pub mod runner;

pub use error::{Error, Result};
