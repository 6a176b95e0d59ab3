pub mod corpus;
pub mod error;
pub mod prior;

pub use error::{Error, Result};
