pub mod chartab;
pub mod classdata;
pub mod error;
pub mod field;
pub mod group;
pub mod pipeline;
pub mod unitary;
pub mod zalg;

pub use error::{Error, Result};
