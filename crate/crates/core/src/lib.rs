pub mod algebra;
pub mod error;
pub mod homalg;
pub mod linalg;
pub mod module;
pub mod order;
pub mod report;
pub mod skew;
pub mod sod;

pub use error::{Error, Result};
