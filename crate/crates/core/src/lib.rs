pub mod automata;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod freeness;
pub mod semigroup;
pub mod transform;
pub mod verify;
pub mod witnesses;

pub use error::{Error, Result};
pub use transform::Transformation;
