//! Brute-force cross-checks: enumeration of the B, V, W and U sets, conflict
//! pair searches, reversal checks and table reproduction.

mod enumerate;
mod pairs;
mod reversal;
mod tables;

pub use enumerate::*;
pub use pairs::*;
pub use reversal::*;
pub use tables::*;
