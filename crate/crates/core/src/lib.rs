pub mod error;
pub mod scalars;

pub use error::{Error, Result};
pub mod polyring;
pub mod exactla;
pub mod groups;
pub mod dunkl;
pub mod invariants;
pub mod dihedral;
pub mod cli;
