//! Weyl groups, the cell of unique-reduced-word elements, and Schubert
//! variety smoothness on its translate by the longest element.

pub mod av;
pub mod bp;
pub mod cells;
pub mod closed_forms;
pub mod error;
pub mod patterns;
pub mod rootsys;
pub mod smoothness;
pub mod tableaux;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{CartanType, Family, Root, RootSystem};
pub use smoothness::{Engine, SmoothnessVerdict, Witness};
pub use weyl::{InversionSet, SignedSequence, WeylElement};
