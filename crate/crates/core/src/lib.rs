//! Exact computation with supercharacter theories of `C_p x C_p`:
//! construction, validation, refinement closure, enumeration,
//! classification by S-normal structure, and conjecture verification.

pub mod carrier;
pub mod conjecture;
pub mod construct;
pub mod counting;
pub mod cyclotomic;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod partition;
pub mod refine;
pub mod sct;
pub mod set;

pub use error::{Error, Result};
pub use group::{GroupElement, Prime, Subgroup};
pub use partition::SetPartition;
pub use sct::{CyclicSct, Sct, Tag};
pub use set::ElemSet;
