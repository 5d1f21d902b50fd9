//! Exact J-colourings, chromatic colourings under the rainbow neighbourhood
//! convention, and the rainbow neighbourhood equate number `ren(G)` for small
//! simple graphs.

pub mod error;
pub mod chromatic;
pub mod closed_forms;
pub mod graph;
pub mod jcolor;
pub mod ren;
pub mod sequences;

pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph};
