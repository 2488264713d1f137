//! Multigraph constructions with no complete-graph immersion, and an exact
//! search that decides complete-graph immersion containment.

mod bitset;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod hajos;
pub mod cli;
mod flow;
pub mod immersion;
pub mod metrics;
pub mod multigraph;

pub use error::{Error, Result};
pub use multigraph::{EdgeCut, MultiGraph};
