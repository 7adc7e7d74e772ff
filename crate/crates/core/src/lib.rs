#![allow(clippy::needless_range_loop)]

//! Abstract argumentation semantics built on strongly connected components.
//!
//! The crate evaluates the classical conflict-free, naive, grounded and
//! stage semantics together with the SCC-recursive `cf2`/`stg2`, their
//! fixed-point counterparts `icf2`/`istg2`, and the SCC-prioritized
//! `cf1.5`/`stg1.5`, on finite frameworks and on finite truncations of
//! lazily presented infinite ones.

pub mod argset;
pub mod base;
pub mod constructive;
pub mod criteria;
pub mod error;
pub mod extension;
pub mod fixtures;
pub mod framework;
pub mod generators;
pub mod io;
pub mod oracle;
pub mod scc;
pub mod scc_semantics;

#[cfg(test)]
pub(crate) mod testing;

pub use argset::ArgSet;
pub use error::{Error, Result};
pub use extension::{ExtensionSet, Limits, Semantics};
pub use framework::{Framework, Neighborhoods, Restriction};
