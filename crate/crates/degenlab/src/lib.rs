//! degenlab: a small-graph laboratory for degeneracy pairs, covering-pair
//! arithmetic, minor-monotone ceilings, and lower bounds on the positive
//! semidefinite Colin de Verdiere number.
//!
//! The crate is organized around one carrier type, [`graph::Graph`] (simple
//! undirected graphs on up to 64 vertices as adjacency bitmasks), and four
//! layers on top of it:
//!
//! - elementary operations and formats: [`graph`], [`codec`], [`iso`],
//!   [`connectivity`], [`families`];
//! - polynomial machinery: [`degeneracy`], [`covering`], [`generator`];
//! - exponential-but-exact oracles: [`minors`];
//! - bound evaluation and verification sweeps: [`bounds`], [`exact`],
//!   [`harness`].
//!
//! The `examples/` directory has one runnable walkthrough per capability;
//! the `degenlab` binary exposes the same functionality as subcommands.

pub mod bounds;
pub mod cli;
pub mod codec;
pub mod connectivity;
pub mod covering;
pub mod degeneracy;
pub mod error;
pub mod exact;
pub mod families;
pub mod generator;
pub mod graph;
pub mod harness;
pub mod iso;
pub mod minors;

pub use error::{DomainError, FormatError, Graph6Error, GraphError};
pub use graph::{Girth, Graph, MinorOp};
