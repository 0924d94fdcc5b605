//! Structure and coloring toolkit for small simple graphs.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`graph`]: the immutable [`Graph`] value type, constructors and combinators;
//! * [`graph6`]: the standard printable interchange format;
//! * [`canon`]: canonical labelling for isomorphism tests and corpus dedup;
//! * [`patterns`]: the forbidden-configuration catalog and induced-subgraph detection;
//! * [`solvers`]: exact clique number, exact chromatic number and greedy bounds;
//! * [`kempe`]: `(u, φ)` states, Kempe components and recoloring moves;
//! * [`checks`]: per-graph verdicts for the coloring bounds and vertex-criticality.
//!
//! Long-running searches take a [`Budget`] so callers can cap them and get an
//! explicit [`Undecided`] instead of a wrong answer.

#![no_std]

extern crate alloc;

mod bitset;
pub mod budget;
pub mod canon;
pub mod checks;
mod error;
pub mod graph;
pub mod graph6;
pub mod kempe;
pub mod patterns;
pub mod solvers;

pub use budget::{Budget, NodeLimit, Undecided, Unlimited};
pub use error::Error;
pub use graph::{DegreeStats, Graph, VertexSet};
pub use solvers::{CliqueCert, Coloring};

pub type Result<T, E = Error> = core::result::Result<T, E>;
