//! Extremal graphs for given degree sequences.
//!
//! The crate builds the greedy extremal graphs (greedy trees, greedy
//! unicyclic graphs, their boundary variants), computes the invariants they
//! optimize, enumerates every realization of small degree sequences and
//! checks the extremal claims exhaustively against those enumerations.

pub mod construct;
pub mod degseq;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod verify;

pub use degseq::{classify, Classification, DegreeSequence};
pub use error::{Error, Result};
pub use graph::{BoundaryGraph, Graph, RootedTree};
