//! Decompose the complete geometric graph on a dense point set into fewer
//! than `n` plane subgraphs, and check every decomposition independently.
//!
//! - [`geometry`]: exact integer predicates.
//! - [`pointset`]: certified point sets and generators.
//! - [`decomposer`]: grid, star triangulation, witness search, emission.
//! - [`verifier`]: independent certification and brute-force oracles.
//! - [`cli`]: the `dense-partition` command line.

pub mod cli;
pub mod decomposer;
pub mod geometry;
pub mod pointset;
pub mod verifier;

pub use decomposer::{
    decompose, decompose_random_mode, DecomposeConfig, DecomposeError, Decomposition, Edge, Mode, PlaneSubgraph,
    SubgraphKind,
};
pub use geometry::{Point, Segment};
pub use pointset::PointSet;
pub use verifier::{verify_partition, VerificationReport};
