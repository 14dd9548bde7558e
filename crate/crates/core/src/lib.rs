//! Exact metric dimension and partition dimension for small graphs and
//! corona products `G ⊙ H`.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: graphs, named families, distances and component features;
//! * [`corona`]: the corona product with its centre/copy labelling;
//! * [`resolve`]: representations, resolvability checkers and twins;
//! * [`solver`]: naive oracles and pruned exact searches;
//! * [`construct`]: explicit resolving partitions of corona products;
//! * [`harness`]: the registry of bounds on `pd(G ⊙ H)` and a sweep runner.

pub mod construct;
pub mod corona;
pub mod error;
pub mod graph;
pub mod harness;
pub mod resolve;
pub mod solver;

pub use corona::{corona, CoronaGraph, Location};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, FamilySpec, Graph, HFeatures, UNREACHABLE};
pub use resolve::{Partition, Verdict, VertexSet};
pub use solver::{SolveResult, SolverConfig};
