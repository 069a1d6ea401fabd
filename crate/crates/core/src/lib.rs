//! topolab: a workbench for finite topological spaces.
//!
//! A finite topology is stored extensionally as the full family of open
//! sets, each a bitset over the points. On top of that representation the
//! crate builds the classical machinery at desk scale: separation axioms,
//! Cantor–Bendixson derivatives, the α-topology, discretizations and
//! compactifications with their order structure, the lattice of unital
//! function subalgebras, the open-set ↔ ideal dictionary, and the δ/β
//! functor pair on the finite discrete slice. Two symbolic infinite
//! spaces (ℕ and its one-point compactification) round out the corpus.
//!
//! Most theorems the crate implements come with an independent brute-force
//! route; [`verify`] packages those cross-checks into deterministic suites
//! that run over exhaustive (n ≤ 4) and seeded random corpora.

pub mod classify;
pub mod compactify;
pub mod discretize;
mod error;
pub mod fintop;
pub mod ideals;
pub mod io;
pub mod lattice;
pub mod ratspan;
pub mod symdual;
pub mod verify;

pub use error::TopError;
pub use fintop::{FinSpace, Partition, PointMap, PointSet};
pub use lattice::FiniteLattice;

pub type Result<T> = std::result::Result<T, TopError>;
