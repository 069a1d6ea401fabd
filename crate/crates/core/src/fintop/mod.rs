//! Core representation of finite topological spaces: point sets as bitsets,
//! spaces as extensional open-set families, partitions, point maps, and the
//! enumeration / random-generation harness.

mod enumerate;
mod partition;
mod pointmap;
mod pointset;
mod space;

pub use enumerate::{all_topologies_bruteforce, enumerate_topologies, random_corpus, random_space};
pub use partition::Partition;
pub use pointmap::PointMap;
pub use pointset::PointSet;
pub use space::{point_cap, set_point_cap, FinSpace, DEFAULT_POINT_CAP, MAX_POINTS};
