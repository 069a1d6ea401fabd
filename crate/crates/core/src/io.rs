//! The shared JSON space format:
//! `{ "points": ["label", ...], "opens": [[indices], ...] }`.
//! The `opens` array may be any generating family; the loader closes it
//! to a topology and records whether that added sets.

use serde::{Deserialize, Serialize};

use crate::fintop::{FinSpace, PointSet};
use crate::{Result, TopError};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpaceJson {
    pub points: Vec<String>,
    pub opens: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct LoadedSpace {
    pub space: FinSpace,
    pub labels: Vec<String>,
    /// true when closing the given family added open sets (including the
    /// case where ∅ or the full set had to be added)
    pub closure_added: bool,
}

pub fn from_json(doc: &SpaceJson) -> Result<LoadedSpace> {
    let n = doc.points.len();
    let mut generators = Vec::with_capacity(doc.opens.len());
    for (index, open) in doc.opens.iter().enumerate() {
        if let Some(&point) = open.iter().find(|&&p| p >= n) {
            return Err(TopError::InvalidGenerator { index, point, n });
        }
        generators.push(PointSet::from_indices(open.iter().copied()));
    }
    let space = FinSpace::generated(n, &generators)?;
    // every generator is open in the generated topology, so the closure
    // added something iff the counts differ
    let mut given = generators;
    given.sort_unstable();
    given.dedup();
    let closure_added = given.len() != space.num_opens();
    Ok(LoadedSpace {
        space,
        labels: doc.points.clone(),
        closure_added,
    })
}

pub fn parse_space(text: &str) -> Result<LoadedSpace> {
    let doc: SpaceJson = serde_json::from_str(text)
        .map_err(|e| TopError::InvalidSpace(format!("JSON parse error: {e}")))?;
    from_json(&doc)
}

/// Canonical serialization: default labels `p0..`, opens extensional and
/// in canonical order.
pub fn to_json(space: &FinSpace, labels: Option<&[String]>) -> SpaceJson {
    let points = match labels {
        Some(l) => l.to_vec(),
        None => (0..space.n()).map(|i| format!("p{i}")).collect(),
    };
    SpaceJson {
        points,
        opens: space.opens().iter().map(|o| o.iter().collect()).collect(),
    }
}

pub fn to_json_string(space: &FinSpace, labels: Option<&[String]>) -> String {
    serde_json::to_string(&to_json(space, labels)).expect("space serializes")
}
