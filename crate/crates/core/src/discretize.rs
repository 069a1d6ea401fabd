//! Discretizations of a finite space: classification of candidate pairs,
//! brute-force search, the weak/preweak lattices, density, and the
//! compactification/discretization duality check.

use crate::classify;
use crate::fintop::{FinSpace, PointMap, PointSet};
use crate::lattice::FiniteLattice;
use crate::{Result, TopError};

/// Point cap for the brute-force subset searches and the lattices.
pub const DISC_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DiscLevel {
    Preweak,
    Weak,
    Full,
}

/// A discretization in canonical form: every equivalence class of pairs
/// `(f, Y)` has a unique representative `(j, S)` with `S ⊆ X` carrying the
/// discrete topology and `j` the inclusion, so the image subset is the
/// whole datum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Discretization {
    pub image: PointSet,
    pub level: DiscLevel,
}

/// Which of the three levels a candidate pair satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairClass {
    /// injective
    pub preweak: bool,
    /// embedding with open range
    pub weak: bool,
    /// embedding with dense range
    pub full: bool,
}

impl PairClass {
    pub fn strongest(&self) -> Option<DiscLevel> {
        if self.full {
            Some(DiscLevel::Full)
        } else if self.weak {
            Some(DiscLevel::Weak)
        } else if self.preweak {
            Some(DiscLevel::Preweak)
        } else {
            None
        }
    }
}

/// Classify a candidate pair: `f` must map a discrete space into `x`.
pub fn classify_pair(f: &PointMap, x: &FinSpace) -> Result<PairClass> {
    if f.codomain() != x {
        return Err(TopError::InvalidMap(
            "candidate map does not land in the given space".into(),
        ));
    }
    if !f.domain().is_discrete() {
        return Err(TopError::InvalidMap(
            "domain of a discretization candidate must be discrete".into(),
        ));
    }
    let preweak = f.is_injective();
    let embedding = preweak && f.is_embedding();
    Ok(PairClass {
        preweak,
        weak: embedding && f.has_open_range(),
        full: embedding && f.has_dense_range(),
    })
}

/// Canonical representative of a preweak-or-better pair.
pub fn canonicalize(f: &PointMap, x: &FinSpace) -> Result<Discretization> {
    let class = classify_pair(f, x)?;
    match class.strongest() {
        Some(level) => Ok(Discretization {
            image: f.image(),
            level,
        }),
        None => Err(TopError::NotADiscretization("map is not injective".into())),
    }
}

fn is_discrete_subspace(x: &FinSpace, s: PointSet) -> bool {
    s.iter()
        .all(|p| x.min_nbhd(p).inter(s) == PointSet::singleton(p))
}

fn check_disc_cap(x: &FinSpace) -> Result<()> {
    if x.n() > DISC_CAP {
        return Err(TopError::TooLarge {
            what: "discretization search points",
            size: x.n(),
            cap: DISC_CAP,
        });
    }
    Ok(())
}

/// All full discretizations (canonical subset representatives): subsets
/// that are discrete in the subspace topology and dense.
pub fn all_discretizations(x: &FinSpace) -> Result<Vec<Discretization>> {
    check_disc_cap(x)?;
    Ok(PointSet::all_subsets(x.n())
        .filter(|&s| is_discrete_subspace(x, s) && classify::is_dense(x, s))
        .map(|image| Discretization {
            image,
            level: DiscLevel::Full,
        })
        .collect())
}

/// All weak discretizations as canonical subsets: open sets carrying the
/// discrete subspace topology. The correspondence with subsets of the
/// isolated points is a theorem the verify suites check.
pub fn all_weak_discretizations(x: &FinSpace) -> Result<Vec<PointSet>> {
    check_disc_cap(x)?;
    Ok(PointSet::all_subsets(x.n())
        .filter(|&s| x.is_open(s) && is_discrete_subspace(x, s))
        .collect())
}

fn subset_lattice(subsets: Vec<PointSet>) -> FiniteLattice {
    let labels = subsets.iter().map(|s| s.to_string()).collect();
    let mut lattice = FiniteLattice::from_order(labels, |a, b| subsets[a].is_subset_of(subsets[b]))
        .expect("inclusion is a partial order");
    if lattice.len() <= 1 << 9 {
        assert!(lattice.check_lattice(), "inclusion order must be a lattice");
    }
    lattice
}

/// The lattice of weak discretizations: the power set of the isolated
/// points, ordered by inclusion.
pub fn weak_lattice(x: &FinSpace) -> Result<FiniteLattice> {
    check_disc_cap(x)?;
    let delta = classify::isolated_points(x);
    Ok(subset_lattice(delta.subsets().collect()))
}

/// The lattice of preweak discretizations: the power set of the points.
pub fn preweak_lattice(x: &FinSpace) -> Result<FiniteLattice> {
    check_disc_cap(x)?;
    Ok(subset_lattice(PointSet::all_subsets(x.n()).collect()))
}

/// Whether the space has a (full) discretization, with a witness. For T1
/// spaces this is the density of the isolated points; otherwise it falls
/// back to the brute-force search.
pub fn has_discretization(x: &FinSpace) -> (bool, Option<Discretization>) {
    if classify::separation(x).t1 {
        let delta = classify::isolated_points(x);
        if classify::is_dense(x, delta) {
            (
                true,
                Some(Discretization {
                    image: delta,
                    level: DiscLevel::Full,
                }),
            )
        } else {
            (false, None)
        }
    } else {
        let found = all_discretizations(x).ok().and_then(|v| v.first().copied());
        (found.is_some(), found)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscOrder {
    Lt,
    Gt,
    Eq,
    Incomparable,
}

/// Order between canonical representatives: `(f,Y) ≤ (g,Z)` iff a map `h`
/// with `g∘h = f` exists, which for inclusions is image containment (and
/// `h` is then the inclusion of the images, unique and injective).
pub fn compare(d1: &Discretization, d2: &Discretization) -> DiscOrder {
    let le = d1.image.is_subset_of(d2.image);
    let ge = d2.image.is_subset_of(d1.image);
    match (le, ge) {
        (true, true) => DiscOrder::Eq,
        (true, false) => DiscOrder::Lt,
        (false, true) => DiscOrder::Gt,
        (false, false) => DiscOrder::Incomparable,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DensityCheck {
    /// minimal size of a dense subset
    pub density: usize,
    /// every full discretization found by brute force has exactly that size
    pub verified: bool,
}

pub fn density_check(x: &FinSpace) -> Result<DensityCheck> {
    check_disc_cap(x)?;
    let density = PointSet::all_subsets(x.n())
        .filter(|&s| classify::is_dense(x, s))
        .map(|s| s.len())
        .min()
        .expect("the full set is dense");
    let verified = all_discretizations(x)?
        .iter()
        .all(|d| d.image.len() == density);
    Ok(DensityCheck { density, verified })
}

/// Product of two full discretizations is a full discretization of the
/// product space. Returns the product space and the discretization.
pub fn product_discretization(
    x: &FinSpace,
    dx: &Discretization,
    y: &FinSpace,
    dy: &Discretization,
) -> Result<(FinSpace, Discretization)> {
    if dx.level != DiscLevel::Full || dy.level != DiscLevel::Full {
        return Err(TopError::NotADiscretization(
            "product construction needs full discretizations".into(),
        ));
    }
    let prod = x.product(y)?;
    let image = PointSet::from_indices(dx.image.iter().flat_map(|i| {
        dy.image
            .iter()
            .map(move |j| FinSpace::pair_index(i, j, y.n()))
    }));
    let j = PointMap::discrete_inclusion(image, &prod);
    let class = classify_pair(&j, &prod)?;
    if !class.full {
        return Err(TopError::InternalInvariantViolation(
            "product of full discretizations failed to be full".into(),
        ));
    }
    Ok((
        prod,
        Discretization {
            image,
            level: DiscLevel::Full,
        },
    ))
}

/// Evaluate both sides of the compactification/discretization duality for
/// a map `f` from a discrete space into a compact Hausdorff (= finite T2)
/// space: is `(f, Y)` a compactification of the domain, and is `(f, X)` a
/// discretization of the codomain? The two booleans are computed through
/// independent routes and the theorem says they are equal.
pub fn compactification_discretization_duality(f: &PointMap) -> Result<(bool, bool)> {
    if !f.domain().is_discrete() {
        return Err(TopError::HypothesisViolated(
            "duality check needs a discrete domain".into(),
        ));
    }
    if !classify::separation(f.codomain()).t2 {
        return Err(TopError::HypothesisViolated(
            "duality check needs a Hausdorff codomain".into(),
        ));
    }
    // compactification side, checked directly from the definition:
    // homeomorphic embedding (injective + continuous + open onto the
    // image) with dense range
    let image = f.image();
    let injective = f.is_injective();
    let continuous = f
        .codomain()
        .opens()
        .iter()
        .all(|o| f.domain().is_open(f.preimage(*o)));
    let open_onto_image = f.domain().opens().iter().all(|u| {
        let fu = f.forward(*u);
        f.codomain().opens().iter().any(|v| v.inter(image) == fu)
    });
    let dense = f.codomain().closure(image) == f.codomain().full_set();
    let is_compactification = injective && continuous && open_onto_image && dense;
    // discretization side, through the pair classifier
    let is_discretization = classify_pair(f, f.codomain())?.full;
    Ok((is_compactification, is_discretization))
}
