//! Classification predicates: separation axioms, density notions, isolated
//! points, the α-topology, Cantor–Bendixson derivatives, scatteredness.

use serde::Serialize;

use crate::fintop::{FinSpace, PointSet};

/// Points whose singleton is open.
pub fn isolated_points(x: &FinSpace) -> PointSet {
    PointSet::from_indices((0..x.n()).filter(|&p| x.min_nbhd(p) == PointSet::singleton(p)))
}

pub fn is_dense(x: &FinSpace, s: PointSet) -> bool {
    x.closure(s) == x.full_set()
}

pub fn is_nowhere_dense(x: &FinSpace, s: PointSet) -> bool {
    x.interior(x.closure(s)).is_empty()
}

pub fn is_somewhere_dense(x: &FinSpace, s: PointSet) -> bool {
    !is_nowhere_dense(x, s)
}

/// The α-topology: same points, opens `{U − N : U open, N nowhere dense}`.
#[derive(Clone, Debug)]
pub struct AlphaResult {
    pub alpha_space: FinSpace,
    /// opens of the α-topology that were not open before
    pub added: Vec<PointSet>,
}

/// Fast path for the α-topology: a set is α-open iff it is contained in
/// the interior of the closure of its interior. The definitional
/// `{U − N}` route is [`alpha_opens_oracle`]; the two must agree and the
/// verify suites check that on every corpus space.
pub fn alpha_topology(x: &FinSpace) -> AlphaResult {
    let opens: Vec<PointSet> = PointSet::all_subsets(x.n())
        .filter(|&s| s.is_subset_of(x.interior(x.closure(x.interior(s)))))
        .collect();
    let alpha_space = FinSpace::from_opens(x.n(), opens)
        .expect("alpha-open family satisfies the topology axioms");
    let added = alpha_space
        .opens()
        .iter()
        .copied()
        .filter(|o| !x.is_open(*o))
        .collect();
    AlphaResult { alpha_space, added }
}

/// Definitional route for the α-topology: collect `U − N` over all opens
/// `U` and all nowhere dense `N`. Authoritative on disagreement.
pub fn alpha_opens_oracle(x: &FinSpace) -> Vec<PointSet> {
    let nowhere_dense: Vec<PointSet> = PointSet::all_subsets(x.n())
        .filter(|&n| is_nowhere_dense(x, n))
        .collect();
    let mut out: Vec<PointSet> = x
        .opens()
        .iter()
        .flat_map(|u| nowhere_dense.iter().map(move |n| u.minus(*n)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The Cantor–Bendixson derivative sequence: repeatedly remove the points
/// that are isolated in the surviving subspace.
#[derive(Clone, Debug, Serialize)]
pub struct CbRecord {
    /// `X ⊇ X′ ⊇ X″ ⊇ …` until the sequence stabilizes; the stable set
    /// appears once
    #[serde(serialize_with = "serialize_pointsets")]
    pub derivatives: Vec<PointSet>,
    /// steps until stabilization
    pub rank: usize,
    /// stabilized at ∅
    pub scattered: bool,
}

fn serialize_pointsets<S: serde::Serializer>(
    sets: &[PointSet],
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(sets.len()))?;
    for s in sets {
        seq.serialize_element(&s.iter().collect::<Vec<_>>())?;
    }
    seq.end()
}

pub fn cb_derivative(x: &FinSpace) -> CbRecord {
    let mut derivatives = vec![x.full_set()];
    loop {
        let cur = *derivatives.last().unwrap();
        let (sub, index) = x.subspace(cur);
        let next = cur.minus(PointSet::from_indices(
            isolated_points(&sub).iter().map(|i| index[i]),
        ));
        if next == cur {
            let rank = derivatives.len() - 1;
            return CbRecord {
                derivatives,
                rank,
                scattered: cur.is_empty(),
            };
        }
        derivatives.push(next);
    }
}

pub fn is_scattered(x: &FinSpace) -> bool {
    cb_derivative(x).scattered
}

/// Brute-force scatteredness oracle: every nonempty subset has a point
/// isolated in its subspace.
pub fn scattered_oracle(x: &FinSpace) -> bool {
    PointSet::all_subsets(x.n()).all(|s| {
        s.is_empty()
            || s.iter()
                .any(|p| x.min_nbhd(p).inter(s) == PointSet::singleton(p))
    })
}

/// Fast path: the isolated points are dense. Equivalent routes (the
/// α-space is scattered; every somewhere dense subspace has an isolated
/// point) are cross-checked by [`crate::verify`].
pub fn is_alpha_scattered(x: &FinSpace) -> bool {
    is_dense(x, isolated_points(x))
}

/// Second route of the three-way equivalence: every somewhere dense
/// subspace has an isolated point (isolated in the subspace).
pub fn somewhere_dense_condition(x: &FinSpace) -> bool {
    PointSet::all_subsets(x.n()).all(|s| {
        !is_somewhere_dense(x, s)
            || s.iter()
                .any(|p| x.min_nbhd(p).inter(s) == PointSet::singleton(p))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationFlags {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub completely_hausdorff: bool,
    pub zero_dimensional: bool,
    pub extremally_disconnected: bool,
    pub stonean: bool,
}

pub fn separation(x: &FinSpace) -> SeparationFlags {
    let n = x.n();
    let t0 = (0..n).all(|a| (a + 1..n).all(|b| x.min_nbhd(a) != x.min_nbhd(b)));
    let t1 = (0..n).all(|a| x.min_nbhd(a) == PointSet::singleton(a));
    let t2 = (0..n).all(|a| (a + 1..n).all(|b| x.min_nbhd(a).inter(x.min_nbhd(b)).is_empty()));
    // Continuous scalar functions on a finite space are exactly the
    // functions constant on components, so points are separated by a
    // continuous function iff they lie in different components.
    let completely_hausdorff = x.components().num_blocks() == n;
    let clopens = x.clopens();
    let zero_dimensional = (0..n).all(|p| {
        clopens
            .iter()
            .any(|c| c.contains(p) && c.is_subset_of(x.min_nbhd(p)))
    });
    let extremally_disconnected = x.opens().iter().all(|o| x.is_open(x.closure(*o)));
    // finite spaces are compact
    let stonean = t2 && extremally_disconnected;
    SeparationFlags {
        t0,
        t1,
        t2,
        completely_hausdorff,
        zero_dimensional,
        extremally_disconnected,
        stonean,
    }
}

/// Flat classification report (the machine-readable summary the CLI
/// serializes).
#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    #[serde(flatten)]
    pub flags: SeparationFlags,
    pub discrete: bool,
    pub scattered: bool,
    pub alpha_scattered: bool,
    pub isolated_points: Vec<usize>,
    pub cb_rank: usize,
    pub alpha_added: usize,
    /// whether applying the α-construction twice adds nothing more
    /// (reported per space, never asserted)
    pub alpha_idempotent: bool,
}

pub fn report(x: &FinSpace) -> ClassifyReport {
    let alpha = alpha_topology(x);
    let alpha_again = alpha_topology(&alpha.alpha_space);
    let cb = cb_derivative(x);
    ClassifyReport {
        flags: separation(x),
        discrete: x.is_discrete(),
        scattered: cb.scattered,
        alpha_scattered: is_alpha_scattered(x),
        isolated_points: isolated_points(x).iter().collect(),
        cb_rank: cb.rank,
        alpha_added: alpha.added.len(),
        alpha_idempotent: alpha_again.added.is_empty(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(list: &[&[usize]]) -> Vec<PointSet> {
        list.iter()
            .map(|ix| PointSet::from_indices(ix.iter().copied()))
            .collect()
    }

    #[test]
    fn isolated_points_examples() {
        assert_eq!(
            isolated_points(&FinSpace::sierpinski()),
            PointSet::singleton(0)
        );
        assert_eq!(isolated_points(&FinSpace::antidiscrete(4)), PointSet::EMPTY);
        assert_eq!(isolated_points(&FinSpace::discrete(3)), PointSet::full(3));
    }

    #[test]
    fn density_examples() {
        let s = FinSpace::sierpinski();
        assert!(is_dense(&s, PointSet::singleton(0)));
        assert!(is_nowhere_dense(&s, PointSet::singleton(1)));
        assert!(!is_somewhere_dense(&s, PointSet::singleton(1)));
        assert!(is_dense(&s, s.full_set()));
    }

    #[test]
    fn alpha_topology_examples() {
        let x = FinSpace::generated(3, &sets(&[&[0]])).unwrap();
        let alpha = alpha_topology(&x);
        assert_eq!(
            alpha.alpha_space.opens(),
            &sets(&[&[], &[0], &[0, 1], &[0, 2], &[0, 1, 2]])[..]
        );
        assert_eq!(alpha.added, sets(&[&[0, 1], &[0, 2]]));

        let d = FinSpace::discrete(3);
        assert!(alpha_topology(&d).added.is_empty());
        assert!(alpha_topology(&FinSpace::sierpinski()).added.is_empty());
    }

    #[test]
    fn alpha_fast_path_matches_oracle() {
        for space in [
            FinSpace::sierpinski(),
            FinSpace::antidiscrete(3),
            FinSpace::generated(3, &sets(&[&[0]])).unwrap(),
            FinSpace::generated(4, &sets(&[&[0, 1], &[1, 2]])).unwrap(),
        ] {
            let fast = alpha_topology(&space);
            assert_eq!(fast.alpha_space.opens(), &alpha_opens_oracle(&space)[..]);
            assert!(space.opens().iter().all(|o| fast.alpha_space.is_open(*o)));
        }
    }

    #[test]
    fn cb_examples() {
        let d = cb_derivative(&FinSpace::discrete(4));
        assert_eq!((d.rank, d.scattered), (1, true));
        assert_eq!(d.derivatives, vec![PointSet::full(4), PointSet::EMPTY]);

        let a = cb_derivative(&FinSpace::antidiscrete(3));
        assert!(!a.scattered);
        assert_eq!(*a.derivatives.last().unwrap(), PointSet::full(3));

        let x = FinSpace::generated(3, &sets(&[&[0], &[1]])).unwrap();
        let r = cb_derivative(&x);
        assert_eq!(r.derivatives, sets(&[&[0, 1, 2], &[2], &[]]));
        assert_eq!((r.rank, r.scattered), (2, true));

        let e = cb_derivative(&FinSpace::empty());
        assert_eq!((e.rank, e.scattered), (0, true));
    }

    #[test]
    fn scattered_matches_oracle() {
        for space in [
            FinSpace::discrete(4),
            FinSpace::antidiscrete(3),
            FinSpace::sierpinski(),
            FinSpace::generated(4, &sets(&[&[0, 1]])).unwrap(),
            FinSpace::empty(),
        ] {
            assert_eq!(is_scattered(&space), scattered_oracle(&space));
        }
    }

    #[test]
    fn alpha_scattered_examples() {
        assert!(is_alpha_scattered(&FinSpace::sierpinski()));
        assert!(!is_alpha_scattered(&FinSpace::antidiscrete(2)));
        // three-way equivalence spot check
        for space in [
            FinSpace::sierpinski(),
            FinSpace::antidiscrete(3),
            FinSpace::generated(3, &sets(&[&[0]])).unwrap(),
        ] {
            let a = is_alpha_scattered(&space);
            assert_eq!(a, somewhere_dense_condition(&space));
            assert_eq!(a, is_scattered(&alpha_topology(&space).alpha_space));
        }
    }

    #[test]
    fn separation_examples() {
        let s = separation(&FinSpace::sierpinski());
        assert!(s.t0 && !s.t1 && !s.t2);
        assert!(s.extremally_disconnected && !s.stonean);

        let x = separation(&FinSpace::generated(3, &sets(&[&[0], &[1]])).unwrap());
        assert!(!x.extremally_disconnected);

        let d = separation(&FinSpace::discrete(3));
        assert!(
            d.t0 && d.t1
                && d.t2
                && d.completely_hausdorff
                && d.zero_dimensional
                && d.extremally_disconnected
                && d.stonean
        );
    }

    #[test]
    fn report_serializes_flat() {
        let r = report(&FinSpace::sierpinski());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["t0"], serde_json::json!(true));
        assert_eq!(v["isolated_points"], serde_json::json!([0]));
        assert_eq!(v["cb_rank"], serde_json::json!(2));
        assert_eq!(v["alpha_added"], serde_json::json!(0));
    }
}
