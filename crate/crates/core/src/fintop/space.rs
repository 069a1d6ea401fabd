use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use super::{Partition, PointMap, PointSet};
use crate::{Result, TopError};

/// Hard limit on point count (open-set tables are `2^n`-sized and point
/// sets are 32-bit masks).
pub const MAX_POINTS: usize = 22;

/// Default global point cap; override with `TOPOLAB_CAP` or [`set_point_cap`].
pub const DEFAULT_POINT_CAP: usize = 20;

fn cap_cell() -> &'static AtomicUsize {
    static CELL: OnceLock<AtomicUsize> = OnceLock::new();
    CELL.get_or_init(|| {
        let from_env = std::env::var("TOPOLAB_CAP")
            .ok()
            .and_then(|v| v.parse::<usize>().ok());
        AtomicUsize::new(from_env.map_or(DEFAULT_POINT_CAP, |c| c.clamp(1, MAX_POINTS)))
    })
}

/// Current global cap on the number of points of a constructed space.
pub fn point_cap() -> usize {
    cap_cell().load(Ordering::Relaxed)
}

/// Override the global point cap (clamped to `1..=MAX_POINTS`).
pub fn set_point_cap(cap: usize) {
    cap_cell().store(cap.clamp(1, MAX_POINTS), Ordering::Relaxed);
}

/// A finite topological space: points `0..n` and the full family of open
/// sets, sorted ascending as bit masks. Immutable after construction; the
/// minimal open neighbourhood of each point is cached.
///
/// Equality of spaces is equality of this canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinSpace {
    n: usize,
    opens: Vec<PointSet>,
    min_nbhd: Vec<PointSet>,
}

impl FinSpace {
    /// The up-set family of a reflexive, transitive neighbourhood system:
    /// a set is open iff it contains the minimal neighbourhood of each of
    /// its members. This is the canonical internal constructor.
    fn from_min_nbhds(n: usize, min_nbhd: Vec<PointSet>) -> FinSpace {
        debug_assert!(n <= MAX_POINTS);
        debug_assert_eq!(min_nbhd.len(), n);
        debug_assert!((0..n).all(|x| min_nbhd[x].contains(x)));
        debug_assert!((0..n).all(|x| min_nbhd[x]
            .iter()
            .all(|y| min_nbhd[y].is_subset_of(min_nbhd[x]))));
        let size = 1usize << n;
        // reach[mask] = union of min neighbourhoods over the members of mask
        let mut reach = vec![0u32; size];
        let mut opens = Vec::new();
        for mask in 0..size {
            let r = if mask == 0 {
                0
            } else {
                let low = mask.trailing_zeros() as usize;
                reach[mask & (mask - 1)] | min_nbhd[low].bits()
            };
            reach[mask] = r;
            if r as usize == mask {
                opens.push(PointSet::from_bits(mask as u32));
            }
        }
        FinSpace { n, opens, min_nbhd }
    }

    /// Build from an already-sorted, deduplicated list known to satisfy the
    /// topology axioms. Validated in debug builds.
    pub(crate) fn from_opens_trusted(n: usize, opens: Vec<PointSet>) -> FinSpace {
        let min_nbhd = min_nbhds_of(n, &opens);
        let space = FinSpace { n, opens, min_nbhd };
        debug_assert!(space.axioms_hold(), "trusted open family is not a topology");
        space
    }

    /// Build a space from an explicit open-set family, validating the
    /// topology axioms (∅ and the full set present, closed under pairwise
    /// union and intersection).
    pub fn from_opens(n: usize, opens: Vec<PointSet>) -> Result<FinSpace> {
        if n > point_cap() {
            return Err(TopError::TooLarge {
                what: "space points",
                size: n,
                cap: point_cap(),
            });
        }
        let full = PointSet::full(n);
        for o in &opens {
            if !o.is_subset_of(full) {
                return Err(TopError::InvalidSpace(format!(
                    "open set {o} is not a subset of the {n}-point ground set"
                )));
            }
        }
        let mut sorted = opens;
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.binary_search(&PointSet::EMPTY).is_err() {
            return Err(TopError::InvalidSpace("the empty set is missing".into()));
        }
        if sorted.binary_search(&full).is_err() {
            return Err(TopError::InvalidSpace("the full set is missing".into()));
        }
        // A family containing ∅ and X is a topology iff it equals the
        // up-set family of its own minimal-neighbourhood system.
        let min_nbhd = min_nbhds_of(n, &sorted);
        let closed = FinSpace::from_min_nbhds(n, min_nbhd);
        if closed.opens.len() != sorted.len() {
            let missing = closed
                .opens
                .iter()
                .find(|o| sorted.binary_search(o).is_err())
                .expect("some up-set is missing from the family");
            return Err(TopError::InvalidSpace(format!(
                "family is not closed under union/intersection: {missing} is missing"
            )));
        }
        Ok(closed)
    }

    /// The smallest topology on `0..n` containing the generators.
    pub fn generated(n: usize, generators: &[PointSet]) -> Result<FinSpace> {
        if n > point_cap() {
            return Err(TopError::TooLarge {
                what: "space points",
                size: n,
                cap: point_cap(),
            });
        }
        let full = PointSet::full(n);
        for (index, g) in generators.iter().enumerate() {
            if !g.is_subset_of(full) {
                let point = g.minus(full).min_element().unwrap();
                return Err(TopError::InvalidGenerator { index, point, n });
            }
        }
        let min_nbhd = (0..n)
            .map(|x| {
                generators
                    .iter()
                    .filter(|g| g.contains(x))
                    .fold(full, |acc, g| acc.inter(*g))
            })
            .collect();
        Ok(FinSpace::from_min_nbhds(n, min_nbhd))
    }

    /// The empty space (opens = {∅}).
    pub fn empty() -> FinSpace {
        FinSpace::from_min_nbhds(0, Vec::new())
    }

    pub fn discrete(n: usize) -> FinSpace {
        assert!(n <= MAX_POINTS);
        FinSpace::from_min_nbhds(n, (0..n).map(PointSet::singleton).collect())
    }

    pub fn antidiscrete(n: usize) -> FinSpace {
        assert!(n <= MAX_POINTS);
        FinSpace::from_min_nbhds(n, vec![PointSet::full(n); n])
    }

    /// Two points, {0} open, {1} not.
    pub fn sierpinski() -> FinSpace {
        FinSpace::generated(2, &[PointSet::singleton(0)]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.n)
    }

    /// All open sets, ascending as masks.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn num_opens(&self) -> usize {
        self.opens.len()
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(s.complement_in(self.n))
    }

    /// The smallest open set containing `x`.
    pub fn min_nbhd(&self, x: usize) -> PointSet {
        self.min_nbhd[x]
    }

    /// Largest open subset of `s`.
    pub fn interior(&self, s: PointSet) -> PointSet {
        PointSet::from_indices(s.iter().filter(|&x| self.min_nbhd[x].is_subset_of(s)))
    }

    /// Smallest closed superset of `s`.
    pub fn closure(&self, s: PointSet) -> PointSet {
        self.interior(s.complement_in(self.n)).complement_in(self.n)
    }

    /// Specialization preorder: `x ≤ y` iff `x ∈ closure({y})`. Row `x` of
    /// the returned matrix is `{y : x ≤ y}`, which for a finite space is
    /// exactly the minimal open neighbourhood of `x`.
    pub fn specialization(&self) -> Vec<PointSet> {
        self.min_nbhd.clone()
    }

    /// `x ≤ y` in the specialization preorder.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.min_nbhd[x].contains(y)
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.n).all(|x| self.min_nbhd[x] == PointSet::singleton(x))
    }

    /// Open sets whose complement is also open.
    pub fn clopens(&self) -> Vec<PointSet> {
        self.opens
            .iter()
            .copied()
            .filter(|o| self.is_open(o.complement_in(self.n)))
            .collect()
    }

    /// Connected components, computed as the connected components of the
    /// comparability graph of the specialization preorder.
    #[allow(clippy::needless_range_loop)]
    pub fn components(&self) -> Partition {
        let mut block_of = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if block_of[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            block_of[start] = next;
            while let Some(x) = stack.pop() {
                for y in 0..self.n {
                    if block_of[y] == usize::MAX && (self.leq(x, y) || self.leq(y, x)) {
                        block_of[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        Partition::from_block_of(block_of)
    }

    /// Connected components computed the other way: atoms of the clopen
    /// algebra (the intersection of all clopen sets containing a point).
    /// Must agree with [`FinSpace::components`]; the verify suites check it.
    pub fn clopen_atoms(&self) -> Partition {
        let clopens = self.clopens();
        let atom_of: Vec<PointSet> = (0..self.n)
            .map(|x| {
                clopens
                    .iter()
                    .filter(|c| c.contains(x))
                    .fold(self.full_set(), |acc, c| acc.inter(*c))
            })
            .collect();
        let mut seen: Vec<PointSet> = Vec::new();
        let block_of = (0..self.n)
            .map(|x| match seen.iter().position(|a| *a == atom_of[x]) {
                Some(i) => i,
                None => {
                    seen.push(atom_of[x]);
                    seen.len() - 1
                }
            })
            .collect();
        Partition::from_block_of(block_of)
    }

    /// Subspace on `s` with points reindexed densely (increasing order).
    /// Returns the space and the reindexing table (new index → old index).
    pub fn subspace(&self, s: PointSet) -> (FinSpace, Vec<usize>) {
        let index: Vec<usize> = s.iter().collect();
        let k = index.len();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in index.iter().enumerate() {
            old_to_new[old] = new;
        }
        let compress = |t: PointSet| PointSet::from_indices(t.iter().map(|o| old_to_new[o]));
        let mut opens: Vec<PointSet> = self.opens.iter().map(|o| compress(o.inter(s))).collect();
        opens.sort_unstable();
        opens.dedup();
        let min_nbhd = index
            .iter()
            .map(|&old| compress(self.min_nbhd[old].inter(s)))
            .collect();
        let sub = FinSpace {
            n: k,
            opens,
            min_nbhd,
        };
        debug_assert!(sub.axioms_hold());
        (sub, index)
    }

    /// Index of the pair `(i, j)` in a product with second factor of size
    /// `ny` (row-major order).
    pub fn pair_index(i: usize, j: usize, ny: usize) -> usize {
        i * ny + j
    }

    /// Product space on `self.n * other.n` points in row-major index order;
    /// opens are the unions of open boxes `U × V`.
    pub fn product(&self, other: &FinSpace) -> Result<FinSpace> {
        let n = self.n * other.n;
        if n > point_cap() {
            return Err(TopError::TooLarge {
                what: "product points",
                size: n,
                cap: point_cap(),
            });
        }
        let mut min_nbhd = Vec::with_capacity(n);
        for i in 0..self.n {
            for j in 0..other.n {
                let mut box_set = PointSet::EMPTY;
                for a in self.min_nbhd[i].iter() {
                    for b in other.min_nbhd[j].iter() {
                        box_set = box_set.with(Self::pair_index(a, b, other.n));
                    }
                }
                min_nbhd.push(box_set);
            }
        }
        Ok(FinSpace::from_min_nbhds(n, min_nbhd))
    }

    /// Quotient by a partition: a set of blocks is open iff the union of
    /// its blocks is open here. Returns the quotient and the quotient map.
    pub fn quotient(&self, p: &Partition) -> (FinSpace, PointMap) {
        assert_eq!(p.n(), self.n, "partition does not match the space");
        let k = p.num_blocks();
        let mut opens = Vec::new();
        for t in PointSet::all_subsets(k) {
            let union = t
                .iter()
                .fold(PointSet::EMPTY, |acc, b| acc.union(p.blocks()[b]));
            if self.is_open(union) {
                opens.push(t);
            }
        }
        let q_space = FinSpace::from_opens_trusted(k, opens);
        let q = PointMap::new(self.clone(), q_space.clone(), p.block_of_table().to_vec())
            .expect("quotient map is well-formed");
        (q_space, q)
    }

    /// Backtracking search for a point bijection that is an isomorphism of
    /// specialization preorders (equivalently, a homeomorphism).
    pub fn is_homeomorphic_to(&self, other: &FinSpace) -> bool {
        self.homeomorphism_to(other).is_some()
    }

    /// A witnessing bijection (self index → other index) if one exists.
    pub fn homeomorphism_to(&self, other: &FinSpace) -> Option<Vec<usize>> {
        if self.n != other.n || self.opens.len() != other.opens.len() {
            return None;
        }
        // degree signature: (|up-set|, |down-set|) must match pointwise
        let sig = |space: &FinSpace, x: usize| {
            let up = space.min_nbhd[x].len();
            let down = (0..space.n).filter(|&y| space.leq(y, x)).count();
            (up, down)
        };
        let sig_a: Vec<_> = (0..self.n).map(|x| sig(self, x)).collect();
        let sig_b: Vec<_> = (0..other.n).map(|x| sig(other, x)).collect();
        {
            let mut sa = sig_a.clone();
            let mut sb = sig_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return None;
            }
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        fn search(
            a: &FinSpace,
            b: &FinSpace,
            sig_a: &[(usize, usize)],
            sig_b: &[(usize, usize)],
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            x: usize,
        ) -> bool {
            if x == a.n {
                return true;
            }
            for y in 0..b.n {
                if used[y] || sig_a[x] != sig_b[y] {
                    continue;
                }
                let consistent = (0..x).all(|x2| {
                    let y2 = map[x2];
                    a.leq(x, x2) == b.leq(y, y2) && a.leq(x2, x) == b.leq(y2, y)
                });
                if !consistent {
                    continue;
                }
                map[x] = y;
                used[y] = true;
                if search(a, b, sig_a, sig_b, map, used, x + 1) {
                    return true;
                }
                map[x] = usize::MAX;
                used[y] = false;
            }
            false
        }
        if search(self, other, &sig_a, &sig_b, &mut map, &mut used, 0) {
            Some(map)
        } else {
            None
        }
    }

    /// Explicit axiom check (∅ and X present, closed under pairwise ∪/∩,
    /// no duplicates). Quadratic; meant for tests and the verify suites.
    pub fn axioms_hold(&self) -> bool {
        let opens = &self.opens;
        if opens.binary_search(&PointSet::EMPTY).is_err()
            || opens.binary_search(&self.full_set()).is_err()
        {
            return false;
        }
        if opens.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if opens.iter().any(|o| !o.is_subset_of(self.full_set())) {
            return false;
        }
        for (i, a) in opens.iter().enumerate() {
            for b in &opens[i + 1..] {
                if !self.is_open(a.union(*b)) || !self.is_open(a.inter(*b)) {
                    return false;
                }
            }
        }
        true
    }
}

fn min_nbhds_of(n: usize, opens: &[PointSet]) -> Vec<PointSet> {
    let mut nb = vec![PointSet::full(n); n];
    for o in opens {
        for x in o.iter() {
            nb[x] = nb[x].inter(*o);
        }
    }
    nb
}

impl std::fmt::Debug for FinSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinSpace(n={}, opens=[", self.n)?;
        for (k, o) in self.opens.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{o}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opens_of(space: &FinSpace) -> Vec<PointSet> {
        space.opens().to_vec()
    }

    fn sets(list: &[&[usize]]) -> Vec<PointSet> {
        list.iter()
            .map(|ix| PointSet::from_indices(ix.iter().copied()))
            .collect()
    }

    #[test]
    fn generated_sierpinski() {
        let s = FinSpace::sierpinski();
        assert_eq!(opens_of(&s), sets(&[&[], &[0], &[0, 1]]));
    }

    #[test]
    fn generated_no_generators_is_antidiscrete() {
        let x = FinSpace::generated(3, &[]).unwrap();
        assert_eq!(x, FinSpace::antidiscrete(3));
        assert_eq!(opens_of(&x), sets(&[&[], &[0, 1, 2]]));
    }

    #[test]
    fn generated_two_singletons() {
        let x = FinSpace::generated(3, &sets(&[&[0], &[1]])).unwrap();
        assert_eq!(opens_of(&x), sets(&[&[], &[0], &[1], &[0, 1], &[0, 1, 2]]));
    }

    #[test]
    fn generated_matches_pairwise_fixpoint_oracle() {
        // literal oracle: add ∅ and X, close under pairwise ∪ and ∩
        fn fixpoint(n: usize, gens: &[PointSet]) -> Vec<PointSet> {
            let mut family: Vec<PointSet> = gens.to_vec();
            family.push(PointSet::EMPTY);
            family.push(PointSet::full(n));
            family.sort_unstable();
            family.dedup();
            loop {
                let mut new = Vec::new();
                for (i, a) in family.iter().enumerate() {
                    for b in &family[i + 1..] {
                        for c in [a.union(*b), a.inter(*b)] {
                            if family.binary_search(&c).is_err() {
                                new.push(c);
                            }
                        }
                    }
                }
                if new.is_empty() {
                    return family;
                }
                family.extend(new);
                family.sort_unstable();
                family.dedup();
            }
        }
        let cases: Vec<(usize, Vec<PointSet>)> = vec![
            (2, sets(&[&[0]])),
            (3, sets(&[])),
            (3, sets(&[&[0], &[1]])),
            (4, sets(&[&[0, 1], &[1, 2], &[3]])),
            (5, sets(&[&[0, 1, 2], &[2, 3], &[1, 4], &[0]])),
        ];
        for (n, gens) in cases {
            let fast = FinSpace::generated(n, &gens).unwrap();
            assert_eq!(opens_of(&fast), fixpoint(n, &gens), "n={n} gens={gens:?}");
        }
    }

    #[test]
    fn generator_out_of_range() {
        let err = FinSpace::generated(2, &sets(&[&[0, 2]])).unwrap_err();
        assert!(matches!(
            err,
            TopError::InvalidGenerator {
                index: 0,
                point: 2,
                n: 2
            }
        ));
    }

    #[test]
    fn from_opens_validates() {
        // {∅, {0}, {1}, X} on 2 points is fine; dropping {1} is fine too;
        // dropping X is not.
        assert!(FinSpace::from_opens(2, sets(&[&[], &[0], &[1], &[0, 1]])).is_ok());
        assert!(FinSpace::from_opens(2, sets(&[&[], &[0], &[0, 1]])).is_ok());
        assert!(FinSpace::from_opens(2, sets(&[&[], &[0]])).is_err());
        // missing the union {0,1}
        let err = FinSpace::from_opens(3, sets(&[&[], &[0], &[1], &[0, 1, 2]])).unwrap_err();
        assert!(matches!(err, TopError::InvalidSpace(_)));
    }

    #[test]
    fn closure_interior_examples() {
        let s = FinSpace::sierpinski();
        assert_eq!(s.closure(PointSet::singleton(0)), PointSet::full(2));
        assert_eq!(s.closure(PointSet::EMPTY), PointSet::EMPTY);
        let anti = FinSpace::antidiscrete(3);
        assert_eq!(anti.closure(PointSet::singleton(1)), PointSet::full(3));
    }

    #[test]
    fn closure_interior_duality_and_monotone() {
        for space in [
            FinSpace::sierpinski(),
            FinSpace::discrete(3),
            FinSpace::antidiscrete(4),
            FinSpace::generated(4, &sets(&[&[0, 1], &[1, 2]])).unwrap(),
        ] {
            for s in PointSet::all_subsets(space.n()) {
                let c = space.closure(s);
                let i = space.interior(s);
                assert!(i.is_subset_of(s) && s.is_subset_of(c));
                assert_eq!(space.closure(c), c);
                assert_eq!(space.interior(i), i);
                assert_eq!(
                    i,
                    space
                        .closure(s.complement_in(space.n()))
                        .complement_in(space.n())
                );
                // interior = union of opens inside s (definitional route)
                let by_scan = space
                    .opens()
                    .iter()
                    .filter(|o| o.is_subset_of(s))
                    .fold(PointSet::EMPTY, |acc, o| acc.union(*o));
                assert_eq!(i, by_scan);
            }
        }
    }

    #[test]
    fn subspace_examples() {
        let s = FinSpace::sierpinski();
        let (one, idx) = s.subspace(PointSet::singleton(1));
        assert_eq!(one, FinSpace::discrete(1));
        assert_eq!(idx, vec![1]);

        let x = FinSpace::generated(3, &sets(&[&[0], &[1]])).unwrap();
        let (sub, _) = x.subspace(PointSet::singleton(2));
        assert_eq!(sub, FinSpace::discrete(1));

        let (same, idx) = x.subspace(x.full_set());
        assert_eq!(same, x);
        assert_eq!(idx, vec![0, 1, 2]);

        let (empty, _) = x.subspace(PointSet::EMPTY);
        assert_eq!(empty, FinSpace::empty());
    }

    #[test]
    fn product_examples() {
        let d2 = FinSpace::discrete(2);
        assert_eq!(d2.product(&d2).unwrap(), FinSpace::discrete(4));

        let s = FinSpace::sierpinski();
        let p = s.product(&FinSpace::discrete(1)).unwrap();
        assert!(p.is_homeomorphic_to(&s));

        // box-union-closure oracle for the Sierpiński square
        let ss = s.product(&s).unwrap();
        let mut boxes = Vec::new();
        for u in s.opens() {
            for v in s.opens() {
                let mut b = PointSet::EMPTY;
                for a in u.iter() {
                    for c in v.iter() {
                        b = b.with(FinSpace::pair_index(a, c, 2));
                    }
                }
                boxes.push(b);
            }
        }
        boxes.sort_unstable();
        boxes.dedup();
        loop {
            let mut new = Vec::new();
            for (i, a) in boxes.iter().enumerate() {
                for b in &boxes[i + 1..] {
                    let u = a.union(*b);
                    if boxes.binary_search(&u).is_err() {
                        new.push(u);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            boxes.extend(new);
            boxes.sort_unstable();
            boxes.dedup();
        }
        assert_eq!(ss.opens(), &boxes[..]);
        assert_eq!(ss.num_opens(), 6);
    }

    #[test]
    fn product_too_large() {
        let d5 = FinSpace::discrete(5);
        let err = d5.product(&d5).unwrap_err();
        assert!(matches!(err, TopError::TooLarge { .. }));
    }

    #[test]
    fn quotient_examples() {
        let d3 = FinSpace::discrete(3);
        let (q, map) = d3.quotient(&Partition::from_block_of(vec![0, 0, 1]));
        assert_eq!(q, FinSpace::discrete(2));
        assert!(map.is_continuous() && map.is_surjective());

        let s = FinSpace::sierpinski();
        let (pt, _) = s.quotient(&Partition::trivial(2));
        assert_eq!(pt, FinSpace::discrete(1));

        let x = FinSpace::generated(3, &sets(&[&[0]])).unwrap();
        let (q, _) = x.quotient(&Partition::from_block_of(vec![0, 1, 1]));
        assert_eq!(q, FinSpace::sierpinski());
    }

    #[test]
    fn specialization_and_components() {
        let d3 = FinSpace::discrete(3);
        assert!((0..3).all(|x| d3.specialization()[x] == PointSet::singleton(x)));
        assert_eq!(d3.components().num_blocks(), 3);

        let s = FinSpace::sierpinski();
        assert!(s.leq(1, 0) && !s.leq(0, 1));
        assert_eq!(s.components().num_blocks(), 1);

        let x = FinSpace::generated(3, &sets(&[&[0], &[1]])).unwrap();
        assert_eq!(x.components().num_blocks(), 1);
        assert_eq!(x.clopen_atoms(), x.components());
    }

    #[test]
    fn homeomorphism_search() {
        // relabelled Sierpiński: {1} open instead of {0}
        let s = FinSpace::sierpinski();
        let t = FinSpace::generated(2, &[PointSet::singleton(1)]).unwrap();
        assert_ne!(s, t);
        assert!(s.is_homeomorphic_to(&t));
        assert_eq!(s.homeomorphism_to(&t), Some(vec![1, 0]));
        assert!(!s.is_homeomorphic_to(&FinSpace::discrete(2)));
    }
}
