use super::PointSet;
use crate::{Result, TopError};

/// A partition of `0..n`, kept in canonical form: blocks ordered by their
/// minimal element, `block_of` consistent with `blocks`. Doubles as an
/// equivalence relation and as a quotient descriptor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    block_of: Vec<usize>,
    blocks: Vec<PointSet>,
}

impl Partition {
    /// Canonicalize an arbitrary block-label table (labels are renumbered
    /// by first occurrence, which orders blocks by minimal element).
    pub fn from_block_of(raw: Vec<usize>) -> Partition {
        let n = raw.len();
        let mut relabel: Vec<(usize, usize)> = Vec::new();
        let mut block_of = Vec::with_capacity(n);
        let mut blocks: Vec<PointSet> = Vec::new();
        for (x, &label) in raw.iter().enumerate() {
            let b = match relabel.iter().find(|(l, _)| *l == label) {
                Some(&(_, b)) => b,
                None => {
                    let b = blocks.len();
                    relabel.push((label, b));
                    blocks.push(PointSet::EMPTY);
                    b
                }
            };
            block_of.push(b);
            blocks[b] = blocks[b].with(x);
        }
        Partition {
            n,
            block_of,
            blocks,
        }
    }

    /// Build from explicit blocks; they must be nonempty, pairwise
    /// disjoint, and cover `0..n`.
    pub fn from_blocks(n: usize, blocks: Vec<PointSet>) -> Result<Partition> {
        let mut block_of = vec![usize::MAX; n];
        let mut seen = PointSet::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(TopError::InvalidSpace("empty partition block".into()));
            }
            if !b.inter(seen).is_empty() {
                return Err(TopError::InvalidSpace(
                    "overlapping partition blocks".into(),
                ));
            }
            seen = seen.union(*b);
        }
        if seen != PointSet::full(n) {
            return Err(TopError::InvalidSpace(format!(
                "blocks do not cover 0..{n}"
            )));
        }
        for (i, b) in blocks.iter().enumerate() {
            for x in b.iter() {
                block_of[x] = i;
            }
        }
        Ok(Partition::from_block_of(block_of))
    }

    /// Every point in its own block.
    pub fn singletons(n: usize) -> Partition {
        Partition::from_block_of((0..n).collect())
    }

    /// One block containing everything (no blocks when `n == 0`).
    pub fn trivial(n: usize) -> Partition {
        Partition::from_block_of(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn block_of_table(&self) -> &[usize] {
        &self.block_of
    }

    pub fn block_containing(&self, x: usize) -> PointSet {
        self.blocks[self.block_of[x]]
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    /// True iff every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.blocks
            .iter()
            .all(|b| b.is_subset_of(other.block_containing(b.min_element().unwrap())))
    }

    /// Common refinement (meet in the refinement order).
    pub fn meet(&self, other: &Partition) -> Partition {
        debug_assert_eq!(self.n, other.n);
        let labels: Vec<usize> = (0..self.n)
            .map(|x| self.block_of[x] * other.num_blocks().max(1) + other.block_of[x])
            .collect();
        Partition::from_block_of(labels)
    }

    /// Finest common coarsening (join in the refinement order), by
    /// union-find over the two block structures.
    pub fn join(&self, other: &Partition) -> Partition {
        debug_assert_eq!(self.n, other.n);
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for p in [self, other] {
            for b in &p.blocks {
                let mut it = b.iter();
                if let Some(first) = it.next() {
                    for x in it {
                        let (a, b) = (find(&mut parent, first), find(&mut parent, x));
                        parent[a] = b;
                    }
                }
            }
        }
        let labels: Vec<usize> = (0..self.n).map(|x| find(&mut parent, x)).collect();
        Partition::from_block_of(labels)
    }

    /// All partitions of `0..n` in restricted-growth-string order
    /// (Bell(n) of them).
    pub fn all_partitions(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn rec(rgs: &mut Vec<usize>, i: usize, max: usize, out: &mut Vec<Partition>) {
            let n = rgs.len();
            if i == n {
                out.push(Partition::from_block_of(rgs.clone()));
                return;
            }
            for v in 0..=max + 1 {
                rgs[i] = v;
                rec(rgs, i + 1, max.max(v), out);
            }
        }
        if n == 0 {
            out.push(Partition::from_block_of(Vec::new()));
        } else {
            rgs[0] = 0;
            rec(&mut rgs, 1, 0, &mut out);
        }
        out
    }
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "}}")
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = Partition::from_block_of(vec![7, 2, 7, 5]);
        assert_eq!(p.num_blocks(), 3);
        assert_eq!(p.block_of_table(), &[0, 1, 0, 2]);
        assert_eq!(p.blocks()[0], PointSet::from_indices([0, 2]));
        assert_eq!(format!("{p}"), "{0,2|1|3}");
    }

    #[test]
    fn from_blocks_validates() {
        let ok = Partition::from_blocks(
            3,
            vec![PointSet::from_indices([0, 2]), PointSet::singleton(1)],
        )
        .unwrap();
        assert_eq!(ok, Partition::from_block_of(vec![0, 1, 0]));
        assert!(Partition::from_blocks(3, vec![PointSet::full(2)]).is_err());
        assert!(
            Partition::from_blocks(2, vec![PointSet::full(2), PointSet::singleton(0)]).is_err()
        );
        assert!(Partition::from_blocks(2, vec![PointSet::full(2), PointSet::EMPTY]).is_err());
    }

    #[test]
    fn bell_counts() {
        for (n, bell) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)] {
            assert_eq!(Partition::all_partitions(n).len(), bell, "n={n}");
        }
    }

    #[test]
    fn refinement_meet_join() {
        let fine = Partition::singletons(4);
        let coarse = Partition::trivial(4);
        let p = Partition::from_block_of(vec![0, 0, 1, 1]);
        let q = Partition::from_block_of(vec![0, 1, 1, 2]);
        assert!(fine.refines(&p) && p.refines(&coarse));
        assert!(!p.refines(&q) && !q.refines(&p));
        let m = p.meet(&q);
        let j = p.join(&q);
        assert!(m.refines(&p) && m.refines(&q));
        assert!(p.refines(&j) && q.refines(&j));
        assert_eq!(m, Partition::from_block_of(vec![0, 1, 2, 3]));
        assert_eq!(j, Partition::trivial(4));
    }
}
