use super::{FinSpace, PointSet};
use crate::{Result, TopError};

/// A map between two finite spaces, as a table of codomain indices. The
/// domain of a discretization candidate is a discrete space; nothing here
/// assumes that.
#[derive(Clone, PartialEq, Eq)]
pub struct PointMap {
    domain: FinSpace,
    codomain: FinSpace,
    table: Vec<usize>,
}

impl PointMap {
    pub fn new(domain: FinSpace, codomain: FinSpace, table: Vec<usize>) -> Result<PointMap> {
        if table.len() != domain.n() {
            return Err(TopError::InvalidMap(format!(
                "table has {} entries for a domain of {} points",
                table.len(),
                domain.n()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&y| y >= codomain.n()) {
            return Err(TopError::InvalidMap(format!(
                "table entry {bad} out of range for a codomain of {} points",
                codomain.n()
            )));
        }
        Ok(PointMap {
            domain,
            codomain,
            table,
        })
    }

    pub fn identity(space: &FinSpace) -> PointMap {
        PointMap {
            domain: space.clone(),
            codomain: space.clone(),
            table: (0..space.n()).collect(),
        }
    }

    /// Inclusion of `s` as a *discrete* space into `codomain`.
    pub fn discrete_inclusion(s: PointSet, codomain: &FinSpace) -> PointMap {
        let table: Vec<usize> = s.iter().collect();
        PointMap {
            domain: FinSpace::discrete(table.len()),
            codomain: codomain.clone(),
            table,
        }
    }

    /// Inclusion of `s` with the subspace topology into `codomain`.
    pub fn subspace_inclusion(s: PointSet, codomain: &FinSpace) -> PointMap {
        let (sub, table) = codomain.subspace(s);
        PointMap {
            domain: sub,
            codomain: codomain.clone(),
            table,
        }
    }

    pub fn domain(&self) -> &FinSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &FinSpace {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn image(&self) -> PointSet {
        PointSet::from_indices(self.table.iter().copied())
    }

    pub fn preimage(&self, s: PointSet) -> PointSet {
        PointSet::from_indices((0..self.domain.n()).filter(|&x| s.contains(self.table[x])))
    }

    pub fn forward(&self, s: PointSet) -> PointSet {
        PointSet::from_indices(s.iter().map(|x| self.table[x]))
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.domain.n()
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == self.codomain.full_set()
    }

    /// Preimage of every open set is open.
    pub fn is_continuous(&self) -> bool {
        self.codomain
            .opens()
            .iter()
            .all(|o| self.domain.is_open(self.preimage(*o)))
    }

    /// Monotonicity for the specialization preorders. For finite spaces
    /// this is equivalent to continuity and much cheaper; the equivalence
    /// is pinned by a test against [`PointMap::is_continuous`].
    pub fn preserves_specialization(&self) -> bool {
        (0..self.domain.n()).all(|x| {
            self.domain
                .min_nbhd(x)
                .iter()
                .all(|y| self.codomain.leq(self.table[x], self.table[y]))
        })
    }

    /// Injective, continuous, and the corestriction onto the image (with
    /// the subspace topology) is a homeomorphism.
    pub fn is_embedding(&self) -> bool {
        if !self.is_injective() || !self.is_continuous() {
            return false;
        }
        let (sub, index) = self.codomain.subspace(self.image());
        let mut old_to_sub = vec![usize::MAX; self.codomain.n()];
        for (new, &old) in index.iter().enumerate() {
            old_to_sub[old] = new;
        }
        // inverse of the corestriction, sub → domain
        let mut inv = vec![usize::MAX; sub.n()];
        for x in 0..self.domain.n() {
            inv[old_to_sub[self.table[x]]] = x;
        }
        let back = PointMap {
            domain: sub,
            codomain: self.domain.clone(),
            table: inv,
        };
        back.is_continuous()
    }

    pub fn has_dense_range(&self) -> bool {
        self.codomain.closure(self.image()) == self.codomain.full_set()
    }

    pub fn has_open_range(&self) -> bool {
        self.codomain.is_open(self.image())
    }

    /// `self` followed by `g`; the spaces must match exactly.
    pub fn then(&self, g: &PointMap) -> Result<PointMap> {
        if self.codomain != g.domain {
            return Err(TopError::InvalidMap(
                "composition: codomain does not match the next domain".into(),
            ));
        }
        Ok(PointMap {
            domain: self.domain.clone(),
            codomain: g.codomain.clone(),
            table: self.table.iter().map(|&x| g.table[x]).collect(),
        })
    }
}

impl std::fmt::Debug for PointMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PointMap({} -> {} points, {:?})",
            self.domain.n(),
            self.codomain.n(),
            self.table
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_on_sierpinski() {
        let s = FinSpace::sierpinski();
        let id = PointMap::identity(&s);
        assert!(id.is_continuous());
        assert!(id.is_embedding());
        assert!(id.has_dense_range());
        assert!(id.has_open_range());
    }

    #[test]
    fn point_into_antidiscrete() {
        let anti = FinSpace::antidiscrete(3);
        let j = PointMap::discrete_inclusion(PointSet::singleton(0), &anti);
        assert!(j.is_embedding());
        assert!(j.has_dense_range());
        assert!(!j.has_open_range());
    }

    #[test]
    fn discrete_to_sierpinski_not_embedding() {
        let f = PointMap::new(FinSpace::discrete(2), FinSpace::sierpinski(), vec![0, 1]).unwrap();
        assert!(f.is_continuous());
        assert!(f.is_injective());
        assert!(!f.is_embedding());
    }

    #[test]
    fn invalid_tables() {
        let s = FinSpace::sierpinski();
        assert!(PointMap::new(s.clone(), s.clone(), vec![0]).is_err());
        assert!(PointMap::new(s.clone(), s.clone(), vec![0, 2]).is_err());
    }

    #[test]
    fn monotone_equals_continuous() {
        // every table between every pair of these spaces
        let spaces = [
            FinSpace::discrete(2),
            FinSpace::sierpinski(),
            FinSpace::antidiscrete(3),
            FinSpace::generated(3, &[PointSet::singleton(0), PointSet::singleton(1)]).unwrap(),
        ];
        for a in &spaces {
            for b in &spaces {
                let mut table = vec![0usize; a.n()];
                loop {
                    let f = PointMap::new(a.clone(), b.clone(), table.clone()).unwrap();
                    assert_eq!(f.is_continuous(), f.preserves_specialization(), "{f:?}");
                    let mut i = 0;
                    loop {
                        if i == a.n() {
                            break;
                        }
                        table[i] += 1;
                        if table[i] < b.n() {
                            break;
                        }
                        table[i] = 0;
                        i += 1;
                    }
                    if i == a.n() {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn composition() {
        let d2 = FinSpace::discrete(2);
        let s = FinSpace::sierpinski();
        let f = PointMap::new(d2.clone(), s.clone(), vec![1, 0]).unwrap();
        let g = PointMap::new(s.clone(), d2.clone(), vec![0, 0]).unwrap();
        let gf = f.then(&g).unwrap();
        assert_eq!(gf.table(), &[0, 0]);
        assert!(f.then(&f).is_err());
    }
}
