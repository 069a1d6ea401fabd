//! Exact rational row spaces and span closure under pointwise products.
//! Backs the concrete function-algebra and ideal oracles; everything is
//! decidable because the arithmetic is exact.

use num_rational::Rational64;
use num_traits::{One, Zero};

pub type Rat = Rational64;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Render a rational compactly: integers without the denominator.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_str(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((n, d)) => Some(Rat::new(n.trim().parse().ok()?, d.trim().parse().ok()?)),
        None => Some(Rat::from_integer(s.trim().parse().ok()?)),
    }
}

/// Per-point rational value vector as a JSON array of compact strings.
pub fn vec_to_json(v: &[Rat]) -> serde_json::Value {
    serde_json::Value::Array(
        v.iter()
            .map(|r| serde_json::Value::String(rat_to_string(r)))
            .collect(),
    )
}

pub fn vec_from_json(v: &serde_json::Value) -> Option<Vec<Rat>> {
    v.as_array()?
        .iter()
        .map(|e| rat_from_str(e.as_str()?))
        .collect()
}

/// Indicator vector of a set of coordinates.
pub fn indicator(dim: usize, members: impl IntoIterator<Item = usize>) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    for i in members {
        v[i] = Rat::one();
    }
    v
}

pub fn ones(dim: usize) -> Vec<Rat> {
    vec![Rat::one(); dim]
}

pub fn hadamard(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

/// A linear subspace of ℚ^dim kept in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    dim: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(dim: usize) -> RowSpace {
        RowSpace {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Reduce `v` against the current basis; the remainder has zeros in
    /// every pivot column.
    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p];
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi -= c * ri;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim);
        self.reduce(v).iter().all(Rat::is_zero)
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = r[p];
        for x in r.iter_mut() {
            *x /= lead;
        }
        // clear the new pivot column in the existing rows
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if !row[p].is_zero() {
                let c = row[p];
                for (ri, xi) in row.iter_mut().zip(&r) {
                    *ri -= c * xi;
                }
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&q| q > p)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.dim
    }

    pub fn same_space(&self, other: &RowSpace) -> bool {
        self.dim == other.dim
            && self.rank() == other.rank()
            && other.rows.iter().all(|r| self.contains(r))
    }
}

/// Dimension of the intersection of two subspaces, via
/// `dim(A∩B) = dim A + dim B − dim(A+B)`.
pub fn intersection_rank(a: &RowSpace, b: &RowSpace) -> usize {
    assert_eq!(a.dim(), b.dim());
    let mut sum = a.clone();
    for r in b.basis() {
        sum.insert(r);
    }
    a.rank() + b.rank() - sum.rank()
}

/// The smallest subspace containing the generators (and the constants if
/// `with_unit`) that is closed under pointwise products. Conjugation is
/// the identity on rational vectors, so this is the generated unital or
/// non-unital function algebra.
pub fn span_closure(dim: usize, generators: &[Vec<Rat>], with_unit: bool) -> RowSpace {
    let mut space = RowSpace::new(dim);
    if with_unit {
        space.insert(&ones(dim));
    }
    for g in generators {
        space.insert(g);
    }
    loop {
        let basis = space.basis().to_vec();
        let mut grew = false;
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i..] {
                if space.insert(&hadamard(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return space;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_insert_and_contains() {
        let mut s = RowSpace::new(3);
        assert!(s.insert(&[rat(1), rat(1), rat(0)]));
        assert!(s.insert(&[rat(0), rat(2), rat(2)]));
        assert!(!s.insert(&[rat(1), rat(3), rat(2)]));
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&[rat(2), rat(0), rat(-2)]));
        assert!(!s.contains(&[rat(0), rat(0), rat(1)]));
    }

    #[test]
    fn closure_of_one_indicator_is_unital_pair() {
        // span{1, e0} is already product-closed
        let s = span_closure(3, &[indicator(3, [0])], true);
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&indicator(3, [1, 2])));
        assert!(!s.contains(&indicator(3, [1])));
    }

    #[test]
    fn closure_generates_indicators_from_injective_vector() {
        // a vector with distinct values generates the full algebra
        let v = vec![rat(0), rat(1), rat(2)];
        let s = span_closure(3, &[v], true);
        assert!(s.is_full());
    }

    #[test]
    fn closure_respects_level_sets() {
        // a vector constant on {0,1} generates exactly the functions
        // constant on {0,1}
        let v = vec![rat(5), rat(5), rat(7)];
        let s = span_closure(3, &[v], true);
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&indicator(3, [0, 1])));
        assert!(s.contains(&indicator(3, [2])));
        assert!(!s.contains(&indicator(3, [0])));
    }

    #[test]
    fn non_unital_closure() {
        let s = span_closure(3, &[indicator(3, [0]), indicator(3, [2])], false);
        assert_eq!(s.rank(), 2);
        assert!(!s.contains(&ones(3)));
    }

    #[test]
    fn rational_vector_serialization() {
        let v = vec![rat(3), Rat::new(1, 2), rat(-4)];
        let j = vec_to_json(&v);
        assert_eq!(j, serde_json::json!(["3", "1/2", "-4"]));
        assert_eq!(vec_from_json(&j), Some(v));
        assert_eq!(vec_from_json(&serde_json::json!(["x"])), None);
    }

    #[test]
    fn intersection_ranks() {
        let mut a = RowSpace::new(3);
        a.insert(&indicator(3, [0]));
        a.insert(&indicator(3, [1]));
        let mut b = RowSpace::new(3);
        b.insert(&indicator(3, [1]));
        b.insert(&indicator(3, [2]));
        assert_eq!(intersection_rank(&a, &b), 1);
        let mut c = RowSpace::new(3);
        c.insert(&indicator(3, [2]));
        assert_eq!(intersection_rank(&a, &c), 0);
    }
}
