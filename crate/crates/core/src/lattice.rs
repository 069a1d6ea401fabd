//! Explicit finite posets/lattices with Hasse-diagram export.

use crate::{Result, TopError};

/// An explicit finite poset: element labels, the full order relation as a
/// bit matrix, top/bottom when they exist, and a flag recording whether
/// pairwise meets and joins were verified to exist.
#[derive(Clone)]
pub struct FiniteLattice {
    labels: Vec<String>,
    // above[x] = bit row of {y : x ≤ y}
    above: Vec<Vec<u64>>,
    top: Option<usize>,
    bottom: Option<usize>,
    lattice_checked: bool,
}

fn row_get(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn row_set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

impl FiniteLattice {
    /// Build from labels and an order predicate; validates that the
    /// relation is a partial order and locates top and bottom.
    #[allow(clippy::needless_range_loop)]
    pub fn from_order<F: Fn(usize, usize) -> bool>(
        labels: Vec<String>,
        leq: F,
    ) -> Result<FiniteLattice> {
        let n = labels.len();
        let words = n.div_ceil(64).max(1);
        let mut above = vec![vec![0u64; words]; n];
        for x in 0..n {
            for y in 0..n {
                if leq(x, y) {
                    row_set(&mut above[x], y);
                }
            }
        }
        for x in 0..n {
            if !row_get(&above[x], x) {
                return Err(TopError::InternalInvariantViolation(format!(
                    "order not reflexive at {}",
                    labels[x]
                )));
            }
            for y in 0..n {
                if x != y && row_get(&above[x], y) && row_get(&above[y], x) {
                    return Err(TopError::InternalInvariantViolation(format!(
                        "order not antisymmetric at {} / {}",
                        labels[x], labels[y]
                    )));
                }
                if row_get(&above[x], y) {
                    for w in 0..words {
                        if above[y][w] & !above[x][w] != 0 {
                            return Err(TopError::InternalInvariantViolation(format!(
                                "order not transitive through {} ≤ {}",
                                labels[x], labels[y]
                            )));
                        }
                    }
                }
            }
        }
        let top = (0..n).find(|&t| (0..n).all(|x| row_get(&above[x], t)));
        let bottom = (0..n).find(|&b| (0..n).all(|x| row_get(&above[b], x)));
        Ok(FiniteLattice {
            labels,
            above,
            top,
            bottom,
            lattice_checked: false,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        row_get(&self.above[x], y)
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn lattice_checked(&self) -> bool {
        self.lattice_checked
    }

    /// Greatest lower bound of `x` and `y`, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len())
            .filter(|&z| self.leq(z, x) && self.leq(z, y))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&m| lower.iter().all(|&z| self.leq(z, m)))
    }

    /// Least upper bound of `x` and `y`, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len())
            .filter(|&z| self.leq(x, z) && self.leq(y, z))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&j| upper.iter().all(|&z| self.leq(j, z)))
    }

    /// Verify that every pair has a meet and a join and that top and
    /// bottom exist (for a finite poset that makes it a complete lattice);
    /// records the outcome in the lattice flag.
    pub fn check_lattice(&mut self) -> bool {
        let n = self.len();
        let ok = n == 0
            || (self.top.is_some()
                && self.bottom.is_some()
                && (0..n).all(|x| {
                    (x..n).all(|y| self.meet(x, y).is_some() && self.join(x, y).is_some())
                }));
        self.lattice_checked = ok;
        ok
    }

    /// Cover relation of the Hasse diagram: pairs `(x, y)` with `x < y`
    /// and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let words = n.div_ceil(64).max(1);
        let mut out = Vec::new();
        for x in 0..n {
            // y covers x iff x < y and no z has x < z < y
            let mut strict: Vec<u64> = self.above[x].clone();
            strict[x / 64] &= !(1u64 << (x % 64));
            let mut blocked = vec![0u64; words];
            for z in 0..n {
                if row_get(&strict, z) {
                    let mut row = self.above[z].clone();
                    row[z / 64] &= !(1u64 << (z % 64));
                    for w in 0..words {
                        blocked[w] |= row[w];
                    }
                }
            }
            for y in 0..n {
                if row_get(&strict, y) && !row_get(&blocked, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Backtracking search for an order isomorphism onto `other`.
    pub fn is_order_isomorphic(&self, other: &FiniteLattice) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        let sig = |l: &FiniteLattice, x: usize| {
            let up = (0..n).filter(|&y| l.leq(x, y)).count();
            let down = (0..n).filter(|&y| l.leq(y, x)).count();
            (up, down)
        };
        let sig_a: Vec<_> = (0..n).map(|x| sig(self, x)).collect();
        let sig_b: Vec<_> = (0..n).map(|x| sig(other, x)).collect();
        {
            let mut sa = sig_a.clone();
            let mut sb = sig_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return false;
            }
        }
        fn search(
            a: &FiniteLattice,
            b: &FiniteLattice,
            sig_a: &[(usize, usize)],
            sig_b: &[(usize, usize)],
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            x: usize,
        ) -> bool {
            if x == a.len() {
                return true;
            }
            for y in 0..b.len() {
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
                used[y] = false;
            }
            false
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        search(self, other, &sig_a, &sig_b, &mut map, &mut used, 0)
    }

    /// Hasse diagram in DOT format, nodes and edges in canonical order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph {name} {{\n  rankdir=BT;\n"));
        for (i, label) in self.labels.iter().enumerate() {
            out.push_str(&format!(
                "  n{i} [label=\"{}\"];\n",
                label.replace('"', "\\\"")
            ));
        }
        for (x, y) in self.covers() {
            out.push_str(&format!("  n{x} -> n{y};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// JSON export: elements, cover relation, top/bottom, lattice flag.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "elements": self.labels,
            "covers": self.covers(),
            "top": self.top,
            "bottom": self.bottom,
            "lattice": self.lattice_checked,
        })
    }
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteLattice({} elements)", self.len())
    }
}
