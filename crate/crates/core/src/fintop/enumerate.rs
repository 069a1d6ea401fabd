use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{point_cap, FinSpace, PointSet};
use crate::{Result, TopError};

/// Optimized enumerator cap (reflexive-transitive relation scan).
pub const ENUMERATE_CAP: usize = 5;
/// Brute-force family-filter oracle cap.
pub const BRUTE_FORCE_CAP: usize = 4;

/// All distinct topologies on `n` labelled points, canonically ordered.
///
/// Finite topologies correspond one-to-one to reflexive transitive
/// relations (a set is open iff it is an up-set of the relation), so the
/// enumeration scans the `2^(n²−n)` candidate relations and keeps the
/// transitive ones.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FinSpace>> {
    if n > ENUMERATE_CAP {
        return Err(TopError::TooLarge {
            what: "enumeration points",
            size: n,
            cap: ENUMERATE_CAP,
        });
    }
    let off_diag: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let bits = off_diag.len();
    let mut out = Vec::new();
    for code in 0..1u64 << bits {
        let mut rows: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for (k, &(i, j)) in off_diag.iter().enumerate() {
            if code >> k & 1 == 1 {
                rows[i] = rows[i].with(j);
            }
        }
        let transitive = (0..n).all(|i| rows[i].iter().all(|j| rows[j].is_subset_of(rows[i])));
        if transitive {
            out.push(space_from_preorder(n, rows));
        }
    }
    out.sort_unstable_by(|a, b| a.opens().cmp(b.opens()));
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
    Ok(out)
}

fn space_from_preorder(n: usize, rows: Vec<PointSet>) -> FinSpace {
    // rows[x] = {y : x ≤ y} is the minimal open neighbourhood of x; the
    // topology is its up-set family.
    let mut opens = Vec::new();
    for mask in PointSet::all_subsets(n) {
        if mask.iter().all(|x| rows[x].is_subset_of(mask)) {
            opens.push(mask);
        }
    }
    FinSpace::from_opens_trusted(n, opens)
}

/// The direct oracle: filter all `2^(2^n)` subset families for the
/// topology axioms. Only feasible for `n ≤ 4`.
pub fn all_topologies_bruteforce(n: usize) -> Result<Vec<FinSpace>> {
    if n > BRUTE_FORCE_CAP {
        return Err(TopError::TooLarge {
            what: "brute-force enumeration points",
            size: n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let num_subsets = 1usize << n;
    let full = num_subsets - 1;
    let mut out = Vec::new();
    for family in 0..1u64 << num_subsets {
        if family & 1 == 0 || family >> full & 1 == 0 {
            continue;
        }
        let members: Vec<usize> = (0..num_subsets).filter(|&s| family >> s & 1 == 1).collect();
        let mut ok = true;
        'pairs: for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if family >> (a | b) & 1 == 0 || family >> (a & b) & 1 == 0 {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            let opens = members
                .into_iter()
                .map(|s| PointSet::from_bits(s as u32))
                .collect();
            out.push(FinSpace::from_opens_trusted(n, opens));
        }
    }
    out.sort_unstable_by(|a, b| a.opens().cmp(b.opens()));
    Ok(out)
}

/// Deterministic random space: sample a family of subsets from a seeded
/// ChaCha stream and close it to a topology. Same seed, same space.
pub fn random_space(n: usize, seed: u64) -> Result<FinSpace> {
    if n > point_cap() {
        return Err(TopError::TooLarge {
            what: "space points",
            size: n,
            cap: point_cap(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample_space(n, &mut rng))
}

fn sample_space(n: usize, rng: &mut ChaCha8Rng) -> FinSpace {
    let count = rng.gen_range(0..=n + 2);
    let full = PointSet::full(n).bits();
    let generators: Vec<PointSet> = (0..count)
        .map(|_| PointSet::from_bits(rng.gen::<u32>() & full))
        .collect();
    FinSpace::generated(n, &generators).expect("sampled generators are in range")
}

/// A deterministic corpus of `count` random spaces with sizes in
/// `0..=n_max`, drawn from one seeded stream.
pub fn random_corpus(n_max: usize, count: usize, seed: u64) -> Vec<FinSpace> {
    let n_max = n_max.min(point_cap());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(0..=n_max);
            sample_space(n, &mut rng)
        })
        .collect()
}
