//! Two symbolic countable spaces — ℕ with the discrete topology and its
//! one-point compactification ℕ∪{∞} — with an exact set algebra rich
//! enough for the classical witnesses, plus the isolated-point functor δ
//! and its inverse β on the computable (finite discrete) slice.

use serde::{Deserialize, Serialize};

use crate::classify;
use crate::fintop::{FinSpace, PointMap};
use crate::{Result, TopError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    /// ℕ, discrete.
    NatDiscrete,
    /// ℕ ∪ {∞}: every subset of ℕ is open; a set containing ∞ is open iff
    /// its trace on ℕ is cofinite.
    NatPlusInfinity,
}

/// An eventually periodic subset of ℕ, optionally with ∞: membership of
/// `k < head.len()` is `head[k]`, membership of `k ≥ head.len()` is
/// `wheel[k mod wheel.len()]`. This is the Boolean algebra generated by
/// residue classes and finite sets, canonicalized to the shortest head
/// and period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymSet {
    head: Vec<bool>,
    wheel: Vec<bool>,
    has_inf: bool,
}

const MAX_PERIOD: u64 = 1 << 16;

impl SymSet {
    fn normalized(mut head: Vec<bool>, mut wheel: Vec<bool>, has_inf: bool) -> SymSet {
        assert!(!wheel.is_empty());
        // shortest period dividing the current one
        let m = wheel.len();
        for d in 1..=m {
            if m.is_multiple_of(d) && (0..m).all(|i| wheel[i] == wheel[i % d]) {
                wheel.truncate(d);
                break;
            }
        }
        // strip head entries already predicted by the wheel
        while let Some(&last) = head.last() {
            if last == wheel[(head.len() - 1) % wheel.len()] {
                head.pop();
            } else {
                break;
            }
        }
        SymSet {
            head,
            wheel,
            has_inf,
        }
    }

    pub fn empty() -> SymSet {
        SymSet::normalized(Vec::new(), vec![false], false)
    }

    /// All of ℕ (without ∞).
    pub fn naturals() -> SymSet {
        SymSet::normalized(Vec::new(), vec![true], false)
    }

    pub fn finite(members: &[u64]) -> SymSet {
        let t = members.iter().map(|&k| k + 1).max().unwrap_or(0) as usize;
        let mut head = vec![false; t];
        for &k in members {
            head[k as usize] = true;
        }
        SymSet::normalized(head, vec![false], false)
    }

    /// ℕ minus finitely many points.
    pub fn cofinite(excluded: &[u64]) -> SymSet {
        SymSet::finite(excluded).complement_within_nat()
    }

    /// The residue class `{k : k ≡ a (mod m)}`.
    pub fn residue_class(a: u64, m: u64) -> Result<SymSet> {
        if m == 0 || m > MAX_PERIOD || a >= m {
            return Err(TopError::InvalidSet(format!(
                "residue class needs 0 ≤ a < m ≤ {MAX_PERIOD}, got ({a},{m})"
            )));
        }
        let wheel = (0..m).map(|i| i == a).collect();
        Ok(SymSet::normalized(Vec::new(), wheel, false))
    }

    pub fn evens() -> SymSet {
        SymSet::residue_class(0, 2).expect("fixed small residue class")
    }

    pub fn with_inf(mut self, has_inf: bool) -> SymSet {
        self.has_inf = has_inf;
        self
    }

    pub fn has_inf(&self) -> bool {
        self.has_inf
    }

    pub fn contains(&self, k: u64) -> bool {
        let k = k as usize;
        if k < self.head.len() {
            self.head[k]
        } else {
            self.wheel[k % self.wheel.len()]
        }
    }

    /// Is the trace on ℕ a finite set?
    pub fn is_finite(&self) -> bool {
        self.wheel.iter().all(|&b| !b)
    }

    /// Is the trace on ℕ cofinite?
    pub fn is_cofinite(&self) -> bool {
        self.wheel.iter().all(|&b| b)
    }

    pub fn contains_all_naturals(&self) -> bool {
        self.head.iter().all(|&b| b) && self.wheel.iter().all(|&b| b)
    }

    pub fn is_empty(&self) -> bool {
        !self.has_inf && self.head.iter().all(|&b| !b) && self.is_finite()
    }

    fn zip_with(&self, other: &SymSet, op: impl Fn(bool, bool) -> bool) -> SymSet {
        let t = self.head.len().max(other.head.len());
        let m = lcm(self.wheel.len(), other.wheel.len());
        let head = (0..t)
            .map(|k| op(self.contains(k as u64), other.contains(k as u64)))
            .collect();
        let wheel = (0..m)
            .map(|i| {
                let k = t + i; // representative ≥ both heads with k ≡ t+i
                op(self.contains(k as u64), other.contains(k as u64))
            })
            .collect();
        SymSet::normalized(
            head,
            align_wheel(wheel, t, m),
            op(self.has_inf, other.has_inf),
        )
    }

    pub fn union(&self, other: &SymSet) -> SymSet {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn inter(&self, other: &SymSet) -> SymSet {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn minus(&self, other: &SymSet) -> SymSet {
        self.zip_with(other, |a, b| a && !b)
    }

    fn complement_within_nat(&self) -> SymSet {
        SymSet::normalized(
            self.head.iter().map(|&b| !b).collect(),
            self.wheel.iter().map(|&b| !b).collect(),
            false,
        )
    }

    /// Complement inside the ambient space (flips ∞ only where ∞ exists).
    pub fn complement_in(&self, kind: SymKind) -> SymSet {
        let flip_inf = match kind {
            SymKind::NatDiscrete => false,
            SymKind::NatPlusInfinity => !self.has_inf,
        };
        self.complement_within_nat().with_inf(flip_inf)
    }

    /// Members below `limit`, for display and model checks.
    pub fn members_below(&self, limit: u64) -> Vec<u64> {
        (0..limit).filter(|&k| self.contains(k)).collect()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// The wheel computed at offset `t` is indexed by `(k − t) mod m`; rotate
/// it so it is indexed by `k mod m`.
fn align_wheel(wheel: Vec<bool>, t: usize, m: usize) -> Vec<bool> {
    (0..m).map(|r| wheel[(r + m - t % m) % m]).collect()
}

/// Wire format: residue classes plus finite corrections.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymSetJson {
    pub residues: Vec<(u64, u64)>,
    pub plus: Vec<u64>,
    pub minus: Vec<u64>,
    pub inf: bool,
}

impl SymSet {
    pub fn to_json(&self) -> SymSetJson {
        let m = self.wheel.len() as u64;
        let residues: Vec<(u64, u64)> = (0..m)
            .filter(|&a| self.wheel[a as usize])
            .map(|a| (a, m))
            .collect();
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (k, &b) in self.head.iter().enumerate() {
            let predicted = self.wheel[k % self.wheel.len()];
            if b && !predicted {
                plus.push(k as u64);
            } else if !b && predicted {
                minus.push(k as u64);
            }
        }
        SymSetJson {
            residues,
            plus,
            minus,
            inf: self.has_inf,
        }
    }

    pub fn from_json(j: &SymSetJson) -> Result<SymSet> {
        let mut s = SymSet::empty();
        for &(a, m) in &j.residues {
            s = s.union(&SymSet::residue_class(a, m)?);
        }
        s = s.union(&SymSet::finite(&j.plus));
        s = s.minus(&SymSet::finite(&j.minus));
        Ok(s.with_inf(j.inf))
    }
}

fn reject_inf(kind: SymKind, s: &SymSet) -> Result<()> {
    if kind == SymKind::NatDiscrete && s.has_inf {
        return Err(TopError::InvalidSet(
            "ℕ (discrete) has no point at infinity".into(),
        ));
    }
    Ok(())
}

/// Closure: in ℕ discrete every set is closed; in ℕ∪{∞} the closure adds
/// ∞ exactly when the trace on ℕ is infinite.
pub fn sym_closure(kind: SymKind, s: &SymSet) -> Result<SymSet> {
    reject_inf(kind, s)?;
    Ok(match kind {
        SymKind::NatDiscrete => s.clone(),
        SymKind::NatPlusInfinity => {
            let mut c = s.clone();
            if !c.is_finite() {
                c.has_inf = true;
            }
            c
        }
    })
}

/// The isolated points: all of ℕ in both spaces (∞ is not isolated).
pub fn sym_isolated(_kind: SymKind) -> SymSet {
    SymSet::naturals()
}

/// Topological density: the closure is the whole space. In both spaces
/// that amounts to containing every natural (∞ then lies in the closure
/// automatically).
pub fn sym_is_dense(kind: SymKind, s: &SymSet) -> Result<bool> {
    reject_inf(kind, s)?;
    Ok(s.contains_all_naturals())
}

pub fn sym_is_open(kind: SymKind, s: &SymSet) -> Result<bool> {
    reject_inf(kind, s)?;
    Ok(match kind {
        SymKind::NatDiscrete => true,
        SymKind::NatPlusInfinity => !s.has_inf || s.is_cofinite(),
    })
}

/// The classical witness that ℕ∪{∞} is not extremally disconnected (hence
/// not Stonean): the closure of the even numbers gains ∞ but its trace is
/// not cofinite, so it is not open. The same record confirms the space is
/// α-scattered (its isolated points, ℕ, are dense).
#[derive(Clone, Debug)]
pub struct StoneanWitness {
    pub witness: SymSet,
    pub closure: SymSet,
    pub closure_open: bool,
    pub alpha_scattered: bool,
    pub stonean: bool,
}

pub fn not_stonean_witness() -> StoneanWitness {
    let kind = SymKind::NatPlusInfinity;
    let u = SymSet::evens();
    let closure = sym_closure(kind, &u).expect("evens are a valid set");
    let closure_open = sym_is_open(kind, &closure).expect("closure is a valid set");
    let alpha_scattered =
        sym_is_dense(kind, &sym_isolated(kind)).expect("isolated points are a valid set");
    StoneanWitness {
        witness: u,
        closure,
        closure_open,
        alpha_scattered,
        stonean: closure_open,
    }
}

/// δ on finite spaces: restrict a map to the isolated points. Requires a
/// continuous map sending isolated points to isolated points.
pub fn delta_functor(f: &PointMap) -> Result<(FinSpace, PointMap)> {
    if !f.is_continuous() {
        return Err(TopError::NotACMorphism("map is not continuous".into()));
    }
    let dx = classify::isolated_points(f.domain());
    let dy = classify::isolated_points(f.codomain());
    if !f.forward(dx).is_subset_of(dy) {
        return Err(TopError::NotACMorphism(
            "isolated points are not sent to isolated points".into(),
        ));
    }
    let dx_points: Vec<usize> = dx.iter().collect();
    let dy_points: Vec<usize> = dy.iter().collect();
    let delta_x = FinSpace::discrete(dx_points.len());
    let delta_y = FinSpace::discrete(dy_points.len());
    let table = dx_points
        .iter()
        .map(|&p| {
            dy_points
                .iter()
                .position(|&q| q == f.apply(p))
                .expect("image is an isolated point")
        })
        .collect();
    let delta_f = PointMap::new(delta_x.clone(), delta_y, table)?;
    Ok((delta_x, delta_f))
}

/// β on the computable slice: finite discrete spaces are compact, so the
/// compactification is the space itself.
pub fn beta_finite(x: &FinSpace) -> Result<FinSpace> {
    if !x.is_discrete() {
        return Err(TopError::OutOfComputableSlice(format!(
            "β is computed only on finite discrete spaces; got {x:?}"
        )));
    }
    Ok(x.clone())
}

/// Record of a δ/β duality check over a list of finite discrete spaces
/// and maps between them.
#[derive(Clone, Debug)]
pub struct FunctorCheckRecord {
    pub objects: Vec<FinSpace>,
    pub morphisms: Vec<PointMap>,
    pub squares_ok: bool,
}

/// Verify δ(β(X)) = X and β(δ(X)) = X on each object, and that the two
/// comparison isomorphisms are natural: for every listed map the squares
/// built from δ(β(f)) and β(δ(f)) commute pointwise. Objects must be in
/// the computable slice, which is checked through the classification
/// flags (Stonean and α-scattered ⇔ finite discrete).
pub fn duality_check(objects: &[FinSpace], morphisms: &[PointMap]) -> Result<FunctorCheckRecord> {
    for x in objects {
        let flags = classify::separation(x);
        if !(flags.stonean && classify::is_alpha_scattered(x)) {
            return Err(TopError::OutOfComputableSlice(format!(
                "object {x:?} is not Stonean and α-scattered"
            )));
        }
    }
    let mut squares_ok = true;
    for x in objects {
        let beta = beta_finite(x)?;
        let (delta_beta, _) = delta_functor(&PointMap::identity(&beta))?;
        // δ(βX) has one point per point of X (all isolated)
        squares_ok &= delta_beta.n() == x.n();
        let dx = classify::isolated_points(x);
        let (sub, _) = x.subspace(dx);
        let beta_delta = beta_finite(&sub)?;
        squares_ok &= beta_delta == sub && sub.n() == x.n() && x.is_discrete();
    }
    for f in morphisms {
        if !f.domain().is_discrete() || !f.codomain().is_discrete() {
            return Err(TopError::OutOfComputableSlice(
                "morphism endpoints must be finite discrete".into(),
            ));
        }
        // ξ square: δ(β(f)) ∘ ξ_X = ξ_Y ∘ f, with ξ the identity
        // comparison on a discrete space
        let beta_f = f.clone();
        let (_, delta_beta_f) = delta_functor(&beta_f)?;
        squares_ok &= delta_beta_f.table() == f.table();
        // η square: β(δ(f)) ∘ η_X = η_Y ∘ f
        let (_, delta_f) = delta_functor(f)?;
        let beta_delta_f = delta_f.clone();
        squares_ok &= beta_delta_f.table() == f.table();
    }
    Ok(FunctorCheckRecord {
        objects: objects.to_vec(),
        morphisms: morphisms.to_vec(),
        squares_ok,
    })
}

/// What β∘δ does to the two symbolic spaces: neither is representable,
/// each for its own reason, and the report names the failing hypothesis.
pub fn beta_delta_status(kind: SymKind) -> String {
    match kind {
        SymKind::NatDiscrete => "β(δ(ℕ)) = βℕ is an ultrafilter space, not finitely \
             representable; ℕ is discrete but not compact, hence not Stonean, so βδ \
             is not the identity here"
            .into(),
        SymKind::NatPlusInfinity => "β(δ(ℕ∪{∞})) = βℕ is not finitely representable; the \
             space is α-scattered but not Stonean (the closure of the even numbers is \
             not open), so the hypothesis for βδ = id fails"
            .into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symset_canonical_forms() {
        assert_eq!(SymSet::finite(&[]), SymSet::empty());
        assert_eq!(SymSet::cofinite(&[]), SymSet::naturals());
        let e = SymSet::evens();
        assert!(e.contains(0) && !e.contains(1) && e.contains(100));
        // union of both parities collapses to ℕ
        let odds = SymSet::residue_class(1, 2).unwrap();
        assert_eq!(e.union(&odds), SymSet::naturals());
        // removing a point produces a head correction
        let no5 = SymSet::naturals().minus(&SymSet::finite(&[5]));
        assert!(!no5.contains(5) && no5.contains(4) && no5.contains(6));
        assert_eq!(no5, SymSet::cofinite(&[5]));
    }

    #[test]
    fn symset_algebra_matches_pointwise_model() {
        let a = SymSet::evens().union(&SymSet::finite(&[1, 7]));
        let b = SymSet::residue_class(0, 3)
            .unwrap()
            .minus(&SymSet::finite(&[6]));
        let u = a.union(&b);
        let i = a.inter(&b);
        let d = a.minus(&b);
        let c = a.complement_in(SymKind::NatPlusInfinity);
        for k in 0..200 {
            assert_eq!(u.contains(k), a.contains(k) || b.contains(k));
            assert_eq!(i.contains(k), a.contains(k) && b.contains(k));
            assert_eq!(d.contains(k), a.contains(k) && !b.contains(k));
            assert_eq!(c.contains(k), !a.contains(k));
        }
        assert!(c.has_inf());
        assert_eq!(c.complement_in(SymKind::NatPlusInfinity), a);
    }

    #[test]
    fn closure_examples() {
        let kind = SymKind::NatPlusInfinity;
        let cof = SymSet::cofinite(&[0, 1, 2]);
        let cl = sym_closure(kind, &cof).unwrap();
        assert!(cl.has_inf());
        assert!(sym_is_open(kind, &cl).unwrap());

        let single = SymSet::finite(&[5]);
        assert_eq!(sym_closure(kind, &single).unwrap(), single);
        assert!(sym_is_open(kind, &single).unwrap());

        assert_eq!(sym_isolated(kind), SymSet::naturals());
        assert!(sym_is_dense(kind, &sym_isolated(kind)).unwrap());
        // the evens are not dense: closure misses the odd numbers
        assert!(!sym_is_dense(kind, &SymSet::evens()).unwrap());

        assert!(matches!(
            sym_closure(SymKind::NatDiscrete, &SymSet::empty().with_inf(true)),
            Err(TopError::InvalidSet(_))
        ));
    }

    #[test]
    fn stonean_witness() {
        let w = not_stonean_witness();
        assert_eq!(w.witness, SymSet::evens());
        assert!(w.closure.has_inf());
        assert!(!w.closure_open);
        assert!(!w.stonean);
        assert!(w.alpha_scattered);
    }

    #[test]
    fn json_roundtrip() {
        for s in [
            SymSet::evens().union(&SymSet::finite(&[1])).with_inf(true),
            SymSet::cofinite(&[3, 4]),
            SymSet::empty(),
        ] {
            let j = s.to_json();
            assert_eq!(SymSet::from_json(&j).unwrap(), s);
            let text = serde_json::to_string(&j).unwrap();
            let back: SymSetJson = serde_json::from_str(&text).unwrap();
            assert_eq!(SymSet::from_json(&back).unwrap(), s);
        }
    }

    #[test]
    fn delta_functor_examples() {
        let s = FinSpace::sierpinski();
        let (dx, df) = delta_functor(&PointMap::identity(&s)).unwrap();
        assert_eq!(dx, FinSpace::discrete(1));
        assert_eq!(df.table(), &[0]);

        let d2 = FinSpace::discrete(2);
        let d3 = FinSpace::discrete(3);
        let incl = PointMap::new(d2, d3, vec![0, 1]).unwrap();
        let (_, df) = delta_functor(&incl).unwrap();
        assert_eq!(df.table(), incl.table());

        // constant at the closed point: isolated point condition fails
        let bad = PointMap::new(s.clone(), s.clone(), vec![1, 1]).unwrap();
        assert!(matches!(
            delta_functor(&bad),
            Err(TopError::NotACMorphism(_))
        ));
    }

    #[test]
    fn delta_functoriality_on_samples() {
        let d2 = FinSpace::discrete(2);
        let d3 = FinSpace::discrete(3);
        let f = PointMap::new(d2.clone(), d3.clone(), vec![2, 0]).unwrap();
        let g = PointMap::new(d3.clone(), d2.clone(), vec![1, 1, 0]).unwrap();
        let (_, df) = delta_functor(&f).unwrap();
        let (_, dg) = delta_functor(&g).unwrap();
        let (_, dgf) = delta_functor(&f.then(&g).unwrap()).unwrap();
        assert_eq!(df.then(&dg).unwrap().table(), dgf.table());
        let (_, did) = delta_functor(&PointMap::identity(&d3)).unwrap();
        assert_eq!(did.table(), &[0, 1, 2]);
    }

    #[test]
    fn beta_and_duality() {
        let d3 = FinSpace::discrete(3);
        assert_eq!(beta_finite(&d3).unwrap(), d3);
        assert!(matches!(
            beta_finite(&FinSpace::sierpinski()),
            Err(TopError::OutOfComputableSlice(_))
        ));

        let f = PointMap::new(d3.clone(), d3.clone(), vec![1, 2, 0]).unwrap();
        let rec = duality_check(std::slice::from_ref(&d3), &[f]).unwrap();
        assert!(rec.squares_ok);

        assert!(matches!(
            duality_check(&[FinSpace::sierpinski()], &[]),
            Err(TopError::OutOfComputableSlice(_))
        ));

        for kind in [SymKind::NatDiscrete, SymKind::NatPlusInfinity] {
            assert!(beta_delta_status(kind).contains("not finitely representable"));
        }
    }
}
