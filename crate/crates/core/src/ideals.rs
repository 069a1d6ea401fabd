//! The open-set ↔ closed-ideal dictionary: ideals of the function algebra
//! of a finite space are represented by their open support, with a
//! concrete rational vector model alongside when the space is discrete
//! (the only finite case where the locally-compact-Hausdorff hypotheses
//! of the algebra picture literally hold).

use num_traits::Zero;

use crate::classify;
use crate::discretize;
use crate::fintop::{FinSpace, PointSet};
use crate::ratspan::{self, Rat, RowSpace};
use crate::{Result, TopError};

/// Concrete-model cap (vector spaces of dimension ≤ 2^n are scanned).
pub const CONCRETE_CAP: usize = 8;

/// A closed ideal in dictionary form: its open support. For a finite
/// discrete ambient space the concrete model is carried too: a basis of
/// the vectors vanishing off the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDescriptor {
    pub support: PointSet,
    pub basis: Option<Vec<Vec<Rat>>>,
}

impl std::fmt::Display for IdealDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "I{}", self.support)?;
        if let Some(basis) = &self.basis {
            write!(f, " basis [")?;
            for (i, v) in basis.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", ratspan::vec_to_json(v))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// The minimal projections of the function algebra: indicators of clopen
/// singletons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionSet {
    pub minimal_projections: Vec<PointSet>,
}

pub fn minimal_projections(x: &FinSpace) -> ProjectionSet {
    ProjectionSet {
        minimal_projections: (0..x.n())
            .map(PointSet::singleton)
            .filter(|s| x.is_open(*s) && x.is_closed(*s))
            .collect(),
    }
}

fn require_open(x: &FinSpace, u: PointSet) -> Result<()> {
    if x.is_open(u) {
        Ok(())
    } else {
        Err(TopError::NotOpen(u.to_string()))
    }
}

/// The ideal supported on an open set.
pub fn ideal_of_open(x: &FinSpace, u: PointSet) -> Result<IdealDescriptor> {
    require_open(x, u)?;
    let basis = x
        .is_discrete()
        .then(|| u.iter().map(|i| ratspan::indicator(x.n(), [i])).collect());
    Ok(IdealDescriptor { support: u, basis })
}

/// Inverse direction of the dictionary: the set of points where some
/// member of the ideal is nonzero. Recovered from the concrete model when
/// present, otherwise read off the descriptor.
pub fn open_of_ideal(d: &IdealDescriptor) -> PointSet {
    match &d.basis {
        Some(rows) => {
            let dim = rows.first().map_or(0, Vec::len);
            PointSet::from_indices((0..dim).filter(|&i| rows.iter().any(|r| !r[i].is_zero())))
        }
        None => d.support,
    }
}

/// Concrete route for "generated by its minimal projections": the span
/// closure of the point indicators inside `u` equals the whole space of
/// vectors vanishing off `u`. Only meaningful when `x` is discrete.
pub fn gmp_concrete_oracle(x: &FinSpace, u: PointSet) -> bool {
    debug_assert!(x.is_discrete());
    let generators: Vec<Vec<Rat>> = u.iter().map(|i| ratspan::indicator(x.n(), [i])).collect();
    let span = ratspan::span_closure(x.n(), &generators, false);
    span.rank() == u.len()
        && generators.iter().all(|g| span.contains(g))
        && span.basis().iter().all(|v| {
            v.iter()
                .enumerate()
                .all(|(i, c)| u.contains(i) || c.is_zero())
        })
}

/// Is the ideal on `u` generated by its minimal projections? Dictionary
/// form: the subspace on `u` is discrete. When the ambient space is
/// discrete and small the concrete vector oracle runs too and must agree.
pub fn is_gmp(x: &FinSpace, u: PointSet) -> Result<bool> {
    require_open(x, u)?;
    let dictionary = u
        .iter()
        .all(|p| x.min_nbhd(p).inter(u) == PointSet::singleton(p));
    if x.is_discrete() && x.n() <= CONCRETE_CAP {
        let concrete = gmp_concrete_oracle(x, u);
        if concrete != dictionary {
            return Err(TopError::InternalInvariantViolation(format!(
                "gmp routes disagree on {u}: dictionary {dictionary}, concrete {concrete}"
            )));
        }
    }
    Ok(dictionary)
}

/// The vectors vanishing off `u`, as a row space (concrete ideal model on
/// a discrete ambient space).
fn vanishing_space(n: usize, u: PointSet) -> RowSpace {
    let mut s = RowSpace::new(n);
    for i in u.iter() {
        s.insert(&ratspan::indicator(n, [i]));
    }
    s
}

/// Concrete route for essentiality: the ideal meets every nonzero closed
/// ideal, quantified literally over all supports.
pub fn essential_concrete_oracle(x: &FinSpace, u: PointSet) -> bool {
    debug_assert!(x.is_discrete());
    let iu = vanishing_space(x.n(), u);
    PointSet::all_subsets(x.n())
        .all(|v| v.is_empty() || ratspan::intersection_rank(&iu, &vanishing_space(x.n(), v)) > 0)
}

/// Is the ideal on `u` essential? Dictionary form: `u` is dense. The
/// open-quantifier route (`u` meets every nonempty open) always runs as a
/// cross-check, and the literal vector model runs on small discrete
/// spaces; all routes must agree.
pub fn is_essential(x: &FinSpace, u: PointSet) -> Result<bool> {
    require_open(x, u)?;
    let dictionary = classify::is_dense(x, u);
    let meets_all = x
        .opens()
        .iter()
        .all(|v| v.is_empty() || !u.inter(*v).is_empty());
    if meets_all != dictionary {
        return Err(TopError::InternalInvariantViolation(format!(
            "essentiality routes disagree on {u}"
        )));
    }
    if x.is_discrete() && x.n() <= CONCRETE_CAP {
        let concrete = essential_concrete_oracle(x, u);
        if concrete != dictionary {
            return Err(TopError::InternalInvariantViolation(format!(
                "essential vector model disagrees on {u}"
            )));
        }
    }
    Ok(dictionary)
}

/// Outcome of matching the weak-discretization lattice with the lattice
/// of ideals generated by minimal projections.
#[derive(Clone, Debug)]
pub struct IMapReport {
    pub weak_discretizations: Vec<PointSet>,
    pub gmp_supports: Vec<PointSet>,
    pub ok: bool,
    pub detail: Option<String>,
}

/// The correspondence sends a weak discretization (a canonical subset) to
/// the ideal supported on it. Checks that the two families coincide and
/// that order agrees with ideal containment pair by pair.
pub fn i_map(x: &FinSpace) -> Result<IMapReport> {
    let dw = discretize::all_weak_discretizations(x)?;
    let gmp: Vec<PointSet> = x
        .opens()
        .iter()
        .copied()
        .filter(|u| is_gmp(x, *u).unwrap_or(false))
        .collect();
    let mut report = IMapReport {
        ok: true,
        detail: None,
        weak_discretizations: dw,
        gmp_supports: gmp,
    };
    if report.weak_discretizations != report.gmp_supports {
        report.ok = false;
        report.detail = Some(format!(
            "families differ: {:?} vs {:?}",
            report.weak_discretizations, report.gmp_supports
        ));
        return Ok(report);
    }
    let concrete = x.is_discrete() && x.n() <= CONCRETE_CAP;
    for &a in &report.weak_discretizations {
        for &b in &report.weak_discretizations {
            let order = a.is_subset_of(b);
            let ideal_order = if concrete {
                let (ia, ib) = (vanishing_space(x.n(), a), vanishing_space(x.n(), b));
                ia.basis().iter().all(|r| ib.contains(r))
            } else {
                a.is_subset_of(b)
            };
            if order != ideal_order {
                report.ok = false;
                report.detail = Some(format!("order mismatch between {a} and {b}"));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// The unique essential ideal generated by minimal projections, when one
/// exists (exhaustion over all opens; uniqueness is asserted).
pub fn essential_gmp(x: &FinSpace) -> Option<IdealDescriptor> {
    let candidates: Vec<PointSet> = x
        .opens()
        .iter()
        .copied()
        .filter(|&u| is_gmp(x, u).unwrap_or(false) && is_essential(x, u).unwrap_or(false))
        .collect();
    assert!(
        candidates.len() <= 1,
        "essential gmp ideal must be unique, found {candidates:?}"
    );
    candidates
        .first()
        .map(|&u| ideal_of_open(x, u).expect("candidate support is open"))
}

/// Concrete form of "the whole algebra is generated by its minimal
/// projections" for a discrete space: span closure of all point
/// indicators is everything.
pub fn whole_algebra_gmp_concrete(x: &FinSpace) -> bool {
    debug_assert!(x.is_discrete());
    gmp_concrete_oracle(x, x.full_set())
}

/// Zero-dimensionality in the projection picture: indicators of clopen
/// sets generate the full function algebra. Dictionary route is the
/// clopens-form-a-basis flag; the concrete route runs on discrete spaces.
pub fn zero_dim_projection_check(x: &FinSpace) -> bool {
    let flag = classify::separation(x).zero_dimensional;
    if x.is_discrete() && x.n() <= CONCRETE_CAP {
        let generators: Vec<Vec<Rat>> = x
            .clopens()
            .iter()
            .map(|c| ratspan::indicator(x.n(), c.iter()))
            .collect();
        let span = ratspan::span_closure(x.n(), &generators, false);
        let concrete = span.rank() == x.n();
        return flag == concrete && flag;
    }
    flag
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratspan::rat;

    #[test]
    fn dictionary_examples() {
        let d3 = FinSpace::discrete(3);
        let zero = ideal_of_open(&d3, PointSet::EMPTY).unwrap();
        assert!(zero.basis.as_ref().unwrap().is_empty());
        assert_eq!(open_of_ideal(&zero), PointSet::EMPTY);

        let whole = ideal_of_open(&d3, d3.full_set()).unwrap();
        assert_eq!(whole.basis.as_ref().unwrap().len(), 3);
        assert_eq!(open_of_ideal(&whole), d3.full_set());

        let u = PointSet::from_indices([0, 2]);
        let i = ideal_of_open(&d3, u).unwrap();
        // vectors (a, 0, c)
        let basis = i.basis.as_ref().unwrap();
        assert!(basis.iter().all(|v| v[1] == rat(0)));
        assert_eq!(open_of_ideal(&i), u);

        let s = FinSpace::sierpinski();
        assert!(matches!(
            ideal_of_open(&s, PointSet::singleton(1)),
            Err(TopError::NotOpen(_))
        ));
        // non-discrete ambient space: dictionary only
        assert!(ideal_of_open(&s, PointSet::singleton(0))
            .unwrap()
            .basis
            .is_none());
    }

    #[test]
    fn order_isomorphism_of_dictionary() {
        let d3 = FinSpace::discrete(3);
        for &u1 in d3.opens() {
            for &u2 in d3.opens() {
                let i1 = vanishing_space(3, u1);
                let i2 = vanishing_space(3, u2);
                let contained = i1.basis().iter().all(|r| i2.contains(r));
                assert_eq!(u1.is_subset_of(u2), contained);
            }
        }
    }

    #[test]
    fn gmp_examples() {
        let d3 = FinSpace::discrete(3);
        for &u in d3.opens() {
            assert!(is_gmp(&d3, u).unwrap());
        }
        let s = FinSpace::sierpinski();
        assert!(!is_gmp(&s, s.full_set()).unwrap());
        assert!(is_gmp(&s, PointSet::singleton(0)).unwrap());
    }

    #[test]
    fn essential_examples() {
        let s = FinSpace::sierpinski();
        assert!(is_essential(&s, s.full_set()).unwrap());
        assert!(is_essential(&s, PointSet::singleton(0)).unwrap());
        let d2 = FinSpace::discrete(2);
        assert!(!is_essential(&d2, PointSet::singleton(0)).unwrap());
    }

    #[test]
    fn i_map_examples() {
        let d3 = FinSpace::discrete(3);
        let r = i_map(&d3).unwrap();
        assert!(r.ok);
        assert_eq!(r.weak_discretizations.len(), 8);

        let s = FinSpace::sierpinski();
        let r = i_map(&s).unwrap();
        assert!(r.ok);
        assert_eq!(
            r.gmp_supports,
            vec![PointSet::EMPTY, PointSet::singleton(0)]
        );

        let anti = FinSpace::antidiscrete(3);
        let r = i_map(&anti).unwrap();
        assert!(r.ok);
        assert_eq!(r.gmp_supports, vec![PointSet::EMPTY]);
    }

    #[test]
    fn essential_gmp_examples() {
        let s = FinSpace::sierpinski();
        assert_eq!(essential_gmp(&s).unwrap().support, PointSet::singleton(0));
        // discretizations exist but the dictionary finds nothing: the
        // Hausdorff hypothesis of the algebra picture fails here
        assert!(essential_gmp(&FinSpace::antidiscrete(3)).is_none());
        assert!(discretize::has_discretization(&FinSpace::antidiscrete(3)).0);

        let d4 = FinSpace::discrete(4);
        assert_eq!(essential_gmp(&d4).unwrap().support, d4.full_set());
    }

    #[test]
    fn whole_algebra_and_zero_dim() {
        assert!(whole_algebra_gmp_concrete(&FinSpace::discrete(4)));
        assert!(zero_dim_projection_check(&FinSpace::discrete(3)));
        assert!(!zero_dim_projection_check(&FinSpace::sierpinski()));
        assert!(!is_gmp(&FinSpace::sierpinski(), PointSet::full(2)).unwrap());
    }

    #[test]
    fn descriptor_display() {
        let d3 = FinSpace::discrete(3);
        let i = ideal_of_open(&d3, PointSet::from_indices([0, 2])).unwrap();
        assert_eq!(
            i.to_string(),
            r#"I{0,2} basis [["1","0","0"] ["0","0","1"]]"#
        );
        let s = FinSpace::sierpinski();
        let j = ideal_of_open(&s, PointSet::singleton(0)).unwrap();
        assert_eq!(j.to_string(), "I{0}");
    }

    #[test]
    fn minimal_projections_examples() {
        assert_eq!(
            minimal_projections(&FinSpace::discrete(2)).minimal_projections,
            vec![PointSet::singleton(0), PointSet::singleton(1)]
        );
        assert!(minimal_projections(&FinSpace::sierpinski())
            .minimal_projections
            .is_empty());
    }
}
