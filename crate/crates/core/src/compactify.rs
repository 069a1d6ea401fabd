//! Finite model of compactification theory: Hausdorff quotients as the
//! preweak compactifications of a finite space, function algebras as
//! partition data, the correspondence onto the subalgebra lattice, the
//! character space / evaluation / transform triple, and the induced
//! functor construction.

use crate::fintop::{FinSpace, Partition, PointMap};
use crate::lattice::FiniteLattice;
use crate::ratspan::{self, Rat, RowSpace};
use crate::{classify, Result, TopError};

/// Cap on point count for partition enumeration (Bell-number sized).
pub const PARTITION_CAP: usize = 8;

/// A unital conjugation-closed algebra of functions on a finite space,
/// stored combinatorially: the functions constant on each block of a
/// coarsening of the component partition. `base` is the component
/// partition of the ambient space, `sub` partitions the component
/// indices. Unitality and closure under products and conjugation are
/// structural for this representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FnAlgebra {
    base: Partition,
    sub: Partition,
}

impl FnAlgebra {
    pub fn new(base: Partition, sub: Partition) -> FnAlgebra {
        assert_eq!(sub.n(), base.num_blocks());
        FnAlgebra { base, sub }
    }

    /// All continuous functions on `x` (functions constant on components).
    pub fn full(x: &FinSpace) -> FnAlgebra {
        let base = x.components();
        let k = base.num_blocks();
        FnAlgebra {
            sub: Partition::singletons(k),
            base,
        }
    }

    /// The constants.
    pub fn constants(x: &FinSpace) -> FnAlgebra {
        let base = x.components();
        let k = base.num_blocks();
        FnAlgebra {
            sub: Partition::trivial(k),
            base,
        }
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn sub(&self) -> &Partition {
        &self.sub
    }

    /// Dimension = number of sub-blocks.
    pub fn dim(&self) -> usize {
        self.sub.num_blocks()
    }

    /// The partition of the points whose blocks the member functions are
    /// constant on (each block a union of components).
    pub fn point_partition(&self) -> Partition {
        let labels = (0..self.base.n())
            .map(|x| self.sub.block_of(self.base.block_of(x)))
            .collect();
        Partition::from_block_of(labels)
    }

    /// Membership test for a function given as a per-point value vector.
    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        v.len() == self.base.n()
            && self.point_partition().blocks().iter().all(|b| {
                let mut it = b.iter();
                let first = it.next().map(|i| v[i]);
                it.all(|i| Some(v[i]) == first)
            })
    }

    /// `other ⊆ self` (algebra inclusion): the finer the partition, the
    /// bigger the algebra.
    pub fn includes(&self, other: &FnAlgebra) -> bool {
        debug_assert_eq!(self.base, other.base);
        self.sub.refines(&other.sub)
    }
}

/// A preweak compactification of a finite space: a Hausdorff quotient,
/// described by its partition together with the quotient space and map.
#[derive(Clone, Debug)]
pub struct PreweakCompactification {
    pub partition: Partition,
    pub quotient: FinSpace,
    pub q: PointMap,
}

impl PreweakCompactification {
    pub fn is_injective(&self) -> bool {
        self.partition.num_blocks() == self.partition.n()
    }
}

/// Is the relation `{(a,b) : same block}` closed in `X × X`? Checked
/// directly through minimal neighbourhoods, without materializing the
/// square.
fn relation_closed_in_square(x: &FinSpace, p: &Partition) -> bool {
    let n = x.n();
    for a in 0..n {
        for b in 0..n {
            if p.same_block(a, b) {
                continue;
            }
            for u in x.min_nbhd(a).iter() {
                for v in x.min_nbhd(b).iter() {
                    if p.same_block(u, v) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All Hausdorff quotients of `x`, in canonical partition order. Three
/// equivalent characterizations are computed for every partition and must
/// agree: the quotient is T2, every block is open, and the induced
/// relation is closed in the square.
pub fn hausdorff_quotients(x: &FinSpace) -> Result<Vec<PreweakCompactification>> {
    if x.n() > PARTITION_CAP {
        return Err(TopError::TooLarge {
            what: "quotient enumeration points",
            size: x.n(),
            cap: PARTITION_CAP,
        });
    }
    let mut out = Vec::new();
    for p in Partition::all_partitions(x.n()) {
        let (quotient, q) = x.quotient(&p);
        let t2 = classify::separation(&quotient).t2;
        let blocks_open = p.blocks().iter().all(|b| x.is_open(*b));
        let r_closed = relation_closed_in_square(x, &p);
        if t2 != blocks_open || blocks_open != r_closed {
            return Err(TopError::InternalInvariantViolation(format!(
                "Hausdorff-quotient routes disagree on {p}: t2={t2} open-blocks={blocks_open} closed-relation={r_closed}"
            )));
        }
        if t2 {
            out.push(PreweakCompactification {
                partition: p,
                quotient,
                q,
            });
        }
    }
    Ok(out)
}

/// The algebra of functions pulled back along a Hausdorff quotient: the
/// functions constant on each block of the partition. Blocks of a
/// Hausdorff-quotient partition are clopen, hence unions of components.
pub fn f_map(x: &FinSpace, pc: &PreweakCompactification) -> Result<FnAlgebra> {
    let base = x.components();
    let mut labels = Vec::with_capacity(base.num_blocks());
    for block in base.blocks() {
        let rep = block.min_element().expect("components are nonempty");
        let pc_block = pc.partition.block_of(rep);
        if !block.is_subset_of(pc.partition.blocks()[pc_block]) {
            return Err(TopError::InternalInvariantViolation(format!(
                "quotient block splits component {block}"
            )));
        }
        labels.push(pc_block);
    }
    Ok(FnAlgebra::new(base, Partition::from_block_of(labels)))
}

/// All unital conjugation-closed subalgebras: one per partition of the
/// components, in canonical order.
pub fn subalgebras(x: &FinSpace) -> Result<Vec<FnAlgebra>> {
    let base = x.components();
    let k = base.num_blocks();
    if k > PARTITION_CAP {
        return Err(TopError::TooLarge {
            what: "subalgebra enumeration components",
            size: k,
            cap: PARTITION_CAP,
        });
    }
    Ok(Partition::all_partitions(k)
        .into_iter()
        .map(|sub| FnAlgebra::new(base.clone(), sub))
        .collect())
}

/// The subalgebra lattice, ordered by inclusion.
pub fn subalgebra_lattice(x: &FinSpace) -> Result<FiniteLattice> {
    let algebras = subalgebras(x)?;
    let labels = algebras
        .iter()
        .map(|a| a.point_partition().to_string())
        .collect();
    let mut lattice = FiniteLattice::from_order(labels, |i, j| algebras[j].includes(&algebras[i]))?;
    if lattice.len() <= 1 << 9 {
        assert!(
            lattice.check_lattice(),
            "subalgebra order must be a lattice"
        );
    }
    Ok(lattice)
}

/// Exact-rational oracle for the partition representation: the algebra
/// generated by the block indicators of `sub` (with unit) equals the
/// functions constant on the blocks.
pub fn subalgebra_matches_span(sub: &Partition) -> bool {
    let k = sub.n();
    let generators: Vec<Vec<Rat>> = sub
        .blocks()
        .iter()
        .map(|b| ratspan::indicator(k, b.iter()))
        .collect();
    let span = ratspan::span_closure(k, &generators, true);
    span.rank() == sub.num_blocks()
        && generators.iter().all(|g| span.contains(g))
        && span.basis().iter().all(|v| {
            sub.blocks().iter().all(|b| {
                let mut it = b.iter();
                let first = it.next().map(|i| v[i]);
                it.all(|i| Some(v[i]) == first)
            })
        })
}

/// The unique map `h` with `h ∘ q2 = q1`, when it exists: `q2` surjective
/// forces `h` pointwise; existence is well-definedness plus continuity.
pub fn factor_map(q2: &PointMap, q1: &PointMap) -> Option<PointMap> {
    debug_assert_eq!(q2.domain(), q1.domain());
    if !q2.is_surjective() {
        return None;
    }
    let mut table = vec![usize::MAX; q2.codomain().n()];
    for x in 0..q2.domain().n() {
        let z = q2.apply(x);
        if table[z] == usize::MAX {
            table[z] = q1.apply(x);
        } else if table[z] != q1.apply(x) {
            return None;
        }
    }
    let h = PointMap::new(q2.codomain().clone(), q1.codomain().clone(), table)
        .expect("factor table is well-formed");
    h.preserves_specialization().then_some(h)
}

/// Compactification order on Hausdorff quotients: `a ≤ b` iff some
/// continuous `h` with `h ∘ q_b = q_a` exists.
pub fn quotient_leq(a: &PreweakCompactification, b: &PreweakCompactification) -> bool {
    factor_map(&b.q, &a.q).is_some()
}

/// Literal route for the order: scan every map between the quotients,
/// count the continuous ones satisfying `h ∘ q_b = q_a`, and insist the
/// count is at most one. Feasible on the exhaustive small corpus only.
pub fn quotient_leq_exhaustive(a: &PreweakCompactification, b: &PreweakCompactification) -> bool {
    let zb = b.quotient.n();
    let ya = a.quotient.n();
    if ya == 0 {
        return zb == 0;
    }
    let mut found = 0u32;
    let mut table = vec![0usize; zb];
    loop {
        let h = PointMap::new(b.quotient.clone(), a.quotient.clone(), table.clone())
            .expect("scan table is well-formed");
        if b.q.then(&h).expect("composable") == a.q && h.is_continuous() {
            found += 1;
        }
        // odometer over all y^z tables
        let mut i = 0;
        loop {
            if i == zb {
                assert!(found <= 1, "factor map must be unique");
                return found == 1;
            }
            table[i] += 1;
            if table[i] < ya {
                break;
            }
            table[i] = 0;
            i += 1;
        }
    }
}

/// Outcome of checking the order isomorphism between the Hausdorff
/// quotients and the subalgebra lattice.
#[derive(Clone, Debug)]
pub struct ThrpreReport {
    pub ok: bool,
    pub quotients: usize,
    pub detail: Option<String>,
}

/// Check that `f_map` is a bijection from Hausdorff quotients onto the
/// subalgebras and that the compactification order matches algebra
/// inclusion, pair by pair.
pub fn verify_thrpre(x: &FinSpace) -> Result<ThrpreReport> {
    let fail = |detail: String, quotients: usize| {
        Ok(ThrpreReport {
            ok: false,
            quotients,
            detail: Some(detail),
        })
    };
    let hqs = hausdorff_quotients(x)?;
    let algebras = subalgebras(x)?;
    let images: Vec<FnAlgebra> = hqs.iter().map(|pc| f_map(x, pc)).collect::<Result<_>>()?;
    if images.len() != algebras.len() {
        return fail(
            format!(
                "{} Hausdorff quotients but {} subalgebras",
                images.len(),
                algebras.len()
            ),
            hqs.len(),
        );
    }
    for a in &algebras {
        if !images.contains(a) {
            return fail(format!("subalgebra {a:?} not hit"), hqs.len());
        }
    }
    for (i, a) in images.iter().enumerate() {
        if images[i + 1..].contains(a) {
            return fail(format!("subalgebra {a:?} hit twice"), hqs.len());
        }
    }
    for (i, pa) in hqs.iter().enumerate() {
        for (j, pb) in hqs.iter().enumerate() {
            let order = quotient_leq(pa, pb);
            let alg = images[j].includes(&images[i]);
            if order != alg {
                return fail(
                    format!(
                        "order mismatch between {} and {}: quotient {} algebra {}",
                        pa.partition, pb.partition, order, alg
                    ),
                    hqs.len(),
                );
            }
        }
    }
    Ok(ThrpreReport {
        ok: true,
        quotients: hqs.len(),
        detail: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeparationPredicates {
    pub separates_points: bool,
    pub separates_points_and_closed_sets: bool,
}

/// Which points and closed sets the members of `a` can tell apart. A
/// member can separate `x` from a closed `E` iff the level set of `x` is
/// disjoint from `E` (values on distinct blocks are arbitrary).
pub fn separation_predicates(x: &FinSpace, a: &FnAlgebra) -> SeparationPredicates {
    let pp = a.point_partition();
    let separates_points = pp.num_blocks() == x.n();
    let mut separates_closed = true;
    'outer: for open in x.opens() {
        let e = open.complement_in(x.n());
        for p in 0..x.n() {
            if !e.contains(p) && !pp.block_containing(p).inter(e).is_empty() {
                separates_closed = false;
                break 'outer;
            }
        }
    }
    SeparationPredicates {
        separates_points,
        separates_points_and_closed_sets: separates_closed,
    }
}

/// The character space of a partition algebra: one evaluation functional
/// per sub-block, identified by the sub-block index.
#[derive(Clone, Debug)]
pub struct CharacterSpace {
    pub algebra: FnAlgebra,
    pub characters: Vec<usize>,
}

pub fn characters(a: &FnAlgebra) -> CharacterSpace {
    CharacterSpace {
        characters: (0..a.dim()).collect(),
        algebra: a.clone(),
    }
}

/// Value vector of an algebra element over the characters.
pub fn gelfand(a: &FnAlgebra, element: &[Rat]) -> Result<Vec<Rat>> {
    if !a.contains_vec(element) {
        return Err(TopError::NotInAlgebra(format!(
            "vector {element:?} is not constant on the algebra blocks"
        )));
    }
    let pp = a.point_partition();
    Ok(pp
        .blocks()
        .iter()
        .map(|b| element[b.min_element().expect("blocks are nonempty")])
        .collect())
}

/// The evaluation map of `x` into the character space of its full
/// function algebra (a discrete space, one point per component).
pub fn ev(x: &FinSpace) -> (CharacterSpace, PointMap) {
    let full = FnAlgebra::full(x);
    let chars = characters(&full);
    let table = full.base().block_of_table().to_vec();
    let map = PointMap::new(x.clone(), FinSpace::discrete(chars.characters.len()), table)
        .expect("evaluation table is well-formed");
    (chars, map)
}

/// The dual of a continuous map on character spaces: a character of the
/// domain algebra (a component of `x`) is sent to the unique component of
/// `y` whose indicator pulls back to a function that is 1 there.
fn dual_on_characters(f: &PointMap) -> Result<Vec<usize>> {
    let comp_x = f.domain().components();
    let comp_y = f.codomain().components();
    let mut out = Vec::with_capacity(comp_x.num_blocks());
    for block in comp_x.blocks() {
        let mut hit = None;
        for (d, target) in comp_y.blocks().iter().enumerate() {
            // pullback of the indicator of target is 1 on this component?
            let pullback_one = block.iter().all(|p| target.contains(f.apply(p)));
            if pullback_one {
                if hit.is_some() {
                    return Err(TopError::InternalInvariantViolation(
                        "character image not unique".into(),
                    ));
                }
                hit = Some(d);
            }
        }
        match hit {
            Some(d) => out.push(d),
            None => {
                return Err(TopError::InternalInvariantViolation(format!(
                    "component {block} maps across components"
                )))
            }
        }
    }
    Ok(out)
}

/// Check the naturality squares of the induced functor (character space of
/// the full function algebra, with evaluation as the comparison map):
/// for every listed map, dualizing the pullback homomorphism and
/// composing with evaluation agrees with evaluating after the map.
pub fn induced_functor_check(spaces: &[FinSpace], maps: &[PointMap]) -> Result<bool> {
    for space in spaces {
        let (_, tau) = ev(space);
        let dual_id = dual_on_characters(&PointMap::identity(space))?;
        for p in 0..space.n() {
            if dual_id[tau.apply(p)] != tau.apply(p) {
                return Ok(false);
            }
        }
    }
    for f in maps {
        if !f.is_continuous() {
            return Err(TopError::InvalidMap(
                "induced functor squares need continuous maps".into(),
            ));
        }
        let (_, tau_x) = ev(f.domain());
        let (_, tau_y) = ev(f.codomain());
        let dual = dual_on_characters(f)?;
        for p in 0..f.domain().n() {
            if dual[tau_x.apply(p)] != tau_y.apply(f.apply(p)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Pullback of the component-indicator basis along `f`, as vectors in the
/// point space of the domain (the image of the dual homomorphism on
/// functions). Feeds the finite model of the function-algebra facts about
/// injectivity/surjectivity/density.
pub fn pullback_basis(f: &PointMap) -> Vec<Vec<Rat>> {
    let comp_y = f.codomain().components();
    comp_y
        .blocks()
        .iter()
        .map(|b| ratspan::indicator(f.domain().n(), f.preimage(*b).iter()))
        .collect()
}

/// Row space spanned by the pullback basis.
pub fn pullback_space(f: &PointMap) -> RowSpace {
    let mut space = RowSpace::new(f.domain().n());
    for v in pullback_basis(f) {
        space.insert(&v);
    }
    space
}
