//! Deterministic theorem-verification suites. Each suite runs one cluster
//! of cross-checks over an exhaustive corpus (all topologies up to a small
//! size) plus a seeded random corpus, and reports a pass/fail summary with
//! counterexamples. Identical configuration gives byte-identical output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fintop::{
    all_topologies_bruteforce, enumerate_topologies, random_corpus, FinSpace, Partition, PointMap,
    PointSet,
};
use crate::{classify, compactify, discretize, ideals, ratspan, symdual};

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// exhaustive corpus: all topologies on 0..=this many points (≤ 4)
    pub exhaustive_n: usize,
    /// random corpus size
    pub random_count: usize,
    /// random corpus point bound
    pub random_n: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exhaustive_n: 4,
            random_count: 200,
            random_n: 6,
            seed: 0,
        }
    }
}

const MAX_FAILURES_KEPT: usize = 20;

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    /// corpus size, for suites that range over spaces
    pub spaces: Option<usize>,
    pub failures: Vec<String>,
    suppressed: usize,
}

impl SuiteReport {
    fn new(name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            checks: 0,
            spaces: None,
            failures: Vec::new(),
            suppressed: 0,
        }
    }

    fn over_spaces(name: &'static str, count: usize) -> SuiteReport {
        let mut r = SuiteReport::new(name);
        r.spaces = Some(count);
        r
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            if self.failures.len() < MAX_FAILURES_KEPT {
                self.failures.push(msg());
            } else {
                self.suppressed += 1;
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.suppressed == 0
    }

    pub fn summary_line(&self) -> String {
        let scope = match self.spaces {
            Some(n) => format!("{n} spaces, {} checks", self.checks),
            None => format!("{} checks", self.checks),
        };
        if self.passed() {
            format!("{}: PASS ({scope})", self.name)
        } else {
            format!(
                "{}: FAIL ({} of {scope} failed)",
                self.name,
                self.failures.len() + self.suppressed,
            )
        }
    }
}

/// Exhaustive corpus (all topologies on 0..=n points) plus a seeded
/// random corpus, with suite-specific clamps applied by the callers.
fn corpus(cfg: &VerifyConfig, n_random_cap: usize, count_cap: usize) -> Vec<FinSpace> {
    let mut spaces = Vec::new();
    for n in 0..=cfg.exhaustive_n.min(4) {
        spaces.extend(enumerate_topologies(n).expect("exhaustive corpus within caps"));
    }
    spaces.extend(random_corpus(
        cfg.random_n.min(n_random_cap),
        cfg.random_count.min(count_cap),
        cfg.seed,
    ));
    spaces
}

/// Criterion: the optimized enumerator agrees with the brute-force filter
/// of all subset families, space by space.
pub fn run_enumeration(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = SuiteReport::new("enumeration");
    let mut total = 0usize;
    for n in 0..=cfg.exhaustive_n.min(4) {
        let fast = enumerate_topologies(n).expect("within cap");
        let slow = all_topologies_bruteforce(n).expect("within cap");
        r.check(fast.len() == slow.len(), || {
            format!("count mismatch at n={n}: {} vs {}", fast.len(), slow.len())
        });
        for (a, b) in fast.iter().zip(&slow) {
            r.check(a == b, || {
                format!("element mismatch at n={n}: {a:?} vs {b:?}")
            });
        }
        total += slow.len();
    }
    r.spaces = Some(total);
    r
}

/// The scatteredness cluster: the three-way α-scattered equivalence, the
/// derivative-vs-oracle agreement, the α-topology fast path against the
/// definitional route, and the component cross-checks.
pub fn run_rose(cfg: &VerifyConfig) -> SuiteReport {
    let corpus = corpus(cfg, 8, usize::MAX);
    let mut r = SuiteReport::over_spaces("rose", corpus.len());
    for x in corpus {
        let a = classify::is_alpha_scattered(&x);
        let b = classify::somewhere_dense_condition(&x);
        let alpha = classify::alpha_topology(&x);
        let c = classify::is_scattered(&alpha.alpha_space);
        r.check(a == b && b == c, || {
            format!("three-way equivalence broke on {x:?}: δ-dense={a} somewhere-dense={b} α-scattered={c}")
        });

        r.check(
            classify::is_scattered(&x) == classify::scattered_oracle(&x),
            || format!("scatteredness routes disagree on {x:?}"),
        );
        let cb = classify::cb_derivative(&x);
        r.check(
            cb.rank <= x.n().max(1)
                && cb
                    .derivatives
                    .windows(2)
                    .all(|w| w[1].is_subset_of(w[0]) && w[1] != w[0]),
            || format!("derivative sequence not strictly decreasing on {x:?}"),
        );
        r.check(!classify::is_scattered(&x) || a, || {
            format!("scattered but not α-scattered: {x:?}")
        });

        let oracle = classify::alpha_opens_oracle(&x);
        r.check(alpha.alpha_space.opens() == &oracle[..], || {
            format!("α-topology fast path diverges on {x:?}")
        });
        r.check(alpha.alpha_space.axioms_hold(), || {
            format!("α-topology is not a topology on {x:?}")
        });
        r.check(
            x.opens().iter().all(|o| alpha.alpha_space.is_open(*o)),
            || format!("α-topology lost an open set on {x:?}"),
        );

        let flags = classify::separation(&x);
        r.check(!flags.t2 || x.is_discrete(), || {
            format!("T2 but not discrete: {x:?}")
        });
        r.check(x.components() == x.clopen_atoms(), || {
            format!("component routes disagree on {x:?}")
        });
    }
    r
}

/// The discretization cluster: the image of a full discretization of a T1
/// space, the density theorem, the weak-lattice correspondence, the
/// existence criterion, and the anti-discrete counts.
pub fn run_density(cfg: &VerifyConfig) -> SuiteReport {
    let corpus = corpus(cfg, 8, usize::MAX);
    let mut r = SuiteReport::over_spaces("density", corpus.len());
    for x in corpus {
        let delta = classify::isolated_points(&x);
        let fulls = discretize::all_discretizations(&x).expect("within cap");
        let t1 = classify::separation(&x).t1;
        if t1 {
            r.check(fulls.iter().all(|d| d.image == delta), || {
                format!("T1 full discretization with image ≠ δ on {x:?}")
            });
            r.check(fulls.len() <= 1, || {
                format!("T1 space with several discretization classes: {x:?}")
            });
            for d in &fulls {
                let j = PointMap::discrete_inclusion(d.image, &x);
                let class = discretize::classify_pair(&j, &x).expect("valid inclusion");
                r.check(class.weak, || {
                    format!("full discretization of T1 space not weak on {x:?}")
                });
            }
            let (has, _) = discretize::has_discretization(&x);
            let dense = classify::is_dense(&x, delta);
            let alpha = classify::is_alpha_scattered(&x);
            r.check(has == dense && dense == alpha, || {
                format!("existence chain broke on {x:?}: has={has} dense={dense} α={alpha}")
            });
        }

        let density = discretize::density_check(&x).expect("within cap");
        r.check(density.verified, || {
            format!(
                "full discretization of wrong size on {x:?} (density {})",
                density.density
            )
        });
        r.check(
            !classify::is_dense(&x, delta) || discretize::has_discretization(&x).0,
            || format!("δ dense but no discretization found on {x:?}"),
        );

        let weak = discretize::all_weak_discretizations(&x).expect("within cap");
        let powerset: Vec<PointSet> = delta.subsets().collect();
        r.check(weak == powerset, || {
            format!("weak discretizations ≠ subsets of δ on {x:?}")
        });
        if x.n() <= 4 {
            let lattice = discretize::weak_lattice(&x).expect("within cap");
            let brute = {
                let labels = weak.iter().map(|s| s.to_string()).collect();
                crate::lattice::FiniteLattice::from_order(labels, |i, j| {
                    weak[i].is_subset_of(weak[j])
                })
                .expect("inclusion is a partial order")
            };
            r.check(lattice.is_order_isomorphic(&brute), || {
                format!("weak lattice not isomorphic to the brute-forced one on {x:?}")
            });
        }
    }
    for n in 2..=6 {
        let anti = FinSpace::antidiscrete(n);
        let fulls = discretize::all_discretizations(&anti).expect("within cap");
        r.check(fulls.len() == n, || {
            format!(
                "anti-discrete-{n} has {} discretization classes",
                fulls.len()
            )
        });
    }
    r
}

fn all_tables(domain: usize, codomain: usize) -> Vec<Vec<usize>> {
    if domain == 0 {
        return vec![Vec::new()];
    }
    if codomain == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut table = vec![0usize; domain];
    loop {
        out.push(table.clone());
        let mut i = 0;
        loop {
            if i == domain {
                return out;
            }
            table[i] += 1;
            if table[i] < codomain {
                break;
            }
            table[i] = 0;
            i += 1;
        }
    }
}

/// The compactification cluster: the quotient/subalgebra order
/// isomorphism, the span-closure oracle for the partition representation,
/// the separation predicates, the filter property, and the finite
/// function-algebra facts (evaluation, transform, pullback ranks).
pub fn run_thrpre(cfg: &VerifyConfig) -> SuiteReport {
    let corpus_spaces = corpus(cfg, 6, 200);
    let mut r = SuiteReport::over_spaces("thrpre", corpus_spaces.len());
    for k in 0..=4 {
        for sub in Partition::all_partitions(k) {
            r.check(compactify::subalgebra_matches_span(&sub), || {
                format!("span oracle rejects partition {sub} of {k} components")
            });
        }
    }
    for x in corpus_spaces {
        match compactify::verify_thrpre(&x) {
            Ok(report) => r.check(report.ok, || {
                format!("order isomorphism failed on {x:?}: {:?}", report.detail)
            }),
            Err(e) => r.check(false, || format!("verify_thrpre error on {x:?}: {e}")),
        }

        let hqs = compactify::hausdorff_quotients(&x).expect("within cap");
        let algebras: Vec<compactify::FnAlgebra> = hqs
            .iter()
            .map(|pc| compactify::f_map(&x, pc).expect("quotient blocks are clopen"))
            .collect();
        for (pc, a) in hqs.iter().zip(&algebras) {
            let preds = compactify::separation_predicates(&x, a);
            r.check(pc.is_injective() == preds.separates_points, || {
                format!(
                    "injectivity / point separation mismatch on {x:?} at {}",
                    pc.partition
                )
            });
        }
        for (pa, aa) in hqs.iter().zip(&algebras) {
            for pb in &hqs {
                // pa ≥ pb and pb injective forces pa injective
                if compactify::quotient_leq(pb, pa) && pb.is_injective() {
                    r.check(pa.is_injective(), || {
                        format!(
                            "filter property failed on {x:?}: {} above injective {}",
                            pa.partition, pb.partition
                        )
                    });
                }
            }
            if pa.is_injective() {
                let full = compactify::FnAlgebra::full(&x);
                let is_full = *aa == full;
                let is_identity = pa.partition == Partition::singletons(x.n());
                r.check(is_full == is_identity, || {
                    format!(
                        "full-algebra/identity mismatch on {x:?} at {}",
                        pa.partition
                    )
                });
            }
        }
        if x.is_discrete() {
            let injective = hqs.iter().filter(|pc| pc.is_injective()).count();
            r.check(injective == 1, || {
                format!("discrete space with {injective} injective Hausdorff quotients: {x:?}")
            });
        }
        let flags = classify::separation(&x);
        let has_injective = hqs.iter().any(|pc| pc.is_injective());
        r.check(flags.completely_hausdorff == has_injective, || {
            format!(
                "completely-Hausdorff flag disagrees with injective quotient existence on {x:?}"
            )
        });
        if x.n() <= 4 {
            for pa in &hqs {
                for pb in &hqs {
                    r.check(
                        compactify::quotient_leq(pa, pb)
                            == compactify::quotient_leq_exhaustive(pa, pb),
                        || {
                            format!(
                                "order routes disagree on {x:?}: {} vs {}",
                                pa.partition, pb.partition
                            )
                        },
                    );
                }
            }
        }
    }
    // finite function-algebra facts on discrete pairs: the pullback of
    // the indicator basis detects injectivity, surjectivity and density
    for a in 0..=3usize {
        for b in 0..=3usize {
            let dx = FinSpace::discrete(a);
            let dy = FinSpace::discrete(b);
            for table in all_tables(a, b) {
                let f = PointMap::new(dx.clone(), dy.clone(), table).expect("valid table");
                let space = compactify::pullback_space(&f);
                let basis = compactify::pullback_basis(&f);
                r.check((space.rank() == a) == f.is_injective(), || {
                    format!("pullback surjectivity mismatch for {f:?}")
                });
                let independent = basis.len() == space.rank()
                    && basis
                        .iter()
                        .all(|v| v.iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() > 0);
                r.check(independent == f.has_dense_range(), || {
                    format!("pullback injectivity mismatch for {f:?}")
                });
            }
        }
    }
    // evaluation is a homeomorphism on discrete spaces, collapses
    // components otherwise; the transform is unital and multiplicative
    for n in 0..=4usize {
        let d = FinSpace::discrete(n);
        let (_, tau) = compactify::ev(&d);
        r.check(tau.is_embedding() && tau.is_surjective(), || {
            format!("evaluation not a homeomorphism on discrete-{n}")
        });
    }
    {
        let d3 = FinSpace::discrete(3);
        let alg = compactify::FnAlgebra::full(&d3);
        let u = [ratspan::rat(2), ratspan::rat(-1), ratspan::rat(0)];
        let v = [ratspan::rat(5), ratspan::rat(4), ratspan::rat(7)];
        let gu = compactify::gelfand(&alg, &u).expect("in algebra");
        let gv = compactify::gelfand(&alg, &v).expect("in algebra");
        let prod: Vec<_> = ratspan::hadamard(&u, &v);
        let gprod = compactify::gelfand(&alg, &prod).expect("in algebra");
        r.check(ratspan::hadamard(&gu, &gv) == gprod, || {
            "transform is not multiplicative".into()
        });
        let unit = compactify::gelfand(&alg, &ratspan::ones(3)).expect("in algebra");
        r.check(unit == ratspan::ones(3), || {
            "transform is not unital".into()
        });
    }
    // naturality squares for all continuous maps between small canonical
    // spaces
    {
        let family = [
            FinSpace::empty(),
            FinSpace::discrete(1),
            FinSpace::discrete(2),
            FinSpace::discrete(3),
            FinSpace::sierpinski(),
            FinSpace::antidiscrete(2),
            FinSpace::antidiscrete(3),
            FinSpace::generated(3, &[PointSet::singleton(0)]).expect("in range"),
        ];
        for x in &family {
            for y in &family {
                for table in all_tables(x.n(), y.n()) {
                    let f = PointMap::new(x.clone(), y.clone(), table).expect("valid table");
                    if !f.is_continuous() {
                        continue;
                    }
                    match compactify::induced_functor_check(&[], std::slice::from_ref(&f)) {
                        Ok(ok) => r.check(ok, || format!("naturality square failed for {f:?}")),
                        Err(e) => r.check(false, || format!("naturality error for {f:?}: {e}")),
                    }
                }
            }
        }
    }
    r
}

/// The duality cluster: compactification-vs-discretization booleans over
/// all maps between small discrete spaces, the δ/β equivalence on the
/// finite discrete slice, and Stonean ⇔ discrete.
pub fn run_duality(cfg: &VerifyConfig) -> SuiteReport {
    let mut r = SuiteReport::new("duality");
    for a in 0..=3usize {
        for b in 0..=3usize {
            let dx = FinSpace::discrete(a);
            let dy = FinSpace::discrete(b);
            for table in all_tables(a, b) {
                let f = PointMap::new(dx.clone(), dy.clone(), table).expect("valid table");
                match discretize::compactification_discretization_duality(&f) {
                    Ok((comp, disc)) => r.check(comp == disc, || {
                        format!("duality booleans differ for {f:?}: {comp} vs {disc}")
                    }),
                    Err(e) => r.check(false, || format!("duality error for {f:?}: {e}")),
                }
            }
        }
    }
    // δ/β equivalence, exhaustively on n ≤ 3
    {
        let objects: Vec<FinSpace> = (0..=3).map(FinSpace::discrete).collect();
        let mut morphisms = Vec::new();
        for x in &objects {
            for y in &objects {
                for table in all_tables(x.n(), y.n()) {
                    morphisms.push(PointMap::new(x.clone(), y.clone(), table).expect("valid"));
                }
            }
        }
        match symdual::duality_check(&objects, &morphisms) {
            Ok(rec) => r.check(rec.squares_ok, || {
                "δ/β squares failed on the exhaustive slice".into()
            }),
            Err(e) => r.check(false, || format!("δ/β exhaustive check error: {e}")),
        }
    }
    // and on seeded random discrete spaces and maps
    {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6475616c);
        let count = cfg.random_count.min(100);
        let n_cap = cfg.random_n.min(6);
        for _ in 0..count {
            let a = rng.gen_range(0..=n_cap);
            let b = if a == 0 {
                rng.gen_range(0..=n_cap)
            } else {
                rng.gen_range(1..=n_cap)
            };
            let dx = FinSpace::discrete(a);
            let dy = FinSpace::discrete(b);
            let table: Vec<usize> = (0..a).map(|_| rng.gen_range(0..b)).collect();
            let f = PointMap::new(dx.clone(), dy.clone(), table).expect("valid table");
            match symdual::duality_check(&[dx, dy], std::slice::from_ref(&f)) {
                Ok(rec) => r.check(rec.squares_ok, || format!("δ/β squares failed for {f:?}")),
                Err(e) => r.check(false, || format!("δ/β random check error: {e}")),
            }
        }
    }
    for n in 0..=cfg.exhaustive_n.min(4) {
        for x in enumerate_topologies(n).expect("within cap") {
            let flags = classify::separation(&x);
            r.check(flags.stonean == x.is_discrete(), || {
                format!("Stonean/discrete mismatch on {x:?}")
            });
        }
    }
    r
}

/// The ideal-dictionary cluster: the weak-discretization/ideal lattice
/// match, uniqueness of the essential ideal generated by minimal
/// projections, the existence equivalences on T1 spaces, and the concrete
/// vector-model agreements on discrete spaces.
pub fn run_ideals(cfg: &VerifyConfig) -> SuiteReport {
    let corpus = corpus(cfg, 6, usize::MAX);
    let mut r = SuiteReport::over_spaces("ideals", corpus.len());
    for x in corpus {
        match ideals::i_map(&x) {
            Ok(rep) => r.check(rep.ok, || {
                format!("ideal correspondence failed on {x:?}: {:?}", rep.detail)
            }),
            Err(e) => r.check(false, || format!("i_map error on {x:?}: {e}")),
        }

        let delta = classify::isolated_points(&x);
        let mut essential_gmp_supports = Vec::new();
        for &u in x.opens() {
            let gmp = match ideals::is_gmp(&x, u) {
                Ok(v) => v,
                Err(e) => {
                    r.check(false, || format!("is_gmp error on {x:?} at {u}: {e}"));
                    continue;
                }
            };
            r.check(gmp == u.is_subset_of(delta), || {
                format!("gmp ≠ (⊆ δ) on {x:?} at {u}")
            });
            let essential = match ideals::is_essential(&x, u) {
                Ok(v) => v,
                Err(e) => {
                    r.check(false, || format!("is_essential error on {x:?} at {u}: {e}"));
                    continue;
                }
            };
            if gmp && essential {
                essential_gmp_supports.push(u);
            }
        }
        r.check(essential_gmp_supports.len() <= 1, || {
            format!("several essential gmp ideals on {x:?}: {essential_gmp_supports:?}")
        });
        let found = ideals::essential_gmp(&x);
        r.check(
            found.as_ref().map(|d| d.support) == essential_gmp_supports.first().copied(),
            || format!("essential_gmp result inconsistent on {x:?}"),
        );
        if let Some(d) = &found {
            r.check(d.support == delta && classify::is_dense(&x, delta), || {
                format!("essential gmp support is not a dense δ on {x:?}")
            });
        }
        if classify::separation(&x).t1 {
            let dense = classify::is_dense(&x, delta);
            let has = discretize::has_discretization(&x).0;
            r.check(found.is_some() == dense && dense == has, || {
                format!("T1 existence equivalences broke on {x:?}")
            });
        }
        // the whole algebra is generated by minimal projections iff the
        // space is discrete
        r.check(
            ideals::is_gmp(&x, x.full_set()).unwrap_or(false) == x.is_discrete(),
            || format!("whole-algebra gmp test broke on {x:?}"),
        );
        if x.is_discrete() && x.n() <= 5 {
            r.check(ideals::whole_algebra_gmp_concrete(&x), || {
                format!("concrete whole-algebra generation failed on {x:?}")
            });
        }
        r.check(
            ideals::zero_dim_projection_check(&x) == classify::separation(&x).zero_dimensional,
            || format!("projection picture of zero-dimensionality broke on {x:?}"),
        );
        let projections = ideals::minimal_projections(&x);
        r.check(
            projections
                .minimal_projections
                .iter()
                .all(|p| p.is_subset_of(delta)),
            || format!("minimal projection outside δ on {x:?}"),
        );
    }
    r
}

/// The two symbolic spaces: isolated points, density, and the classical
/// non-Stonean witness.
pub fn run_symbolic(_cfg: &VerifyConfig) -> SuiteReport {
    use symdual::{SymKind, SymSet};
    let mut r = SuiteReport::new("symbolic");
    let kind = SymKind::NatPlusInfinity;
    r.check(symdual::sym_isolated(kind) == SymSet::naturals(), || {
        "isolated points of ℕ∪{∞} are not ℕ".into()
    });
    r.check(
        symdual::sym_is_dense(kind, &symdual::sym_isolated(kind)).unwrap_or(false),
        || "ℕ is not dense in ℕ∪{∞}".into(),
    );
    let w = symdual::not_stonean_witness();
    r.check(w.witness == SymSet::evens(), || {
        "witness is not the even set".into()
    });
    r.check(w.closure == SymSet::evens().with_inf(true), || {
        "closure of the evens is not evens ∪ {∞}".into()
    });
    r.check(!w.closure_open && !w.stonean, || {
        "closure of the evens came out open".into()
    });
    r.check(w.alpha_scattered, || "ℕ∪{∞} not α-scattered".into());
    // clopen finite sets and open cofinite closures
    let fin = SymSet::finite(&[3, 5]);
    r.check(symdual::sym_closure(kind, &fin).unwrap() == fin, || {
        "finite sets must be closed".into()
    });
    let cof = SymSet::cofinite(&[0]);
    let cl = symdual::sym_closure(kind, &cof).unwrap();
    r.check(symdual::sym_is_open(kind, &cl).unwrap(), || {
        "closure of a cofinite set must be open".into()
    });
    r.check(
        symdual::sym_isolated(SymKind::NatDiscrete) == SymSet::naturals(),
        || "isolated points of discrete ℕ are not ℕ".into(),
    );
    r
}

pub const SUITE_NAMES: [&str; 7] = [
    "enumeration",
    "rose",
    "density",
    "thrpre",
    "duality",
    "ideals",
    "symbolic",
];

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Option<SuiteReport> {
    match name {
        "enumeration" => Some(run_enumeration(cfg)),
        "rose" => Some(run_rose(cfg)),
        "density" => Some(run_density(cfg)),
        "thrpre" => Some(run_thrpre(cfg)),
        "duality" => Some(run_duality(cfg)),
        "ideals" => Some(run_ideals(cfg)),
        "symbolic" => Some(run_symbolic(cfg)),
        _ => None,
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, cfg).expect("known suite"))
        .collect()
}
