use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use super::corpus::{generated_trees, graphs_up_to, standard_corpus};
use super::{enumerate_maps, find_articulation_points, Counterexample, EnumerationSpec, MapFilter, VerificationReport, VerifyError};
use crate::constructions::{
    interval, product_image, product_map_between, projections, simple_closed_curve, three_branch_tree, wedge_image,
    wedge_map, RootedTree, WedgeDecomposition,
};
use crate::maps::oracle::{
    connectivity_preservation_counterexample, continuity_counterexample, shyness_counterexample, ConnectedSubsetTable,
    DEFAULT_ORACLE_LIMIT,
};
use crate::maps::{compose, DigitalFunction};
use crate::topology::{cu_adjacent, Adjacency, DigitalImage, Point};

pub const CONTINUITY_ORACLE: &str = "continuity-oracle";
pub const SHYNESS_ORACLE: &str = "shyness-oracle";
pub const EQUIVALENCES: &str = "equivalences";
pub const MONOTONE: &str = "monotone";
pub const CLOSED_CURVE: &str = "closed-curve";
pub const PRODUCT: &str = "product";
pub const PRODUCT_MAPS: &str = "product-maps";
pub const CU_PRODUCT: &str = "cu-product";
pub const WEDGE: &str = "wedge";
pub const COMPOSITION: &str = "composition";
pub const ISOMORPHISM: &str = "isomorphism";
pub const CONSTANT_MAPS: &str = "constant-maps";
pub const CUT_VERTEX: &str = "cut-vertex";

type Images = [Arc<DigitalImage>];

/// Runs audits under one enumeration bound.
#[derive(Clone, Copy, Debug)]
pub struct Verifier {
    pub bound: u128,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            bound: super::DEFAULT_ENUMERATION_BOUND,
        }
    }
}

/// Per-instance results gathered by the workers, in input order.
struct Tally {
    instances: u64,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            instances: 0,
            counterexamples: Vec::new(),
        }
    }

    fn absorb(mut self, other: Tally) -> Self {
        self.instances += other.instances;
        self.counterexamples.extend(other.counterexamples);
        self
    }

    fn report(self, theorem_id: &str, started: Instant) -> VerificationReport {
        VerificationReport::finish(theorem_id, self.instances, self.counterexamples, started)
    }
}

fn gather<T, F>(items: Vec<T>, check: F) -> Result<Tally, VerifyError>
where
    T: Send,
    F: Fn(T) -> Result<Tally, VerifyError> + Sync + Send,
{
    let parts: Vec<Result<Tally, VerifyError>> = items.into_par_iter().map(check).collect();
    parts.into_iter().try_fold(Tally::new(), |acc, part| Ok(acc.absorb(part?)))
}

fn ordered_pairs(images: &Images) -> Vec<(Arc<DigitalImage>, Arc<DigitalImage>)> {
    images
        .iter()
        .flat_map(|x| images.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

fn is_monotone(values: &[usize]) -> bool {
    values.windows(2).all(|w| w[0] <= w[1]) || values.windows(2).all(|w| w[0] >= w[1])
}

impl Verifier {
    pub fn new(bound: u128) -> Self {
        Verifier { bound }
    }

    fn maps(&self, domain: &Arc<DigitalImage>, codomain: &Arc<DigitalImage>, filter: MapFilter) -> Result<Vec<DigitalFunction>, VerifyError> {
        let spec = EnumerationSpec::new(domain.clone(), codomain.clone(), filter).with_bound(self.bound);
        Ok(enumerate_maps(&spec)?.collect())
    }

    /// Pointwise continuity against "connected sets have connected images",
    /// over every function between every ordered pair of `images`.
    pub fn continuity_oracle(&self, images: &Images) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let tally = gather(ordered_pairs(images), |(x, y)| {
            let table = ConnectedSubsetTable::new(x.clone(), DEFAULT_ORACLE_LIMIT)?;
            let mut t = Tally::new();
            for f in self.maps(&x, &y, MapFilter::All)? {
                t.instances += 1;
                let pointwise = f.continuity_violation();
                let subsetwise = continuity_counterexample(&f, &table);
                if pointwise.is_none() != subsetwise.is_none() {
                    let witness = match (pointwise, subsetwise) {
                        (Some((a, b)), _) => vec![a, b],
                        (_, Some(s)) => s.into_iter().collect(),
                        _ => Vec::new(),
                    };
                    t.counterexamples
                        .push(Counterexample::new("pointwise and subset continuity disagree", &[&f], witness));
                }
            }
            Ok(t)
        })?;
        Ok(tally.report(CONTINUITY_ORACLE, started))
    }

    /// Shyness from point and adjacent-pair preimages against "every
    /// connected subset has a connected preimage", over all continuous
    /// surjections.
    pub fn shyness_oracle(&self, images: &Images) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let tally = gather(ordered_pairs(images), |(x, y)| {
            let table = ConnectedSubsetTable::new(y.clone(), DEFAULT_ORACLE_LIMIT)?;
            let mut t = Tally::new();
            for f in self.maps(&x, &y, MapFilter::ContinuousSurjections)? {
                t.instances += 1;
                let direct = f.shyness();
                let subsetwise = shyness_counterexample(&f, &table)?;
                if direct.is_ok() != subsetwise.is_none() {
                    let witness = match (direct, subsetwise) {
                        (Err(e), _) => e.witness(),
                        (_, Some(s)) => s.into_iter().collect(),
                        _ => Vec::new(),
                    };
                    t.counterexamples
                        .push(Counterexample::new("direct and subset shyness disagree", &[&f], witness));
                }
            }
            Ok(t)
        })?;
        Ok(tally.report(SHYNESS_ORACLE, started))
    }

    fn equivalences_tally(&self, x: &Arc<DigitalImage>, y: &Arc<DigitalImage>) -> Result<Tally, VerifyError> {
        let codomain_table = ConnectedSubsetTable::new(y.clone(), DEFAULT_ORACLE_LIMIT)?;
        let mut t = Tally::new();
        for f in self.maps(x, y, MapFilter::ContinuousSurjections)? {
            t.instances += 1;
            let inverse = f.inverse_multifunction()?;
            let shy = f.is_shy();
            let preimages = shyness_counterexample(&f, &codomain_table)?.is_none();
            let preserving = connectivity_preservation_counterexample(&inverse, &codomain_table).is_none();
            let weak = inverse.has_weak_continuity()
                && (0..y.len()).all(|v| x.is_connected_among(&f.preimage_members(&[v])));
            if !(shy == preimages && preimages == preserving && preserving == weak) {
                t.counterexamples.push(Counterexample::new(
                    format!(
                        "characterizations disagree: shy={shy} connected-preimages={preimages} \
                         inverse-preserving={preserving} weak-continuity={weak}"
                    ),
                    &[&f],
                    Vec::new(),
                ));
            }
        }
        Ok(t)
    }

    /// The four characterizations of shyness agree on every continuous
    /// surjection `x → y`.
    pub fn equivalences(&self, x: &Arc<DigitalImage>, y: &Arc<DigitalImage>) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        Ok(self.equivalences_tally(x, y)?.report(EQUIVALENCES, started))
    }

    pub fn equivalences_over(&self, images: &Images) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let tally = gather(ordered_pairs(images), |(x, y)| self.equivalences_tally(&x, &y))?;
        Ok(tally.report(EQUIVALENCES, started))
    }

    /// Continuous surjections `[0, x_len] → [0, y_len]` are shy exactly when monotone.
    pub fn monotone_characterization(&self, x_len: i64, y_len: i64) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let x = Arc::new(interval(0, x_len)?);
        let y = Arc::new(interval(0, y_len)?);
        let mut t = Tally::new();
        for f in self.maps(&x, &y, MapFilter::ContinuousSurjections)? {
            t.instances += 1;
            let shy = f.shyness();
            let monotone = is_monotone(f.values());
            if shy.is_ok() != monotone {
                let witness = shy.err().map(|e| e.witness()).unwrap_or_default();
                let what = if monotone { "monotone map is not shy" } else { "shy map is not monotone" };
                t.counterexamples.push(Counterexample::new(what, &[&f], witness));
            }
        }
        Ok(t.report(MONOTONE, started))
    }

    /// No shy map from an `m`-cycle onto `[0, k]` for `2 ≤ k ≤ k_max`.
    pub fn scc_image_bound(&self, m: usize, k_max: i64) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let curve = Arc::new(simple_closed_curve(m)?);
        let mut t = Tally::new();
        for k in 0..=k_max {
            let y = Arc::new(interval(0, k)?);
            for f in self.maps(&curve, &y, MapFilter::ContinuousSurjections)? {
                t.instances += 1;
                if k >= 2 && f.is_shy() {
                    t.counterexamples.push(Counterexample::new(
                        format!("shy map from a {m}-cycle onto [0,{k}]"),
                        &[&f],
                        Vec::new(),
                    ));
                }
            }
        }
        Ok(t.report(CLOSED_CURVE, started))
    }

    fn product_tally(&self, a: &Arc<DigitalImage>, b: &Arc<DigitalImage>, c: &Arc<DigitalImage>, d: &Arc<DigitalImage>) -> Result<Tally, VerifyError> {
        let fs = self.maps(a, c, MapFilter::ContinuousSurjections)?;
        let gs = self.maps(b, d, MapFilter::ContinuousSurjections)?;
        let f_shy: Vec<bool> = fs.iter().map(DigitalFunction::is_shy).collect();
        let g_shy: Vec<bool> = gs.iter().map(DigitalFunction::is_shy).collect();
        let dom = Arc::new(product_image(a, b));
        let cod = Arc::new(product_image(c, d));
        let mut t = Tally::new();
        for (f, &fs_shy) in fs.iter().zip(&f_shy) {
            for (g, &gs_shy) in gs.iter().zip(&g_shy) {
                t.instances += 1;
                let fg = product_map_between(f, g, &dom, &cod)?;
                let prod_shy = fg.shyness();
                if (fs_shy && gs_shy) != prod_shy.is_ok() {
                    let witness = prod_shy.err().map(|e| e.witness()).unwrap_or_default();
                    t.counterexamples.push(Counterexample::new(
                        format!("factors shy: {fs_shy}/{gs_shy}, product shy: {}", !(fs_shy && gs_shy)),
                        &[f, g],
                        witness,
                    ));
                }
            }
        }
        Ok(t)
    }

    /// `f` and `g` are shy iff `f × g` is, for all continuous surjections
    /// `f: a → c`, `g: b → d`.
    pub fn product_theorem(
        &self,
        a: &Arc<DigitalImage>,
        b: &Arc<DigitalImage>,
        c: &Arc<DigitalImage>,
        d: &Arc<DigitalImage>,
    ) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        Ok(self.product_tally(a, b, c, d)?.report(PRODUCT, started))
    }

    fn quadruples(images: &Images) -> Vec<[Arc<DigitalImage>; 4]> {
        let mut out = Vec::new();
        for a in images {
            for b in images {
                for c in images {
                    for d in images {
                        out.push([a.clone(), b.clone(), c.clone(), d.clone()]);
                    }
                }
            }
        }
        out
    }

    /// [`Verifier::product_theorem`] over every choice of the four factors from `images`.
    pub fn product_theorem_over(&self, images: &Images) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let tally = gather(Self::quadruples(images), |[a, b, c, d]| self.product_tally(&a, &b, &c, &d))?;
        Ok(tally.report(PRODUCT, started))
    }

    /// For all functions `f`, `g` between members of `images`: `f × g` is
    /// continuous iff both are, surjective iff both are; and both
    /// projections of every product domain are continuous.
    pub fn product_map_laws(&self, images: &Images) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let tally = gather(Self::quadruples(images), |[a, b, c, d]| {
            let fs = self.maps(&a, &c, MapFilter::All)?;
            let gs = self.maps(&b, &d, MapFilter::All)?;
            let dom = Arc::new(product_image(&a, &b));
            let cod = Arc::new(product_image(&c, &d));
            let mut t = Tally::new();
            let (p1, p2) = projections(&dom)?;
            t.instances += 1;
            if !(p1.is_continuous() && p2.is_continuous()) {
                t.counterexamples
                    .push(Counterexample::new("projection is not continuous", &[&p1, &p2], Vec::new()));
            }
            for f in &fs {
                for g in &gs {
                    t.instances += 1;
                    let fg = product_map_between(f, g, &dom, &cod)?;
                    if fg.is_continuous() != (f.is_continuous() && g.is_continuous()) {
                        t.counterexamples
                            .push(Counterexample::new("continuity of f × g differs from its factors", &[f, g], Vec::new()));
                    }
                    if fg.is_surjective() != (f.is_surjective() && g.is_surjective()) {
                        t.counterexamples
                            .push(Counterexample::new("surjectivity of f × g differs from its factors", &[f, g], Vec::new()));
                    }
                }
            }
            Ok(t)
        })?;
        Ok(tally.report(PRODUCT_MAPS, started))
    }

    /// `k_*(c_m, c_n)` and `c_{m+n}` agree on every ordered pair of the
    /// box `[-radius, radius]^{m+n}`.
    pub fn cu_product_identity(&self, m: usize, n: usize, radius: i64) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        if m == 0 || n == 0 || radius < 0 {
            return Err(VerifyError::InvalidArgument(format!(
                "need m, n >= 1 and radius >= 0, got m={m} n={n} radius={radius}"
            )));
        }
        let side = (2 * radius + 1) as u128;
        let box_points = side.checked_pow((m + n) as u32).unwrap_or(u128::MAX);
        let pair_count = box_points.saturating_mul(box_points);
        if pair_count > self.bound {
            return Err(VerifyError::BoundExceeded {
                candidates: pair_count,
                bound: self.bound,
            });
        }
        let points = lattice_box(m + n, radius);
        let product = Adjacency::normal_product(Adjacency::Cu(m), m, Adjacency::Cu(n), n);
        let mut t = Tally::new();
        for x in &points {
            for y in &points {
                t.instances += 1;
                let lhs = product.adjacent(x, y)?;
                let rhs = cu_adjacent(x, y, m + n)?;
                if lhs != rhs {
                    t.counterexamples.push(Counterexample::new(
                        format!("normal product says {lhs}, c_{} says {rhs}", m + n),
                        &[],
                        vec![x.clone(), y.clone()],
                    ));
                }
            }
        }
        Ok(t.report(CU_PRODUCT, started))
    }

    fn wedge_tally(&self, dom: &WedgeDecomposition, cod: &WedgeDecomposition) -> Result<Tally, VerifyError> {
        let at_junction = |f: &DigitalFunction| f.apply(&dom.junction) == Some(&cod.junction);
        let fs: Vec<DigitalFunction> = self
            .maps(&dom.left_image, &cod.left_image, MapFilter::All)?
            .into_iter()
            .filter(at_junction)
            .collect();
        let gs: Vec<DigitalFunction> = self
            .maps(&dom.right_image, &cod.right_image, MapFilter::All)?
            .into_iter()
            .filter(at_junction)
            .collect();
        let g_shy: Vec<bool> = gs.iter().map(DigitalFunction::is_shy).collect();
        let mut t = Tally::new();
        for f in &fs {
            let f_shy = f.is_shy();
            for (g, &g_shy) in gs.iter().zip(&g_shy) {
                t.instances += 1;
                let fg = wedge_map(f, g, dom, cod)?;
                let wedge_shy = fg.shyness();
                if (f_shy && g_shy) != wedge_shy.is_ok() {
                    let witness = wedge_shy.err().map(|e| e.witness()).unwrap_or_default();
                    t.counterexamples.push(Counterexample::new(
                        format!("parts shy: {f_shy}/{g_shy}, wedge map shy: {}", !(f_shy && g_shy)),
                        &[f, g],
                        witness,
                    ));
                }
            }
        }
        Ok(t)
    }

    /// `f` and `g` are shy iff `f ∧ g` is, over every pair of maps that
    /// send the domain junction to the codomain junction.
    pub fn wedge_theorem(&self, dom: &WedgeDecomposition, cod: &WedgeDecomposition) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        Ok(self.wedge_tally(dom, cod)?.report(WEDGE, started))
    }

    /// [`Verifier::wedge_theorem`] on `[-a, 0] ∨ [0, b] → [-c, 0] ∨ [0, d]`
    /// for all `a, b, c, d` in `0..=max_len`.
    pub fn wedge_theorem_intervals(&self, max_len: i64) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let mut wedges = Vec::new();
        for a in 0..=max_len {
            for b in 0..=max_len {
                wedges.push(wedge_image(&interval(-a, 0)?, &interval(0, b)?, Point::label(0))?);
            }
        }
        let mut jobs = Vec::new();
        for dom in &wedges {
            for cod in &wedges {
                jobs.push((dom, cod));
            }
        }
        let tally = gather(jobs, |(dom, cod)| self.wedge_tally(dom, cod))?;
        Ok(tally.report(WEDGE, started))
    }

    /// Every composition of composable shy maps between members of `images` is shy.
    pub fn composition_closure(&self, images: &Images) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let n = images.len();
        let shy_maps: Vec<Vec<DigitalFunction>> = ordered_pairs(images)
            .into_par_iter()
            .map(|(x, y)| self.maps(&x, &y, MapFilter::Shy))
            .collect::<Result<_, _>>()?;
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .collect();
        let tally = gather(triples, |(a, b, c)| {
            let mut t = Tally::new();
            for f in &shy_maps[a * n + b] {
                for g in &shy_maps[b * n + c] {
                    t.instances += 1;
                    let gf = compose(g, f)?;
                    if let Err(e) = gf.shyness() {
                        t.counterexamples
                            .push(Counterexample::new("composition of shy maps is not shy", &[f, g], e.witness()));
                    }
                }
            }
            Ok(t)
        })?;
        Ok(tally.report(COMPOSITION, started))
    }

    /// Isomorphisms are shy, and injective shy maps are isomorphisms.
    pub fn isomorphism_laws(&self, images: &Images) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let tally = gather(ordered_pairs(images), |(x, y)| {
            let mut t = Tally::new();
            for f in self.maps(&x, &y, MapFilter::ContinuousSurjections)? {
                t.instances += 1;
                let (iso, shy, injective) = (f.is_isomorphism(), f.is_shy(), f.is_injective());
                if iso && !shy {
                    t.counterexamples
                        .push(Counterexample::new("isomorphism is not shy", &[&f], Vec::new()));
                }
                if shy && injective && !iso {
                    t.counterexamples
                        .push(Counterexample::new("injective shy map is not an isomorphism", &[&f], Vec::new()));
                }
            }
            Ok(t)
        })?;
        Ok(tally.report(ISOMORPHISM, started))
    }

    /// A constant map from a connected image onto a single point is shy.
    pub fn constant_maps(&self, images: &Images) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let point = Arc::new(interval(0, 0)?);
        let mut t = Tally::new();
        for x in images.iter().filter(|x| x.is_connected() && !x.is_empty()) {
            t.instances += 1;
            let f = DigitalFunction::constant(x.clone(), point.clone(), &Point::label(0))?;
            if let Err(e) = f.shyness() {
                t.counterexamples
                    .push(Counterexample::new("constant map is not shy", &[&f], e.witness()));
            }
        }
        Ok(t.report(CONSTANT_MAPS, started))
    }

    fn cut_vertex_tally(&self, tree: &RootedTree, k: i64) -> Result<Tally, VerifyError> {
        let image = &tree.image;
        let cuts: Vec<usize> = find_articulation_points(image)?
            .iter()
            .map(|p| image.index_of(p).expect("articulation point of the image"))
            .collect();
        let pieces: Vec<Vec<Vec<usize>>> = cuts
            .iter()
            .map(|&r| {
                let mut members = vec![true; image.len()];
                members[r] = false;
                image.components_among(&members)
            })
            .collect();
        let branches: Vec<Vec<usize>> = tree
            .branches
            .iter()
            .map(|b| b.iter().map(|p| image.index_of(p).expect("branch point")).collect())
            .collect();
        let root = image.index_of(&tree.root).expect("root");

        let mut t = Tally::new();
        for j in 0..=k {
            let y = Arc::new(interval(0, j)?);
            for f in self.maps(image, &y, MapFilter::Shy)? {
                t.instances += 1;
                let v = f.values();
                for (&r, comps) in cuts.iter().zip(&pieces) {
                    let moving = comps.iter().filter(|c| c.iter().any(|&i| v[i] != v[r])).count();
                    if moving > 2 {
                        t.counterexamples.push(Counterexample::new(
                            format!("shy map is not constant on {moving} components around a cut point"),
                            &[&f],
                            vec![image.point(r).clone()],
                        ));
                    }
                }
                let moving = branches.iter().filter(|b| b.iter().any(|&i| v[i] != v[root])).count();
                if moving > 2 {
                    t.counterexamples.push(Counterexample::new(
                        format!("shy map is non-constant on {moving} branches at the root"),
                        &[&f],
                        vec![tree.root.clone()],
                    ));
                }
            }
        }
        Ok(t)
    }

    /// For every shy map from the tree onto `[0, j]`, `j ≤ k`, and every
    /// articulation point `r`, at most two components of `X ∖ {r}` carry a
    /// value other than `f(r)`; likewise for the root branches.
    pub fn cut_vertex_bound(&self, tree: &RootedTree, k: i64) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        Ok(self.cut_vertex_tally(tree, k)?.report(CUT_VERTEX, started))
    }

    pub fn cut_vertex_bound_over(&self, trees: &[RootedTree], k: i64) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let tally = gather(trees.iter().collect(), |tree| self.cut_vertex_tally(tree, k))?;
        Ok(tally.report(CUT_VERTEX, started))
    }

    /// One suite at its default parameters.
    pub fn run_suite(&self, suite: Suite) -> Result<VerificationReport, VerifyError> {
        let started = Instant::now();
        let mut report = match suite {
            Suite::ContinuityOracle => self.continuity_oracle(&standard_corpus())?,
            Suite::ShynessOracle => self.shyness_oracle(&standard_corpus())?,
            Suite::Equivalences => self.equivalences_over(&standard_corpus())?,
            Suite::Monotone => VerificationReport::merge(
                MONOTONE,
                [self.monotone_characterization(4, 2)?, self.monotone_characterization(5, 3)?],
            ),
            Suite::ClosedCurve => VerificationReport::merge(
                CLOSED_CURVE,
                [4, 6, 8]
                    .into_iter()
                    .map(|m| self.scc_image_bound(m, 3))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            Suite::Product => self.product_theorem_over(&graphs_up_to(3))?,
            Suite::ProductMaps => self.product_map_laws(&graphs_up_to(3))?,
            Suite::CuProduct => VerificationReport::merge(
                CU_PRODUCT,
                [self.cu_product_identity(1, 1, 1)?, self.cu_product_identity(1, 2, 1)?],
            ),
            Suite::Wedge => self.wedge_theorem_intervals(2)?,
            Suite::Composition => self.composition_closure(&graphs_up_to(4))?,
            Suite::Isomorphism => self.isomorphism_laws(&standard_corpus())?,
            Suite::ConstantMaps => self.constant_maps(&standard_corpus())?,
            Suite::CutVertex => {
                let mut trees = vec![three_branch_tree()];
                trees.extend(generated_trees(20, 9));
                self.cut_vertex_bound_over(&trees, 3)?
            }
        };
        report.wall_time = started.elapsed();
        Ok(report)
    }

    /// Every suite at its default parameters, in [`Suite::ALL`] order.
    pub fn run_all(&self) -> Result<Vec<VerificationReport>, VerifyError> {
        Suite::ALL.iter().map(|&s| self.run_suite(s)).collect()
    }
}

fn lattice_box(dim: usize, radius: i64) -> Vec<Point> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (-radius..=radius).map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Point::new).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    ContinuityOracle,
    ShynessOracle,
    Equivalences,
    Monotone,
    ClosedCurve,
    Product,
    ProductMaps,
    CuProduct,
    Wedge,
    Composition,
    Isomorphism,
    ConstantMaps,
    CutVertex,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::ContinuityOracle,
        Suite::ShynessOracle,
        Suite::Equivalences,
        Suite::Monotone,
        Suite::ClosedCurve,
        Suite::Product,
        Suite::ProductMaps,
        Suite::CuProduct,
        Suite::Wedge,
        Suite::Composition,
        Suite::Isomorphism,
        Suite::ConstantMaps,
        Suite::CutVertex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ContinuityOracle => CONTINUITY_ORACLE,
            Suite::ShynessOracle => SHYNESS_ORACLE,
            Suite::Equivalences => EQUIVALENCES,
            Suite::Monotone => MONOTONE,
            Suite::ClosedCurve => CLOSED_CURVE,
            Suite::Product => PRODUCT,
            Suite::ProductMaps => PRODUCT_MAPS,
            Suite::CuProduct => CU_PRODUCT,
            Suite::Wedge => WEDGE,
            Suite::Composition => COMPOSITION,
            Suite::Isomorphism => ISOMORPHISM,
            Suite::ConstantMaps => CONSTANT_MAPS,
            Suite::CutVertex => CUT_VERTEX,
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

pub fn verify_monotone_characterization(x_len: i64, y_len: i64) -> Result<VerificationReport, VerifyError> {
    Verifier::default().monotone_characterization(x_len, y_len)
}

pub fn verify_scc_image_bound(m: usize, k_max: i64) -> Result<VerificationReport, VerifyError> {
    Verifier::default().scc_image_bound(m, k_max)
}

pub fn verify_cut_vertex_bound(tree: &RootedTree, k: i64) -> Result<VerificationReport, VerifyError> {
    Verifier::default().cut_vertex_bound(tree, k)
}

pub fn verify_product_theorem(
    a: &Arc<DigitalImage>,
    b: &Arc<DigitalImage>,
    c: &Arc<DigitalImage>,
    d: &Arc<DigitalImage>,
) -> Result<VerificationReport, VerifyError> {
    Verifier::default().product_theorem(a, b, c, d)
}

pub fn verify_wedge_theorem(dom: &WedgeDecomposition, cod: &WedgeDecomposition) -> Result<VerificationReport, VerifyError> {
    Verifier::default().wedge_theorem(dom, cod)
}

pub fn verify_equivalences(x: &Arc<DigitalImage>, y: &Arc<DigitalImage>) -> Result<VerificationReport, VerifyError> {
    Verifier::default().equivalences(x, y)
}

pub fn verify_cu_product_identity(m: usize, n: usize, radius: i64) -> Result<VerificationReport, VerifyError> {
    Verifier::default().cu_product_identity(m, n, radius)
}
