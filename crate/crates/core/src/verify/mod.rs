//! Exhaustive verification of the extremal statements about `ρ_α`.
//!
//! A theorem id selects a set of [`Claim`]s. For every order `n` in the
//! requested range the matching corpus is enumerated, every graph is
//! checked at every α of the grid, and the per-graph tallies are merged in
//! enumeration order into one [`TheoremReport`]. The work per order is
//! independent, so runs can be resumed from a [`Checkpoint`].

mod bounds_check;
mod extremal;
mod rewiring;
mod trees;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_graph, CANON_CAP};
use crate::enumerate::{enumerate, EnumerationQuery, GraphClass};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::numfmt::serde_sig;
use crate::spectral::Alpha;

pub use bounds_check::verify_bounds;
pub use extremal::{verify_domination, verify_gamma_extremes};
pub use rewiring::{verify_pendant_monotonicity, verify_rewiring_lemmas, verify_surgeries};
pub use trees::verify_tree_extremes;

/// One checkable statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// Moving neighbors of `v` to `u` with `x_u ≥ x_v` raises `ρ_α`.
    MoveNeighbors,
    /// The two-edge swap under the Perron hypothesis raises `ρ_α`.
    EdgeSwap,
    /// Contracting a cut edge and hanging a pendant edge raises `ρ_α`.
    CutEdgeContraction,
    /// `ρ_α(G_u(p, q)) > ρ_α(G_u(p+1, q−1))`.
    PendantSingle,
    /// `ρ_α(G_{u,v}(p, q)) > ρ_α(G_{u,v}(p+1, q−1))`.
    PendantAdjacent,
    TreeMin,
    TreeMax,
    /// Unique second maximum `D_{n,1}` among trees.
    TreeSecondMax,
    /// Unique maximum `T_{n,d}` among trees of diameter `d`.
    TreeDiameterMax,
    MaxDegreeSparse,
    IrregularDiameter,
    LeastEigenvalueGap,
    IrregularMinDegree,
    KConnected,
    BoundComparisons,
    RowSum,
    Domination,
    /// `γ_α` maximized uniquely by `S_n` over all graphs.
    GammaAll,
    /// `γ_α` maximized uniquely by `S_n + e` over unicyclic graphs.
    GammaUnicyclic,
    /// `γ_α` maximized uniquely by `S_n + e` over non-bipartite graphs.
    GammaNonBipartite,
    EnergyBounds,
    EstradaBound,
    /// `μ(G) ≤ 2ρ_{1/2}(G)`, equality iff bipartite.
    LaplacianCrossCheck,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).expect("unit variant");
        f.write_str(v.as_str().expect("string"))
    }
}

/// A verification target as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    Lemma2_1,
    Lemma2_2,
    Corollary2_1,
    Rewiring,
    Theorem3_1,
    Theorem3_2,
    Proposition3_1,
    Proposition3_2,
    Comparisons,
    RowSum,
    IrregularBounds,
    Theorem3_3,
    Theorem3_4,
    Theorem3_5,
    Theorem3_6,
    Pendant,
    Theorem3_7,
    TreeOrdering,
    TreeExtremes,
    Theorem4_1,
    Theorem4_2,
    Theorem4_3,
    GammaExtremes,
    Indices,
    Laplacian,
}

const THEOREM_NAMES: &[(TheoremId, &str, &[&str])] = &[
    (TheoremId::Lemma2_1, "2.1", &["lemma-2.1"]),
    (TheoremId::Lemma2_2, "2.2", &["lemma-2.2"]),
    (TheoremId::Corollary2_1, "c2.1", &["corollary-2.1"]),
    (TheoremId::Rewiring, "rewiring", &[]),
    (TheoremId::Theorem3_1, "3.1", &[]),
    (TheoremId::Theorem3_2, "3.2", &[]),
    (TheoremId::Proposition3_1, "p3.1", &["prop-3.1", "proposition-3.1"]),
    (TheoremId::Proposition3_2, "p3.2", &["prop-3.2", "proposition-3.2"]),
    (TheoremId::Comparisons, "comparisons", &[]),
    (TheoremId::RowSum, "row-sum", &["rowsum"]),
    (TheoremId::IrregularBounds, "irregular", &[]),
    (TheoremId::Theorem3_3, "3.3", &["domination"]),
    (TheoremId::Theorem3_4, "3.4", &[]),
    (TheoremId::Theorem3_5, "3.5", &[]),
    (TheoremId::Theorem3_6, "3.6", &[]),
    (TheoremId::Pendant, "pendant", &[]),
    (TheoremId::Theorem3_7, "3.7", &[]),
    (TheoremId::TreeOrdering, "tree-ordering", &[]),
    (TheoremId::TreeExtremes, "trees", &[]),
    (TheoremId::Theorem4_1, "4.1", &[]),
    (TheoremId::Theorem4_2, "4.2", &[]),
    (TheoremId::Theorem4_3, "4.3", &[]),
    (TheoremId::GammaExtremes, "gamma", &[]),
    (TheoremId::Indices, "indices", &["5"]),
    (TheoremId::Laplacian, "laplacian", &[]),
];

impl TheoremId {
    pub fn all() -> impl Iterator<Item = TheoremId> {
        THEOREM_NAMES.iter().map(|(id, _, _)| *id)
    }

    pub fn name(self) -> &'static str {
        THEOREM_NAMES.iter().find(|(id, _, _)| *id == self).expect("every id is named").1
    }

    pub fn claims(self) -> &'static [Claim] {
        use Claim::*;
        match self {
            TheoremId::Lemma2_1 => &[MoveNeighbors],
            TheoremId::Lemma2_2 => &[EdgeSwap],
            TheoremId::Corollary2_1 => &[CutEdgeContraction],
            TheoremId::Rewiring => &[MoveNeighbors, EdgeSwap, CutEdgeContraction],
            TheoremId::Theorem3_1 => &[MaxDegreeSparse],
            TheoremId::Theorem3_2 => &[IrregularDiameter, LeastEigenvalueGap],
            TheoremId::Proposition3_1 => &[IrregularMinDegree],
            TheoremId::Proposition3_2 => &[KConnected],
            TheoremId::Comparisons => &[BoundComparisons],
            TheoremId::RowSum => &[RowSum],
            TheoremId::IrregularBounds => &[
                IrregularDiameter,
                LeastEigenvalueGap,
                IrregularMinDegree,
                KConnected,
                BoundComparisons,
            ],
            TheoremId::Theorem3_3 => &[Domination],
            TheoremId::Theorem3_4 => &[TreeSecondMax],
            TheoremId::Theorem3_5 => &[PendantSingle],
            TheoremId::Theorem3_6 => &[PendantAdjacent],
            TheoremId::Pendant => &[PendantSingle, PendantAdjacent],
            TheoremId::Theorem3_7 => &[TreeDiameterMax],
            TheoremId::TreeOrdering => &[TreeMin, TreeMax],
            TheoremId::TreeExtremes => &[TreeMin, TreeMax, TreeSecondMax, TreeDiameterMax],
            TheoremId::Theorem4_1 => &[GammaAll],
            TheoremId::Theorem4_2 => &[GammaUnicyclic],
            TheoremId::Theorem4_3 => &[GammaNonBipartite],
            TheoremId::GammaExtremes => &[GammaAll, GammaUnicyclic, GammaNonBipartite],
            TheoremId::Indices => &[EnergyBounds, EstradaBound],
            TheoremId::Laplacian => &[LaplacianCrossCheck],
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        THEOREM_NAMES
            .iter()
            .find(|(_, name, aliases)| *name == key || aliases.contains(&key.as_str()))
            .map(|(id, _, _)| *id)
            .ok_or_else(|| {
                let names: Vec<_> = THEOREM_NAMES.iter().map(|(_, n, _)| *n).collect();
                Error::InvalidParameter(format!("unknown theorem '{s}'; expected one of {}", names.join(", ")))
            })
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub alphas: Vec<Alpha>,
    /// Strict inequalities must hold by more than this.
    pub strict_margin: f64,
    /// `|slack|` at or below this is equality; uniqueness of a maximizer
    /// means every other candidate is further than this below it.
    pub equality_window: f64,
    /// Perron entries closer than this are treated as tied.
    pub perron_deadband: f64,
    pub seed: u64,
    /// Size of seeded random corpora.
    pub random_instances: usize,
    /// Largest `p + q` in the pendant-path sweeps.
    pub max_path_total: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            alphas: Alpha::default_grid(),
            strict_margin: 1e-9,
            equality_window: 1e-9,
            perron_deadband: 1e-10,
            seed: 1,
            random_instances: 200,
            max_path_total: 6,
        }
    }
}

impl VerifyConfig {
    pub fn with_alphas(alphas: Vec<Alpha>) -> Self {
        VerifyConfig {
            alphas,
            ..VerifyConfig::default()
        }
    }

    fn below_one(&self) -> Vec<Alpha> {
        self.alphas.iter().copied().filter(|a| !a.is_one()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Nothing was checkable in the requested range.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub claim: Claim,
    pub n: usize,
    #[serde(serialize_with = "serde_sig::opt::serialize")]
    pub alpha: Option<f64>,
    /// The offending graph with the labels used in `details`.
    pub graph6: String,
    /// The second graph of a surgery or comparison, if any.
    pub related_graph6: Option<String>,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub claim: Claim,
    pub n: usize,
    /// Diameter, domination number or similar, when the claim has one.
    pub parameter: Option<usize>,
    /// Canonically relabeled when `n` allows it, so equal graphs share a
    /// string.
    pub graph6: String,
    pub family: Option<String>,
    #[serde(serialize_with = "serde_sig::vec::serialize")]
    pub alphas: Vec<f64>,
    #[serde(serialize_with = "serde_sig::vec::serialize")]
    pub values: Vec<f64>,
}

/// Counts and records accumulated over part of a run.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Tally {
    pub instances_checked: u64,
    pub skipped: u64,
    pub violations: Vec<Violation>,
    pub extremal_witnesses: Vec<Witness>,
    pub equality_witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl Tally {
    pub(crate) fn check(&mut self) {
        self.instances_checked += 1;
    }

    pub(crate) fn skip(&mut self) {
        self.skipped += 1;
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        let text = text.into();
        if !self.notes.contains(&text) {
            self.notes.push(text);
        }
    }

    pub(crate) fn violation(
        &mut self,
        claim: Claim,
        g: &Graph,
        alpha: Option<Alpha>,
        related: Option<&Graph>,
        details: impl Into<String>,
    ) {
        self.violations.push(Violation {
            claim,
            n: g.n(),
            alpha: alpha.map(Alpha::value),
            graph6: graph6::encode(g),
            related_graph6: related.map(graph6::encode),
            details: details.into(),
        });
    }

    pub(crate) fn extremal(&mut self, w: WitnessKey<'_>, alpha: Alpha, value: f64) {
        let w = w.build(alpha, value);
        merge_witness(&mut self.extremal_witnesses, w);
    }

    pub(crate) fn equality(&mut self, w: WitnessKey<'_>, alpha: Alpha, value: f64) {
        let w = w.build(alpha, value);
        merge_witness(&mut self.equality_witnesses, w);
    }

    /// Appends `other`, merging witnesses that name the same graph.
    pub fn absorb(&mut self, other: Tally) {
        self.instances_checked += other.instances_checked;
        self.skipped += other.skipped;
        self.violations.extend(other.violations);
        for w in other.extremal_witnesses {
            merge_witness(&mut self.extremal_witnesses, w);
        }
        for w in other.equality_witnesses {
            merge_witness(&mut self.equality_witnesses, w);
        }
        for note in other.notes {
            self.note(note);
        }
    }
}

pub(crate) struct WitnessKey<'a> {
    pub claim: Claim,
    pub graph: &'a Graph,
    pub parameter: Option<usize>,
    pub family: Option<&'a str>,
}

impl WitnessKey<'_> {
    fn build(self, alpha: Alpha, value: f64) -> Witness {
        let g = if self.graph.n() <= CANON_CAP {
            canonical_graph(self.graph).expect("within cap")
        } else {
            self.graph.clone()
        };
        Witness {
            claim: self.claim,
            n: g.n(),
            parameter: self.parameter,
            graph6: graph6::encode(&g),
            family: self.family.map(str::to_owned),
            alphas: vec![alpha.value()],
            values: vec![value],
        }
    }
}

fn merge_witness(list: &mut Vec<Witness>, w: Witness) {
    let same = |x: &Witness| {
        x.claim == w.claim
            && x.n == w.n
            && x.parameter == w.parameter
            && x.family == w.family
            && x.graph6 == w.graph6
    };
    match list.iter_mut().find(|x| same(x)) {
        Some(x) => {
            for (a, v) in w.alphas.into_iter().zip(w.values) {
                if !x.alphas.contains(&a) {
                    x.alphas.push(a);
                    x.values.push(v);
                }
            }
        }
        None => list.push(w),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub claims: Vec<Claim>,
    pub status: Status,
    /// Smallest and largest order checked, when the corpus is indexed by
    /// order.
    pub n_range: Option<[usize; 2]>,
    #[serde(serialize_with = "serde_sig::vec::serialize")]
    pub alphas: Vec<f64>,
    /// Other swept parameters, such as the largest `p + q`.
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub instances_checked: u64,
    pub skipped: u64,
    pub violations: Vec<Violation>,
    pub extremal_witnesses: Vec<Witness>,
    pub equality_witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn from_tally(
        theorem_id: TheoremId,
        claims: &[Claim],
        n_range: Option<[usize; 2]>,
        config: &VerifyConfig,
        tally: Tally,
    ) -> Self {
        let status = if !tally.violations.is_empty() {
            Status::Fail
        } else if tally.instances_checked == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
        let mut parameters = BTreeMap::new();
        if claims.iter().any(|c| matches!(c, Claim::PendantSingle | Claim::PendantAdjacent)) {
            parameters.insert("max_path_total".to_string(), config.max_path_total.into());
        }
        parameters.insert("strict_margin".to_string(), config.strict_margin.into());
        parameters.insert("equality_window".to_string(), config.equality_window.into());
        if claims.iter().any(|c| matches!(c, Claim::MoveNeighbors | Claim::EdgeSwap)) {
            parameters.insert("perron_deadband".to_string(), config.perron_deadband.into());
        }
        TheoremReport {
            theorem_id,
            claims: claims.to_vec(),
            status,
            n_range,
            alphas: config.alphas.iter().map(|a| a.value()).collect(),
            parameters,
            instances_checked: tally.instances_checked,
            skipped: tally.skipped,
            violations: tally.violations,
            extremal_witnesses: tally.extremal_witnesses,
            equality_witnesses: tally.equality_witnesses,
            notes: tally.notes,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Completed orders of an interrupted run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub theorem_id: TheoremId,
    pub config: VerifyConfig,
    pub completed: BTreeMap<usize, Tally>,
}

impl Checkpoint {
    pub fn new(theorem_id: TheoremId, config: &VerifyConfig) -> Self {
        Checkpoint {
            theorem_id,
            config: config.clone(),
            completed: BTreeMap::new(),
        }
    }

    /// Whether this checkpoint was written by a run with the same target
    /// and settings.
    pub fn matches(&self, theorem_id: TheoremId, config: &VerifyConfig) -> bool {
        self.theorem_id == theorem_id && &self.config == config
    }
}

/// Tally for one order `n`.
pub fn run_order(theorem: TheoremId, n: usize, config: &VerifyConfig) -> Result<Tally> {
    let claims = theorem.claims();
    let has = |c: Claim| claims.contains(&c);
    let has_any = |cs: &[Claim]| cs.iter().any(|&c| has(c));
    let mut tally = Tally::default();
    if n == 0 {
        return Err(Error::NoVertices);
    }

    if has_any(&[Claim::MoveNeighbors, Claim::EdgeSwap, Claim::CutEdgeContraction]) {
        let corpus = class(GraphClass::Connected, n)?;
        tally.absorb(rewiring::rewiring_tally(claims, &corpus, config)?);
    }
    if has_any(&[Claim::PendantSingle, Claim::PendantAdjacent]) {
        let bases: Vec<Graph> = class(GraphClass::Connected, n)?.into_iter().filter(|g| g.m() >= 1).collect();
        tally.absorb(rewiring::pendant_tally(claims, &bases, config)?);
    }
    if has_any(&[Claim::TreeMin, Claim::TreeMax, Claim::TreeSecondMax, Claim::TreeDiameterMax]) {
        tally.absorb(trees::tree_tally(claims, n, config)?);
    }
    let only = |group: &[Claim]| -> Vec<Claim> { claims.iter().copied().filter(|c| group.contains(c)).collect() };
    let sparse = only(&[Claim::MaxDegreeSparse]);
    if !sparse.is_empty() {
        let mut corpus = class(GraphClass::Trees, n)?;
        if n >= 3 {
            corpus.extend(class(GraphClass::Unicyclic, n)?);
        }
        tally.absorb(bounds_check::bounds_tally(&sparse, &corpus, config)?);
    }
    let connected = only(&[
        Claim::IrregularDiameter,
        Claim::LeastEigenvalueGap,
        Claim::IrregularMinDegree,
        Claim::KConnected,
        Claim::BoundComparisons,
        Claim::LaplacianCrossCheck,
    ]);
    if !connected.is_empty() {
        let corpus = class(GraphClass::Connected, n)?;
        tally.absorb(bounds_check::bounds_tally(&connected, &corpus, config)?);
    }
    let general = only(&[Claim::RowSum, Claim::EnergyBounds, Claim::EstradaBound]);
    if !general.is_empty() {
        let corpus = class(GraphClass::All, n)?;
        tally.absorb(bounds_check::bounds_tally(&general, &corpus, config)?);
    }
    if has(Claim::Domination) {
        tally.absorb(extremal::domination_tally(n, config)?);
    }
    if has_any(&[Claim::GammaAll, Claim::GammaUnicyclic, Claim::GammaNonBipartite]) {
        tally.absorb(extremal::gamma_tally(claims, n, config)?);
    }
    Ok(tally)
}

/// Runs `theorem` for every order in `range`.
pub fn run(theorem: TheoremId, range: RangeInclusive<usize>, config: &VerifyConfig) -> Result<TheoremReport> {
    run_resumable(theorem, range, config, None, |_| Ok(()))
}

/// Like [`run`], skipping orders already present in `resume` and calling
/// `save` after each completed order.
pub fn run_resumable<F>(
    theorem: TheoremId,
    range: RangeInclusive<usize>,
    config: &VerifyConfig,
    resume: Option<Checkpoint>,
    mut save: F,
) -> Result<TheoremReport>
where
    F: FnMut(&Checkpoint) -> Result<()>,
{
    if range.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "empty order range {}..{}",
            range.start(),
            range.end()
        )));
    }
    let mut checkpoint = match resume {
        Some(c) if c.matches(theorem, config) => c,
        _ => Checkpoint::new(theorem, config),
    };
    for n in range.clone() {
        if checkpoint.completed.contains_key(&n) {
            continue;
        }
        let tally = run_order(theorem, n, config)?;
        checkpoint.completed.insert(n, tally);
        save(&checkpoint)?;
    }
    let mut total = Tally::default();
    for n in range.clone() {
        total.absorb(checkpoint.completed.remove(&n).expect("every order completed"));
    }
    Ok(TheoremReport::from_tally(
        theorem,
        theorem.claims(),
        Some([*range.start(), *range.end()]),
        config,
        total,
    ))
}

fn class(class: GraphClass, n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate(&EnumerationQuery::new(class, n))?.collect())
}

/// Order-preserving parallel map that stops at the first error in order.
pub(crate) fn par_tally<T, F>(items: &[T], f: F) -> Result<Tally>
where
    T: Sync,
    F: Fn(&T) -> Result<Tally> + Sync + Send,
{
    let parts: Vec<Result<Tally>> = items.par_iter().map(f).collect();
    let mut total = Tally::default();
    for part in parts {
        total.absorb(part?);
    }
    Ok(total)
}

/// `count` connected graphs with orders uniform in `orders`, each edge
/// present with probability 1/2, redrawn until connected.
pub fn random_connected_graphs(seed: u64, count: usize, orders: RangeInclusive<usize>) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(orders.clone());
        let g = random_graph(&mut rng, n, 0.5);
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// `count` graphs with orders uniform in `orders` and an edge density
/// drawn uniformly from `[0, 1)` per graph.
pub fn random_graphs(seed: u64, count: usize, orders: RangeInclusive<usize>) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(orders.clone());
            let p = rng.gen::<f64>();
            random_graph(&mut rng, n, p)
        })
        .collect()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid edges")
}
