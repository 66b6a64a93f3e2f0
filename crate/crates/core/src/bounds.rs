//! Closed-form bounds on `ρ_α(G)` and on the spectral indices.
//!
//! Every bound is reported as a [`BoundEvaluation`]: a hypothesis check,
//! the bound's value, the true value of the bounded quantity and the slack
//! between them. Hypotheses that fail give a flagged evaluation, never an
//! error, so scans over mixed corpora do not abort.

use serde::{Deserialize, Serialize};

use crate::canon::{is_isomorphic, CANON_CAP};
use crate::error::{Error, Result};
use crate::generators::{domination_extremal, DominationVariant};
use crate::graph::{Diameter, Graph, GraphKind, StructuralProfile, CONNECTIVITY_CAP, DOMINATION_CAP};
use crate::numfmt::serde_sig;
use crate::spectral::{eigenvalues, indices_from_eigenvalues, Alpha};

/// `|slack|` at or below this counts as equality.
pub const EQUALITY_WINDOW: f64 = 1e-9;
/// Strict bounds must beat the target by more than this.
pub const STRICT_MARGIN: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundId {
    /// Row-sum bound for a fixed index `ℓ` of the degree sequence.
    RowSum,
    /// Row-sum bound minimized over `ℓ`.
    BestRowSum,
    /// `αΔ + 2(1−α)√(Δ−1)` for trees and unicyclic graphs.
    MaxDegreeSparse,
    /// `Δ − 2(1−α)/((2D−α)n)` for connected irregular graphs.
    IrregularDiameter,
    /// `Δ + λ_n > 2(1−α)/((2D−α)n)`.
    LeastEigenvalueGap,
    /// Bound in terms of `Δ, δ, d̄, D`.
    IrregularMinDegree,
    /// Bound for `k`-connected irregular graphs.
    KConnected,
    /// `n − γ`.
    Domination,
    EnergyUpper,
    EnergyLowerSpectral,
    EnergyLowerTrace,
    EstradaUpper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Upper,
    Lower,
}

/// The quantity a bound is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Rho,
    MaxDegreePlusLeast,
    Energy,
    Estrada,
}

/// Graph families that attain a bound with equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremalFamily {
    Cycle,
    Regular,
    /// `d_1 = … = d_{t−1} = n − 1 > d_t = … = d_n`.
    DominatingCore,
    /// `K_{n−γ+1} ∪ (γ−1)K_1`.
    CompletePlusIsolated,
    /// Matching complement on `n−γ+2` vertices plus `γ−2` isolated.
    MatchingComplementPlusIsolated,
    Star,
    StarPlusEdge,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundEvaluation {
    pub bound_id: BoundId,
    /// `ℓ` for the row-sum bound, `k` for the connectivity bound.
    pub parameter: Option<usize>,
    pub direction: Direction,
    pub strict: bool,
    pub target: Target,
    #[serde(serialize_with = "serde_sig::serialize")]
    pub target_value: f64,
    pub applicable: bool,
    pub reason: Option<String>,
    #[serde(serialize_with = "serde_sig::opt::serialize")]
    pub value: Option<f64>,
    /// `value − target` for upper bounds, `target − value` for lower.
    #[serde(serialize_with = "serde_sig::opt::serialize")]
    pub slack: Option<f64>,
    /// `|slack| ≤` [`EQUALITY_WINDOW`].
    pub attains_equality: bool,
    /// Structural match against the bound's equality family.
    pub equality_class: Option<ExtremalFamily>,
}

impl BoundEvaluation {
    /// True when inapplicable, or when the inequality holds at the
    /// configured tolerance (strict bounds need slack > [`STRICT_MARGIN`]).
    pub fn satisfied(&self) -> bool {
        match self.slack {
            None => true,
            Some(s) if self.strict => s > STRICT_MARGIN,
            Some(s) => s >= -EQUALITY_WINDOW,
        }
    }
}

struct Spec {
    id: BoundId,
    parameter: Option<usize>,
    direction: Direction,
    strict: bool,
    target: Target,
}

impl Spec {
    fn new(id: BoundId, direction: Direction, strict: bool, target: Target) -> Self {
        Spec {
            id,
            parameter: None,
            direction,
            strict,
            target,
        }
    }

    fn with_parameter(mut self, p: usize) -> Self {
        self.parameter = Some(p);
        self
    }

    fn evaluate(self, target_value: f64, value: f64, family: Option<ExtremalFamily>) -> BoundEvaluation {
        let slack = match self.direction {
            Direction::Upper => value - target_value,
            Direction::Lower => target_value - value,
        };
        BoundEvaluation {
            bound_id: self.id,
            parameter: self.parameter,
            direction: self.direction,
            strict: self.strict,
            target: self.target,
            target_value,
            applicable: true,
            reason: None,
            value: Some(value),
            slack: Some(slack),
            attains_equality: slack.abs() <= EQUALITY_WINDOW,
            equality_class: family,
        }
    }

    fn inapplicable(self, target_value: f64, reason: impl Into<String>) -> BoundEvaluation {
        BoundEvaluation {
            bound_id: self.id,
            parameter: self.parameter,
            direction: self.direction,
            strict: self.strict,
            target: self.target,
            target_value,
            applicable: false,
            reason: Some(reason.into()),
            value: None,
            slack: None,
            attains_equality: false,
            equality_class: None,
        }
    }
}

/// Everything the bounds read from a graph, computed once.
pub struct BoundContext<'a> {
    pub graph: &'a Graph,
    pub alpha: Alpha,
    pub profile: StructuralProfile,
    pub diameter: Diameter,
    /// Spectrum of `A_α(G)`, non-increasing.
    pub eigenvalues: Vec<f64>,
}

impl<'a> BoundContext<'a> {
    pub fn new(graph: &'a Graph, alpha: Alpha) -> Result<Self> {
        Ok(BoundContext {
            graph,
            alpha,
            profile: graph.profile(),
            diameter: graph.diameter(),
            eigenvalues: eigenvalues(graph, alpha)?,
        })
    }

    pub fn rho(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn least(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    fn n(&self) -> f64 {
        self.graph.n() as f64
    }

    fn m(&self) -> f64 {
        self.graph.m() as f64
    }

    fn a(&self) -> f64 {
        self.alpha.value()
    }

    fn max_degree(&self) -> f64 {
        self.profile.max_degree() as f64
    }

    fn rowsum_value(&self, ell: usize) -> f64 {
        let d = &self.profile.degree_sequence;
        let a = self.a();
        let dl = d[ell - 1] as f64;
        let d1 = d[0] as f64;
        let excess: f64 = d[..ell - 1].iter().map(|&x| x as f64 - dl).sum();
        let disc = (dl - a * d1 + 1.0 - a).powi(2) + 4.0 * (1.0 - a) * excess;
        (dl + a * d1 - (1.0 - a) + disc.sqrt()) / 2.0
    }

    /// `d_1 = … = d_{t−1} = n − 1 > d_t = … = d_n` for some `2 ≤ t ≤ ℓ`.
    fn has_dominating_core(&self, ell: usize) -> bool {
        let d = &self.profile.degree_sequence;
        let n = d.len();
        let t = d.iter().take_while(|&&x| x == n - 1).count() + 1;
        t >= 2 && t <= ell && t <= n && d[t - 1] < n - 1 && d[t - 1..].iter().all(|&x| x == d[t - 1])
    }

    pub fn rowsum(&self, ell: usize) -> Result<BoundEvaluation> {
        let n = self.graph.n();
        if ell < 1 || ell > n {
            return Err(Error::InvalidParameter(format!("row-sum index must lie in 1..={n}, got {ell}")));
        }
        let spec = Spec::new(BoundId::RowSum, Direction::Upper, false, Target::Rho).with_parameter(ell);
        if n < 2 {
            return Ok(spec.inapplicable(self.rho(), "needs n >= 2"));
        }
        if self.alpha.is_one() {
            return Ok(spec.inapplicable(self.rho(), "needs alpha < 1"));
        }
        let family = if !self.profile.connected {
            None
        } else if self.profile.regular {
            Some(ExtremalFamily::Regular)
        } else if self.has_dominating_core(ell) {
            Some(ExtremalFamily::DominatingCore)
        } else {
            None
        };
        Ok(spec.evaluate(self.rho(), self.rowsum_value(ell), family))
    }

    /// Smallest row-sum bound over all `ℓ`; the reported parameter is the
    /// first minimizing `ℓ`.
    pub fn best_rowsum(&self) -> BoundEvaluation {
        let n = self.graph.n();
        let spec = Spec::new(BoundId::BestRowSum, Direction::Upper, false, Target::Rho);
        if n < 2 {
            return spec.inapplicable(self.rho(), "needs n >= 2");
        }
        if self.alpha.is_one() {
            return spec.inapplicable(self.rho(), "needs alpha < 1");
        }
        let mut best = self.rowsum(1).expect("ell = 1 is in range");
        for ell in 2..=n {
            let e = self.rowsum(ell).expect("ell in range");
            if e.value < best.value {
                best = e;
            }
        }
        BoundEvaluation {
            bound_id: BoundId::BestRowSum,
            ..best
        }
    }

    pub fn max_degree_sparse(&self) -> BoundEvaluation {
        let spec = Spec::new(BoundId::MaxDegreeSparse, Direction::Upper, false, Target::Rho);
        let kind = self.profile.kind;
        if kind == GraphKind::Other {
            return spec.inapplicable(self.rho(), "needs a tree or a unicyclic graph");
        }
        let delta = self.max_degree();
        if delta < 2.0 {
            return spec.inapplicable(self.rho(), "needs maximum degree >= 2");
        }
        let a = self.a();
        let value = a * delta + 2.0 * (1.0 - a) * (delta - 1.0).sqrt();
        let family = self.graph.is_cycle().then_some(ExtremalFamily::Cycle);
        spec.evaluate(self.rho(), value, family)
    }

    fn irregular_hypothesis(&self) -> Option<&'static str> {
        if !self.profile.connected {
            Some("needs a connected graph")
        } else if self.profile.regular {
            Some("needs an irregular graph")
        } else if self.alpha.is_one() {
            Some("needs alpha < 1")
        } else {
            None
        }
    }

    fn diameter_value(&self) -> f64 {
        self.diameter.finite().expect("connected") as f64
    }

    /// `2(1−α)/((2D−α)n)`.
    fn diameter_gap(&self) -> f64 {
        let a = self.a();
        2.0 * (1.0 - a) / ((2.0 * self.diameter_value() - a) * self.n())
    }

    pub fn irregular_diameter(&self) -> BoundEvaluation {
        let spec = Spec::new(BoundId::IrregularDiameter, Direction::Upper, true, Target::Rho);
        if let Some(why) = self.irregular_hypothesis() {
            return spec.inapplicable(self.rho(), why);
        }
        spec.evaluate(self.rho(), self.max_degree() - self.diameter_gap(), None)
    }

    pub fn least_eigenvalue_gap(&self) -> BoundEvaluation {
        let target = self.max_degree() + self.least();
        let spec = Spec::new(BoundId::LeastEigenvalueGap, Direction::Lower, true, Target::MaxDegreePlusLeast);
        if let Some(why) = self.irregular_hypothesis() {
            return spec.inapplicable(target, why);
        }
        spec.evaluate(target, self.diameter_gap(), None)
    }

    fn min_degree_gap(&self) -> f64 {
        let a = self.a();
        let d = self.diameter_value();
        let delta_min = self.profile.min_degree() as f64;
        let avg = self.profile.average_degree();
        let denom = d * (self.n() - delta_min) / (1.0 - a) - d * (d - 1.0) / 2.0 / (1.0 - a)
            + 1.0 / (self.max_degree() - avg);
        1.0 / denom
    }

    pub fn irregular_min_degree(&self) -> BoundEvaluation {
        let spec = Spec::new(BoundId::IrregularMinDegree, Direction::Upper, true, Target::Rho);
        if let Some(why) = self.irregular_hypothesis() {
            return spec.inapplicable(self.rho(), why);
        }
        spec.evaluate(self.rho(), self.max_degree() - self.min_degree_gap(), None)
    }

    fn connectivity_gap(&self, k: usize) -> f64 {
        let a = self.a();
        let (n, m, delta, k) = (self.n(), self.m(), self.max_degree(), k as f64);
        let p = n * delta - 2.0 * m;
        (1.0 - a) * p * k * k / (p * (n * n - (delta - k + 2.0) * (n - k)) + (1.0 - a) * n * k * k)
    }

    /// Errors only when the `k`-connectivity check is over its cap.
    pub fn k_connected(&self, k: usize) -> Result<BoundEvaluation> {
        let spec = Spec::new(BoundId::KConnected, Direction::Upper, true, Target::Rho).with_parameter(k);
        if let Some(why) = self.irregular_hypothesis() {
            return Ok(spec.inapplicable(self.rho(), why));
        }
        if k == 0 {
            return Ok(spec.inapplicable(self.rho(), "needs k >= 1"));
        }
        if !self.graph.is_k_connected(k)? {
            return Ok(spec.inapplicable(self.rho(), format!("graph is not {k}-connected")));
        }
        Ok(spec.evaluate(self.rho(), self.max_degree() - self.connectivity_gap(k), None))
    }

    /// Evaluates the connectivity bound at `k = κ(G)`, or flags it when
    /// `n` is over the connectivity cap.
    pub fn k_connected_at_connectivity(&self) -> BoundEvaluation {
        if self.graph.n() > CONNECTIVITY_CAP {
            let spec = Spec::new(BoundId::KConnected, Direction::Upper, true, Target::Rho);
            return spec.inapplicable(self.rho(), format!("connectivity check supports n <= {CONNECTIVITY_CAP}"));
        }
        let k = self.graph.vertex_connectivity().expect("n within cap");
        self.k_connected(k).expect("n within cap")
    }

    pub fn domination(&self) -> Result<BoundEvaluation> {
        let n = self.graph.n();
        let gamma = self.graph.domination_number()?;
        let spec = Spec::new(BoundId::Domination, Direction::Upper, false, Target::Rho);
        if gamma < 1 || gamma >= n {
            return Ok(spec.inapplicable(self.rho(), "needs 1 <= γ <= n-1"));
        }
        if self.alpha.is_one() {
            return Ok(spec.inapplicable(self.rho(), "needs alpha < 1"));
        }
        let family = domination_family(self.graph, gamma)?;
        Ok(spec.with_parameter(gamma).evaluate(self.rho(), (n - gamma) as f64, family))
    }

    fn index_hypothesis(&self) -> Option<&'static str> {
        self.alpha.is_one().then_some("needs alpha < 1")
    }

    pub fn energy(&self) -> [BoundEvaluation; 3] {
        let e = indices_from_eigenvalues(self.graph, self.alpha, &self.eigenvalues).energy;
        let upper = Spec::new(BoundId::EnergyUpper, Direction::Upper, false, Target::Energy);
        let lower_spec = Spec::new(BoundId::EnergyLowerSpectral, Direction::Lower, false, Target::Energy);
        let lower_trace = Spec::new(BoundId::EnergyLowerTrace, Direction::Lower, false, Target::Energy);
        if let Some(why) = self.index_hypothesis() {
            return [upper.inapplicable(e, why), lower_spec.inapplicable(e, why), lower_trace.inapplicable(e, why)];
        }
        let b = EnergyBounds::from_parts(self.graph, self.alpha, self.rho());
        [
            upper.evaluate(e, b.upper, None),
            lower_spec.evaluate(e, b.lower_spectral, None),
            lower_trace.evaluate(e, b.lower_trace, None),
        ]
    }

    pub fn estrada(&self) -> BoundEvaluation {
        let ee = indices_from_eigenvalues(self.graph, self.alpha, &self.eigenvalues).estrada;
        let spec = Spec::new(BoundId::EstradaUpper, Direction::Upper, false, Target::Estrada);
        if let Some(why) = self.index_hypothesis() {
            return spec.inapplicable(ee, why);
        }
        match estrada_upper(self.graph, self.alpha) {
            Ok(v) => spec.evaluate(ee, v, None),
            Err(_) => spec.inapplicable(ee, "needs m >= 1"),
        }
    }

    /// The three pairwise orderings between the diameter, min-degree and
    /// connectivity bounds, predicted from the profile and checked
    /// numerically. `None` unless all three bounds apply.
    pub fn comparisons(&self, k: usize) -> Option<BoundComparisons> {
        if self.irregular_hypothesis().is_some() || k == 0 {
            return None;
        }
        if !self.graph.is_k_connected(k).ok()? {
            return None;
        }
        let a = self.a();
        let (n, m, delta) = (self.n(), self.m(), self.max_degree());
        let d = self.diameter_value();
        let delta_min = self.profile.min_degree() as f64;
        let avg = self.profile.average_degree();
        let kf = k as f64;
        let thm = delta - self.diameter_gap();
        let mindeg = delta - self.min_degree_gap();
        let conn = delta - self.connectivity_gap(k);
        let p = n * delta - 2.0 * m;
        let q = 2.0 * (delta - kf + 2.0) * (n - kf);
        Some(BoundComparisons {
            k,
            diameter_vs_min_degree: Comparison::new(
                (delta - avg) * (2.0 * d * delta_min + d * (d - 1.0) - a * n) <= 2.0 * (1.0 - a),
                thm,
                mindeg,
            ),
            diameter_vs_connectivity: Comparison::new(
                2.0 * n * n + 2.0 * (1.0 - a) * n * kf * kf / p >= n * (2.0 * d - a) * kf * kf + q,
                thm,
                conn,
            ),
            min_degree_vs_connectivity: Comparison::new(
                kf * kf * d * (2.0 * n - 2.0 * delta_min - d + 1.0) <= 2.0 * n * n - q,
                mindeg,
                conn,
            ),
        })
    }

    /// Every bound that makes sense for a single graph, in a fixed order.
    pub fn all(&self) -> Vec<BoundEvaluation> {
        let mut out = vec![
            self.best_rowsum(),
            self.max_degree_sparse(),
            self.irregular_diameter(),
            self.least_eigenvalue_gap(),
            self.irregular_min_degree(),
            self.k_connected_at_connectivity(),
        ];
        match self.domination() {
            Ok(e) => out.push(e),
            Err(_) => out.push(
                Spec::new(BoundId::Domination, Direction::Upper, false, Target::Rho)
                    .inapplicable(self.rho(), format!("domination number supports n <= {DOMINATION_CAP}")),
            ),
        }
        out.extend(self.energy());
        out.push(self.estrada());
        out
    }
}

/// `left ≤ right` predicted by a closed-form condition and observed
/// numerically.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub predicted: bool,
    pub observed: bool,
    #[serde(serialize_with = "serde_sig::serialize")]
    pub difference: f64,
}

impl Comparison {
    fn new(predicted: bool, left: f64, right: f64) -> Self {
        Comparison {
            predicted,
            observed: left <= right,
            difference: left - right,
        }
    }

    /// Agreement, treating near-ties (within [`EQUALITY_WINDOW`]) as
    /// consistent with either answer.
    pub fn agrees(&self) -> bool {
        self.predicted == self.observed || self.difference.abs() <= EQUALITY_WINDOW
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundComparisons {
    pub k: usize,
    pub diameter_vs_min_degree: Comparison,
    pub diameter_vs_connectivity: Comparison,
    pub min_degree_vs_connectivity: Comparison,
}

impl BoundComparisons {
    pub fn all_agree(&self) -> bool {
        self.diameter_vs_min_degree.agrees()
            && self.diameter_vs_connectivity.agrees()
            && self.min_degree_vs_connectivity.agrees()
    }
}

/// Which domination-extremal family `g` belongs to, given `γ(g)`.
pub fn domination_family(g: &Graph, gamma: usize) -> Result<Option<ExtremalFamily>> {
    let n = g.n();
    if gamma < 1 || gamma >= n {
        return Ok(None);
    }
    let matches = |variant| -> Result<bool> {
        let h = domination_extremal(n, gamma, variant)?;
        if n <= CANON_CAP {
            is_isomorphic(g, &h)
        } else {
            Ok(structural_domination_match(g, &h))
        }
    };
    if matches(DominationVariant::A)? {
        return Ok(Some(ExtremalFamily::CompletePlusIsolated));
    }
    if gamma >= 2 && (n - gamma) % 2 == 0 && matches(DominationVariant::B)? {
        return Ok(Some(ExtremalFamily::MatchingComplementPlusIsolated));
    }
    Ok(None)
}

/// Both families are a single regular component plus isolated vertices,
/// so equal sorted degree sequences with one nontrivial component decide
/// isomorphism.
fn structural_domination_match(g: &Graph, family: &Graph) -> bool {
    let mut a = g.degrees();
    let mut b = family.degrees();
    a.sort_unstable();
    b.sort_unstable();
    a == b && g.components().iter().filter(|c| c.len() > 1).count() == 1
}

pub fn rowsum_bound(g: &Graph, alpha: Alpha, ell: usize) -> Result<BoundEvaluation> {
    BoundContext::new(g, alpha)?.rowsum(ell)
}

pub fn best_rowsum_bound(g: &Graph, alpha: Alpha) -> Result<BoundEvaluation> {
    Ok(BoundContext::new(g, alpha)?.best_rowsum())
}

pub fn delta_bound(g: &Graph, alpha: Alpha) -> Result<BoundEvaluation> {
    Ok(BoundContext::new(g, alpha)?.max_degree_sparse())
}

pub fn irregular_diameter_bound(g: &Graph, alpha: Alpha) -> Result<BoundEvaluation> {
    Ok(BoundContext::new(g, alpha)?.irregular_diameter())
}

pub fn least_eigenvalue_gap(g: &Graph, alpha: Alpha) -> Result<BoundEvaluation> {
    Ok(BoundContext::new(g, alpha)?.least_eigenvalue_gap())
}

pub fn min_degree_bound(g: &Graph, alpha: Alpha) -> Result<BoundEvaluation> {
    Ok(BoundContext::new(g, alpha)?.irregular_min_degree())
}

pub fn kconnected_bound(g: &Graph, alpha: Alpha, k: usize) -> Result<BoundEvaluation> {
    BoundContext::new(g, alpha)?.k_connected(k)
}

pub fn domination_bound(g: &Graph, alpha: Alpha) -> Result<BoundEvaluation> {
    BoundContext::new(g, alpha)?.domination()
}

/// Comparisons at `k = κ(G)`.
pub fn bound_comparisons(g: &Graph, alpha: Alpha) -> Result<Option<BoundComparisons>> {
    let k = g.vertex_connectivity()?;
    Ok(BoundContext::new(g, alpha)?.comparisons(k))
}

pub fn all_bounds(g: &Graph, alpha: Alpha) -> Result<Vec<BoundEvaluation>> {
    Ok(BoundContext::new(g, alpha)?.all())
}

/// `ρ_α(S_{Δ+1}) = (α(Δ+1) + √(α²(Δ+1)² + 4(1−2α)Δ)) / 2`.
pub fn star_radius(delta_plus_1: usize, alpha: Alpha) -> Result<f64> {
    if delta_plus_1 < 2 {
        return Err(Error::InvalidParameter(format!(
            "star radius needs Δ >= 1, got Δ + 1 = {delta_plus_1}"
        )));
    }
    let a = alpha.value();
    let s = delta_plus_1 as f64;
    let delta = s - 1.0;
    Ok((a * s + (a * a * s * s + 4.0 * (1.0 - 2.0 * a) * delta).sqrt()) / 2.0)
}

/// `n − 1 − αn/2 − √(α²n² + 4(1−2α)(n−1))/2`, the largest possible
/// `Δ − ρ_α` on `n` vertices.
pub fn gamma_star_bound(n: usize, alpha: Alpha) -> Result<f64> {
    alpha.require_below_one()?;
    if n < 2 {
        return Err(Error::InvalidParameter(format!("needs n >= 2, got {n}")));
    }
    let a = alpha.value();
    let nf = n as f64;
    Ok(nf - 1.0 - a * nf / 2.0 - (a * a * nf * nf + 4.0 * (1.0 - 2.0 * a) * (nf - 1.0)).sqrt() / 2.0)
}

/// Cubic whose largest root is `ρ_α(S_n + e)`:
/// `t³ − (α(n+1)+1)t² + ((α²+3α−1)(n−1) + α(α+1))t + (1−2α)(α+1)(n−1) − 2(1−α)²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CubicH {
    pub n: usize,
    pub alpha: Alpha,
    /// `[c0, c1, c2, c3]` with `c3 = 1`.
    pub coefficients: [f64; 4],
}

impl CubicH {
    pub fn eval(&self, t: f64) -> f64 {
        let [c0, c1, c2, c3] = self.coefficients;
        ((c3 * t + c2) * t + c1) * t + c0
    }

    /// Roots of `h′`, smaller first.
    pub fn critical_points(&self) -> (f64, f64) {
        let [_, c1, c2, _] = self.coefficients;
        let b = -c2;
        let disc = (b * b - 3.0 * c1).max(0.0).sqrt();
        ((b - disc) / 3.0, (b + disc) / 3.0)
    }

    /// Largest root by bisection on `[t_1, n]`, `t_1` the larger critical
    /// point.
    pub fn largest_root(&self) -> Result<f64> {
        let (_, t1) = self.critical_points();
        let mut lo = t1;
        let mut hi = self.n as f64;
        let (flo, fhi) = (self.eval(lo), self.eval(hi));
        if flo > 0.0 || fhi <= 0.0 {
            return Err(Error::Bracketing(format!(
                "h(t1) = {flo:e}, h(n) = {fhi:e} for n = {}, alpha = {}",
                self.n, self.alpha
            )));
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.eval(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

pub fn cubic_h(n: usize, alpha: Alpha) -> Result<CubicH> {
    alpha.require_below_one()?;
    if n < 4 {
        return Err(Error::InvalidParameter(format!("cubic for S_n + e needs n >= 4, got {n}")));
    }
    let a = alpha.value();
    let nm1 = n as f64 - 1.0;
    Ok(CubicH {
        n,
        alpha,
        coefficients: [
            (1.0 - 2.0 * a) * (a + 1.0) * nm1 - 2.0 * (1.0 - a).powi(2),
            (a * a + 3.0 * a - 1.0) * nm1 + a * (a + 1.0),
            -(a * (n as f64 + 1.0) + 1.0),
            1.0,
        ],
    })
}

/// `ρ_α(S_n + e)`; `S_3 + e = K_3` has radius 2.
pub fn rho_star_plus_edge(n: usize, alpha: Alpha) -> Result<f64> {
    alpha.require_below_one()?;
    match n {
        0..=2 => Err(Error::InvalidParameter(format!("S_n + e needs n >= 3, got {n}"))),
        3 => Ok(2.0),
        _ => cubic_h(n, alpha)?.largest_root(),
    }
}

/// `t_0 = 1 + α(n−1)/2 + √(α²(n−1)² + 4(1−2α)(n−2))/2`, a strict upper
/// bound on `ρ_α(S_n + e)`.
pub fn star_plus_edge_ceiling(n: usize, alpha: Alpha) -> f64 {
    let a = alpha.value();
    let nm1 = n as f64 - 1.0;
    1.0 + a * nm1 / 2.0 + (a * a * nm1 * nm1 + 4.0 * (1.0 - 2.0 * a) * (nm1 - 1.0)).sqrt() / 2.0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnergyBounds {
    /// `√(2(1−α)²mn + α²(nZ − 4m²))`.
    pub upper: f64,
    /// `2(λ_1 − 2αm/n)`.
    pub lower_spectral: f64,
    /// `√(2(2(1−α)²m + α²(Z − 4m²/n)))`.
    pub lower_trace: f64,
}

impl EnergyBounds {
    fn from_parts(g: &Graph, alpha: Alpha, rho: f64) -> Self {
        let a = alpha.value();
        let (n, m, z) = (g.n() as f64, g.m() as f64, g.zagreb() as f64);
        EnergyBounds {
            upper: (2.0 * (1.0 - a).powi(2) * m * n + a * a * (n * z - 4.0 * m * m)).max(0.0).sqrt(),
            lower_spectral: 2.0 * (rho - 2.0 * a * m / n),
            lower_trace: (2.0 * (2.0 * (1.0 - a).powi(2) * m + a * a * (z - 4.0 * m * m / n))).max(0.0).sqrt(),
        }
    }
}

pub fn energy_bounds(g: &Graph, alpha: Alpha) -> Result<EnergyBounds> {
    alpha.require_below_one()?;
    let rho = eigenvalues(g, alpha)?[0];
    Ok(EnergyBounds::from_parts(g, alpha, rho))
}

/// `n − 1 + 2αm − S + e^S` with `S = √(2(1−α)²m + α²Z)`.
pub fn estrada_upper(g: &Graph, alpha: Alpha) -> Result<f64> {
    alpha.require_below_one()?;
    if g.m() == 0 {
        return Err(Error::Precondition("estrada bound needs m >= 1".into()));
    }
    let a = alpha.value();
    let (n, m, z) = (g.n() as f64, g.m() as f64, g.zagreb() as f64);
    let s = (2.0 * (1.0 - a).powi(2) * m + a * a * z).sqrt();
    Ok(n - 1.0 + 2.0 * a * m - s + s.exp())
}
