//! Corpus sweeps for the closed-form bounds.

use super::rewiring::order_range;
use super::{par_tally, Claim, Tally, TheoremId, TheoremReport, VerifyConfig, WitnessKey};
use crate::bounds::{BoundContext, BoundEvaluation, ExtremalFamily};
use crate::error::Result;
use crate::graph::{Graph, CONNECTIVITY_CAP};
use crate::spectral::{alpha_spectral_radius, laplacian_largest, Alpha};

/// Checks the claims of `theorem` that are about closed-form bounds on
/// every graph of `corpus`. Graphs outside a bound's hypotheses are
/// counted as skipped.
pub fn verify_bounds(theorem: TheoremId, corpus: &[Graph], config: &VerifyConfig) -> Result<TheoremReport> {
    let claims = theorem.claims();
    let tally = bounds_tally(claims, corpus, config)?;
    Ok(TheoremReport::from_tally(theorem, claims, order_range(corpus), config, tally))
}

fn family_name(f: ExtremalFamily) -> &'static str {
    match f {
        ExtremalFamily::Cycle => "cycle",
        ExtremalFamily::Regular => "regular",
        ExtremalFamily::DominatingCore => "dominating-core",
        _ => "other",
    }
}

pub(super) fn bounds_tally(claims: &[Claim], corpus: &[Graph], config: &VerifyConfig) -> Result<Tally> {
    let alphas = config.below_one();
    par_tally(corpus, |g| {
        let mut tally = Tally::default();
        let kappa = if claims.contains(&Claim::KConnected) || claims.contains(&Claim::BoundComparisons) {
            (g.n() <= CONNECTIVITY_CAP).then(|| g.vertex_connectivity()).transpose()?
        } else {
            None
        };
        for &alpha in &alphas {
            let ctx = BoundContext::new(g, alpha)?;
            check_graph(claims, &ctx, kappa, config, &mut tally)?;
        }
        if claims.contains(&Claim::LaplacianCrossCheck) {
            laplacian(g, config, &mut tally)?;
        }
        Ok(tally)
    })
}

struct Checker<'a> {
    g: &'a Graph,
    alpha: Alpha,
    config: &'a VerifyConfig,
}

impl Checker<'_> {
    /// Records a violation unless `e` holds; returns whether it applied.
    fn holds(&self, claim: Claim, e: &BoundEvaluation, tally: &mut Tally) -> bool {
        let Some(slack) = e.slack else {
            tally.skip();
            return false;
        };
        tally.check();
        let ok = if e.strict {
            slack > self.config.strict_margin
        } else {
            slack >= -self.config.equality_window
        };
        if !ok {
            tally.violation(
                claim,
                self.g,
                Some(self.alpha),
                None,
                format!(
                    "{:?}{}: bound {:.12}, target {:.12}, slack {slack:e}",
                    e.bound_id,
                    e.parameter.map(|p| format!("({p})")).unwrap_or_default(),
                    e.value.unwrap_or(f64::NAN),
                    e.target_value
                ),
            );
        }
        true
    }

    fn equal(&self, e: &BoundEvaluation) -> bool {
        e.slack.is_some_and(|s| s.abs() <= self.config.equality_window)
    }

    fn witness(&self, claim: Claim, family: Option<&str>, parameter: Option<usize>, value: f64, tally: &mut Tally) {
        tally.equality(
            WitnessKey {
                claim,
                graph: self.g,
                parameter,
                family,
            },
            self.alpha,
            value,
        );
    }

    /// Equality must occur exactly on the predicted family.
    fn classify(&self, claim: Claim, e: &BoundEvaluation, tally: &mut Tally) {
        let observed = self.equal(e);
        match (observed, e.equality_class) {
            (true, Some(f)) => self.witness(claim, Some(family_name(f)), e.parameter, e.target_value, tally),
            (false, None) => {}
            (true, None) => tally.violation(
                claim,
                self.g,
                Some(self.alpha),
                None,
                format!("equality outside the extremal family, slack {:e}", e.slack.unwrap()),
            ),
            (false, Some(f)) => tally.violation(
                claim,
                self.g,
                Some(self.alpha),
                None,
                format!("{} graph misses equality, slack {:e}", family_name(f), e.slack.unwrap()),
            ),
        }
    }
}

fn check_graph(
    claims: &[Claim],
    ctx: &BoundContext<'_>,
    kappa: Option<usize>,
    config: &VerifyConfig,
    tally: &mut Tally,
) -> Result<()> {
    let g = ctx.graph;
    let ck = Checker {
        g,
        alpha: ctx.alpha,
        config,
    };
    let has = |c| claims.contains(&c);

    if has(Claim::MaxDegreeSparse) {
        let e = ctx.max_degree_sparse();
        if ck.holds(Claim::MaxDegreeSparse, &e, tally) {
            ck.classify(Claim::MaxDegreeSparse, &e, tally);
        }
    }
    if has(Claim::IrregularDiameter) {
        ck.holds(Claim::IrregularDiameter, &ctx.irregular_diameter(), tally);
    }
    if has(Claim::LeastEigenvalueGap) {
        ck.holds(Claim::LeastEigenvalueGap, &ctx.least_eigenvalue_gap(), tally);
    }
    if has(Claim::IrregularMinDegree) {
        ck.holds(Claim::IrregularMinDegree, &ctx.irregular_min_degree(), tally);
    }
    if has(Claim::KConnected) {
        match kappa {
            Some(k) if k >= 1 => {
                for j in 1..=k {
                    ck.holds(Claim::KConnected, &ctx.k_connected(j)?, tally);
                }
            }
            Some(_) => tally.skip(),
            None => tally.note(format!("connectivity bound skipped above n = {CONNECTIVITY_CAP}")),
        }
    }
    if has(Claim::BoundComparisons) {
        for j in 1..=kappa.unwrap_or(0) {
            let Some(c) = ctx.comparisons(j) else {
                tally.skip();
                continue;
            };
            tally.check();
            if !c.all_agree() {
                tally.violation(
                    Claim::BoundComparisons,
                    g,
                    Some(ctx.alpha),
                    None,
                    format!("k={j}: predicates disagree with numeric order: {c:?}"),
                );
            }
        }
    }
    if has(Claim::RowSum) {
        for ell in 1..=g.n() {
            let e = ctx.rowsum(ell)?;
            if ck.holds(Claim::RowSum, &e, tally) && g.is_connected() {
                ck.classify(Claim::RowSum, &e, tally);
            }
        }
        let best = ctx.best_rowsum();
        if let Some(v) = best.value {
            tally.check();
            if v > g.max_degree() as f64 + config.equality_window {
                tally.violation(
                    Claim::RowSum,
                    g,
                    Some(ctx.alpha),
                    None,
                    format!("best row-sum bound {v:.12} exceeds max degree"),
                );
            }
        }
    }
    if has(Claim::EnergyBounds) {
        for e in ctx.energy() {
            if ck.holds(Claim::EnergyBounds, &e, tally) && ck.equal(&e) && g.m() > 0 {
                let label = serde_json::to_value(e.bound_id).expect("unit variant");
                ck.witness(Claim::EnergyBounds, label.as_str(), None, e.target_value, tally);
            }
        }
    }
    if has(Claim::EstradaBound) {
        let e = ctx.estrada();
        if ck.holds(Claim::EstradaBound, &e, tally) && ck.equal(&e) {
            ck.witness(Claim::EstradaBound, Some("estrada-upper"), None, e.target_value, tally);
        }
    }
    Ok(())
}

fn laplacian(g: &Graph, config: &VerifyConfig, tally: &mut Tally) -> Result<()> {
    if !g.is_connected() {
        tally.skip();
        return Ok(());
    }
    let mu = laplacian_largest(g)?;
    let twice = 2.0 * alpha_spectral_radius(g, Alpha::HALF)?;
    let slack = twice - mu;
    tally.check();
    let equal = slack.abs() <= config.equality_window;
    let bipartite = g.is_bipartite();
    if slack < -config.equality_window || equal != bipartite {
        tally.violation(
            Claim::LaplacianCrossCheck,
            g,
            Some(Alpha::HALF),
            None,
            format!("mu {mu:.12}, 2 rho_1/2 {twice:.12}, bipartite {bipartite}"),
        );
    } else if equal && g.n() <= 6 {
        tally.equality(
            WitnessKey {
                claim: Claim::LaplacianCrossCheck,
                graph: g,
                parameter: None,
                family: Some("bipartite"),
            },
            Alpha::HALF,
            mu,
        );
    }
    Ok(())
}
