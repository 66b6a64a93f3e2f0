//! The domination bound over labeled graphs and the maximizers of
//! `γ_α(G) = Δ − ρ_α(G)`.

use std::ops::RangeInclusive;

use super::{par_tally, Claim, Tally, TheoremId, TheoremReport, VerifyConfig, WitnessKey};
use crate::bounds::{domination_family, gamma_star_bound, rho_star_plus_edge, ExtremalFamily};
use crate::canon::{canonical_form, CanonicalForm};
use crate::enumerate::{enumerate, enumerate_labeled, EnumerationQuery, GraphClass};
use crate::error::Result;
use crate::generators::{star, star_plus_edge};
use crate::graph::Graph;
use crate::spectral::{alpha_spectral_radius, Alpha};

/// Tolerance for closed forms compared against the eigensolver.
const CLOSED_FORM_TOLERANCE: f64 = 1e-10;
const CUBIC_TOLERANCE: f64 = 1e-9;

/// `ρ_α ≤ n − γ` over every labeled graph, with equality exactly on the
/// two extremal families.
pub fn verify_domination(range: RangeInclusive<usize>, config: &VerifyConfig) -> Result<TheoremReport> {
    super::run(TheoremId::Theorem3_3, range, config)
}

/// Unique maximizers of `γ_α`: `S_n` over all graphs, `S_n + e` over
/// unicyclic and over non-bipartite graphs.
pub fn verify_gamma_extremes(range: RangeInclusive<usize>, config: &VerifyConfig) -> Result<TheoremReport> {
    super::run(TheoremId::GammaExtremes, range, config)
}

fn family_name(f: ExtremalFamily) -> &'static str {
    match f {
        ExtremalFamily::CompletePlusIsolated => "complete-plus-isolated",
        ExtremalFamily::MatchingComplementPlusIsolated => "matching-complement-plus-isolated",
        _ => unreachable!("not a domination family"),
    }
}

pub(super) fn domination_tally(n: usize, config: &VerifyConfig) -> Result<Tally> {
    let alphas = config.below_one();
    let graphs: Vec<Graph> = enumerate_labeled(n, |_| true)?.collect();
    let window = config.equality_window;
    par_tally(&graphs, |g| {
        let mut tally = Tally::default();
        let gamma = g.domination_number()?;
        if gamma < 1 || gamma >= n {
            tally.skip();
            return Ok(tally);
        }
        let family = domination_family(g, gamma)?;
        let bound = (n - gamma) as f64;
        for &alpha in &alphas {
            let rho = alpha_spectral_radius(g, alpha)?;
            let slack = bound - rho;
            tally.check();
            if slack < -window {
                tally.violation(
                    Claim::Domination,
                    g,
                    Some(alpha),
                    None,
                    format!("rho {rho:.12} exceeds n - gamma = {bound} (gamma = {gamma})"),
                );
                continue;
            }
            let equal = slack.abs() <= window;
            match (equal, family) {
                (true, Some(f)) => tally.equality(
                    WitnessKey {
                        claim: Claim::Domination,
                        graph: g,
                        parameter: Some(gamma),
                        family: Some(family_name(f)),
                    },
                    alpha,
                    rho,
                ),
                (true, None) => tally.violation(
                    Claim::Domination,
                    g,
                    Some(alpha),
                    None,
                    format!("equality rho = n - gamma = {bound} outside both families (gamma = {gamma})"),
                ),
                (false, Some(f)) => tally.violation(
                    Claim::Domination,
                    g,
                    Some(alpha),
                    None,
                    format!("{} member misses equality: slack {slack:e}", family_name(f)),
                ),
                (false, None) => {}
            }
        }
        Ok(tally)
    })
}

struct Scored {
    graph: Graph,
    form: CanonicalForm,
    gammas: Vec<f64>,
}

pub(super) fn gamma_tally(claims: &[Claim], n: usize, config: &VerifyConfig) -> Result<Tally> {
    let mut tally = Tally::default();
    let alphas = config.below_one();
    if n < 2 {
        tally.note("gamma maximizers need n >= 2");
        return Ok(tally);
    }
    let needs_all = claims.contains(&Claim::GammaAll) || claims.contains(&Claim::GammaNonBipartite);
    let all = if needs_all { score(&class(GraphClass::All, n)?, &alphas)? } else { Vec::new() };

    if claims.contains(&Claim::GammaAll) {
        let target = star(n)?;
        let members: Vec<&Scored> = all.iter().collect();
        maximizer(Claim::GammaAll, &members, &target, "star", &alphas, config, &mut tally)?;
        for (ai, &alpha) in alphas.iter().enumerate() {
            let bound = gamma_star_bound(n, alpha)?;
            let form = canonical_form(&target)?;
            let star_gamma = all.iter().find(|s| s.form == form).expect("star is enumerated").gammas[ai];
            tally.check();
            if (star_gamma - bound).abs() > CLOSED_FORM_TOLERANCE {
                tally.violation(
                    Claim::GammaAll,
                    &target,
                    Some(alpha),
                    None,
                    format!("gamma(S_n) = {star_gamma:.12} but closed form gives {bound:.12}"),
                );
            }
        }
    }
    if claims.contains(&Claim::GammaUnicyclic) {
        if n < 4 {
            tally.note(format!("n={n}: unicyclic maximizer needs n >= 4"));
        } else {
            let uni = score(&class(GraphClass::Unicyclic, n)?, &alphas)?;
            let members: Vec<&Scored> = uni.iter().collect();
            maximizer(Claim::GammaUnicyclic, &members, &star_plus_edge(n)?, "star-plus-edge", &alphas, config, &mut tally)?;
            cubic_cross_check(Claim::GammaUnicyclic, n, &alphas, &mut tally)?;
        }
    }
    if claims.contains(&Claim::GammaNonBipartite) {
        if n < 4 {
            tally.note(format!("n={n}: non-bipartite maximizer needs n >= 4"));
        } else {
            let members: Vec<&Scored> = all.iter().filter(|s| !s.graph.is_bipartite()).collect();
            maximizer(
                Claim::GammaNonBipartite,
                &members,
                &star_plus_edge(n)?,
                "star-plus-edge",
                &alphas,
                config,
                &mut tally,
            )?;
            cubic_cross_check(Claim::GammaNonBipartite, n, &alphas, &mut tally)?;
        }
    }
    Ok(tally)
}

fn class(class: GraphClass, n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate(&EnumerationQuery::new(class, n))?.collect())
}

fn score(graphs: &[Graph], alphas: &[Alpha]) -> Result<Vec<Scored>> {
    use rayon::prelude::*;
    graphs
        .par_iter()
        .map(|g| {
            let delta = g.max_degree() as f64;
            let gammas = alphas
                .iter()
                .map(|&a| Ok(delta - alpha_spectral_radius(g, a)?))
                .collect::<Result<Vec<_>>>()?;
            Ok(Scored {
                graph: g.clone(),
                form: canonical_form(g)?,
                gammas,
            })
        })
        .collect()
}

fn maximizer(
    claim: Claim,
    members: &[&Scored],
    target: &Graph,
    family: &str,
    alphas: &[Alpha],
    config: &VerifyConfig,
    tally: &mut Tally,
) -> Result<()> {
    let target_form = canonical_form(target)?;
    for (ai, &alpha) in alphas.iter().enumerate() {
        tally.instances_checked += members.len() as u64;
        let best = members
            .iter()
            .copied()
            .max_by(|a, b| a.gammas[ai].total_cmp(&b.gammas[ai]))
            .expect("nonempty class");
        if best.form != target_form {
            tally.violation(
                claim,
                &best.graph,
                Some(alpha),
                Some(target),
                format!("maximum gamma {:.12} is not attained by {family}", best.gammas[ai]),
            );
            continue;
        }
        if let Some(rival) = members
            .iter()
            .find(|s| s.form != best.form && best.gammas[ai] - s.gammas[ai] <= config.equality_window)
        {
            tally.violation(
                claim,
                &rival.graph,
                Some(alpha),
                Some(&best.graph),
                format!(
                    "ties {family}: gamma {:.12} vs {:.12}",
                    rival.gammas[ai], best.gammas[ai]
                ),
            );
            continue;
        }
        tally.extremal(
            WitnessKey {
                claim,
                graph: &best.graph,
                parameter: None,
                family: Some(family),
            },
            alpha,
            best.gammas[ai],
        );
    }
    Ok(())
}

fn cubic_cross_check(claim: Claim, n: usize, alphas: &[Alpha], tally: &mut Tally) -> Result<()> {
    let g = star_plus_edge(n)?;
    for &alpha in alphas {
        let rho = alpha_spectral_radius(&g, alpha)?;
        let root = rho_star_plus_edge(n, alpha)?;
        tally.check();
        if (rho - root).abs() > CUBIC_TOLERANCE {
            tally.violation(
                claim,
                &g,
                Some(alpha),
                None,
                format!("eigensolver rho {rho:.12} vs cubic root {root:.12}"),
            );
        }
    }
    Ok(())
}
