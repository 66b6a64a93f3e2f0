//! Extremes of `ρ_α` over all trees of a given order.

use std::ops::RangeInclusive;

use super::{Claim, Tally, TheoremId, TheoremReport, VerifyConfig, WitnessKey};
use crate::canon::{canonical_form, CanonicalForm};
use crate::enumerate::{enumerate, EnumerationQuery, GraphClass};
use crate::error::Result;
use crate::generators::{diameter_tree, double_star, path, star};
use crate::graph::Graph;
use crate::spectral::alpha_spectral_radius;

/// Minimum `P_n`, maximum `S_n`, second maximum `D_{n,1}` and, per
/// diameter `d ≥ 3`, maximum `T_{n,d}`, each unique.
pub fn verify_tree_extremes(range: RangeInclusive<usize>, config: &VerifyConfig) -> Result<TheoremReport> {
    super::run(TheoremId::TreeExtremes, range, config)
}

struct Candidate {
    tree: Graph,
    form: CanonicalForm,
    diameter: usize,
    rhos: Vec<f64>,
}

pub(super) fn tree_tally(claims: &[Claim], n: usize, config: &VerifyConfig) -> Result<Tally> {
    let mut tally = Tally::default();
    let alphas = config.below_one();
    let trees: Vec<Graph> = enumerate(&EnumerationQuery::new(GraphClass::Trees, n))?.collect();
    if trees.len() < 2 {
        tally.note(format!("n={n}: vacuous, only one tree"));
        return Ok(tally);
    }
    let candidates = trees
        .into_iter()
        .map(|tree| {
            let rhos = alphas
                .iter()
                .map(|&a| alpha_spectral_radius(&tree, a))
                .collect::<Result<Vec<_>>>()?;
            Ok(Candidate {
                form: canonical_form(&tree)?,
                diameter: tree.diameter().finite().expect("trees are connected"),
                tree,
                rhos,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let has = |c| claims.contains(&c);

    let scan = |claim: Claim,
                    members: &[&Candidate],
                    target: &Graph,
                    family: &str,
                    parameter: Option<usize>,
                    minimize: bool,
                    tally: &mut Tally|
     -> Result<()> {
        let target_form = canonical_form(target)?;
        for (ai, &alpha) in alphas.iter().enumerate() {
            tally.instances_checked += members.len() as u64;
            let key = |c: &Candidate| if minimize { -c.rhos[ai] } else { c.rhos[ai] };
            let best = members
                .iter()
                .copied()
                .max_by(|a, b| key(a).total_cmp(&key(b)))
                .expect("nonempty");
            if best.form != target_form {
                tally.violation(
                    claim,
                    &best.tree,
                    Some(alpha),
                    Some(target),
                    format!("extremum rho {:.12} is not {family}", best.rhos[ai]),
                );
                continue;
            }
            if let Some(rival) = members
                .iter()
                .find(|c| c.form != best.form && key(best) - key(c) <= config.equality_window)
            {
                tally.violation(
                    claim,
                    &rival.tree,
                    Some(alpha),
                    Some(&best.tree),
                    format!(
                        "ties {family} within {:e}: {:.12} vs {:.12}",
                        config.equality_window, rival.rhos[ai], best.rhos[ai]
                    ),
                );
                continue;
            }
            tally.extremal(
                WitnessKey {
                    claim,
                    graph: &best.tree,
                    parameter,
                    family: Some(family),
                },
                alpha,
                best.rhos[ai],
            );
        }
        Ok(())
    };

    let everyone: Vec<&Candidate> = candidates.iter().collect();
    if has(Claim::TreeMin) {
        scan(Claim::TreeMin, &everyone, &path(n)?, "path", None, true, &mut tally)?;
    }
    if has(Claim::TreeMax) {
        scan(Claim::TreeMax, &everyone, &star(n)?, "star", None, false, &mut tally)?;
    }
    if has(Claim::TreeSecondMax) {
        let star_form = canonical_form(&star(n)?)?;
        let rest: Vec<&Candidate> = candidates.iter().filter(|c| c.form != star_form).collect();
        if n == 4 {
            tally.note("n=4: second maximum vacuous, P_4 = D_{4,1} is the only non-star tree");
        } else {
            scan(Claim::TreeSecondMax, &rest, &double_star(n, 1)?, "double-star-1", None, false, &mut tally)?;
        }
    }
    if has(Claim::TreeDiameterMax) {
        for d in 3..n {
            let class: Vec<&Candidate> = candidates.iter().filter(|c| c.diameter == d).collect();
            if class.len() == 1 {
                tally.note(format!("n={n}, d={d}: single tree, uniqueness vacuous"));
            }
            scan(
                Claim::TreeDiameterMax,
                &class,
                &diameter_tree(n, d)?,
                "diameter-tree",
                Some(d),
                false,
                &mut tally,
            )?;
        }
    }
    Ok(tally)
}
