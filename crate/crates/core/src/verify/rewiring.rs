//! Graph surgeries that must raise `ρ_α`, and the pendant-path chains.

use super::{par_tally, Claim, Tally, TheoremId, TheoremReport, VerifyConfig};
use crate::error::Result;
use crate::generators::{move_neighbors, pendant_pair, two_edge_swap, Anchor, PendantSpec};
use crate::graph::Graph;
use crate::spectral::{alpha_spectral_radius, spectrum, Alpha};

/// Checks the neighbor-move lemma, the two-edge-swap lemma and the
/// cut-edge corollary on every connected graph of `corpus`.
pub fn verify_rewiring_lemmas(corpus: &[Graph], config: &VerifyConfig) -> Result<TheoremReport> {
    verify_surgeries(TheoremId::Rewiring, corpus, config)
}

/// Runs the surgery and pendant-path claims of `theorem` on `corpus`.
/// Other claims of `theorem` are ignored.
pub fn verify_surgeries(theorem: TheoremId, corpus: &[Graph], config: &VerifyConfig) -> Result<TheoremReport> {
    let claims = theorem.claims();
    let has_any = |cs: &[Claim]| cs.iter().any(|c| claims.contains(c));
    let mut tally = Tally::default();
    if has_any(&[Claim::MoveNeighbors, Claim::EdgeSwap, Claim::CutEdgeContraction]) {
        tally.absorb(rewiring_tally(claims, corpus, config)?);
    }
    if has_any(&[Claim::PendantSingle, Claim::PendantAdjacent]) {
        tally.absorb(pendant_tally(claims, corpus, config)?);
    }
    Ok(TheoremReport::from_tally(theorem, claims, order_range(corpus), config, tally))
}

/// Checks both pendant-path chains on every base with at least one edge,
/// for all `p ≥ q ≥ 1` with `p + q ≤ config.max_path_total`.
pub fn verify_pendant_monotonicity(bases: &[Graph], config: &VerifyConfig) -> Result<TheoremReport> {
    verify_surgeries(TheoremId::Pendant, bases, config)
}

pub(super) fn order_range(corpus: &[Graph]) -> Option<[usize; 2]> {
    let min = corpus.iter().map(Graph::n).min()?;
    let max = corpus.iter().map(Graph::n).max()?;
    Some([min, max])
}

/// Sign of `a − b` outside the dead-band, `None` inside it.
fn compare(a: f64, b: f64, deadband: f64) -> Option<std::cmp::Ordering> {
    let d = a - b;
    if d.abs() <= deadband {
        None
    } else {
        Some(d.total_cmp(&0.0))
    }
}

fn nonempty_subsets(items: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (1u32..1 << items.len()).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect()
    })
}

pub(super) fn rewiring_tally(claims: &[Claim], corpus: &[Graph], config: &VerifyConfig) -> Result<Tally> {
    let alphas = config.below_one();
    par_tally(corpus, |g| {
        let mut tally = Tally::default();
        if !g.is_connected() || g.n() < 2 {
            tally.note("rewiring checks skip disconnected graphs");
            return Ok(tally);
        }
        for &alpha in &alphas {
            rewiring_one(claims, g, alpha, config, &mut tally)?;
        }
        Ok(tally)
    })
}

#[allow(clippy::too_many_arguments)]
fn raises(
    tally: &mut Tally,
    claim: Claim,
    g: &Graph,
    h: &Graph,
    alpha: Alpha,
    rho: f64,
    margin: f64,
    what: impl FnOnce() -> String,
) -> Result<()> {
    let rho_h = alpha_spectral_radius(h, alpha)?;
    tally.check();
    if rho_h - rho <= margin {
        tally.violation(
            claim,
            g,
            Some(alpha),
            Some(h),
            format!("{}: rho {rho:.12} -> {rho_h:.12}", what()),
        );
    }
    Ok(())
}

fn rewiring_one(claims: &[Claim], g: &Graph, alpha: Alpha, config: &VerifyConfig, tally: &mut Tally) -> Result<()> {
    use std::cmp::Ordering::*;
    let s = spectrum(g, alpha)?;
    let x = s.perron.as_ref().expect("connected and alpha < 1");
    let rho = s.rho;
    let n = g.n();
    let margin = config.strict_margin;
    let band = config.perron_deadband;

    if claims.contains(&Claim::MoveNeighbors) {
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let candidates: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| w != u && !g.has_edge(u, w))
                    .collect();
                if candidates.is_empty() {
                    continue;
                }
                if compare(x[u], x[v], band) != Some(Greater) {
                    tally.skipped += (1u64 << candidates.len()) - 1;
                    continue;
                }
                for set in nonempty_subsets(&candidates) {
                    let h = move_neighbors(g, v, u, &set)?;
                    raises(tally, Claim::MoveNeighbors, g, &h, alpha, rho, margin, || {
                        format!("move {set:?} from {v} to {u}")
                    })?;
                }
            }
        }
    }

    if claims.contains(&Claim::EdgeSwap) {
        let oriented: Vec<(usize, usize)> = g.edges().iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
        for &(u1, u2) in &oriented {
            for &(v1, v2) in &oriented {
                let vs = [u1, u2, v1, v2];
                let distinct = (0..4).all(|i| (i + 1..4).all(|j| vs[i] != vs[j]));
                if !distinct || g.has_edge(u1, v2) || g.has_edge(v1, u2) {
                    continue;
                }
                let first = compare(x[u1], x[v1], band);
                let second = compare(x[v2], x[u2], band);
                if first != Some(Greater) || second != Some(Greater) {
                    tally.skip();
                    continue;
                }
                let h = two_edge_swap(g, u1, u2, v1, v2)?;
                raises(tally, Claim::EdgeSwap, g, &h, alpha, rho, margin, || {
                    format!("swap {u1}{u2},{v1}{v2} -> {u1}{v2},{v1}{u2}")
                })?;
            }
        }
    }

    if claims.contains(&Claim::CutEdgeContraction) {
        for &(a, b) in g.edges() {
            let without = g.modified(&[], &[(a, b)])?;
            let comps = without.components();
            if comps.len() < 2 || comps.iter().any(|c| c.len() < 2) {
                continue;
            }
            let moved: Vec<usize> = g.neighbors(b).iter().copied().filter(|&w| w != a).collect();
            let h = move_neighbors(g, b, a, &moved)?;
            raises(tally, Claim::CutEdgeContraction, g, &h, alpha, rho, margin, || {
                format!("contract cut edge {a}{b}, keep {b} pendant")
            })?;
        }
    }
    Ok(())
}

pub(super) fn pendant_tally(claims: &[Claim], bases: &[Graph], config: &VerifyConfig) -> Result<Tally> {
    let alphas = config.below_one();
    let max_total = config.max_path_total;
    par_tally(bases, |base| {
        let mut tally = Tally::default();
        if !base.is_connected() || base.m() == 0 {
            tally.note("pendant chains need a connected base with an edge");
            return Ok(tally);
        }
        let mut anchors = Vec::new();
        if claims.contains(&Claim::PendantSingle) {
            anchors.extend((0..base.n()).map(|u| (Claim::PendantSingle, Anchor::Single(u))));
        }
        if claims.contains(&Claim::PendantAdjacent) {
            for &(u, v) in base.edges() {
                if base.degree(u) >= 2 && base.degree(v) >= 2 {
                    anchors.push((Claim::PendantAdjacent, Anchor::Adjacent(u, v)));
                    anchors.push((Claim::PendantAdjacent, Anchor::Adjacent(v, u)));
                }
            }
        }
        for (claim, anchor) in anchors {
            for total in 2..=max_total {
                let chain: Vec<Graph> = (0..=total / 2)
                    .rev()
                    .map(|q| {
                        pendant_pair(&PendantSpec {
                            base: base.clone(),
                            anchor,
                            p: total - q,
                            q,
                        })
                    })
                    .collect::<Result<_>>()?;
                for &alpha in &alphas {
                    let rhos: Vec<f64> =
                        chain.iter().map(|h| alpha_spectral_radius(h, alpha)).collect::<Result<_>>()?;
                    for i in 0..chain.len() - 1 {
                        let q = total / 2 - i;
                        tally.check();
                        if rhos[i] - rhos[i + 1] <= config.strict_margin {
                            tally.violation(
                                claim,
                                &chain[i],
                                Some(alpha),
                                Some(&chain[i + 1]),
                                format!(
                                    "{anchor:?}: rho(p={}, q={q}) = {:.12} vs rho(p={}, q={}) = {:.12}",
                                    total - q,
                                    rhos[i],
                                    total - q + 1,
                                    q - 1,
                                    rhos[i + 1]
                                ),
                            );
                        }
                    }
                }
            }
        }
        Ok(tally)
    })
}
