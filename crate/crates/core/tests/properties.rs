use alphaspec_core::bounds::{all_bounds, best_rowsum_bound, cubic_h, domination_bound, BoundContext};
use alphaspec_core::enumerate::{enumerate, EnumerationQuery, GraphClass};
use alphaspec_core::generators::{diameter_tree, domination_extremal, star_plus_edge, DominationVariant};
use alphaspec_core::spectral::{alpha_spectral_radius, eigenvalues, spectrum};
use alphaspec_core::verify::{random_graphs, run, TheoremId, VerifyConfig};
use alphaspec_core::{graph6, Alpha, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn arb_alpha() -> impl Strategy<Value = Alpha> {
    (0.0f64..1.0).prop_map(|a| Alpha::new(a).unwrap())
}

/// Odd closed walk of length ≤ n from some vertex, by boolean walks.
fn has_odd_cycle(g: &Graph) -> bool {
    let n = g.n();
    (0..n).any(|s| {
        let mut reach = vec![false; n];
        reach[s] = true;
        for step in 1..=n {
            let mut next = vec![false; n];
            for u in (0..n).filter(|&u| reach[u]) {
                for &w in g.neighbors(u) {
                    next[w] = true;
                }
            }
            reach = next;
            if step % 2 == 1 && reach[s] {
                return true;
            }
        }
        false
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn handshake_and_bipartite(g in arb_graph(10)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        prop_assert_eq!(g.is_bipartite(), !has_odd_cycle(&g));
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(10)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn domination_at_most_n_minus_delta(g in arb_graph(9)) {
        prop_assert!(g.domination_number().unwrap() <= g.n() - g.max_degree());
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn trace_identities(g in arb_graph(14), alpha in arb_alpha()) {
        let a = alpha.value();
        let vals = eigenvalues(&g, alpha).unwrap();
        let m = g.m() as f64;
        let t1: f64 = vals.iter().sum();
        let t2: f64 = vals.iter().map(|l| l * l).sum();
        prop_assert!((t1 - 2.0 * a * m).abs() < 1e-8);
        prop_assert!((t2 - 2.0 * (1.0 - a).powi(2) * m - a * a * g.zagreb() as f64).abs() < 1e-8);
    }

    #[test]
    fn radius_bounded_by_max_degree_and_above_adjacency_radius(g in arb_graph(12), alpha in arb_alpha()) {
        let rho = alpha_spectral_radius(&g, alpha).unwrap();
        prop_assert!(rho <= g.max_degree() as f64 + 1e-9);
        prop_assert!(rho >= alpha_spectral_radius(&g, Alpha::ZERO).unwrap() - 1e-9);
    }

    #[test]
    fn perron_vector_is_positive_unit_eigenvector(g in arb_graph(10), alpha in arb_alpha()) {
        prop_assume!(g.is_connected());
        let s = spectrum(&g, alpha).unwrap();
        let x = s.perron.unwrap();
        let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        prop_assert!((norm - 1.0).abs() < 1e-9);
        prop_assert!(x.iter().all(|&v| v > 0.0));
        let a = alpha.value();
        for u in 0..g.n() {
            let ax = a * g.degree(u) as f64 * x[u] + (1.0 - a) * g.neighbors(u).iter().map(|&w| x[w]).sum::<f64>();
            prop_assert!((ax - s.rho * x[u]).abs() < 1e-9);
        }
    }

    #[test]
    fn removing_a_non_bridge_edge_lowers_the_radius(g in arb_graph(10), pick in any::<usize>(), alpha in arb_alpha()) {
        prop_assume!(g.is_connected() && g.m() >= g.n());
        let removable: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&e| g.modified(&[], &[e]).unwrap().is_connected())
            .collect();
        let e = removable[pick % removable.len()];
        let h = g.modified(&[], &[e]).unwrap();
        prop_assert!(alpha_spectral_radius(&h, alpha).unwrap() < alpha_spectral_radius(&g, alpha).unwrap());
    }

    #[test]
    fn sandwich(g in arb_graph(9), alpha in arb_alpha()) {
        for e in all_bounds(&g, alpha).unwrap() {
            if let Some(slack) = e.slack {
                prop_assert!(slack >= -1e-9, "{:?}", e);
            }
        }
        if let Some(v) = best_rowsum_bound(&g, alpha).unwrap().value {
            prop_assert!(v <= g.max_degree() as f64 + 1e-9);
        }
    }
}

#[test]
fn radius_equals_max_degree_iff_a_component_is_regular() {
    let alpha = Alpha::new(0.4).unwrap();
    for n in 1..=6 {
        for g in enumerate(&EnumerationQuery::new(GraphClass::All, n)).unwrap() {
            let rho = alpha_spectral_radius(&g, alpha).unwrap();
            let delta = g.max_degree();
            let regular_component = g
                .components()
                .iter()
                .any(|c| c.iter().all(|&v| g.degree(v) == delta));
            assert_eq!((rho - delta as f64).abs() < 1e-9, regular_component, "{g:?}");
        }
    }
}

#[test]
fn automorphic_vertices_share_perron_entries() {
    // w u z v v1 v2 s = 0..7; σ swaps s↔z, u↔v2, v↔v1
    let g = Graph::new(7, [(0, 1), (1, 2), (1, 3), (3, 2), (0, 5), (5, 4), (4, 2), (5, 6), (6, 3), (6, 4)]).unwrap();
    let sigma = [0, 5, 6, 4, 3, 1, 2];
    let mut mapped: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| (sigma[a].min(sigma[b]), sigma[a].max(sigma[b])))
        .collect();
    mapped.sort_unstable();
    assert_eq!(mapped, g.edges());
    for alpha in Alpha::default_grid() {
        let x = spectrum(&g, alpha).unwrap().perron.unwrap();
        assert!((x[6] - x[2]).abs() < 1e-9, "alpha {alpha}: {x:?}");
    }
}

#[test]
fn cubic_vanishes_at_the_eigensolver_radius() {
    for alpha in Alpha::default_grid() {
        for n in 4..=40 {
            let rho = alpha_spectral_radius(&star_plus_edge(n).unwrap(), alpha).unwrap();
            assert!(cubic_h(n, alpha).unwrap().eval(rho).abs() < 1e-7, "n={n} alpha={alpha}");
        }
    }
}

#[test]
fn diameter_trees_have_their_diameter() {
    for n in 4..=12 {
        for d in 3..n {
            assert_eq!(diameter_tree(n, d).unwrap().diameter().finite(), Some(d));
        }
    }
}

#[test]
fn domination_families_attain_the_bound() {
    for n in 2..=8 {
        for gamma in 1..n {
            for variant in [DominationVariant::A, DominationVariant::B] {
                let Ok(g) = domination_extremal(n, gamma, variant) else { continue };
                assert_eq!(g.domination_number().unwrap(), gamma);
                for alpha in Alpha::default_grid() {
                    let e = domination_bound(&g, alpha).unwrap();
                    assert!(e.slack.unwrap().abs() < 1e-9, "{variant:?} n={n} γ={gamma} α={alpha}");
                }
            }
        }
    }
}

#[test]
fn random_bounds_hold_at_larger_orders() {
    for g in random_graphs(7, 150, 10..=30) {
        for alpha in [Alpha::ZERO, Alpha::HALF, Alpha::new(0.9).unwrap()] {
            let ctx = BoundContext::new(&g, alpha).unwrap();
            for e in ctx.all() {
                if let Some(slack) = e.slack {
                    assert!(slack >= -1e-9, "{e:?}");
                }
            }
        }
    }
}

#[test]
fn reports_are_deterministic_and_violations_reproduce() {
    let config = VerifyConfig::default();
    let a = run(TheoremId::Theorem3_7, 6..=8, &config).unwrap().to_json();
    let b = run(TheoremId::Theorem3_7, 6..=8, &config).unwrap().to_json();
    assert_eq!(a, b);

    // an impossible margin turns every checked pendant pair into a violation
    let strict = VerifyConfig {
        strict_margin: 10.0,
        ..VerifyConfig::with_alphas(vec![Alpha::HALF])
    };
    let r = run(TheoremId::Theorem3_5, 3..=3, &strict).unwrap();
    assert!(!r.violations.is_empty());
    for v in &r.violations {
        let g = graph6::decode(&v.graph6).unwrap();
        let h = graph6::decode(v.related_graph6.as_ref().unwrap()).unwrap();
        let gap = alpha_spectral_radius(&g, Alpha::HALF).unwrap() - alpha_spectral_radius(&h, Alpha::HALF).unwrap();
        assert!(gap <= 10.0);
    }
}
