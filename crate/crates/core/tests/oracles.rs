#![allow(clippy::needless_range_loop)]

mod common;

use alphaspec_core::canon::canonical_form;
use alphaspec_core::enumerate::{enumerate, enumerate_labeled, EnumerationQuery, GraphClass};
use alphaspec_core::generators::{diameter_tree, double_star, star_plus_edge};
use alphaspec_core::spectral::eigenvalues;
use alphaspec_core::{Alpha, Graph};

fn count(class: GraphClass, n: usize) -> usize {
    enumerate(&EnumerationQuery::new(class, n)).unwrap().count()
}

#[test]
fn tree_counts_follow_otter() {
    let otter = common::free_tree_counts(12);
    assert_eq!(&otter[1..=10], &[1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    for n in 1..=12 {
        assert_eq!(count(GraphClass::Trees, n) as u128, otter[n], "n={n}");
    }
}

#[test]
fn tree_counts_follow_prufer() {
    for n in 1..=8 {
        assert_eq!(count(GraphClass::Trees, n), common::prufer_tree_count(n), "n={n}");
    }
}

#[test]
fn unicyclic_counts_follow_polya() {
    let polya = common::unicyclic_counts(10);
    assert_eq!(&polya[3..=7], &[1, 2, 5, 13, 33]);
    for n in 3..=10 {
        assert_eq!(count(GraphClass::Unicyclic, n) as u128, polya[n], "n={n}");
    }
}

#[test]
fn graph_counts_follow_burnside() {
    let connected = common::connected_counts(8);
    for n in 1..=7 {
        assert_eq!(count(GraphClass::All, n) as u128, common::graph_count(n), "all n={n}");
        assert_eq!(count(GraphClass::Connected, n) as u128, connected[n], "connected n={n}");
    }
    assert_eq!(connected[8], 11117);
}

#[test]
fn small_classes_match_brute_force_relabeling() {
    for n in 1..=5 {
        assert_eq!(count(GraphClass::All, n), common::labeled_class_count(n, |_, _| true));
        assert_eq!(count(GraphClass::Connected, n), common::labeled_class_count(n, common::edges_connected));
        let nonbip = common::labeled_class_count(n, |n, e| {
            common::edges_connected(n, e) && !Graph::new(n, e.iter().copied()).unwrap().is_bipartite()
        });
        assert_eq!(count(GraphClass::ConnectedNonbipartite, n), nonbip);
    }
}

#[test]
fn canonical_form_agrees_with_brute_force() {
    for n in 1..=5 {
        let graphs: Vec<Graph> = enumerate_labeled(n, |_| true).unwrap().collect();
        for g in &graphs {
            for h in graphs.iter().step_by(7) {
                let same_form = canonical_form(g).unwrap() == canonical_form(h).unwrap();
                let same_brute = common::brute_canonical(n, g.edges()) == common::brute_canonical(n, h.edges());
                assert_eq!(same_form, same_brute, "{g:?} {h:?}");
            }
        }
    }
}

#[test]
fn canonical_form_is_invariant_under_every_relabeling_at_seven() {
    let samples = [
        diameter_tree(7, 4).unwrap(),
        double_star(7, 2).unwrap(),
        star_plus_edge(7).unwrap(),
        Graph::new(7, [(0, 1), (1, 2), (1, 3), (3, 2), (0, 5), (5, 4), (4, 2), (5, 6), (6, 3), (6, 4)]).unwrap(),
    ];
    for g in &samples {
        let form = canonical_form(g).unwrap();
        let mut perm: Vec<usize> = (0..7).collect();
        loop {
            assert_eq!(canonical_form(&g.relabel(&perm).unwrap()).unwrap(), form);
            let Some(i) = (0..6).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (i + 1..7).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
    }
}

#[test]
fn eigenvalues_match_exact_polynomial_roots_on_larger_graphs() {
    let graphs = [
        diameter_tree(7, 3).unwrap(),
        star_plus_edge(6).unwrap(),
        Graph::new(7, [(0, 1), (1, 2), (1, 3), (3, 2), (0, 5), (5, 4), (4, 2), (5, 6), (6, 3), (6, 4)]).unwrap(),
    ];
    for g in &graphs {
        for tenths in [0i128, 2, 5, 7] {
            let got = eigenvalues(g, Alpha::new(tenths as f64 / 10.0).unwrap()).unwrap();
            let want = common::integer_matrix_eigenvalues(&common::scaled_a_alpha(g.n(), g.edges(), tenths));
            for (a, b) in got.iter().zip(&want) {
                assert!((a - b / 10.0).abs() < 1e-10, "{g:?} alpha {tenths}: {got:?} vs {want:?}");
            }
        }
    }
}

#[test]
fn square_free_factorization_keeps_multiplicities() {
    // K_4 at α = 0: spectrum {3, −1, −1, −1}
    let k4: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
    let vals = common::integer_matrix_eigenvalues(&common::scaled_a_alpha(4, &k4, 0));
    let want = [30.0, -10.0, -10.0, -10.0];
    for (a, b) in vals.iter().zip(want) {
        assert!((a - b).abs() < 1e-9);
    }
}
