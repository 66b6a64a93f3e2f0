//! Fixtures shared by the benchmarks.

use alphaspec_core::generators::{cycle, diameter_tree, star};
use alphaspec_core::Graph;

/// A fixed mix of sparse graphs of order `n`: a star, a cycle and a
/// diameter-4 caterpillar.
pub fn sparse_fixtures(n: usize) -> Vec<(&'static str, Graph)> {
    vec![
        ("star", star(n).expect("n >= 1")),
        ("cycle", cycle(n).expect("n >= 3")),
        ("caterpillar", diameter_tree(n, 4).expect("n >= 5")),
    ]
}
