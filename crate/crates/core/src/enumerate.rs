//! Isomorphism-free graph streams for exhaustive verification.
//!
//! * Trees come from rooted level sequences in canonical (Beyer–Hedetniemi)
//!   order, keeping only the sequence rooted at the tree's canonical
//!   centroid. No isomorphism test is needed.
//! * Unicyclic graphs add one non-edge to every tree and deduplicate by
//!   canonical form.
//! * General graphs grow one edge at a time from the empty graph with
//!   canonical deduplication at every edge count.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    Trees,
    Unicyclic,
    Connected,
    All,
    ConnectedNonbipartite,
}

impl GraphClass {
    /// Largest supported vertex count.
    pub fn cap(self) -> usize {
        match self {
            GraphClass::Trees => 12,
            GraphClass::Unicyclic => 10,
            GraphClass::Connected | GraphClass::All | GraphClass::ConnectedNonbipartite => 8,
        }
    }

    fn name(self) -> &'static str {
        match self {
            GraphClass::Trees => "trees",
            GraphClass::Unicyclic => "unicyclic",
            GraphClass::Connected => "connected",
            GraphClass::All => "all",
            GraphClass::ConnectedNonbipartite => "connected-nonbipartite",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "trees" | "tree" => GraphClass::Trees,
            "unicyclic" => GraphClass::Unicyclic,
            "connected" => GraphClass::Connected,
            "all" => GraphClass::All,
            "connected-nonbipartite" | "nonbipartite" => GraphClass::ConnectedNonbipartite,
            _ => return Err(Error::InvalidParameter(format!("unknown graph class {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub n: usize,
    pub class: GraphClass,
    /// Maximum number of graphs the stream may hold.
    pub cap: Option<usize>,
}

impl EnumerationQuery {
    pub fn new(class: GraphClass, n: usize) -> Self {
        EnumerationQuery { n, class, cap: None }
    }
}

/// Ordered stream of pairwise non-isomorphic graphs.
#[derive(Clone, Debug)]
pub struct GraphStream {
    graphs: std::vec::IntoIter<Graph>,
}

impl GraphStream {
    /// Splits the remaining stream into chunks of at most `size` graphs,
    /// preserving order.
    pub fn chunks(self, size: usize) -> impl Iterator<Item = Vec<Graph>> {
        let all: Vec<Graph> = self.graphs.collect();
        let size = size.max(1);
        let mut chunks = Vec::new();
        let mut it = all.into_iter().peekable();
        while it.peek().is_some() {
            chunks.push(it.by_ref().take(size).collect::<Vec<_>>());
        }
        chunks.into_iter()
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.graphs.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.graphs.size_hint()
    }
}

impl ExactSizeIterator for GraphStream {}

pub fn enumerate(query: &EnumerationQuery) -> Result<GraphStream> {
    let EnumerationQuery { n, class, cap } = *query;
    if n > class.cap() {
        return Err(Error::Capability {
            what: "enumerate",
            n,
            cap: class.cap(),
        });
    }
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let graphs = match class {
        GraphClass::Trees => trees(n),
        GraphClass::Unicyclic => unicyclic(n)?,
        GraphClass::All => all_graphs(n)?,
        GraphClass::Connected => all_graphs(n)?.into_iter().filter(Graph::is_connected).collect(),
        GraphClass::ConnectedNonbipartite => all_graphs(n)?
            .into_iter()
            .filter(|g| g.is_connected() && !g.is_bipartite())
            .collect(),
    };
    if let Some(cap) = cap {
        if graphs.len() > cap {
            return Err(Error::CapExceeded { cap });
        }
    }
    Ok(GraphStream {
        graphs: graphs.into_iter(),
    })
}

/// Largest `n` accepted by [`enumerate_labeled`].
pub const LABELED_CAP: usize = 8;

/// Every labeled graph on `n` vertices accepted by `predicate`, in order
/// of the edge bitmask over pairs `(0,1), (0,2), …, (n−2,n−1)`.
pub fn enumerate_labeled<F>(n: usize, predicate: F) -> Result<impl Iterator<Item = Graph>>
where
    F: Fn(&Graph) -> bool,
{
    if n > LABELED_CAP {
        return Err(Error::Capability {
            what: "enumerate_labeled",
            n,
            cap: LABELED_CAP,
        });
    }
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_sorted(n, edges);
        predicate(&g).then_some(g)
    }))
}

/// Successor of a canonical rooted level sequence (root at level 0), or
/// `None` after the star.
fn next_level_sequence(seq: &mut [usize]) -> bool {
    let Some(p) = seq.iter().rposition(|&l| l > 1) else {
        return false;
    };
    let q = seq[..p].iter().rposition(|&l| l == seq[p] - 1).unwrap();
    let period = p - q;
    for i in p..seq.len() {
        seq[i] = seq[i - period];
    }
    true
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (v, &l) in levels.iter().enumerate() {
        stack.truncate(l);
        if let Some(&parent) = stack.last() {
            edges.push((parent.min(v), parent.max(v)));
        }
        stack.push(v);
    }
    Graph::new(n, edges).expect("level sequence yields a valid tree")
}

/// Canonical rooted level sequence: children ordered by their own
/// sequences, lexicographically largest first.
fn rooted_sequence(g: &Graph, root: usize, parent: Option<usize>, depth: usize) -> Vec<usize> {
    let mut kids: Vec<Vec<usize>> = g
        .neighbors(root)
        .iter()
        .filter(|&&c| Some(c) != parent)
        .map(|&c| rooted_sequence(g, c, Some(root), depth + 1))
        .collect();
    kids.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![depth];
    for k in kids {
        out.extend(k);
    }
    out
}

fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; n];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &v in g.neighbors(u) {
            if v != parent[u] {
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let mut size = vec![1; n];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let heaviest = |u: usize| -> usize {
        let down = g
            .neighbors(u)
            .iter()
            .filter(|&&v| v != parent[u])
            .map(|&v| size[v])
            .max()
            .unwrap_or(0);
        down.max(n - size[u])
    };
    let best = (0..n).map(heaviest).min().unwrap();
    (0..n).filter(|&u| heaviest(u) == best).collect()
}

/// Canonical free-tree level sequence: the larger rooted sequence over
/// the (one or two) centroids.
fn free_tree_sequence(g: &Graph) -> Vec<usize> {
    centroids(g)
        .into_iter()
        .map(|c| rooted_sequence(g, c, None, 0))
        .max()
        .unwrap()
}

/// All non-isomorphic trees on `n` vertices.
fn trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![tree_from_levels(&(0..n).collect::<Vec<_>>())];
    }
    let mut out = Vec::new();
    let mut seq: Vec<usize> = (0..n).collect();
    loop {
        let t = tree_from_levels(&seq);
        if free_tree_sequence(&t) == seq {
            out.push(t);
        }
        if !next_level_sequence(&mut seq) {
            break;
        }
    }
    out
}

fn unicyclic(n: usize) -> Result<Vec<Graph>> {
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for t in trees(n) {
        for u in 0..n {
            for v in u + 1..n {
                if t.has_edge(u, v) {
                    continue;
                }
                let g = t.modified(&[(u, v)], &[])?;
                let key = canonical_form(&g)?;
                if let Entry::Vacant(slot) = seen.entry(key) {
                    slot.insert(canonical_graph(&g)?);
                }
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// Every graph on `n` vertices up to isomorphism, ordered by edge count
/// then canonical form.
fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut level: Vec<Graph> = vec![Graph::empty(n)?];
    let max_m = n * (n - 1) / 2;
    for _ in 0..max_m {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &level {
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let h = g.modified(&[(u, v)], &[])?;
                    let key = canonical_form(&h)?;
                    if let Entry::Vacant(slot) = next.entry(key) {
                        slot.insert(canonical_graph(&h)?);
                    }
                }
            }
        }
        out.append(&mut level);
        level = next.into_values().collect();
    }
    out.append(&mut level);
    Ok(out)
}
