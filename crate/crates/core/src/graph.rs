//! Immutable simple undirected graphs and the structural quantities the
//! bounds are stated in terms of.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`Graph::domination_number`].
pub const DOMINATION_CAP: usize = 20;
/// Largest `n` accepted by [`Graph::vertex_connectivity`].
pub const CONNECTIVITY_CAP: usize = 10;

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Values are never
/// mutated after construction; surgeries return new graphs.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::new(r.n, r.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Coarse class used by hypotheses of the tree/unicyclic results.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    Tree,
    Unicyclic,
    Other,
}

/// Shortest-path diameter; disconnected graphs have infinite diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructuralProfile {
    /// Non-increasing degree sequence `d_1 ≥ … ≥ d_n`.
    pub degree_sequence: Vec<usize>,
    pub connected: bool,
    pub bipartite: bool,
    pub components: Vec<Vec<usize>>,
    pub kind: GraphKind,
    pub regular: bool,
}

impl StructuralProfile {
    pub fn max_degree(&self) -> usize {
        self.degree_sequence.first().copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degree_sequence.last().copied().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.degree_sequence.iter().sum::<usize>() / 2
    }

    /// `2m / n`.
    pub fn average_degree(&self) -> f64 {
        let n = self.degree_sequence.len();
        2.0 * self.edge_count() as f64 / n as f64
    }
}

impl Graph {
    /// Builds a graph, dropping duplicate edges. Self-loops and endpoints
    /// `>= n` are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    /// `list` must be sorted, deduplicated, `u < v < n`.
    pub(crate) fn from_sorted(n: usize, list: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Graph { n, edges: list, adj }
    }

    /// Edgeless graph `nK_1`.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Z(G) = Σ d_u²`.
    pub fn zagreb(&self) -> usize {
        self.adj.iter().map(|nb| nb.len() * nb.len()).sum()
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Adjacency rows as bitmasks. Only valid for `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj
            .iter()
            .map(|nb| nb.iter().fold(0u64, |acc, &v| acc | (1 << v)))
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// BFS two-coloring.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn kind(&self) -> GraphKind {
        if !self.is_connected() {
            GraphKind::Other
        } else if self.m() + 1 == self.n {
            GraphKind::Tree
        } else if self.m() == self.n {
            GraphKind::Unicyclic
        } else {
            GraphKind::Other
        }
    }

    /// True iff connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.adj.iter().all(|nb| nb.len() == 2) && self.is_connected()
    }

    pub fn profile(&self) -> StructuralProfile {
        let mut degree_sequence = self.degrees();
        degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
        let components = self.components();
        StructuralProfile {
            regular: self.is_regular(),
            connected: components.len() == 1,
            bipartite: self.is_bipartite(),
            kind: self.kind(),
            components,
            degree_sequence,
        }
    }

    pub fn bfs_distances(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    pub fn complement(&self) -> Graph {
        let mut list = Vec::with_capacity(self.n * (self.n - 1) / 2 - self.m());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    list.push((u, v));
                }
            }
        }
        Self::from_sorted(self.n, list)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut list = self.edges.clone();
        list.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_sorted(self.n + other.n, list)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Returns a copy with the given edges added and removed. Does not
    /// validate that removed edges were present.
    pub fn modified(&self, add: &[(usize, usize)], remove: &[(usize, usize)]) -> Result<Graph> {
        let removed: Vec<(usize, usize)> = remove.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let kept = self.edges.iter().copied().filter(|e| !removed.contains(e));
        Graph::new(self.n, kept.chain(add.iter().copied()))
    }

    /// Copy with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Graph {
        Self::from_sorted(self.n + extra, self.edges.clone())
    }

    /// Exact domination number by subset search in order of increasing
    /// size, pruned by the coverage a partial choice can still reach.
    pub fn domination_number(&self) -> Result<usize> {
        if self.n > DOMINATION_CAP {
            return Err(Error::Capability {
                what: "domination_number",
                n: self.n,
                cap: DOMINATION_CAP,
            });
        }
        let n = self.n;
        let full: u32 = (1u32 << n) - 1;
        let closed: Vec<u32> = (0..n)
            .map(|u| self.adj[u].iter().fold(1u32 << u, |acc, &v| acc | (1 << v)))
            .collect();
        let reach = self.max_degree() + 1;
        let lower = n.div_ceil(reach);
        let upper = greedy_dominating_size(&closed, full);
        for k in lower..upper {
            if dominating_subset_exists(&closed, full, reach, k, 0) {
                return Ok(k);
            }
        }
        Ok(upper)
    }

    /// Vertex connectivity κ(G) by minimum vertex-cut search.
    /// `κ(K_n) = n − 1`; disconnected graphs have κ = 0.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        if self.n > CONNECTIVITY_CAP {
            return Err(Error::Capability {
                what: "vertex_connectivity",
                n: self.n,
                cap: CONNECTIVITY_CAP,
            });
        }
        let n = self.n;
        if !self.is_connected() {
            return Ok(0);
        }
        if self.m() == n * (n - 1) / 2 {
            return Ok(n - 1);
        }
        let masks = self.adjacency_masks();
        for k in 1..n.saturating_sub(1) {
            if has_separator_of_size(&masks, n, k, 0, 0) {
                return Ok(k);
            }
        }
        Ok(n - 1)
    }

    pub fn is_k_connected(&self, k: usize) -> Result<bool> {
        Ok(self.n > k && self.vertex_connectivity()? >= k)
    }
}

fn greedy_dominating_size(closed: &[u32], full: u32) -> usize {
    let mut covered = 0u32;
    let mut count = 0;
    while covered != full {
        let best = (0..closed.len())
            .max_by_key(|&u| (closed[u] & !covered).count_ones())
            .unwrap();
        covered |= closed[best];
        count += 1;
    }
    count
}

fn dominating_subset_exists(
    closed: &[u32],
    full: u32,
    reach: usize,
    remaining: usize,
    covered: u32,
) -> bool {
    if covered == full {
        return true;
    }
    if remaining == 0 {
        return false;
    }
    let uncovered = (full & !covered).count_ones() as usize;
    if uncovered > remaining * reach {
        return false;
    }
    // The lowest uncovered vertex must be dominated by one of its closed
    // neighbors; branch only on those.
    let w = (full & !covered).trailing_zeros() as usize;
    for u in 0..closed.len() {
        if closed[u] & (1 << w) == 0 {
            continue;
        }
        if dominating_subset_exists(closed, full, reach, remaining - 1, covered | closed[u]) {
            return true;
        }
    }
    false
}

fn has_separator_of_size(masks: &[u64], n: usize, k: usize, start: usize, removed: u64) -> bool {
    if k == 0 {
        let alive = ((1u64 << n) - 1) & !removed;
        if alive.count_ones() < 2 {
            return false;
        }
        let s = alive.trailing_zeros() as usize;
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = masks[u] & alive & !seen;
            seen |= next;
            frontier |= next;
        }
        return seen != alive;
    }
    (start..n).any(|v| has_separator_of_size(masks, n, k - 1, v + 1, removed | (1 << v)))
}
