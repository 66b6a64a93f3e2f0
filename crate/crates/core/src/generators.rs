//! Named graph families and the edge surgeries used by the rewiring
//! arguments.
//!
//! Vertex numbering is deterministic: path-like structures are numbered
//! along the path, and pendant paths take the next free labels in path
//! order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// Star `S_n`: center 0, leaves `1..n`.
pub fn star(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (0, i)))
}

/// Path `P_n` numbered `0 – 1 – … – n−1`.
pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Double star `D_{n,a}`: centers 0 (with `a` leaves) and 1 (with
/// `n − a − 2` leaves) joined by an edge.
pub fn double_star(n: usize, a: usize) -> Result<Graph> {
    if n < 4 || a < 1 || a > (n - 2) / 2 {
        return Err(invalid(format!(
            "double star needs n >= 4 and 1 <= a <= (n-2)/2, got n = {n}, a = {a}"
        )));
    }
    let mut edges = vec![(0, 1)];
    edges.extend((2..2 + a).map(|l| (0, l)));
    edges.extend((2 + a..n).map(|l| (1, l)));
    Graph::new(n, edges)
}

/// `T_{n,d}`: the path `0 – 1 – … – d` with `n − 1 − d` pendant vertices
/// hung at vertex `⌊d/2⌋`.
pub fn diameter_tree(n: usize, d: usize) -> Result<Graph> {
    if d < 3 || d + 1 > n {
        return Err(invalid(format!("T(n,d) needs 3 <= d <= n-1, got n = {n}, d = {d}")));
    }
    let hub = d / 2;
    let mut edges: Vec<(usize, usize)> = (1..=d).map(|i| (i - 1, i)).collect();
    edges.extend((d + 1..n).map(|l| (hub, l)));
    Graph::new(n, edges)
}

/// `S_n + e`: the star with leaves 1 and 2 joined.
pub fn star_plus_edge(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("S_n + e needs n >= 3, got {n}")));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    edges.push((1, 2));
    Graph::new(n, edges)
}

/// Triangle with one pendant vertex: `S_4 + e`.
pub fn paw() -> Graph {
    star_plus_edge(4).expect("n = 4 is valid")
}

/// Complement of a perfect matching on `2t` vertices (the cocktail-party
/// graph), which is `(2t − 2)`-regular.
pub fn matching_complement(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(invalid("matching complement needs t >= 1"));
    }
    Ok(Graph::new(2 * t, (0..t).map(|i| (2 * i, 2 * i + 1)))?.complement())
}

/// Which of the two extremal families for the domination bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DominationVariant {
    /// `K_{n−γ+1} ∪ (γ−1)K_1`.
    A,
    /// Matching complement on `n − γ + 2` vertices plus `γ − 2` isolated
    /// vertices; needs `γ ≥ 2` and `n − γ` even.
    B,
}

pub fn domination_extremal(n: usize, gamma: usize, variant: DominationVariant) -> Result<Graph> {
    match variant {
        DominationVariant::A => {
            if gamma < 1 || gamma + 1 > n {
                return Err(invalid(format!("variant A needs 1 <= γ <= n-1, got n = {n}, γ = {gamma}")));
            }
            Ok(complete(n - gamma + 1)?.with_isolated(gamma - 1))
        }
        DominationVariant::B => {
            if gamma < 2 || gamma + 1 > n || (n - gamma) % 2 != 0 {
                return Err(invalid(format!(
                    "variant B needs 2 <= γ <= n-1 with n-γ even, got n = {n}, γ = {gamma}"
                )));
            }
            Ok(matching_complement((n - gamma + 2) / 2)?.with_isolated(gamma - 2))
        }
    }
}

/// `G(u; p)`: hang a path of length `p` at `u`. New vertices are
/// `n, n+1, …, n+p−1` in order away from `u`. `p = 0` returns `G`.
pub fn attach_pendant_path(g: &Graph, u: usize, p: usize) -> Result<Graph> {
    if u >= g.n() {
        return Err(invalid(format!("anchor {u} is not a vertex of a graph on {} vertices", g.n())));
    }
    let n = g.n();
    let mut edges = g.edges().to_vec();
    let mut prev = u;
    for k in 0..p {
        edges.push((prev, n + k));
        prev = n + k;
    }
    Graph::new(n + p, edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Anchor {
    /// Both paths at the same vertex: `G_u(p, q)`.
    Single(usize),
    /// Path `p` at the first vertex, path `q` at the second; the two must
    /// be adjacent: `G_{u,v}(p, q)`.
    Adjacent(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantSpec {
    pub base: Graph,
    pub anchor: Anchor,
    pub p: usize,
    pub q: usize,
}

/// Builds `G_u(p, q)` or `G_{u,v}(p, q)`. The `p`-path is attached first,
/// so its vertices are numbered before the `q`-path's.
pub fn pendant_pair(spec: &PendantSpec) -> Result<Graph> {
    match spec.anchor {
        Anchor::Single(u) => {
            let h = attach_pendant_path(&spec.base, u, spec.p)?;
            attach_pendant_path(&h, u, spec.q)
        }
        Anchor::Adjacent(u, v) => {
            if !spec.base.has_edge(u, v) {
                return Err(precondition(format!("anchors {u} and {v} are not adjacent")));
            }
            let h = attach_pendant_path(&spec.base, u, spec.p)?;
            attach_pendant_path(&h, v, spec.q)
        }
    }
}

/// Moves the edges `v–s` (`s ∈ set`) to `u–s`.
///
/// Requires `u ≠ v`, `set` nonempty and `set ⊆ (N(v) \ N(u)) \ {u}`.
pub fn move_neighbors(g: &Graph, v: usize, u: usize, set: &[usize]) -> Result<Graph> {
    if u >= g.n() || v >= g.n() || u == v {
        return Err(precondition(format!("need distinct vertices, got u = {u}, v = {v}")));
    }
    if set.is_empty() {
        return Err(precondition("moved set is empty"));
    }
    for &s in set {
        if s == u || !g.has_edge(v, s) || g.has_edge(u, s) {
            return Err(precondition(format!(
                "vertex {s} is not in (N({v}) \\ N({u})) \\ {{{u}}}"
            )));
        }
    }
    let remove: Vec<_> = set.iter().map(|&s| (v, s)).collect();
    let add: Vec<_> = set.iter().map(|&s| (u, s)).collect();
    g.modified(&add, &remove)
}

/// Replaces edges `u1u2, v1v2` by `u1v2, v1u2`.
pub fn two_edge_swap(g: &Graph, u1: usize, u2: usize, v1: usize, v2: usize) -> Result<Graph> {
    let vs = [u1, u2, v1, v2];
    if vs.iter().any(|&x| x >= g.n()) {
        return Err(precondition("vertex out of range"));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if vs[i] == vs[j] {
                return Err(precondition(format!("vertices {vs:?} are not distinct")));
            }
        }
    }
    if !g.has_edge(u1, u2) || !g.has_edge(v1, v2) {
        return Err(precondition(format!("{u1}{u2} and {v1}{v2} must be edges")));
    }
    if g.has_edge(u1, v2) || g.has_edge(v1, u2) {
        return Err(precondition(format!("{u1}{v2} and {v1}{u2} must be non-edges")));
    }
    g.modified(&[(u1, v2), (v1, u2)], &[(u1, u2), (v1, v2)])
}

/// A named family member addressable as `Family:params`, for example
/// `Tnd:10,4` or `Snpe:6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Star(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    DoubleStar(usize, usize),
    DiameterTree(usize, usize),
    StarPlusEdge(usize),
    MatchingComplement(usize),
    DominationExtremal(usize, usize, DominationVariant),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Star(n) => star(n),
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::Empty(n) => Graph::empty(n),
            Family::DoubleStar(n, a) => double_star(n, a),
            Family::DiameterTree(n, d) => diameter_tree(n, d),
            Family::StarPlusEdge(n) => star_plus_edge(n),
            Family::MatchingComplement(t) => matching_complement(t),
            Family::DominationExtremal(n, g, v) => domination_extremal(n, g, v),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Star(n) => write!(f, "Sn:{n}"),
            Family::Path(n) => write!(f, "Pn:{n}"),
            Family::Cycle(n) => write!(f, "Cn:{n}"),
            Family::Complete(n) => write!(f, "Kn:{n}"),
            Family::Empty(n) => write!(f, "En:{n}"),
            Family::DoubleStar(n, a) => write!(f, "Dna:{n},{a}"),
            Family::DiameterTree(n, d) => write!(f, "Tnd:{n},{d}"),
            Family::StarPlusEdge(n) => write!(f, "Snpe:{n}"),
            Family::MatchingComplement(t) => write!(f, "CPt:{t}"),
            Family::DominationExtremal(n, g, DominationVariant::A) => write!(f, "DomA:{n},{g}"),
            Family::DominationExtremal(n, g, DominationVariant::B) => write!(f, "DomB:{n},{g}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("family spec {s:?} must look like Name:params")))?;
        let nums = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| invalid(format!("bad parameter {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let want = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(invalid(format!("{name} takes {k} parameter(s), got {}", nums.len())))
            }
        };
        let family = match name {
            "Sn" => want(1).map(|_| Family::Star(nums[0])),
            "Pn" => want(1).map(|_| Family::Path(nums[0])),
            "Cn" => want(1).map(|_| Family::Cycle(nums[0])),
            "Kn" => want(1).map(|_| Family::Complete(nums[0])),
            "En" => want(1).map(|_| Family::Empty(nums[0])),
            "Dna" => want(2).map(|_| Family::DoubleStar(nums[0], nums[1])),
            "Tnd" => want(2).map(|_| Family::DiameterTree(nums[0], nums[1])),
            "Snpe" => want(1).map(|_| Family::StarPlusEdge(nums[0])),
            "CPt" => want(1).map(|_| Family::MatchingComplement(nums[0])),
            "DomA" => want(2).map(|_| Family::DominationExtremal(nums[0], nums[1], DominationVariant::A)),
            "DomB" => want(2).map(|_| Family::DominationExtremal(nums[0], nums[1], DominationVariant::B)),
            _ => Err(invalid(format!("unknown family {name:?}"))),
        }?;
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::graph::{Diameter, GraphKind};

    fn degrees(g: &Graph) -> Vec<usize> {
        g.profile().degree_sequence
    }

    #[test]
    fn basic_families() {
        assert_eq!(degrees(&star(4).unwrap()), vec![3, 1, 1, 1]);
        assert!(is_isomorphic(&cycle(3).unwrap(), &complete(3).unwrap()).unwrap());
        assert_eq!(path(2).unwrap(), complete(2).unwrap());
        assert!(cycle(2).is_err());
        assert_eq!(star(1).unwrap().n(), 1);
    }

    #[test]
    fn double_stars() {
        assert!(is_isomorphic(&double_star(4, 1).unwrap(), &path(4).unwrap()).unwrap());
        assert_eq!(degrees(&double_star(6, 2).unwrap()), vec![3, 3, 1, 1, 1, 1]);
        let d51 = double_star(5, 1).unwrap();
        assert_eq!(degrees(&d51), vec![3, 2, 1, 1, 1]);
        assert_eq!(d51.diameter(), Diameter::Finite(3));
        assert!(double_star(6, 3).is_err());
        assert!(double_star(3, 1).is_err());
        assert!(double_star(6, 0).is_err());
        for n in 4..12 {
            for a in 1..=(n - 2) / 2 {
                let g = double_star(n, a).unwrap();
                assert_eq!(g.kind(), GraphKind::Tree);
                assert_eq!(g.diameter(), Diameter::Finite(3));
                assert_eq!(g.degrees().iter().filter(|&&d| d > 1).count(), 2);
            }
        }
    }

    #[test]
    fn diameter_trees() {
        for n in 4..=12 {
            assert_eq!(diameter_tree(n, n - 1).unwrap(), path(n).unwrap());
            for d in 3..n {
                let t = diameter_tree(n, d).unwrap();
                assert_eq!(t.diameter(), Diameter::Finite(d));
                assert_eq!(t.kind(), GraphKind::Tree);
            }
        }
        assert!(is_isomorphic(&diameter_tree(5, 3).unwrap(), &double_star(5, 1).unwrap()).unwrap());
        assert_eq!(diameter_tree(10, 4).unwrap().diameter(), Diameter::Finite(4));
        assert!(diameter_tree(5, 2).is_err());
        assert!(diameter_tree(5, 5).is_err());
    }

    #[test]
    fn star_plus_edges() {
        assert!(is_isomorphic(&star_plus_edge(3).unwrap(), &complete(3).unwrap()).unwrap());
        assert_eq!(degrees(&star_plus_edge(4).unwrap()), vec![3, 2, 2, 1]);
        let g = star_plus_edge(7).unwrap();
        assert_eq!(g.profile().kind, GraphKind::Unicyclic);
        assert_eq!(g.max_degree(), 6);
        assert!(!g.is_bipartite());
        assert!(star_plus_edge(2).is_err());
    }

    #[test]
    fn domination_families() {
        assert_eq!(domination_extremal(5, 1, DominationVariant::A).unwrap(), complete(5).unwrap());
        let c4 = domination_extremal(4, 2, DominationVariant::B).unwrap();
        assert!(is_isomorphic(&c4, &cycle(4).unwrap()).unwrap());
        assert_eq!(c4.domination_number().unwrap(), 2);
        let g = domination_extremal(8, 3, DominationVariant::A).unwrap();
        assert_eq!(g.domination_number().unwrap(), 3);
        assert!(domination_extremal(5, 2, DominationVariant::B).is_err());
        assert!(domination_extremal(5, 1, DominationVariant::B).is_err());
        assert!(domination_extremal(5, 5, DominationVariant::A).is_err());
        for n in 2..=9 {
            for gamma in 1..n {
                let a = domination_extremal(n, gamma, DominationVariant::A).unwrap();
                assert_eq!(a.domination_number().unwrap(), gamma);
                assert_eq!(a.max_degree(), n - gamma);
                if gamma >= 2 && (n - gamma) % 2 == 0 {
                    let b = domination_extremal(n, gamma, DominationVariant::B).unwrap();
                    assert_eq!(b.n(), n);
                    assert_eq!(b.domination_number().unwrap(), gamma);
                    assert_eq!(b.max_degree(), n - gamma);
                }
            }
        }
    }

    #[test]
    fn pendant_paths() {
        let k2 = complete(2).unwrap();
        let g11 = pendant_pair(&PendantSpec { base: k2.clone(), anchor: Anchor::Single(0), p: 1, q: 1 }).unwrap();
        assert!(is_isomorphic(&g11, &star(4).unwrap()).unwrap());
        let g20 = pendant_pair(&PendantSpec { base: k2.clone(), anchor: Anchor::Single(0), p: 2, q: 0 }).unwrap();
        assert!(is_isomorphic(&g20, &path(4).unwrap()).unwrap());
        assert_eq!(attach_pendant_path(&k2, 1, 0).unwrap(), k2);
        let g = attach_pendant_path(&k2, 1, 3).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(attach_pendant_path(&k2, 2, 1).is_err());

        let k3 = complete(3).unwrap();
        let g = pendant_pair(&PendantSpec { base: k3.clone(), anchor: Anchor::Adjacent(0, 1), p: 2, q: 1 }).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
        let bad = PendantSpec { base: path(3).unwrap(), anchor: Anchor::Adjacent(0, 2), p: 1, q: 1 };
        assert!(pendant_pair(&bad).is_err());
    }

    #[test]
    fn neighbor_moves() {
        let p4 = path(4).unwrap();
        let s = move_neighbors(&p4, 2, 1, &[3]).unwrap();
        assert!(is_isomorphic(&s, &star(4).unwrap()).unwrap());
        assert_eq!(s.degree(1), 3);

        let d62 = double_star(6, 2).unwrap();
        // leaves of center 1 are 4 and 5
        let moved = move_neighbors(&d62, 1, 0, &[4]).unwrap();
        assert!(is_isomorphic(&moved, &double_star(6, 1).unwrap()).unwrap());

        assert!(move_neighbors(&p4, 2, 1, &[1]).is_err());
        assert!(move_neighbors(&p4, 2, 1, &[]).is_err());
        assert!(move_neighbors(&p4, 2, 1, &[0]).is_err());
        assert!(move_neighbors(&p4, 2, 2, &[3]).is_err());
    }

    #[test]
    fn swaps() {
        let c6 = cycle(6).unwrap();
        let g = two_edge_swap(&c6, 0, 1, 3, 4).unwrap();
        let two_c3 = cycle(3).unwrap().disjoint_union(&cycle(3).unwrap());
        assert!(is_isomorphic(&g, &two_c3).unwrap());
        assert_eq!(two_edge_swap(&g, 0, 4, 3, 1).unwrap(), c6);
        assert!(two_edge_swap(&c6, 0, 1, 1, 2).is_err());
        assert!(two_edge_swap(&c6, 0, 1, 2, 3).is_err());
    }

    #[test]
    fn family_specs() {
        let f: Family = "Tnd:10,4".parse().unwrap();
        assert_eq!(f, Family::DiameterTree(10, 4));
        assert_eq!(f.to_string(), "Tnd:10,4");
        assert_eq!("Snpe:6".parse::<Family>().unwrap().build().unwrap(), star_plus_edge(6).unwrap());
        assert_eq!("DomB:4,2".parse::<Family>().unwrap().build().unwrap().m(), 4);
        assert!("Tnd:10".parse::<Family>().is_err());
        assert!("Xx:3".parse::<Family>().is_err());
        assert!("Sn".parse::<Family>().is_err());
        assert!("Sn:x".parse::<Family>().is_err());
    }
}
