//! Canonical labeling by individualization and refinement.
//!
//! The search tree is built from equitable ordered partitions: refine,
//! pick the first non-singleton cell, individualize each of its vertices in
//! turn. Every leaf is a vertex ordering and the canonical form is the
//! largest upper-triangle adjacency code over all leaves. Two kinds of
//! pruning keep symmetric graphs cheap:
//!
//! * a leaf whose code equals the first or the best leaf yields an
//!   automorphism, and the search jumps back to the node where the two
//!   paths diverge;
//! * at nodes on the first path, children in the same orbit (under the
//!   automorphisms found so far that fix the node's prefix) as an already
//!   explored child are skipped.
//!
//! Both prune only subtrees that are automorphic images of explored ones,
//! so the maximum is unchanged.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by [`canonical_form`].
pub const CANON_CAP: usize = 12;

/// Isomorphism-invariant encoding: vertex count followed by the
/// canonical upper-triangle adjacency bits, big-endian.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.0)
}

/// Canonical form plus an ordering `lab` such that relabeling vertex
/// `lab[i]` to `i` yields the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    if g.n() > CANON_CAP {
        return Err(Error::Capability {
            what: "canonical_form",
            n: g.n(),
            cap: CANON_CAP,
        });
    }
    let n = g.n();
    let adj = g.adjacency_masks();
    let mut search = Search {
        adj: &adj,
        n,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut root = vec![(0..n).collect::<Vec<_>>()];
    refine(&mut root, &adj);
    let mut path = Vec::new();
    search.descend(root, &mut path);
    let best = search.best.expect("search visits at least one leaf");
    Ok((encode(n, best.code), best.lab))
}

/// Relabels `g` into its canonical representative.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, lab) = canonical_labeling(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

fn encode(n: usize, code: u128) -> CanonicalForm {
    let bits = n * n.saturating_sub(1) / 2;
    let nbytes = bits.div_ceil(8);
    let mut out = Vec::with_capacity(nbytes + 1);
    out.push(n as u8);
    out.extend_from_slice(&code.to_be_bytes()[16 - nbytes..]);
    CanonicalForm(out)
}

fn leaf_code(adj: &[u64], lab: &[usize]) -> u128 {
    let n = lab.len();
    let mut code = 0u128;
    for j in 1..n {
        let row = adj[lab[j]];
        for &li in &lab[..j] {
            code = (code << 1) | ((row >> li) & 1) as u128;
        }
    }
    code
}

/// Refines an ordered partition to the coarsest equitable partition
/// finer than it. Splits are ordered by neighbor count, so the result
/// depends only on the graph and the input cell order.
fn refine(cells: &mut Vec<Vec<usize>>, adj: &[u64]) {
    let mut s = 0;
    while s < cells.len() {
        let splitter = cells[s].iter().fold(0u64, |acc, &v| acc | (1 << v));
        let mut next = Vec::with_capacity(cells.len() + 1);
        let mut split = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(u32, usize)> =
                cell.iter().map(|&v| ((adj[v] & splitter).count_ones(), v)).collect();
            if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                next.push(cell.clone());
                continue;
            }
            split = true;
            keyed.sort_by_key(|&(k, _)| k);
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if split {
            *cells = next;
            s = 0;
        } else {
            s += 1;
        }
    }
}

struct Leaf {
    path: Vec<usize>,
    code: u128,
    lab: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Explores the subtree at `cells`. Returns `Some(level)` to abandon
    /// everything below depth `level`.
    fn descend(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let depth = path.len();
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if self.on_first_path(path) && self.same_orbit_as_explored(path, v, &explored) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            refine(&mut child, self.adj);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = leaf_code(self.adj, &lab);
        let leaf = Leaf {
            path: path.to_vec(),
            code,
            lab,
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                path: leaf.path.clone(),
                code,
                lab: leaf.lab.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if code == first.code {
            let gamma = mapping(&first.lab, &leaf.lab, self.n);
            let level = common_prefix(&first.path, path);
            self.automorphisms.push(gamma);
            return Some(level);
        }
        let best = self.best.as_ref().unwrap();
        if code == best.code {
            let gamma = mapping(&best.lab, &leaf.lab, self.n);
            let level = common_prefix(&best.path, path);
            self.automorphisms.push(gamma);
            return Some(level);
        }
        if code > best.code {
            self.best = Some(leaf);
        }
        None
    }

    fn on_first_path(&self, path: &[usize]) -> bool {
        match &self.first {
            Some(first) => first.path.len() > path.len() && first.path[..path.len()] == *path,
            None => false,
        }
    }

    fn same_orbit_as_explored(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        if explored.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

fn mapping(from: &[usize], to: &[usize], n: usize) -> Vec<usize> {
    let mut gamma = vec![0; n];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}
