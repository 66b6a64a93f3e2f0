//! Independent oracles shared by the integration and acceptance tests.
//! Nothing here calls the eigensolver, the canonical labeling or the
//! enumerators under test.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub type Q = BigRational;

fn q(x: i128) -> Q {
    BigRational::from_integer(x.into())
}

fn to_f64(x: &Q) -> f64 {
    x.to_f64().expect("finite")
}

/// Polynomial over Q, coefficients from constant term upward, no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<Q>);

impl Poly {
    fn trimmed(mut c: Vec<Q>) -> Poly {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn derivative(&self) -> Poly {
        Poly::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * q(i as i128))
                .collect(),
        )
    }

    fn sub(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let z = q(0);
        Poly::trimmed(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Quotient and remainder.
    fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero());
        let mut r = self.0.clone();
        let dd = d.degree();
        let lead = d.0.last().unwrap().clone();
        if r.len() < d.0.len() {
            return (Poly(vec![]), Poly::trimmed(r));
        }
        let mut quot = vec![q(0); r.len() - dd];
        for k in (0..quot.len()).rev() {
            let f = &r[k + dd] / &lead;
            for (j, c) in d.0.iter().enumerate() {
                r[k + j] -= &f * c;
            }
            quot[k] = f;
        }
        (Poly::trimmed(quot), Poly::trimmed(r))
    }

    fn monic(&self) -> Poly {
        let lead = self.0.last().unwrap().clone();
        Poly(self.0.iter().map(|c| c / &lead).collect())
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divmod(&b).1;
            a = b;
            b = if r.is_zero() { r } else { r.monic() };
        }
        a.monic()
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, c| acc * t + to_f64(c))
    }
}

/// Characteristic polynomial `det(tI − M)` of an integer matrix by the
/// Faddeev–LeVerrier recursion, exact over Q.
pub fn characteristic_polynomial(m: &[Vec<i128>]) -> Poly {
    let n = m.len();
    let mq: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let mut coeffs = vec![q(0); n + 1];
    coeffs[n] = q(1);
    let mut mk = vec![vec![q(0); n]; n];
    let mut c = q(1);
    for k in 1..=n {
        // M_k = M·M_{k−1} + c_{n−k+1} I
        let mut next = vec![vec![q(0); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = q(0);
                for l in 0..n {
                    s += &mq[i][l] * &mk[l][j];
                }
                if i == j {
                    s += &c;
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let mut tr = q(0);
        for i in 0..n {
            for l in 0..n {
                tr += &mq[i][l] * &mk[l][i];
            }
        }
        c = -tr / q(k as i128);
        coeffs[n - k] = c.clone();
    }
    Poly::trimmed(coeffs)
}

/// Yun's square-free factorization: `(factor, multiplicity)` pairs.
pub fn square_free_factors(f: &Poly) -> Vec<(Poly, usize)> {
    let f = f.monic();
    if f.degree() == 0 {
        return vec![];
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.divmod(&a0).0;
    let c = df.divmod(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree() > 0 {
        let a = if d.is_zero() { b.monic() } else { b.gcd(&d) };
        b = b.divmod(&a).0;
        let c = if d.is_zero() { Poly(vec![]) } else { d.divmod(&a).0 };
        d = c.sub(&b.derivative());
        if a.degree() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// All roots of a square-free polynomial with only real roots, ascending.
/// The roots of `p′` split the line into intervals on which `p` is
/// monotone; each interval holds at most one root, found by bisection.
pub fn real_roots(p: &Poly) -> Vec<f64> {
    let deg = p.degree();
    if deg == 0 {
        return vec![];
    }
    let lead = &p.0[deg];
    let bound = 1.0 + p.0[..deg].iter().map(|c| to_f64(&(c / lead)).abs()).fold(0.0, f64::max);
    let mut cuts = vec![-bound];
    cuts.extend(real_roots(&p.derivative()));
    cuts.push(bound);
    let mut roots = Vec::new();
    for w in cuts.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (p.eval(lo), p.eval(hi));
        if flo == 0.0 {
            roots.push(lo);
            continue;
        }
        if flo.signum() == fhi.signum() {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if p.eval(mid).signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    roots
}

/// Eigenvalues of a symmetric integer matrix, descending, with
/// multiplicity.
pub fn integer_matrix_eigenvalues(m: &[Vec<i128>]) -> Vec<f64> {
    let p = characteristic_polynomial(m);
    let mut all = Vec::new();
    for (factor, mult) in square_free_factors(&p) {
        for r in real_roots(&factor) {
            all.extend(std::iter::repeat(r).take(mult));
        }
    }
    all.sort_by(|a, b| b.total_cmp(a));
    all
}

/// `10·A_α(G)` for `α = tenths / 10`, built from an edge list.
pub fn scaled_a_alpha(n: usize, edges: &[(usize, usize)], tenths: i128) -> Vec<Vec<i128>> {
    let mut m = vec![vec![0i128; n]; n];
    for &(u, v) in edges {
        m[u][v] = 10 - tenths;
        m[v][u] = 10 - tenths;
        m[u][u] += tenths;
        m[v][v] += tenths;
    }
    m
}

/// Rooted unlabeled tree counts `r(1..=max)` by the Euler-transform
/// recurrence `r(n+1) = (1/n) Σ_{k=1}^{n} (Σ_{d|k} d·r(d)) r(n−k+1)`.
pub fn rooted_tree_counts(max: usize) -> Vec<u128> {
    let mut r = vec![0u128; max + 1];
    if max >= 1 {
        r[1] = 1;
    }
    for n in 1..max {
        let mut total = 0u128;
        for k in 1..=n {
            let s: u128 = (1..=k).filter(|d| k % d == 0).map(|d| d as u128 * r[d]).sum();
            total += s * r[n - k + 1];
        }
        r[n + 1] = total / n as u128;
    }
    r
}

/// Free tree counts via Otter: `t(n) = r(n) − ½(Σ_{i+j=n} r(i)r(j) − [n even] r(n/2))`.
pub fn free_tree_counts(max: usize) -> Vec<u128> {
    let r = rooted_tree_counts(max);
    (0..=max)
        .map(|n| {
            if n == 0 {
                return 0;
            }
            let pairs: u128 = (1..n).map(|i| r[i] * r[n - i]).sum();
            let diag = if n % 2 == 0 { r[n / 2] } else { 0 };
            r[n] - (pairs - diag) / 2
        })
        .collect()
}

/// Decodes a Prüfer sequence over `0..n` into a labeled tree's edges.
pub fn prufer_tree(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Sorted edge list under the lexicographically smallest relabeling, by
/// brute force over all `n!` permutations. A slow but obviously correct
/// isomorphism invariant for `n ≤ 7`.
pub fn brute_canonical(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        if best.as_ref().map_or(true, |b| e < *b) {
            best = Some(e);
        }
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best.unwrap_or_default()
}

/// Canonical string of a tree: AHU encoding rooted at its center, taking
/// the smaller string when there are two centers.
pub fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| encode(adj, w, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| encode(&adj, c, usize::MAX)).min().unwrap_or_default()
}

/// Non-isomorphic trees of order `n` by decoding all `n^(n−2)` Prüfer
/// sequences and deduplicating by [`tree_code`].
pub fn prufer_tree_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let mut seen = std::collections::HashSet::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        seen.insert(tree_code(n, &prufer_tree(&seq, n)));
        let mut i = 0;
        while i < seq.len() {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            break;
        }
    }
    seen.len()
}

fn poly_mul(a: &[u128], b: &[u128], max: usize) -> Vec<u128> {
    let mut c = vec![0u128; max + 1];
    for (i, &x) in a.iter().enumerate().take(max + 1) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(max + 1 - i) {
            c[i + j] += x * y;
        }
    }
    c
}

fn poly_pow(a: &[u128], e: usize, max: usize) -> Vec<u128> {
    let mut out = vec![0u128; max + 1];
    out[0] = 1;
    for _ in 0..e {
        out = poly_mul(&out, a, max);
    }
    out
}

fn totient(n: usize) -> u128 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u128
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Unicyclic counts by Pólya: a cycle of length `k ≥ 3` of rooted trees
/// up to the dihedral group `D_k`.
pub fn unicyclic_counts(max: usize) -> Vec<u128> {
    let r = rooted_tree_counts(max);
    // R(x^d) truncated at degree max
    let stretched = |d: usize| {
        let mut p = vec![0u128; max + 1];
        for i in 1..=max / d {
            p[i * d] = r[i];
        }
        p
    };
    let mut total = vec![0u128; max + 1];
    for k in 3..=max {
        // 2k·Z(D_k) = Σ_{d|k} φ(d) R_d^{k/d} + k·(reflection terms)
        let mut acc = vec![0u128; max + 1];
        for d in (1..=k).filter(|d| k % d == 0) {
            let term = poly_pow(&stretched(d), k / d, max);
            for (a, t) in acc.iter_mut().zip(&term) {
                *a += totient(d) * t;
            }
        }
        let refl: Vec<u128> = if k % 2 == 1 {
            let t = poly_mul(&stretched(1), &poly_pow(&stretched(2), (k - 1) / 2, max), max);
            t.iter().map(|x| k as u128 * x).collect()
        } else {
            let a = poly_mul(&poly_pow(&stretched(1), 2, max), &poly_pow(&stretched(2), (k - 2) / 2, max), max);
            let b = poly_pow(&stretched(2), k / 2, max);
            a.iter().zip(&b).map(|(x, y)| (k as u128 / 2) * (x + y)).collect()
        };
        for i in 0..=max {
            total[i] += (acc[i] + refl[i]) / (2 * k as u128);
        }
    }
    total
}

/// Graphs on `n` unlabeled vertices by Burnside over `S_n` acting on
/// vertex pairs.
pub fn graph_count(n: usize) -> u128 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sum = 0u128;
    let mut count = 0u128;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    loop {
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for start in 0..pairs.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                let (u, v) = pairs[i];
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                i = pairs.iter().position(|&p| p == (a, b)).unwrap();
            }
        }
        sum += 1u128 << cycles;
        count += 1;
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    sum / count
}

/// Connected counts `c(1..=max)` from total counts by inverting the Euler
/// transform `Σ g(n) xⁿ = Π_k (1 − x^k)^(−c(k))`.
pub fn connected_counts(max: usize) -> Vec<u128> {
    let g: Vec<i128> = (0..=max).map(|n| if n == 0 { 1 } else { graph_count(n) as i128 }).collect();
    let mut c = vec![0i128; max + 1];
    for n in 1..=max {
        // product with c(n) set to zero, coefficient of x^n
        let mut prod = vec![0i128; max + 1];
        prod[0] = 1;
        for k in 1..n {
            for _ in 0..c[k] {
                // multiply by 1/(1 − x^k)
                for i in k..=max {
                    prod[i] += prod[i - k];
                }
            }
        }
        c[n] = g[n] - prod[n];
    }
    c.into_iter().map(|x| x as u128).collect()
}

/// Non-isomorphic graphs of order `n ≤ 6` accepted by `keep`, counted by
/// brute-force relabeling of all `2^C(n,2)` labeled graphs.
pub fn labeled_class_count(n: usize, keep: impl Fn(usize, &[(usize, usize)]) -> bool) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = std::collections::HashSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        if keep(n, &edges) {
            seen.insert(brute_canonical(n, &edges));
        }
    }
    seen.len()
}

/// Connectivity by union-find, for the brute-force counters.
pub fn edges_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts <= 1
}
