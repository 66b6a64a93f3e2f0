//! `A_α(G) = α·D(G) + (1 − α)·A(G)` and everything computed from its
//! spectrum.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{jacobi, shifted_solve, SymmetricMatrix};
use crate::numfmt::serde_sig;

/// Parameter `α ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Alpha(f64);

impl Alpha {
    pub const ZERO: Alpha = Alpha(0.0);
    pub const HALF: Alpha = Alpha(0.5);
    pub const ONE: Alpha = Alpha(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Alpha(value))
        } else {
            Err(Error::InvalidParameter(format!("alpha must lie in [0, 1], got {value}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_one(self) -> bool {
        self.0 == 1.0
    }

    /// Most results need `α < 1`; this returns an error otherwise.
    pub fn require_below_one(self) -> Result<Self> {
        if self.is_one() {
            Err(Error::Precondition("alpha must be < 1".into()))
        } else {
            Ok(self)
        }
    }

    /// `{0, 0.1, …, 0.9, 0.99}`.
    pub fn default_grid() -> Vec<Alpha> {
        let mut grid: Vec<Alpha> = (0..10).map(|k| Alpha(k as f64 / 10.0)).collect();
        grid.push(Alpha(0.99));
        grid
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(v: f64) -> Result<Self> {
        Alpha::new(v)
    }
}

impl From<Alpha> for f64 {
    fn from(a: Alpha) -> f64 {
        a.0
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
    pub alpha: Alpha,
    /// `λ_1 ≥ … ≥ λ_n`.
    #[serde(serialize_with = "serde_sig::vec::serialize")]
    pub eigenvalues: Vec<f64>,
    #[serde(serialize_with = "serde_sig::serialize")]
    pub rho: f64,
    #[serde(serialize_with = "serde_sig::serialize")]
    pub least: f64,
    /// Positive unit Perron vector, present iff `G` is connected and
    /// `α < 1`.
    #[serde(serialize_with = "serde_sig::opt_vec::serialize")]
    pub perron: Option<Vec<f64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexValues {
    /// `E_α(G) = Σ |λ_i − 2αm/n|`.
    #[serde(serialize_with = "serde_sig::serialize")]
    pub energy: f64,
    /// `EE_α(G) = Σ e^{λ_i}`.
    #[serde(serialize_with = "serde_sig::serialize")]
    pub estrada: f64,
    /// `Z(G) = Σ d_u²`.
    pub zagreb: usize,
}

pub fn a_alpha_matrix(g: &Graph, alpha: Alpha) -> SymmetricMatrix {
    let a = alpha.value();
    let mut m = SymmetricMatrix::zeros(g.n());
    for u in 0..g.n() {
        m.set(u, u, a * g.degree(u) as f64);
    }
    for &(u, v) in g.edges() {
        m.set(u, v, 1.0 - a);
    }
    m
}

/// Laplacian `D − A`.
pub fn laplacian_matrix(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.n());
    for u in 0..g.n() {
        m.set(u, u, g.degree(u) as f64);
    }
    for &(u, v) in g.edges() {
        m.set(u, v, -1.0);
    }
    m
}

fn sort_desc(v: &mut [f64]) {
    v.sort_unstable_by(|a, b| b.total_cmp(a));
}

/// Eigenvalues of `A_α(G)`, non-increasing.
pub fn eigenvalues(g: &Graph, alpha: Alpha) -> Result<Vec<f64>> {
    let mut vals = if alpha.is_one() {
        g.degrees().into_iter().map(|d| d as f64).collect()
    } else {
        jacobi(&a_alpha_matrix(g, alpha), false)?.values
    };
    sort_desc(&mut vals);
    Ok(vals)
}

pub fn spectrum(g: &Graph, alpha: Alpha) -> Result<SpectralSummary> {
    let n = g.n();
    if alpha.is_one() {
        let eigenvalues = eigenvalues(g, alpha)?;
        return Ok(SpectralSummary {
            alpha,
            rho: eigenvalues[0],
            least: eigenvalues[n - 1],
            eigenvalues,
            perron: None,
        });
    }
    let matrix = a_alpha_matrix(g, alpha);
    let eig = jacobi(&matrix, true)?;
    let vectors = eig.vectors.expect("vectors requested");
    let top = (0..n)
        .max_by(|&i, &j| eig.values[i].total_cmp(&eig.values[j]))
        .unwrap();
    let mut eigenvalues = eig.values.clone();
    sort_desc(&mut eigenvalues);
    let rho = eigenvalues[0];
    let perron = if g.is_connected() {
        let start: Vec<f64> = (0..n).map(|i| vectors[i * n + top]).collect();
        Some(refine_perron(&matrix, rho, start))
    } else {
        None
    };
    Ok(SpectralSummary {
        alpha,
        least: eigenvalues[n - 1],
        rho,
        eigenvalues,
        perron,
    })
}

/// Two steps of inverse iteration at `rho` from the Jacobi vector, then
/// unit-normalized with positive sum.
fn refine_perron(matrix: &SymmetricMatrix, rho: f64, mut x: Vec<f64>) -> Vec<f64> {
    let shift = rho + 1e-10 * rho.abs().max(1.0);
    for _ in 0..2 {
        let y = shifted_solve(matrix, shift, &x);
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            break;
        }
        x = y.into_iter().map(|v| v / norm).collect();
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let sign = if x.iter().sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
    x.iter().map(|v| sign * v / norm).collect()
}

/// `ρ_α(G)`, computed as the maximum over components.
pub fn alpha_spectral_radius(g: &Graph, alpha: Alpha) -> Result<f64> {
    if alpha.is_one() {
        return Ok(g.max_degree() as f64);
    }
    let comps = g.components();
    if comps.len() == 1 {
        return Ok(eigenvalues(g, alpha)?[0]);
    }
    let mut best = 0.0f64;
    for comp in comps {
        if comp.len() == 1 {
            continue;
        }
        let sub = induced(g, &comp);
        best = best.max(eigenvalues(&sub, alpha)?[0]);
    }
    Ok(best)
}

fn induced(g: &Graph, vertices: &[usize]) -> Graph {
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
        .map(|&(u, v)| (index[u], index[v]));
    Graph::new(vertices.len(), edges).expect("induced subgraph is valid")
}

pub fn indices_from_eigenvalues(g: &Graph, alpha: Alpha, eigenvalues: &[f64]) -> IndexValues {
    let mean = 2.0 * alpha.value() * g.m() as f64 / g.n() as f64;
    IndexValues {
        energy: eigenvalues.iter().map(|l| (l - mean).abs()).sum(),
        estrada: eigenvalues.iter().map(|l| l.exp()).sum(),
        zagreb: g.zagreb(),
    }
}

pub fn indices(g: &Graph, alpha: Alpha) -> Result<IndexValues> {
    let vals = eigenvalues(g, alpha)?;
    Ok(indices_from_eigenvalues(g, alpha, &vals))
}

/// Largest Laplacian eigenvalue `μ(G)`.
pub fn laplacian_largest(g: &Graph) -> Result<f64> {
    let vals = jacobi(&laplacian_matrix(g), false)?.values;
    Ok(vals.into_iter().fold(f64::NEG_INFINITY, f64::max))
}
