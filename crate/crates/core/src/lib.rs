//! Alpha-spectral radius toolkit.
//!
//! `A_α(G) = α·D(G) + (1 − α)·A(G)` interpolates between the adjacency
//! matrix (α = 0) and the degree matrix (α = 1); at α = 1/2 it is half the
//! signless Laplacian. This crate builds the matrix, solves its full
//! spectrum, evaluates closed-form bounds on its largest eigenvalue, and
//! checks extremal statements about it by exhaustive search over small
//! graphs.
//!
//! Module map:
//!
//! * [`graph`]: immutable simple graphs, structural profile, diameter,
//!   domination number, vertex connectivity.
//! * [`canon`]: canonical labeling for isomorphism-free enumeration.
//! * [`graph6`]: the graph6 interchange format.
//! * [`generators`]: named families and graph surgeries.
//! * [`enumerate`]: isomorphism-free streams of trees, unicyclic and
//!   connected graphs.
//! * [`spectral`]: the `A_α` matrix, spectra, Perron vectors, energy and
//!   Estrada indices.
//! * [`bounds`]: closed-form bounds and the cubic for `S_n + e`.
//! * [`verify`]: exhaustive verification producing [`TheoremReport`]s.

pub mod bounds;
pub mod canon;
pub mod enumerate;
mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod linalg;
pub mod numfmt;
pub mod spectral;
pub mod verify;

pub use bounds::{BoundEvaluation, BoundId, CubicH, Direction, ExtremalFamily};
pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use enumerate::{enumerate, enumerate_labeled, EnumerationQuery, GraphClass, GraphStream};
pub use error::{Error, Result};
pub use graph::{Diameter, Graph, GraphKind, StructuralProfile};
pub use spectral::{Alpha, IndexValues, SpectralSummary};
pub use verify::{TheoremId, TheoremReport, VerifyConfig};
