//! Exact computation of alliance polynomials of finite simple graphs.
//!
//! The alliance polynomial collects, for every connected vertex subset `S`
//! of a graph of order `n`, one term `x^(n + k_S)` where `k_S` is the exact
//! defensive alliance index of `S`. This crate provides:
//!
//! * a compact bit-set graph representation with family generators,
//!   join/union composition, graph6 and edge-list parsing ([`graph`],
//!   [`graph6`]);
//! * a brute-force enumeration engine computing the polynomial exactly,
//!   optionally in parallel over disjoint subset ranges ([`engine`]);
//! * exact sparse polynomial values with a parity-aware unimodality test
//!   ([`poly`]);
//! * closed-form polynomials for cycles and wheels, including the wheel
//!   coefficient tables and the cyclic-string counting oracle behind them
//!   ([`closed_forms`]);
//! * mechanical verification harnesses: join decomposition, basic
//!   polynomial properties, wheel characterization over exhaustive labeled
//!   corpora, and unimodality sweeps ([`verify`]).

pub mod closed_forms;
pub mod engine;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod verify;

pub use crate::engine::{AllianceIndex, EngineError, EngineOptions, VertexSubset, DEFAULT_CAP};
pub use crate::graph::{Graph, GraphError, GraphFamily, MAX_VERTICES};
pub use crate::poly::{AlliancePolynomial, PolyError, UnimodalityVerdict};
