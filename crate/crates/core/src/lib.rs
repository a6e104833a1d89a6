//! Exact sparse-half computations for triangle-free graphs.
//!
//! A *half* of a graph on `n` vertices is a weighting `μ: V → [0, 1]` with
//! total weight `n/2`; its value is `β(G, μ) = n⁻² Σ_{uv ∈ E} μ(u)μ(v)`.
//! This crate computes exact minima of that value on small graphs, evaluates
//! explicit half constructions with certificates, and reproduces the
//! arithmetic behind several bounds on `β(G)` for triangle-free graphs.

pub mod constructions;
pub mod density;
pub mod error;
pub mod exactmath;
pub mod girth5;
pub mod graphcore;
pub mod halves;
pub mod independence;
pub mod report;
pub mod srg;
pub mod verify;

pub use error::{Error, Result};
