//! Explicit pseudo-random graph families, their spectra, and exact
//! desk-scale audits of the quantitative theorems that relate spectral gaps
//! to edge distribution, connectivity, independence and chromatic numbers,
//! cuts, subgraph counts, Hamiltonicity, random subgraphs, and enumeration.
//!
//! Start with the `construct` module to build a graph family, `spectral` to
//! compute eigenvalues, `oracle` for exact ground truth, and `audit` to
//! check every applicable bound at once. The `examples/` directory contains
//! one runnable program per capability.

pub mod audit;
pub mod cli;
pub mod construct;
pub mod field;
pub mod graph;
pub mod io;
pub mod mc;
pub mod oracle;
pub mod rng;
pub mod spectral;
