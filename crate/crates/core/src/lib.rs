//! Exact spectral tools for small simple graphs: canonical forms, integer
//! characteristic polynomials, subgraph counts, cospectral constructions and
//! exhaustive enumeration.

pub mod canon;
pub mod cli;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod named;
pub mod poly;
pub mod spectra;
pub mod sturm;

pub use error::{Error, Result};
pub use graph::Graph;
