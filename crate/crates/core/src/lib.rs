//! Exact total domination polynomials of graphs.
//!
//! A set `D` of vertices is *total dominating* when every vertex, members of
//! `D` included, has a neighbour in `D`. The total domination polynomial
//! `D_t(G, x) = Σ d_t(G, i) x^i` counts such sets by size. This crate
//! computes it exactly (two independent ways), provides closed forms for the
//! usual graph families, locates its roots, and runs instance-level checks
//! of the known results and conjectures about those roots.

pub mod closed_forms;
pub mod corpus;
pub mod edgelist;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod polynomial;
pub mod roots;
pub mod verify;

pub use enumeration::{CountTable, EnumerationConfig};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use polynomial::Polynomial;
pub use roots::RootSet;
pub use verify::CheckReport;
