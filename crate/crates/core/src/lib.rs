//! Minimum edge-cut enumeration, the mincut-graph operator `X(G)`, and
//! tools for studying its iteration on small graphs.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod formats;
pub mod graph;
pub mod iso;
pub mod mincut;
pub mod operator;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Edge, Family, Graph};
pub use iso::{are_isomorphic, canonical_form, CanonicalCode};
pub use mincut::{edge_connectivity, enumerate_mincuts, Cut, MincutFamily};
pub use operator::{iterate, mincut_graph, IterationTrace, Outcome};
