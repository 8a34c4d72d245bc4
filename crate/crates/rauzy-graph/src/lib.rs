//! Rauzy graphs of a word: vertices are the length-k factors, edges the
//! length-(k+1) factors (each edge joins its prefix to its suffix). The
//! shape machinery tracks how the unique in-/out-forks of a minimal-growth
//! word evolve as k grows.

mod error;
mod evolve;
mod graph;
mod profile;
mod scc;
mod shape;

pub use error::GraphError;
pub use evolve::{evolution_trace, TraceRow};
pub use graph::{build_rauzy, follower, RauzyEdge, RauzyGraph};
pub use profile::{follower_profile, predecessor_profile, ForkTriple, PredecessorRule};
pub use scc::{strong_components, tarjan_scc, SccReport};
pub use shape::{classify_shape, ForkProfile};
