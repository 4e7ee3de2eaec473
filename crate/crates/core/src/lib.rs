//! Prime orientations of graphs.
//!
//! A graph is *primarily orientable* when its edges can be oriented so that
//! the resulting oriented graph has no nontrivial module. This crate decides
//! that property ([`decide`]), constructs such an orientation when it exists
//! ([`build`]), and checks both against an exhaustive oracle ([`oracle`]).
//!
//! ```
//! use primorient::{build, decide, generators, is_prime};
//!
//! let k5 = generators::complete(5).unwrap();
//! assert!(decide(&k5).is_positive());
//! let tournament = build(&k5).unwrap();
//! assert!(tournament.is_orientation_of(&k5) && is_prime(&tournament));
//! ```

pub mod base_cases;
pub mod builder;
pub mod decision;
pub mod error;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod modules;
pub mod oracle;
mod union_find;

pub use builder::{build, build_sduo_free, build_with, extend_over_smodule, BuildOptions};
pub use decision::{certify, decide, Decision, Reason, Verdict};
pub use error::{Error, Result};
pub use graph::{
    is_module, Adjacency, AdjacencyValue, Graph, ModuleSet, OrientedGraph, Vertex, VertexMap,
};
pub use modules::{
    is_prime, is_sduo_free, maximal_smodules, minimal_module_containing, outside_partition,
    primality, sduos, select_removal_vertex, Cell, OutsidePartition, PrimalityReport,
};
