//! Hand-checked prime orientations of the small graphs the builder bottoms
//! out on.
//!
//! Two families are stored:
//!
//! * every primarily orientable graph on three or four vertices (the
//!   3-vertex path, the triangle, the 4-cycle, the diamond, the paw and the
//!   4-vertex path);
//! * every connected graph obtained by attaching one vertex to `K_4`, for
//!   each possible attachment degree 1 through 4.
//!
//! Entries are not trusted: [`BaseCaseTable::load`] rejects the table unless
//! each orientation is an orientation of its key graph and is prime.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, OrientedGraph, Vertex};
use crate::iso::find_isomorphism;
use crate::modules::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseFamily {
    /// Primarily orientable graphs with three or four vertices.
    Small,
    /// Connected 5-vertex graphs with a vertex whose removal leaves `K_4`.
    KFourPlusVertex,
}

#[derive(Debug, Clone)]
pub struct BaseCase {
    pub name: &'static str,
    pub family: BaseFamily,
    pub graph: Graph,
    pub orientation: OrientedGraph,
}

#[derive(Debug, Clone)]
pub struct BaseCaseTable {
    entries: Vec<BaseCase>,
}

type RawEntry = (&'static str, BaseFamily, usize, &'static [(Vertex, Vertex)]);

const RAW: &[RawEntry] = &[
    ("path3", BaseFamily::Small, 3, &[(1, 0), (2, 1)]),
    ("triangle", BaseFamily::Small, 3, &[(2, 1), (1, 0), (0, 2)]),
    (
        "cycle4",
        BaseFamily::Small,
        4,
        &[(1, 2), (2, 3), (3, 0), (0, 1)],
    ),
    (
        "diamond",
        BaseFamily::Small,
        4,
        &[(1, 2), (2, 3), (3, 0), (0, 1), (1, 3)],
    ),
    (
        "paw",
        BaseFamily::Small,
        4,
        &[(0, 1), (1, 2), (2, 0), (1, 3)],
    ),
    ("path4", BaseFamily::Small, 4, &[(0, 1), (1, 2), (2, 3)]),
    (
        "k4+pendant",
        BaseFamily::KFourPlusVertex,
        5,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 0), (3, 1), (3, 4)],
    ),
    (
        "k4+degree2",
        BaseFamily::KFourPlusVertex,
        5,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (3, 1),
            (2, 0),
            (3, 4),
            (4, 2),
        ],
    ),
    (
        "k5-edge",
        BaseFamily::KFourPlusVertex,
        5,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (0, 2),
            (1, 3),
            (2, 4),
            (3, 0),
        ],
    ),
    (
        "k5",
        BaseFamily::KFourPlusVertex,
        5,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 2),
            (1, 3),
            (2, 4),
            (3, 0),
            (4, 1),
        ],
    ),
];

impl BaseCaseTable {
    /// Builds the table and validates every entry.
    pub fn load() -> Result<Self> {
        let mut entries = Vec::with_capacity(RAW.len());
        for &(name, family, order, arcs) in RAW {
            let orientation = OrientedGraph::from_arcs(order, arcs.iter().copied())?;
            let graph = orientation.underlying_graph();
            if !orientation.is_orientation_of(&graph) || !is_prime(&orientation) {
                return Err(Error::Internal(format!(
                    "base case {name} is not a prime orientation"
                )));
            }
            if family == BaseFamily::KFourPlusVertex && !attaches_to_k4(&graph) {
                return Err(Error::Internal(format!(
                    "base case {name} is not K4 plus a vertex"
                )));
            }
            entries.push(BaseCase {
                name,
                family,
                graph,
                orientation,
            });
        }
        Ok(BaseCaseTable { entries })
    }

    pub fn entries(&self) -> &[BaseCase] {
        &self.entries
    }

    /// A prime orientation of `g`, transported from the first stored entry
    /// isomorphic to it.
    pub fn lookup(&self, g: &Graph) -> Option<OrientedGraph> {
        self.entries.iter().find_map(|entry| {
            find_isomorphism(&entry.graph, g).map(|perm| entry.orientation.relabel(&perm))
        })
    }
}

fn attaches_to_k4(g: &Graph) -> bool {
    g.is_connected()
        && (0..g.order()).any(|v| {
            g.remove_vertex(v)
                .map(|(rest, _)| crate::iso::is_k4(&rest))
                .unwrap_or(false)
        })
}

/// The validated table, loaded once per process.
pub fn base_cases() -> &'static BaseCaseTable {
    static TABLE: OnceLock<BaseCaseTable> = OnceLock::new();
    TABLE.get_or_init(|| BaseCaseTable::load().expect("built-in base case table is invalid"))
}
