//! The characterization of primarily orientable graphs.
//!
//! A graph with at least three vertices, other than `K_4`, has a prime
//! orientation exactly when it is connected and every stable module `S`
//! satisfies `2^d(S) >= |S|`, where `d(S)` is the size of its neighborhood.
//! It suffices to check the maximal stable modules: every stable module
//! inside a false-twin class has the same neighborhood as the class.

use std::fmt;

use crate::error::Result;
use crate::graph::{is_module, Adjacency, Graph, OrientedGraph, Vertex};
use crate::iso::is_k4;
use crate::modules::{is_prime, maximal_smodules};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    PrimarilyOrientable,
    NotPrimarilyOrientable,
}

/// Why a graph has no prime orientation. Every variant can be re-checked
/// against the graph with [`Reason::holds_for`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    TooSmall {
        order: usize,
    },
    IsK4,
    /// `component` is a connected component other than the whole graph.
    Disconnected {
        component: Vec<Vertex>,
    },
    SmoduleDegreeViolation {
        smodule: Vec<Vertex>,
        degree: usize,
    },
}

/// `2^degree < size`, in integers.
pub fn violates_degree_bound(degree: usize, size: usize) -> bool {
    degree < 63 && (1u64 << degree) < size as u64
}

impl Reason {
    pub fn holds_for(&self, g: &Graph) -> bool {
        match self {
            Reason::TooSmall { order } => *order == g.order() && *order < 3,
            Reason::IsK4 => is_k4(g),
            Reason::Disconnected { component } => {
                !component.is_empty()
                    && component.len() < g.order()
                    && component.iter().all(|&v| v < g.order())
                    && g.connected_components().contains(component)
            }
            Reason::SmoduleDegreeViolation { smodule, degree } => {
                smodule.iter().all(|&v| v < g.order())
                    && g.is_stable_set(smodule)
                    && is_module(g, smodule)
                    && g.module_neighborhood(smodule).map(|m| m.degree).ok() == Some(*degree)
                    && violates_degree_bound(*degree, smodule.len())
            }
        }
    }
}

fn fmt_set(f: &mut fmt::Formatter<'_>, set: &[Vertex]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, v) in set.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::TooSmall { order } => write!(f, "fewer than 3 vertices (n = {order})"),
            Reason::IsK4 => write!(f, "graph is K4"),
            Reason::Disconnected { component } => {
                write!(f, "graph is disconnected, component ")?;
                fmt_set(f, component)
            }
            Reason::SmoduleDegreeViolation { smodule, degree } => {
                write!(f, "violating s-module ")?;
                fmt_set(f, smodule)?;
                write!(f, ", degree {degree} < log2({})", smodule.len())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    /// `orientation` is filled in by [`crate::certify`]; [`decide`] leaves
    /// it empty.
    PrimarilyOrientable {
        orientation: Option<OrientedGraph>,
    },
    NotPrimarilyOrientable(Reason),
}

impl Decision {
    pub fn verdict(&self) -> Verdict {
        match self {
            Decision::PrimarilyOrientable { .. } => Verdict::PrimarilyOrientable,
            Decision::NotPrimarilyOrientable(_) => Verdict::NotPrimarilyOrientable,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.verdict() == Verdict::PrimarilyOrientable
    }

    pub fn reason(&self) -> Option<&Reason> {
        match self {
            Decision::NotPrimarilyOrientable(reason) => Some(reason),
            Decision::PrimarilyOrientable { .. } => None,
        }
    }

    pub fn orientation(&self) -> Option<&OrientedGraph> {
        match self {
            Decision::PrimarilyOrientable { orientation } => orientation.as_ref(),
            Decision::NotPrimarilyOrientable(_) => None,
        }
    }

    /// Re-checks the certificate: the reason must hold, or the orientation
    /// must be a prime orientation of `g`. A positive decision without an
    /// orientation has nothing to check and is accepted.
    pub fn is_certified_for(&self, g: &Graph) -> bool {
        match self {
            Decision::NotPrimarilyOrientable(reason) => reason.holds_for(g),
            Decision::PrimarilyOrientable { orientation: None } => true,
            Decision::PrimarilyOrientable {
                orientation: Some(o),
            } => o.is_orientation_of(g) && is_prime(o),
        }
    }
}

/// The verdict for `g`, without constructing an orientation. Conditions are
/// tested in order: size, `K_4`, connectivity, stable-module degrees.
pub fn decide(g: &Graph) -> Decision {
    let n = g.order();
    if n < 3 {
        return Decision::NotPrimarilyOrientable(Reason::TooSmall { order: n });
    }
    if is_k4(g) {
        return Decision::NotPrimarilyOrientable(Reason::IsK4);
    }
    let components = g.connected_components();
    if components.len() > 1 {
        return Decision::NotPrimarilyOrientable(Reason::Disconnected {
            component: components.into_iter().next().unwrap_or_default(),
        });
    }
    for class in maximal_smodules(g) {
        let degree = g.neighbors(class[0]).count();
        if violates_degree_bound(degree, class.len()) {
            return Decision::NotPrimarilyOrientable(Reason::SmoduleDegreeViolation {
                smodule: class,
                degree,
            });
        }
    }
    Decision::PrimarilyOrientable { orientation: None }
}

/// [`decide`], plus a constructed prime orientation in the positive case.
pub fn certify(g: &Graph) -> Result<Decision> {
    match decide(g) {
        Decision::PrimarilyOrientable { .. } => Ok(Decision::PrimarilyOrientable {
            orientation: Some(crate::builder::build(g)?),
        }),
        negative => Ok(negative),
    }
}
