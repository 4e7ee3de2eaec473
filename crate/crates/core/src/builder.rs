//! Construction of prime orientations.
//!
//! The builder is inductive. Graphs with stable duos lose one vertex of a
//! largest stable module at a time; the removed vertex is put back with an
//! out-set, inside the module's neighborhood, that no remaining module member
//! uses. Once the graph is sduo-free, vertices are peeled off one at a time
//! with [`select_removal_vertex`] and re-attached case by case. Recursion
//! ends at the hand-checked table in [`crate::base_cases`].
//!
//! Every branch returns through [`certified`]: a result that is not a prime
//! orientation of its input is reported as [`Error::Internal`].
//!
//! Choices left open by the construction (which vertex, which arc, which
//! out-set) are always the smallest index or the first in counter order, so
//! equal inputs give equal outputs.

use std::cmp::Reverse;
use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::base_cases::base_cases;
use crate::decision::{decide, violates_degree_bound, Decision};
use crate::error::{Error, Result};
use crate::graph::{splits, Adjacency, AdjacencyValue, Graph, OrientedGraph, Vertex, VertexMap};
use crate::iso::is_k4;
use crate::modules::{
    is_prime, is_sduo_free, maximal_smodules, outside_partition, sduos, select_removal_vertex, Cell,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Return the ascending orientation immediately when the input graph is
    /// itself prime. Every orientation of a prime graph is prime, so this
    /// only skips work; turning it off forces the inductive construction.
    pub prime_shortcut: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            prime_shortcut: true,
        }
    }
}

/// A prime orientation of `g`. Fails with [`Error::Precondition`] when `g`
/// is not primarily orientable.
pub fn build(g: &Graph) -> Result<OrientedGraph> {
    build_with(g, BuildOptions::default())
}

pub fn build_with(g: &Graph, options: BuildOptions) -> Result<OrientedGraph> {
    if let Decision::NotPrimarilyOrientable(reason) = decide(g) {
        return Err(Error::Precondition(format!(
            "graph is not primarily orientable: {reason}"
        )));
    }
    Builder { options }.build(g)
}

/// A prime orientation of a connected sduo-free graph with at least three
/// vertices other than `K_4`.
pub fn build_sduo_free(g: &Graph) -> Result<OrientedGraph> {
    build_sduo_free_with(g, BuildOptions::default())
}

pub fn build_sduo_free_with(g: &Graph, options: BuildOptions) -> Result<OrientedGraph> {
    check_sduo_free_input(g).map_err(Error::Precondition)?;
    Builder { options }.sduo_free(g)
}

/// Extends a prime orientation `o` of `g - x` to one of `g`, where `x`
/// belongs to the maximal stable module `smodule` of `g`.
///
/// `o` uses the vertex numbering of [`Graph::remove_vertex`]: ids of `g`
/// above `x` shift down by one. The out-set of `x` is the first subset of
/// the module neighborhood, in counter order over the sorted neighborhood
/// (bit `i` set means an arc toward the `i`-th neighbor), that no other
/// module member has as its out-set.
pub fn extend_over_smodule(
    g: &Graph,
    smodule: &[Vertex],
    x: Vertex,
    o: &OrientedGraph,
) -> Result<OrientedGraph> {
    let mut sorted = smodule.to_vec();
    sorted.sort_unstable();
    if !maximal_smodules(g).contains(&sorted) {
        return Err(Error::Precondition(
            "vertex set is not a maximal stable module".into(),
        ));
    }
    if !sorted.contains(&x) {
        return Err(Error::Precondition(format!(
            "vertex {x} is not in the stable module"
        )));
    }
    let degree = g.degree(x);
    if violates_degree_bound(degree, sorted.len()) {
        return Err(Error::Precondition(format!(
            "stable module of size {} has degree {degree}",
            sorted.len()
        )));
    }
    let (rest, map) = g.remove_vertex(x)?;
    if !o.is_orientation_of(&rest) || !is_prime(o) {
        return Err(Error::Precondition(
            "not a prime orientation of the graph minus the vertex".into(),
        ));
    }
    extend_unchecked(g, &sorted, x, o, &map)
}

fn extend_unchecked(
    g: &Graph,
    smodule: &[Vertex],
    x: Vertex,
    o: &OrientedGraph,
    map: &VertexMap,
) -> Result<OrientedGraph> {
    let n = g.order();
    let neighborhood: Vec<Vertex> = g.neighbors(x).collect();
    let mut lifted = o.lift(map, n);

    let out_set_of = |v: Vertex| -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(neighborhood.len());
        for (i, &w) in neighborhood.iter().enumerate() {
            bits.set(i, lifted.has_arc(v, w));
        }
        bits
    };
    let used: HashSet<FixedBitSet> = smodule
        .iter()
        .filter(|&&v| v != x)
        .map(|&v| out_set_of(v))
        .collect();

    // at most |smodule| - 1 out-sets are used, so the counter stops by then
    let free = (0..=used.len() as u64)
        .take_while(|&c| neighborhood.len() >= 64 || c >> neighborhood.len() == 0)
        .map(|c| {
            let mut bits = FixedBitSet::with_capacity(neighborhood.len());
            for i in 0..neighborhood.len().min(64) {
                bits.set(i, (c >> i) & 1 == 1);
            }
            bits
        })
        .find(|candidate| !used.contains(candidate))
        .ok_or_else(|| Error::Internal("every out-set is taken by a module member".into()))?;

    for (i, &w) in neighborhood.iter().enumerate() {
        if free.contains(i) {
            lifted.add_arc(x, w)?;
        } else {
            lifted.add_arc(w, x)?;
        }
    }
    certified(g, lifted, "stable module extension")
}

fn certified(g: &Graph, o: OrientedGraph, step: &str) -> Result<OrientedGraph> {
    if o.is_orientation_of(g) && is_prime(&o) {
        Ok(o)
    } else {
        Err(Error::Internal(format!(
            "{step} produced a non-prime orientation of {g:?}"
        )))
    }
}

fn check_sduo_free_input(g: &Graph) -> std::result::Result<(), String> {
    if g.order() < 3 {
        return Err("need at least three vertices".into());
    }
    if is_k4(g) {
        return Err("graph is K4".into());
    }
    if !g.is_connected() {
        return Err("graph is not connected".into());
    }
    if !is_sduo_free(g) {
        return Err("graph has a stable duo".into());
    }
    Ok(())
}

fn table_orientation(g: &Graph, step: &str) -> Result<OrientedGraph> {
    let o = base_cases()
        .lookup(g)
        .ok_or_else(|| Error::Internal(format!("{step}: no base case matches {g:?}")))?;
    certified(g, o, step)
}

/// Orients the edge `xy` so that `x` relates to `y` as given.
fn orient_edge(o: &mut OrientedGraph, x: Vertex, y: Vertex, value: AdjacencyValue) -> Result<()> {
    match value {
        AdjacencyValue::Forward => o.add_arc(x, y),
        AdjacencyValue::Backward => o.add_arc(y, x),
        AdjacencyValue::None => Err(Error::Internal(format!("edge {x}-{y} left unoriented"))),
    }
}

fn orient_ascending(o: &mut OrientedGraph, x: Vertex, y: Vertex) -> Result<()> {
    o.add_arc(x.min(y), x.max(y))
}

struct Builder {
    options: BuildOptions,
}

impl Builder {
    fn build(&self, g: &Graph) -> Result<OrientedGraph> {
        if self.options.prime_shortcut && is_prime(g) {
            return certified(g, OrientedGraph::ascending(g), "prime graph");
        }
        if g.order() <= 4 {
            return table_orientation(g, "small graph");
        }
        if is_sduo_free(g) {
            return self.sduo_free(g);
        }

        let classes = maximal_smodules(g);
        let smodule = classes
            .iter()
            .max_by_key(|class| (class.len(), Reverse(class[0])))
            .ok_or_else(|| Error::Internal("graph with a stable duo has no class".into()))?;
        let x = smodule[0];
        let (rest, map) = g.remove_vertex(x)?;
        if is_k4(&rest) {
            return table_orientation(g, "K4 plus a twin");
        }
        if !rest.is_connected() || !decide(&rest).is_positive() {
            return Err(Error::Internal(format!(
                "removing {x} from a largest stable module broke the orientability conditions"
            )));
        }
        let o = self.build(&rest)?;
        extend_unchecked(g, smodule, x, &o, &map)
    }

    fn sduo_free(&self, g: &Graph) -> Result<OrientedGraph> {
        let n = g.order();
        if n <= 4 {
            return table_orientation(g, "small sduo-free graph");
        }
        if self.options.prime_shortcut && is_prime(g) {
            return certified(g, OrientedGraph::ascending(g), "prime graph");
        }

        let x = select_removal_vertex(g)?;
        let (rest, rest_map) = g.remove_vertex(x)?;
        match sduos(&rest).as_slice() {
            [] => self.attach_to_sduo_free(g, x, &rest, &rest_map),
            [(a, b)] => {
                let (a, b) = (rest_map.to_original(*a), rest_map.to_original(*b));
                let (s, s_prime) = match (g.has_edge(x, a), g.has_edge(x, b)) {
                    (false, true) => (a, b),
                    (true, false) => (b, a),
                    _ => {
                        return Err(Error::Internal(format!(
                            "{x} does not separate the stable duo {{{a},{b}}}"
                        )))
                    }
                };
                self.split_single_duo(g, x, s, s_prime, &rest, &rest_map)
            }
            _ => Err(Error::Internal(format!(
                "removal vertex {x} leaves more than one stable duo"
            ))),
        }
    }

    /// `g - x` is sduo-free.
    fn attach_to_sduo_free(
        &self,
        g: &Graph,
        x: Vertex,
        rest: &Graph,
        rest_map: &VertexMap,
    ) -> Result<OrientedGraph> {
        let n = g.order();
        if is_k4(rest) {
            return table_orientation(g, "K4 plus a vertex");
        }
        let base = self.sduo_free(rest)?.lift(rest_map, n);
        let neighbors: Vec<Vertex> = g.neighbors(x).collect();
        let others: Vec<Vertex> = (0..n).filter(|&v| v != x).collect();

        if neighbors.len() == n - 1 {
            // Counter over the arcs at x: bit i set means neighbors[i] -> x.
            // At most 2n candidates leave x in a module, so this stops early.
            let mut other_set = FixedBitSet::with_capacity(n);
            for &v in &others {
                other_set.insert(v);
            }
            let mut counter: u64 = 0;
            while neighbors.len() >= 64 || counter >> neighbors.len() == 0 {
                let mut candidate = base.clone();
                for (i, &y) in neighbors.iter().enumerate() {
                    if i < 64 && (counter >> i) & 1 == 1 {
                        candidate.add_arc(y, x)?;
                    } else {
                        candidate.add_arc(x, y)?;
                    }
                }
                if extends_primality(&candidate, x, &other_set) && is_prime(&candidate) {
                    return certified(g, candidate, "dominating vertex");
                }
                counter += 1;
            }
            return Err(Error::Internal(
                "no orientation of the dominating vertex's edges is prime".into(),
            ));
        }

        let mut o = base;
        for &y in &neighbors {
            o.add_arc(x, y)?;
        }
        if is_prime(&o) {
            return certified(g, o, "out-star attachment");
        }
        let partition = outside_partition(&o, &others)?;
        let u = match partition.cell_of(x) {
            Some(Cell::Attached(u)) => u,
            other => {
                return Err(Error::Internal(format!(
                    "decomposable attachment of {x} classified as {other:?}"
                )))
            }
        };
        let y = neighbors
            .iter()
            .copied()
            .find(|&y| y != u)
            .ok_or_else(|| Error::Internal(format!("{x} has no neighbor besides {u}")))?;
        o.reverse_arc(x, y)?;
        certified(g, o, "reversed attachment")
    }

    /// `g - x` has exactly one stable duo `{s, s'}`, with `x` adjacent to
    /// `s'` and not to `s`.
    fn split_single_duo(
        &self,
        g: &Graph,
        x: Vertex,
        s: Vertex,
        s_prime: Vertex,
        rest: &Graph,
        rest_map: &VertexMap,
    ) -> Result<OrientedGraph> {
        let n = g.order();
        let (core, core_map) = g.remove_vertices(&[x, s])?;
        let outside = |v: &Vertex| *v != x && *v != s && *v != s_prime;

        if is_k4(&core) {
            let mut q = table_orientation(rest, "K5 minus an edge")?.lift(rest_map, n);
            let alpha = (0..n)
                .find(outside)
                .ok_or_else(|| Error::Internal("no vertex outside the duo".into()))?;
            for y in g.neighbors(x).collect::<Vec<_>>() {
                if y == alpha {
                    let value = q.value(s_prime, alpha).reversed();
                    orient_edge(&mut q, x, alpha, value)?;
                } else {
                    orient_ascending(&mut q, x, y)?;
                }
            }
            return certified(g, q, "duo split over K4");
        }

        if !core.is_connected() || !is_sduo_free(&core) {
            return Err(Error::Internal(format!(
                "removing {x} and {s} broke connectivity or created a stable duo"
            )));
        }
        let mut o = self.sduo_free(&core)?.lift(&core_map, n);
        for u in g.neighbors(s).collect::<Vec<_>>() {
            if outside(&u) {
                let value = o.value(u, s_prime);
                orient_edge(&mut o, u, s, value)?;
            }
        }
        let v = g
            .neighbors(s)
            .find(outside)
            .ok_or_else(|| Error::Internal(format!("{s} has no neighbor outside the duo")))?;
        for y in g.neighbors(x).collect::<Vec<_>>() {
            if y == v {
                let value = o.value(v, s_prime).reversed();
                orient_edge(&mut o, v, x, value)?;
            } else {
                orient_ascending(&mut o, x, y)?;
            }
        }
        certified(g, o, "duo split")
    }
}

/// With `others` inducing a prime subgraph, `candidate` is prime iff `x`
/// neither leaves `others` a module nor forms a duo with one of its members.
fn extends_primality(candidate: &OrientedGraph, x: Vertex, others: &FixedBitSet) -> bool {
    if !splits(candidate, x, others) {
        return false;
    }
    others.ones().all(|u| {
        let mut duo = FixedBitSet::with_capacity(candidate.order());
        duo.insert(u);
        duo.insert(x);
        others.ones().any(|w| w != u && splits(candidate, w, &duo))
    })
}
