//! Undirected graphs, oriented graphs and the module primitives shared by
//! every other part of the crate.
//!
//! Vertices are dense indices `0..n`. Both graph kinds store one bit row per
//! vertex, so adjacency queries are O(1) and set comparisons (module tests,
//! false-twin detection) work a machine word at a time.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// The value of a vertex pair: `0` when non-adjacent, `1` for an edge (or an
/// arc leaving the first vertex), `-1` for an arc entering the first vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum AdjacencyValue {
    Backward = -1,
    None = 0,
    Forward = 1,
}

impl AdjacencyValue {
    pub fn as_i8(self) -> i8 {
        self as i8
    }

    pub fn reversed(self) -> Self {
        match self {
            AdjacencyValue::Backward => AdjacencyValue::Forward,
            AdjacencyValue::None => AdjacencyValue::None,
            AdjacencyValue::Forward => AdjacencyValue::Backward,
        }
    }

    pub fn is_adjacent(self) -> bool {
        self != AdjacencyValue::None
    }
}

/// Common read access to graphs and oriented graphs.
///
/// For a [`Graph`] the out-row and in-row of a vertex are both its
/// neighborhood; for an [`OrientedGraph`] they are the out- and
/// in-neighborhoods.
pub trait Adjacency {
    fn order(&self) -> usize;

    fn out_row(&self, v: Vertex) -> &FixedBitSet;

    fn in_row(&self, v: Vertex) -> &FixedBitSet;

    /// Unchecked adjacency value. Panics if either id is out of range.
    fn value(&self, u: Vertex, v: Vertex) -> AdjacencyValue {
        if self.out_row(u).contains(v) {
            AdjacencyValue::Forward
        } else if self.in_row(u).contains(v) {
            AdjacencyValue::Backward
        } else {
            AdjacencyValue::None
        }
    }

    /// Checked adjacency value of the pair `(u, v)`.
    fn adjacency(&self, u: Vertex, v: Vertex) -> Result<AdjacencyValue> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(self.value(u, v))
    }
}

/// Returns true when `v` sees two members of `set` differently.
pub(crate) fn splits<G: Adjacency + ?Sized>(g: &G, v: Vertex, set: &FixedBitSet) -> bool {
    let out = g.out_row(v);
    let inn = g.in_row(v);
    !(set.is_subset(out) || set.is_subset(inn) || (set.is_disjoint(out) && set.is_disjoint(inn)))
}

pub(crate) fn is_module_set<G: Adjacency + ?Sized>(g: &G, set: &FixedBitSet) -> bool {
    (0..g.order()).all(|v| set.contains(v) || !splits(g, v, set))
}

/// Builds a bitset over `0..order` from a list of ids. Panics on out-of-range ids.
pub(crate) fn to_set(order: usize, vertices: &[Vertex]) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(order);
    for &v in vertices {
        assert!(v < order, "vertex {v} out of range for order {order}");
        set.insert(v);
    }
    set
}

fn check_vertices(order: usize, vertices: &[Vertex]) -> Result<()> {
    match vertices.iter().find(|&&v| v >= order) {
        Some(&vertex) => Err(Error::VertexOutOfRange { vertex, order }),
        None => Ok(()),
    }
}

/// True iff every vertex outside `m` has the same adjacency value toward all
/// of `m`. The empty set, singletons and the whole vertex set are always
/// modules.
///
/// Panics if `m` contains an out-of-range id.
pub fn is_module<G: Adjacency + ?Sized>(g: &G, m: &[Vertex]) -> bool {
    is_module_set(g, &to_set(g.order(), m))
}

/// Correspondence between the vertices of an induced subgraph and the
/// vertices of the graph it was taken from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexMap {
    originals: Vec<Vertex>,
}

impl VertexMap {
    /// The original id of local vertex `v`.
    pub fn to_original(&self, v: Vertex) -> Vertex {
        self.originals[v]
    }

    /// The local id of original vertex `v`, if it was kept.
    pub fn to_local(&self, v: Vertex) -> Option<Vertex> {
        self.originals.binary_search(&v).ok()
    }

    /// Original ids in local order (ascending).
    pub fn originals(&self) -> &[Vertex] {
        &self.originals
    }

    pub fn len(&self) -> usize {
        self.originals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.originals.is_empty()
    }
}

fn sorted_subset(order: usize, vertices: &[Vertex]) -> Result<Vec<Vertex>> {
    check_vertices(order, vertices)?;
    let mut kept = vertices.to_vec();
    kept.sort_unstable();
    kept.dedup();
    Ok(kept)
}

fn complement_of(order: usize, removed: &[Vertex]) -> Result<Vec<Vertex>> {
    check_vertices(order, removed)?;
    let removed = to_set(order, removed);
    Ok((0..order).filter(|v| !removed.contains(*v)).collect())
}

/// A finite simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
            edge_count: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if self.adjacency(u, v)?.is_adjacent() {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// The subgraph induced by `vertices`, with local ids assigned in
    /// ascending order of the original ids.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<(Graph, VertexMap)> {
        let kept = sorted_subset(self.order(), vertices)?;
        let mut sub = Graph::new(kept.len());
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    sub.add_edge(i, j)?;
                }
            }
        }
        Ok((sub, VertexMap { originals: kept }))
    }

    /// `G - X`.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> Result<(Graph, VertexMap)> {
        let kept = complement_of(self.order(), removed)?;
        self.induced_subgraph(&kept)
    }

    /// `G - x`.
    pub fn remove_vertex(&self, x: Vertex) -> Result<(Graph, VertexMap)> {
        self.remove_vertices(&[x])
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut components = Vec::new();
        for root in 0..n {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            let mut component = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for v in self.adj[u].ones() {
                    if !seen.put(v) {
                        component.push(v);
                        stack.push(v);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// Graphs with at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// `|S| >= 2` and no edge inside `S`.
    pub fn is_stable_set(&self, s: &[Vertex]) -> bool {
        let set = to_set(self.order(), s);
        set.count_ones(..) >= 2 && set.ones().all(|v| self.adj[v].is_disjoint(&set))
    }

    /// Neighborhood and degree of a nonempty module.
    pub fn module_neighborhood(&self, m: &[Vertex]) -> Result<ModuleSet> {
        check_vertices(self.order(), m)?;
        if m.is_empty() {
            return Err(Error::EmptyModule);
        }
        let info = ModuleSet::analyze(self, m);
        if !info.is_module {
            return Err(Error::NotAModule);
        }
        Ok(info)
    }
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        self.adj.len()
    }

    fn out_row(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    fn in_row(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// An oriented graph on `0..n`: at most one arc per vertex pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    out: Vec<FixedBitSet>,
    inn: Vec<FixedBitSet>,
    arc_count: usize,
}

impl OrientedGraph {
    pub fn new(n: usize) -> Self {
        OrientedGraph {
            out: vec![FixedBitSet::with_capacity(n); n],
            inn: vec![FixedBitSet::with_capacity(n); n],
            arc_count: 0,
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut o = OrientedGraph::new(n);
        for (u, v) in arcs {
            o.add_arc(u, v)?;
        }
        Ok(o)
    }

    /// Orients every edge of `g` from its lower to its higher endpoint.
    pub fn ascending(g: &Graph) -> Self {
        let mut o = OrientedGraph::new(g.order());
        for (u, v) in g.edges() {
            o.insert_arc(u, v);
        }
        o
    }

    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if self.adjacency(u, v)?.is_adjacent() {
            return Err(Error::DuplicateArc(u, v));
        }
        self.insert_arc(u, v);
        Ok(())
    }

    fn insert_arc(&mut self, u: Vertex, v: Vertex) {
        self.out[u].insert(v);
        self.inn[v].insert(u);
        self.arc_count += 1;
    }

    /// Replaces the arc `u -> v` by `v -> u`.
    pub fn reverse_arc(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if self.adjacency(u, v)? != AdjacencyValue::Forward {
            return Err(Error::Precondition(format!("no arc {u}->{v} to reverse")));
        }
        self.out[u].set(v, false);
        self.inn[v].set(u, false);
        self.out[v].insert(u);
        self.inn[u].insert(v);
        Ok(())
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u].contains(v)
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// Arcs in lexicographic order of `(tail, head)`.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().map(move |v| (u, v)))
    }

    pub fn out_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.out[v].ones()
    }

    pub fn in_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.inn[v].ones()
    }

    pub fn out_set(&self, v: Vertex) -> &FixedBitSet {
        &self.out[v]
    }

    /// The graph obtained by forgetting arc directions.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::new(self.order());
        for (u, v) in self.arcs() {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g.edge_count = self.arc_count;
        g
    }

    /// True iff `self` has exactly one arc per edge of `g` and no other arcs.
    pub fn is_orientation_of(&self, g: &Graph) -> bool {
        self.order() == g.order()
            && (0..g.order()).all(|v| {
                self.out[v].is_disjoint(&self.inn[v])
                    && self.out[v].union_count(&self.inn[v]) == g.degree(v)
                    && self.out[v].is_subset(g.neighbor_set(v))
                    && self.inn[v].is_subset(g.neighbor_set(v))
            })
    }

    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<(OrientedGraph, VertexMap)> {
        let kept = sorted_subset(self.order(), vertices)?;
        let mut sub = OrientedGraph::new(kept.len());
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate() {
                if self.has_arc(u, v) {
                    sub.insert_arc(i, j);
                }
            }
        }
        Ok((sub, VertexMap { originals: kept }))
    }

    pub fn remove_vertices(&self, removed: &[Vertex]) -> Result<(OrientedGraph, VertexMap)> {
        let kept = complement_of(self.order(), removed)?;
        self.induced_subgraph(&kept)
    }

    pub fn remove_vertex(&self, x: Vertex) -> Result<(OrientedGraph, VertexMap)> {
        self.remove_vertices(&[x])
    }

    /// Copies the arcs of `self` into an `order`-vertex oriented graph,
    /// renaming local vertices through `map`.
    pub fn lift(&self, map: &VertexMap, order: usize) -> OrientedGraph {
        let mut lifted = OrientedGraph::new(order);
        for (u, v) in self.arcs() {
            lifted.insert_arc(map.to_original(u), map.to_original(v));
        }
        lifted
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> OrientedGraph {
        let mut relabeled = OrientedGraph::new(self.order());
        for (u, v) in self.arcs() {
            relabeled.insert_arc(perm[u], perm[v]);
        }
        relabeled
    }
}

impl Adjacency for OrientedGraph {
    fn order(&self) -> usize {
        self.out.len()
    }

    fn out_row(&self, v: Vertex) -> &FixedBitSet {
        &self.out[v]
    }

    fn in_row(&self, v: Vertex) -> &FixedBitSet {
        &self.inn[v]
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrientedGraph")
            .field("order", &self.order())
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

/// A vertex subset of a graph together with its module data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSet {
    pub vertices: Vec<Vertex>,
    pub is_module: bool,
    pub is_stable: bool,
    /// Outside vertices adjacent to the whole set. `None` unless the set is
    /// a nonempty module.
    pub neighborhood: Option<Vec<Vertex>>,
    pub degree: usize,
}

impl ModuleSet {
    /// Panics if `m` contains an out-of-range id.
    pub fn analyze(g: &Graph, m: &[Vertex]) -> ModuleSet {
        let set = to_set(g.order(), m);
        let is_module = is_module_set(g, &set);
        let neighborhood = match set.minimum() {
            Some(first) if is_module => Some(
                g.neighbors(first)
                    .filter(|v| !set.contains(*v))
                    .collect::<Vec<_>>(),
            ),
            _ => None,
        };
        ModuleSet {
            vertices: set.ones().collect(),
            is_module,
            is_stable: g.is_stable_set(m),
            degree: neighborhood.as_ref().map_or(0, Vec::len),
            neighborhood,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn star3() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn cycle3() -> OrientedGraph {
        OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn adjacency_values() {
        let half = Graph::from_edges(4, [(0, 1), (0, 3), (2, 3)]).unwrap();
        assert_eq!(half.adjacency(0, 1).unwrap(), AdjacencyValue::Forward);
        assert_eq!(half.adjacency(1, 2).unwrap(), AdjacencyValue::None);
        assert_eq!(cycle3().adjacency(2, 1).unwrap().as_i8(), -1);
        assert_eq!(cycle3().adjacency(1, 2).unwrap().as_i8(), 1);
    }

    #[test]
    fn adjacency_domain_errors() {
        let g = k(3);
        assert_eq!(g.adjacency(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(
            g.adjacency(0, 3),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert!(cycle3().adjacency(5, 0).is_err());
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::from_edges(3, [(2, 2)]), Err(Error::SelfLoop(2)));
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert_eq!(
            OrientedGraph::from_arcs(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateArc(1, 0))
        );
    }

    #[test]
    fn induced_subgraph_of_complete_is_complete() {
        let (sub, map) = k(4).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub, k(3));
        assert_eq!(map.originals(), &[0, 1, 2]);
    }

    #[test]
    fn half_graph_minus_zero() {
        // G_6 edges: 01 03 05 23 25 45
        let g = Graph::from_edges(6, [(0, 1), (0, 3), (0, 5), (2, 3), (2, 5), (4, 5)]).unwrap();
        let (sub, map) = g.remove_vertex(0).unwrap();
        let lifted: Vec<_> = sub
            .edges()
            .map(|(u, v)| (map.to_original(u), map.to_original(v)))
            .collect();
        assert_eq!(lifted, vec![(2, 3), (2, 5), (4, 5)]);
        assert_eq!(map.to_local(3), Some(2));
        assert_eq!(map.to_local(0), None);
    }

    #[test]
    fn induced_subgraph_identity() {
        let g = star3();
        let (sub, map) = g.induced_subgraph(&[3, 2, 1, 0]).unwrap();
        assert_eq!(sub, g);
        assert_eq!(map.originals(), &[0, 1, 2, 3]);
        let (osub, _) = cycle3().induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(osub, cycle3());
    }

    #[test]
    fn induced_subgraph_out_of_range() {
        assert!(k(3).induced_subgraph(&[0, 7]).is_err());
        assert!(cycle3().remove_vertex(3).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(star3().connected_components(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            Graph::new(3).connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(
            two_triangles.connected_components(),
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
        assert!(Graph::new(1).is_connected());
        assert!(Graph::new(0).is_connected());
    }

    #[test]
    fn trivial_modules() {
        let g = star3();
        assert!(is_module(&g, &[]));
        assert!(is_module(&g, &[2]));
        assert!(is_module(&g, &[0, 1, 2, 3]));
        assert!(is_module(&cycle3(), &[1]));
    }

    #[test]
    fn module_checks() {
        assert!(is_module(&star3(), &[1, 2, 3]));
        assert!(!is_module(&star3(), &[0, 1]));
        assert!(!is_module(&cycle3(), &[0, 1]));
        // a tournament: 2 beats both 0 and 1, so {0,1} is a module
        let t = OrientedGraph::from_arcs(3, [(0, 1), (2, 0), (2, 1)]).unwrap();
        assert!(is_module(&t, &[0, 1]));
    }

    #[test]
    fn neighborhoods() {
        let m = star3().module_neighborhood(&[1, 2, 3]).unwrap();
        assert_eq!(m.neighborhood, Some(vec![0]));
        assert_eq!(m.degree, 1);
        assert!(m.is_stable);
        let m = k(5).module_neighborhood(&[0, 1]).unwrap();
        assert_eq!(m.neighborhood, Some(vec![2, 3, 4]));
        assert_eq!(m.degree, 3);
        assert!(!m.is_stable);
    }

    #[test]
    fn neighborhood_preconditions() {
        assert_eq!(star3().module_neighborhood(&[]), Err(Error::EmptyModule));
        assert_eq!(star3().module_neighborhood(&[0, 1]), Err(Error::NotAModule));
        let info = ModuleSet::analyze(&star3(), &[0, 1]);
        assert!(!info.is_module);
        assert_eq!(info.neighborhood, None);
    }

    #[test]
    fn orientation_checks() {
        assert!(cycle3().is_orientation_of(&k(3)));
        assert!(!OrientedGraph::new(3).is_orientation_of(&k(3)));
        assert!(!OrientedGraph::new(4).is_orientation_of(&k(3)));
        let k2_plus = Graph::from_edges(3, [(0, 1)]).unwrap();
        // a double arc cannot be built, so check the pairing rule directly
        assert!(OrientedGraph::from_arcs(3, [(0, 1), (1, 0)]).is_err());
        let wrong = OrientedGraph::from_arcs(3, [(0, 2)]).unwrap();
        assert!(!wrong.is_orientation_of(&k2_plus));
        assert!(OrientedGraph::from_arcs(3, [(1, 0)])
            .unwrap()
            .is_orientation_of(&k2_plus));
    }

    #[test]
    fn stable_sets() {
        assert!(star3().is_stable_set(&[1, 2]));
        assert!(!star3().is_stable_set(&[1]));
        assert!(!k(3).is_stable_set(&[0, 1]));
    }

    #[test]
    fn reverse_and_underlying() {
        let mut o = cycle3();
        o.reverse_arc(0, 1).unwrap();
        assert!(o.has_arc(1, 0));
        assert!(o.reverse_arc(0, 1).is_err());
        assert_eq!(o.underlying_graph(), k(3));
        assert_eq!(o.arcs().collect::<Vec<_>>(), vec![(1, 0), (1, 2), (2, 0)]);
    }
}
