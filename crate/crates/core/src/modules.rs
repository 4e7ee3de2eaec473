//! Stable duos, stable modules, primality and the classification of the
//! vertices outside a prime subgraph.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{splits, to_set, Adjacency, Graph, Vertex};
use crate::union_find::UnionFind;

/// All stable duos (false-twin pairs) `(x, y)` with `x < y`, in
/// lexicographic order.
///
/// Two vertices with identical neighborhoods are never adjacent to each
/// other, so equal neighbor rows is the whole test.
pub fn sduos(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let n = g.order();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if g.neighbor_set(x) == g.neighbor_set(y) {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

pub fn is_sduo_free(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|x| (x + 1..n).all(|y| g.neighbor_set(x) != g.neighbor_set(y)))
}

/// The maximal stable modules: false-twin classes with at least two members,
/// each sorted, ordered by smallest member. Every stable module of `g` is
/// contained in exactly one of them.
pub fn maximal_smodules(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut uf = UnionFind::new(g.order());
    for (x, y) in sduos(g) {
        uf.union(x, y);
    }
    uf.classes(2)
}

/// Smallest module of `g[universe]` containing `seed`, as a subset of
/// `universe`.
fn closure_within<G: Adjacency + ?Sized>(
    g: &G,
    universe: &FixedBitSet,
    seed: (Vertex, Vertex),
) -> FixedBitSet {
    let mut module = FixedBitSet::with_capacity(g.order());
    module.insert(seed.0);
    module.insert(seed.1);
    loop {
        let mut grew = false;
        for v in universe.ones() {
            if !module.contains(v) && splits(g, v, &module) {
                module.insert(v);
                grew = true;
            }
        }
        if !grew {
            return module;
        }
    }
}

/// The inclusion-minimal module containing both seed vertices, obtained by
/// adding splitters until none is left. Sorted.
///
/// Panics if the seed vertices coincide or are out of range.
pub fn minimal_module_containing<G: Adjacency + ?Sized>(
    g: &G,
    seed: (Vertex, Vertex),
) -> Vec<Vertex> {
    assert_ne!(seed.0, seed.1, "seed must be two distinct vertices");
    assert!(seed.0.max(seed.1) < g.order(), "seed vertex out of range");
    let mut universe = FixedBitSet::with_capacity(g.order());
    universe.insert_range(..);
    closure_within(g, &universe, seed).ones().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalityReport {
    pub prime: bool,
    /// A nontrivial module, present exactly when the graph is decomposable
    /// with at least three vertices.
    pub witness: Option<Vec<Vertex>>,
}

fn primality_within<G: Adjacency + ?Sized>(g: &G, universe: &FixedBitSet) -> PrimalityReport {
    let members: Vec<Vertex> = universe.ones().collect();
    let size = members.len();
    if size < 3 {
        return PrimalityReport {
            prime: false,
            witness: None,
        };
    }
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            let module = closure_within(g, universe, (a, b));
            if module.count_ones(..) < size {
                return PrimalityReport {
                    prime: false,
                    witness: Some(module.ones().collect()),
                };
            }
        }
    }
    PrimalityReport {
        prime: true,
        witness: None,
    }
}

/// Prime means at least three vertices and only trivial modules. The
/// witness is the first nontrivial closure in lexicographic seed order.
pub fn primality<G: Adjacency + ?Sized>(g: &G) -> PrimalityReport {
    let mut universe = FixedBitSet::with_capacity(g.order());
    universe.insert_range(..);
    primality_within(g, &universe)
}

pub fn is_prime<G: Adjacency + ?Sized>(g: &G) -> bool {
    primality(g).prime
}

/// Where an outside vertex falls relative to a prime base set `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    /// `G[X + v]` is prime.
    Ext,
    /// `X` is a module of `G[X + v]`.
    Hom,
    /// `{u, v}` is a module of `G[X + v]`.
    Attached(Vertex),
}

/// The partition of the vertices outside a prime base set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutsidePartition {
    pub base: Vec<Vertex>,
    pub ext: Vec<Vertex>,
    pub hom: Vec<Vertex>,
    /// One entry per base vertex, possibly empty.
    pub attached: BTreeMap<Vertex, Vec<Vertex>>,
}

impl OutsidePartition {
    pub fn cell_of(&self, v: Vertex) -> Option<Cell> {
        if self.ext.contains(&v) {
            return Some(Cell::Ext);
        }
        if self.hom.contains(&v) {
            return Some(Cell::Hom);
        }
        self.attached
            .iter()
            .find(|(_, cell)| cell.contains(&v))
            .map(|(&u, _)| Cell::Attached(u))
    }
}

/// Classifies every vertex outside `base` by testing each defining
/// condition directly. Fails unless `g[base]` is prime.
pub fn outside_partition<G: Adjacency + ?Sized>(
    g: &G,
    base: &[Vertex],
) -> Result<OutsidePartition> {
    let n = g.order();
    if let Some(&vertex) = base.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex, order: n });
    }
    let base_set = to_set(n, base);
    if !primality_within(g, &base_set).prime {
        return Err(Error::Precondition(
            "base set does not induce a prime subgraph".into(),
        ));
    }

    let mut partition = OutsidePartition {
        base: base_set.ones().collect(),
        ext: Vec::new(),
        hom: Vec::new(),
        attached: base_set.ones().map(|u| (u, Vec::new())).collect(),
    };
    for v in (0..n).filter(|v| !base_set.contains(*v)) {
        let mut cells = Vec::new();
        if !splits(g, v, &base_set) {
            cells.push(Cell::Hom);
        }
        for u in base_set.ones() {
            let mut duo = FixedBitSet::with_capacity(n);
            duo.insert(u);
            duo.insert(v);
            if base_set.ones().all(|w| w == u || !splits(g, w, &duo)) {
                cells.push(Cell::Attached(u));
            }
        }
        let mut extended = base_set.clone();
        extended.insert(v);
        if primality_within(g, &extended).prime {
            cells.push(Cell::Ext);
        }
        match cells.as_slice() {
            [Cell::Ext] => partition.ext.push(v),
            [Cell::Hom] => partition.hom.push(v),
            [Cell::Attached(u)] => partition.attached.get_mut(u).unwrap().push(v),
            _ => {
                return Err(Error::Internal(format!(
                    "vertex {v} falls in {} cells of the outside partition",
                    cells.len()
                )))
            }
        }
    }
    Ok(partition)
}

/// Smallest vertex `v` such that `g - v` is connected with at most one
/// stable duo. Requires `g` connected, sduo-free, with at least two
/// vertices; such a vertex then always exists.
pub fn select_removal_vertex(g: &Graph) -> Result<Vertex> {
    if g.order() < 2 {
        return Err(Error::Precondition("need at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    if !is_sduo_free(g) {
        return Err(Error::Precondition("graph has a stable duo".into()));
    }
    for v in 0..g.order() {
        let (rest, _) = g.remove_vertex(v)?;
        if rest.is_connected() && sduos(&rest).len() <= 1 {
            return Ok(v);
        }
    }
    Err(Error::Internal(
        "no vertex leaves a connected remainder with at most one stable duo".into(),
    ))
}
