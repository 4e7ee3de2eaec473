//! Named graph families.
//!
//! The random family draws from a ChaCha8 stream seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`: one `f64` in `[0, 1)` per vertex pair,
//! pairs visited in lexicographic order, edge present iff the draw is below
//! `p`. Both the stream and the `f64` conversion are fixed, portable
//! algorithms, so a seed reproduces the same graph on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, Vertex};

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Complete { n: usize },
    Star { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    HalfGraph { n: usize },
    ErdosRenyi { n: usize, p: f64, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::Star { n } => star(n),
            FamilySpec::Path { n } => path(n),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::HalfGraph { n } => half_graph(n),
            FamilySpec::ErdosRenyi { n, p, seed } => erdos_renyi(n, p, seed),
        }
    }
}

fn at_least(name: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!(
            "{name} needs n >= {min}, got {n}"
        )));
    }
    Ok(())
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", n, 1)?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,n}`: center `0` joined to `1..=n`.
pub fn star(n: usize) -> Result<Graph> {
    at_least("star", n, 1)?;
    Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The half graph on `0..2n`: `2i` is joined to `2j + 1` whenever `i <= j`.
pub fn half_graph(n: usize) -> Result<Graph> {
    at_least("half graph", n, 1)?;
    Graph::from_edges(
        2 * n,
        (0..n).flat_map(|i| (i..n).map(move |j| (2 * i, 2 * j + 1))),
    )
}

pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    at_least("erdos_renyi", n, 1)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Appends `copies` new vertices, each a false twin of `v`.
pub fn plant_false_twins(g: &Graph, v: Vertex, copies: usize) -> Result<Graph> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let n = g.order();
    let mut out = Graph::from_edges(n + copies, g.edges())?;
    for copy in n..n + copies {
        for w in g.neighbors(v) {
            out.add_edge(copy, w)?;
        }
    }
    Ok(out)
}
