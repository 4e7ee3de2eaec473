//! Seeded instance generators shared by the integration tests.
#![allow(dead_code)]

use primorient::{decide, Adjacency, Graph, OrientedGraph, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// A random spanning tree on shuffled labels plus each other pair with
/// probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut labels: Vec<Vertex> = (0..n).collect();
    labels.shuffle(rng);
    let mut g = Graph::new(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(labels[i], labels[j]).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Appends up to `max_copies` false twins of a few random vertices.
pub fn plant_twins(rng: &mut impl Rng, g: &Graph, max_copies: usize) -> Graph {
    let mut out = g.clone();
    for _ in 0..rng.gen_range(1..=2) {
        let v = rng.gen_range(0..out.order());
        let copies = rng.gen_range(1..=max_copies);
        out = primorient::generators::plant_false_twins(&out, v, copies).unwrap();
    }
    out
}

pub fn random_orientation(rng: &mut impl Rng, g: &Graph) -> OrientedGraph {
    let mut o = OrientedGraph::new(g.order());
    for (u, v) in g.edges() {
        if rng.gen_bool(0.5) {
            o.add_arc(u, v).unwrap();
        } else {
            o.add_arc(v, u).unwrap();
        }
    }
    o
}

/// A connected graph on at most `max_n` vertices that `decide` accepts,
/// with planted twin classes about a third of the time.
pub fn random_positive_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(3..=max_n);
        let p = [0.1, 0.3, 0.5, 0.8][rng.gen_range(0..4)];
        let mut g = random_connected(rng, n, p);
        if rng.gen_bool(0.35) && n + 4 <= max_n {
            g = plant_twins(rng, &g, 3);
        }
        if decide(&g).is_positive() {
            return g;
        }
    }
}

/// A random connected graph without stable duos, found by rejection.
pub fn random_sduo_free_connected(rng: &mut impl Rng, min_n: usize, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let p = rng.gen_range(0.25..0.75);
        let g = random_connected(rng, n, p);
        if primorient::is_sduo_free(&g) {
            return g;
        }
    }
}

/// A graph on `base.order() + extra` vertices whose first `base.order()`
/// vertices induce `base`. Each extra vertex either copies a base vertex's
/// row (optionally joined to it), sees the base uniformly, or is random,
/// so every cell of the outside partition is exercised.
pub fn extend_randomly(rng: &mut impl Rng, base: &Graph, extra: usize) -> Graph {
    let k = base.order();
    let n = k + extra;
    let mut g = Graph::from_edges(n, base.edges()).unwrap();
    for v in k..n {
        match rng.gen_range(0..3) {
            0 => {
                let u = rng.gen_range(0..k);
                for w in base.neighbors(u).collect::<Vec<_>>() {
                    g.add_edge(v, w).unwrap();
                }
                if rng.gen_bool(0.5) {
                    g.add_edge(v, u).unwrap();
                }
            }
            1 => {
                if rng.gen_bool(0.5) {
                    for w in 0..k {
                        g.add_edge(v, w).unwrap();
                    }
                }
            }
            _ => {
                for w in 0..k {
                    if rng.gen_bool(0.5) {
                        g.add_edge(v, w).unwrap();
                    }
                }
            }
        }
        for w in k..v {
            if rng.gen_bool(0.5) {
                g.add_edge(v, w).unwrap();
            }
        }
    }
    g
}

/// A random prime graph on `min_n..=max_n` vertices, found by rejection.
pub fn random_prime_graph(rng: &mut impl Rng, min_n: usize, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let g = random_graph(rng, n, 0.5);
        if primorient::is_prime(&g) {
            return g;
        }
    }
}

/// Primality by scanning every vertex subset; independent of the closure
/// algorithm used by the library.
pub fn prime_by_subsets<G: Adjacency>(g: &G) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    (1u32..(1 << n) - 1).all(|mask| {
        let set: Vec<Vertex> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        set.len() < 2 || !primorient::is_module(g, &set)
    })
}

/// The graph on `n` vertices whose edges are the set bits of `bits` over
/// the lexicographic pair order.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::new(n);
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                g.add_edge(u, v).unwrap();
            }
            i += 1;
        }
    }
    g
}
