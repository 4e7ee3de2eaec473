//! Exhaustive ground truth for the decision procedure.
//!
//! The oracle knows nothing about stable modules or connectivity: it
//! enumerates orientations and tests each one for primality.

use std::time::{Duration, Instant};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::builder::build;
use crate::decision::{decide, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, OrientedGraph, Vertex};
use crate::modules::is_prime;

/// Largest order accepted by [`sweep_all_graphs`].
pub const MAX_SWEEP_ORDER: usize = 6;
/// Largest order accepted by [`sample_sweep`].
pub const MAX_SAMPLE_ORDER: usize = 8;
/// Orientations tried per graph in [`sample_sweep`] before giving up.
pub const SAMPLE_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Found { witness: OrientedGraph, tried: u64 },
    NoneExists { tried: u64 },
    Exhausted { tried: u64 },
}

impl OracleOutcome {
    pub fn tried(&self) -> u64 {
        match self {
            OracleOutcome::Found { tried, .. }
            | OracleOutcome::NoneExists { tried }
            | OracleOutcome::Exhausted { tried } => *tried,
        }
    }
}

/// The orientation selected by `counter` over the edges of `g` in
/// lexicographic order: bit `i` clear orients the `i`-th edge from its lower
/// endpoint to its higher one, bit `i` set the other way round.
pub fn orientation_from_counter(
    edges: &[(Vertex, Vertex)],
    order: usize,
    counter: u64,
) -> OrientedGraph {
    let mut o = OrientedGraph::new(order);
    for (i, &(u, v)) in edges.iter().enumerate() {
        let reversed = i < 64 && (counter >> i) & 1 == 1;
        let (tail, head) = if reversed { (v, u) } else { (u, v) };
        o.add_arc(tail, head).expect("edges of a simple graph");
    }
    o
}

/// Searches the orientations of `g` in counter order for a prime one.
/// `budget` caps the number of orientations tried.
pub fn exists_prime_orientation(g: &Graph, budget: Option<u64>) -> OracleOutcome {
    let edges: Vec<_> = g.edges().collect();
    let total = 1u64.checked_shl(edges.len() as u32).unwrap_or(u64::MAX);
    let limit = budget.map_or(total, |b| b.min(total));
    for counter in 0..limit {
        let o = orientation_from_counter(&edges, g.order(), counter);
        if is_prime(&o) {
            return OracleOutcome::Found {
                witness: o,
                tried: counter + 1,
            };
        }
    }
    if limit == total && edges.len() < 64 {
        OracleOutcome::NoneExists { tried: total }
    } else {
        OracleOutcome::Exhausted { tried: limit }
    }
}

/// The labeled graph on `n` vertices whose edge set is given by the bits of
/// `index`, bit `i` standing for the `i`-th vertex pair in lexicographic
/// order.
pub fn graph_from_index(n: usize, index: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = pairs
        .enumerate()
        .filter(|&(i, _)| i < 64 && (index >> i) & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    /// The decision procedure and the oracle disagree.
    Verdict {
        decided: Verdict,
        oracle_found: bool,
    },
    /// The decision is positive but the builder failed.
    Build(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub index: u64,
    pub graph: Graph,
    pub mismatch: Mismatch,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub n: usize,
    pub graphs_checked: u64,
    /// Graphs whose oracle search hit its budget; not compared.
    pub inconclusive: u64,
    pub disagreements: Vec<Disagreement>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }

    fn empty(n: usize) -> Self {
        SweepReport {
            n,
            graphs_checked: 0,
            inconclusive: 0,
            disagreements: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }
}

impl PartialEq for SweepReport {
    /// Ignores `elapsed`.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.graphs_checked == other.graphs_checked
            && self.inconclusive == other.inconclusive
            && self.disagreements == other.disagreements
    }
}

enum Check {
    Agree,
    Inconclusive,
    Disagree(Mismatch),
}

fn check_graph(g: &Graph, budget: Option<u64>) -> Check {
    let decided = decide(g).verdict();
    let oracle_found = match exists_prime_orientation(g, budget) {
        OracleOutcome::Found { .. } => true,
        OracleOutcome::NoneExists { .. } => false,
        OracleOutcome::Exhausted { .. } => return Check::Inconclusive,
    };
    if oracle_found != (decided == Verdict::PrimarilyOrientable) {
        return Check::Disagree(Mismatch::Verdict {
            decided,
            oracle_found,
        });
    }
    if oracle_found {
        match build(g) {
            Ok(o) if o.is_orientation_of(g) && is_prime(&o) => {}
            Ok(_) => return Check::Disagree(Mismatch::Build("uncertified output".into())),
            Err(e) => return Check::Disagree(Mismatch::Build(e.to_string())),
        }
    }
    Check::Agree
}

fn run_sweep(n: usize, indices: Vec<u64>, budget: Option<u64>) -> SweepReport {
    let start = Instant::now();
    let results: Vec<(u64, Check)> = indices
        .into_par_iter()
        .map(|index| (index, check_graph(&graph_from_index(n, index), budget)))
        .collect();
    let mut report = SweepReport::empty(n);
    for (index, check) in results {
        report.graphs_checked += 1;
        match check {
            Check::Agree => {}
            Check::Inconclusive => report.inconclusive += 1,
            Check::Disagree(mismatch) => report.disagreements.push(Disagreement {
                index,
                graph: graph_from_index(n, index),
                mismatch,
            }),
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Compares [`decide`] with the oracle on all `2^(n(n-1)/2)` labeled graphs
/// on `n` vertices. Positive graphs are also run through the builder.
pub fn sweep_all_graphs(n: usize) -> Result<SweepReport> {
    if n > MAX_SWEEP_ORDER {
        return Err(Error::InvalidParameter(format!(
            "exhaustive sweeps support n <= {MAX_SWEEP_ORDER}, got {n}"
        )));
    }
    let total = 1u64 << (n * n.saturating_sub(1) / 2);
    Ok(run_sweep(n, (0..total).collect(), None))
}

/// Same comparison over `count` uniformly random labeled graphs. Graph `k`
/// is `graph_from_index(n, r_k mod 2^m)` where `r_k` is the `k`-th `u64` of
/// `ChaCha8Rng::seed_from_u64(seed)` and `m = n(n-1)/2`.
pub fn sample_sweep(n: usize, count: usize, seed: u64) -> Result<SweepReport> {
    if n > MAX_SAMPLE_ORDER {
        return Err(Error::InvalidParameter(format!(
            "sampled sweeps support n <= {MAX_SAMPLE_ORDER}, got {n}"
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mask = (1u64 << pairs) - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let indices = (0..count).map(|_| rng.next_u64() & mask).collect();
    Ok(run_sweep(n, indices, Some(SAMPLE_BUDGET)))
}
