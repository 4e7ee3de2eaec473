//! Brute-force isomorphism for the handful of tiny graphs the builder needs
//! to recognize (at most 5 vertices, so at most 120 permutations).

use itertools::Itertools;

use crate::graph::{Adjacency, Graph, Vertex};

fn degree_profile(g: &Graph) -> Vec<usize> {
    let mut degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees
}

/// The first permutation `p` (lexicographic order) such that `uv` is an edge
/// of `from` iff `p[u]p[v]` is an edge of `to`.
pub fn find_isomorphism(from: &Graph, to: &Graph) -> Option<Vec<Vertex>> {
    let n = from.order();
    if n != to.order()
        || from.edge_count() != to.edge_count()
        || degree_profile(from) != degree_profile(to)
    {
        return None;
    }
    (0..n)
        .permutations(n)
        .find(|p| from.edges().all(|(u, v)| to.has_edge(p[u], p[v])))
}

pub fn is_k4(g: &Graph) -> bool {
    g.order() == 4 && g.is_complete()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_matches_half_graph() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let half = Graph::from_edges(4, [(0, 1), (0, 3), (2, 3)]).unwrap();
        let p = find_isomorphism(&p4, &half).unwrap();
        for (u, v) in p4.edges() {
            assert!(half.has_edge(p[u], p[v]));
        }
    }

    #[test]
    fn non_isomorphic() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(find_isomorphism(&p4, &star), None);
        assert_eq!(find_isomorphism(&p4, &Graph::new(3)), None);
    }

    #[test]
    fn k4_detection() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_k4(&k4));
        let (k3, _) = k4.remove_vertex(0).unwrap();
        assert!(!is_k4(&k3));
    }
}
