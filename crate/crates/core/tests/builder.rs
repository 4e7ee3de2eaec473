mod common;

use primorient::generators::{complete, half_graph, path, plant_false_twins, star};
use primorient::oracle::{orientation_from_counter, OracleOutcome};
use primorient::{
    build, build_sduo_free, build_with, certify, decide, extend_over_smodule, is_prime,
    maximal_smodules, BuildOptions, Error, Graph, OrientedGraph,
};

fn no_shortcut() -> BuildOptions {
    BuildOptions {
        prime_shortcut: false,
    }
}

fn assert_certified(g: &Graph, o: &OrientedGraph) {
    assert!(o.is_orientation_of(g), "not an orientation of {g:?}");
    assert!(is_prime(o), "not prime: {o:?}");
}

#[test]
fn complete_graphs_get_prime_tournaments() {
    for n in 5..=9 {
        let g = complete(n).unwrap();
        let o = build(&g).unwrap();
        assert_eq!(o.arc_count(), n * (n - 1) / 2);
        assert_certified(&g, &o);
    }
}

#[test]
fn triangle_is_oriented_cyclically() {
    let o = build(&complete(3).unwrap()).unwrap();
    for v in 0..3 {
        assert_eq!(o.out_neighbors(v).count(), 1);
    }
}

#[test]
fn prime_graphs_take_the_ascending_orientation() {
    let g = half_graph(3).unwrap();
    assert_eq!(build(&g).unwrap(), OrientedGraph::ascending(&g));
    let o = build_with(&g, no_shortcut()).unwrap();
    assert_certified(&g, &o);
}

#[test]
fn sduo_free_builds() {
    let p4 = path(4).unwrap();
    assert_certified(&p4, &build_sduo_free(&p4).unwrap());
    // K4 plus a pendant vertex
    let mut k4_pendant = Graph::from_edges(5, complete(4).unwrap().edges()).unwrap();
    k4_pendant.add_edge(3, 4).unwrap();
    assert_certified(&k4_pendant, &build_sduo_free(&k4_pendant).unwrap());
    assert!(matches!(
        build_sduo_free(&complete(4).unwrap()),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        build_sduo_free(&star(3).unwrap()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn k5_minus_an_edge_goes_through_the_twin_branch() {
    // the missing edge makes 3 and 4 false twins, so this graph is not
    // sduo-free and is handled by removing a twin
    let mut g = Graph::new(5);
    for (u, v) in complete(5).unwrap().edges() {
        if (u, v) != (3, 4) {
            g.add_edge(u, v).unwrap();
        }
    }
    assert_eq!(maximal_smodules(&g), vec![vec![3, 4]]);
    assert!(build_sduo_free(&g).is_err());
    assert_certified(&g, &build_with(&g, no_shortcut()).unwrap());
}

#[test]
fn negative_graphs_are_rejected() {
    for g in [
        complete(4).unwrap(),
        star(3).unwrap(),
        Graph::new(5),
        path(2).unwrap(),
    ] {
        assert!(matches!(build(&g), Err(Error::Precondition(_))));
    }
}

/// `{3, 4}` are false twins over `{0, 1, 2}`; `g - 4` is a paw.
fn twin_instance() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)]).unwrap()
}

#[test]
fn extension_picks_the_first_unused_out_set() {
    let g = twin_instance();
    assert_eq!(maximal_smodules(&g), vec![vec![3, 4]]);
    let (rest, _) = g.remove_vertex(4).unwrap();
    let edges: Vec<_> = rest.edges().collect();
    let o = (0..1u64 << edges.len())
        .map(|c| orientation_from_counter(&edges, 4, c))
        .find(|o| is_prime(o) && o.has_arc(3, 0) && o.has_arc(1, 3) && o.has_arc(2, 3))
        .expect("paw has such an orientation");
    let extended = extend_over_smodule(&g, &[3, 4], 4, &o).unwrap();
    assert_certified(&g, &extended);
    // the out-set of 3 is {0}, so the empty set is still free
    assert_eq!(extended.out_neighbors(4).count(), 0);
    for y in 0..3 {
        assert!(extended.has_arc(y, 4));
    }
}

#[test]
fn extension_checks_its_inputs() {
    let g = twin_instance();
    let (rest, _) = g.remove_vertex(4).unwrap();
    let o = build(&rest).unwrap();
    assert!(matches!(
        extend_over_smodule(&g, &[3], 4, &o),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        extend_over_smodule(&g, &[3, 4], 0, &o),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn twin_classes_get_distinct_out_sets() {
    let mut rng = common::rng(11);
    for _ in 0..100 {
        let g = common::random_positive_graph(&mut rng, 14);
        let o = build(&g).unwrap();
        for class in maximal_smodules(&g) {
            let mut outs: Vec<Vec<usize>> = class
                .iter()
                .map(|&v| o.out_neighbors(v).collect())
                .collect();
            outs.sort();
            outs.dedup();
            assert_eq!(outs.len(), class.len());
        }
    }
}

#[test]
fn random_positive_graphs_build_with_and_without_shortcut() {
    let mut rng = common::rng(5);
    for _ in 0..150 {
        let g = common::random_positive_graph(&mut rng, 16);
        assert_certified(&g, &build(&g).unwrap());
        assert_certified(&g, &build_with(&g, no_shortcut()).unwrap());
    }
}

#[test]
fn planted_twins_extend() {
    let base = half_graph(3).unwrap();
    let g = plant_false_twins(&base, 0, 3).unwrap();
    // vertex 0 has degree 3, so a class of four twins fits
    assert!(decide(&g).is_positive());
    assert_certified(&g, &build(&g).unwrap());
    let too_many = plant_false_twins(&base, 4, 2).unwrap();
    // vertex 4 has degree 1, three twins are too many
    assert!(!decide(&too_many).is_positive());
}

#[test]
fn builds_are_deterministic() {
    let mut rng = common::rng(21);
    for _ in 0..30 {
        let g = common::random_positive_graph(&mut rng, 14);
        assert_eq!(build(&g).unwrap(), build(&g).unwrap());
    }
}

#[test]
fn certified_decisions_agree_with_oracle_on_small_graphs() {
    let mut rng = common::rng(3);
    for _ in 0..60 {
        let n = 3 + (rand::Rng::gen_range(&mut rng, 0..4));
        let g = common::random_graph(&mut rng, n, 0.6);
        let decision = certify(&g).unwrap();
        let found = matches!(
            primorient::oracle::exists_prime_orientation(&g, None),
            OracleOutcome::Found { .. }
        );
        assert_eq!(decision.is_positive(), found, "{g:?}");
        if found {
            assert!(decision.is_certified_for(&g));
        }
    }
}
