use brooks_web::{build_graph, colour, decompose, explain_pair, MAX_VERTICES};

fn proper(edges: &[(usize, usize)], colours: &[usize]) -> bool {
    edges.iter().all(|&(u, v)| colours[u] != colours[v]) && colours.iter().all(|&c| c > 0)
}

#[test]
fn parses_descriptions() {
    assert_eq!(build_graph("petersen", 0).unwrap().n(), 10);
    assert_eq!(build_graph("  theta 2 3 4 ", 0).unwrap().n(), 8);
    assert!(build_graph("", 0).is_err());
    assert!(build_graph("cycle x", 0).is_err());
    assert!(build_graph("cycle", 0).is_err());
    assert!(build_graph("hypercube 3", 0).is_err());
    let too_big = format!("cycle {}", MAX_VERTICES + 1);
    assert!(build_graph(&too_big, 0).unwrap_err().contains("at most"));
}

#[test]
fn colours_within_the_bound() {
    let r = colour("petersen", 0).unwrap();
    assert_eq!(r.colours_used, 3);
    assert_eq!(r.bound, 3);
    assert!(proper(&r.graph.edges, &r.colours));
    assert!(proper(&r.graph.edges, &r.greedy));
    assert!(r.greedy_used <= r.graph.max_degree + 1);

    let r = colour("cycle 7", 0).unwrap();
    assert_eq!(r.colours_used, 3);
    assert_eq!(r.components[0].kind, "OddCycle");

    for seed in 0..20 {
        let r = colour("block-chain 5 6", seed).unwrap();
        assert!(proper(&r.graph.edges, &r.colours));
        assert!(r.colours_used <= r.bound);
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].blocks.len(), 5);
    }
}

#[test]
fn decomposition_of_a_chain() {
    let r = decompose("block-chain 3 4", 2).unwrap();
    assert_eq!(r.blocks.len(), 3);
    assert_eq!(r.cut_vertices.len(), 2);
    let edges: usize = r.blocks.iter().map(|b| b.edges.len()).sum();
    assert_eq!(edges, r.graph.edges.len());
    for cut in &r.cut_vertices {
        let holders = r.blocks.iter().filter(|b| b.vertices.contains(cut)).count();
        assert!(holders >= 2);
    }
}

#[test]
fn pair_is_at_distance_two() {
    for description in ["petersen", "split 6", "theta 2 3 4", "random 30 70"] {
        let r = explain_pair(description, 5).unwrap();
        let adjacent = |u: usize, v: usize| r.graph.edges.contains(&(u.min(v), u.max(v)));
        assert!(!adjacent(r.a, r.b), "{description}");
        assert!(adjacent(r.a, r.v1) && adjacent(r.b, r.v1), "{description}");
        assert!(r.block_vertices.contains(&r.a) && r.block_vertices.contains(&r.b));
    }
    assert_eq!(explain_pair("split 6", 0).unwrap().rule, "SplitSpecial");
}

#[test]
fn no_pair_for_complete_graphs_and_cycles() {
    assert!(explain_pair("complete 6", 0).is_err());
    assert!(explain_pair("cycle 9", 0).is_err());
}
