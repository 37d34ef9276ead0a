//! Small fixed graphs and proptest strategies shared by the unit tests.

use proptest::prelude::*;

use crate::generate;
use crate::graph::{Graph, Vertex};

pub fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::new(n, edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    graph(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    generate::cycle(n).unwrap()
}

pub fn complete(n: usize) -> Graph {
    generate::complete(n).unwrap()
}

/// K_{1,1,n-2} with hubs 0 and 1.
pub fn split(n: usize) -> Graph {
    generate::split(n).unwrap()
}

pub fn petersen() -> Graph {
    generate::petersen()
}

/// Triangles {0,1,2} and {2,3,4} sharing vertex 2.
pub fn bowtie() -> Graph {
    graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
}

/// C6 plus the chord 0-3.
pub fn c6_chord() -> Graph {
    graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
}

/// `(n, edges)` for a uniformly random simple graph on at most `max_n`
/// vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(Vertex, Vertex)>)> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs
                .iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(&e, _)| e)
                .collect();
            (n, edges)
        })
    })
}
