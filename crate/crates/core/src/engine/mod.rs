//! Brooks colouring in linear time.
//!
//! The graph is split into blocks. Each block is recognised as complete,
//! a cycle, or neither; complete graphs and cycles are coloured directly
//! and every other block is coloured with at most Δ colours from a
//! distance-two pair (see [`find_ab`] and [`sequential_colour`]). The block
//! colourings are then stitched together along the block-cut forest.

mod merge;
mod pair;
mod sequential;

pub use merge::merge_block_colourings;
pub use pair::{find_ab, find_ab_with_rule, ABPair, PairRule};
use pair::pair_for_block;
pub use sequential::sequential_colour;

use crate::colouring::{colour_complete, colour_cycle, ColourError, Colouring};
use crate::connectivity::lowpoint::ComponentStats;
use crate::connectivity::{connected_components, is_biconnected, Lowpoint};
use crate::graph::{Graph, GraphView, Vertex};

/// Shape of a single block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// Includes K1, K2 and K3.
    CompleteGraph,
    EvenCycle,
    OddCycle,
    /// K_{1,1,n-2}, n >= 4, with its two degree-(n-1) hubs in id order.
    SplitSpecial { hubs: (Vertex, Vertex) },
    General,
}

/// Classifies a block, rejecting views that are not blocks.
pub fn classify_block(view: &GraphView<'_>) -> Result<Classification, ColourError> {
    let block = match view.vertex_count() {
        0 => false,
        1 | 2 => connected_components(view).count == 1,
        _ => is_biconnected(view),
    };
    if !block {
        return Err(ColourError::NotABlock);
    }
    Ok(classify_degrees(view))
}

/// Classification from the degree sequence alone; only meaningful for
/// blocks.
pub(crate) fn classify_degrees(view: &GraphView<'_>) -> Classification {
    let n = view.vertex_count();
    let mut hubs = Vec::new();
    let mut twos = 0;
    for v in view.vertices() {
        let d = view.degree(v);
        if d == n - 1 {
            hubs.push(v);
        } else if d == 2 {
            twos += 1;
        }
    }
    if hubs.len() == n {
        Classification::CompleteGraph
    } else if twos == n {
        if n.is_multiple_of(2) {
            Classification::EvenCycle
        } else {
            Classification::OddCycle
        }
    } else if n >= 4 && hubs.len() == 2 && twos == n - 2 {
        Classification::SplitSpecial {
            hubs: (hubs[0], hubs[1]),
        }
    } else {
        Classification::General
    }
}

/// Whole-component shape, which decides the Brooks bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Complete,
    OddCycle,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    /// Lowest vertex id in the component.
    pub first_vertex: Vertex,
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub kind: ComponentKind,
    /// Δ+1 for complete graphs and odd cycles, Δ otherwise.
    pub bound: usize,
    pub blocks: Vec<Classification>,
    pub colours_used: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrooksColouring {
    pub colouring: Colouring,
    /// One entry per connected component, ordered by lowest vertex.
    pub components: Vec<ComponentReport>,
}

fn component_report(stats: &ComponentStats) -> ComponentReport {
    let (s, e, delta) = (stats.vertices, stats.edges, stats.max_degree);
    let kind = if e == s * (s - 1) / 2 {
        ComponentKind::Complete
    } else if s >= 3 && s % 2 == 1 && e == s && delta == 2 {
        ComponentKind::OddCycle
    } else {
        ComponentKind::Other
    };
    let bound = match kind {
        ComponentKind::Complete | ComponentKind::OddCycle => delta + 1,
        ComponentKind::Other => delta,
    };
    ComponentReport {
        first_vertex: stats.root,
        vertices: s,
        edges: e,
        max_degree: delta,
        kind,
        bound,
        blocks: Vec::new(),
        colours_used: 0,
    }
}

/// Colours needed by a Brooks colouring: the maximum over connected
/// components of Δ+1 (complete graphs, odd cycles) or Δ (everything else).
/// 0 for the empty graph.
pub fn brooks_bound(g: &Graph) -> usize {
    Lowpoint::new(&g.view())
        .components
        .iter()
        .map(|c| component_report(c).bound)
        .max()
        .unwrap_or(0)
}

/// Reusable buffers for [`colour_block`].
struct Scratch {
    /// Local id of each discovery time in the current block.
    rank: Vec<u32>,
    edges: Vec<(Vertex, Vertex)>,
}

/// Colours block `id` of `search` on its own. Local vertex 0 is the block's
/// top and the rest follow in discovery order, so the local graph keeps the
/// locality of the search.
fn colour_block(search: &Lowpoint, id: usize, scratch: &mut Scratch) -> (Colouring, Classification) {
    let size = search.size(id);
    if size <= 2 {
        let colours = (1..=size).collect();
        return (Colouring::from_vec(colours), Classification::CompleteGraph);
    }
    let rank = &mut scratch.rank;
    rank[search.blocks[id].top_disc as usize] = 0;
    for (i, &d) in search.member_discs(id).iter().enumerate() {
        rank[d as usize] = i as u32 + 1;
    }
    scratch.edges.clear();
    scratch.edges.extend(
        search
            .edges(id)
            .iter()
            .map(|&(a, b)| (rank[a as usize] as usize, rank[b as usize] as usize)),
    );
    let local = Graph::new(size, &scratch.edges).expect("block edges form a simple graph");
    let view = local.view();
    let class = classify_degrees(&view);
    let colouring = match class {
        Classification::CompleteGraph => colour_complete(&view),
        Classification::EvenCycle | Classification::OddCycle => colour_cycle(&view),
        Classification::SplitSpecial { .. } | Classification::General => {
            pair_for_block(&view, class).and_then(|(pair, _)| sequential_colour(&view, pair))
        }
    }
    .expect("classification matches the block");
    (colouring, class)
}

/// Brooks colouring of `g` in `O(n + m)` time.
///
/// Every connected component that is neither complete nor an odd cycle is
/// coloured with at most Δ of its colours; the others with Δ+1.
pub fn brooks_colour(g: &Graph) -> BrooksColouring {
    let search = Lowpoint::with_edges(&g.view());
    let mut components: Vec<ComponentReport> =
        search.components.iter().map(component_report).collect();
    let mut colours = vec![0; g.n()];
    let mut scratch = Scratch {
        rank: vec![0; g.n()],
        edges: Vec::new(),
    };

    // Blocks in pre-order of the block-cut forest: the top of each block
    // is already coloured unless the block is the first one at its root.
    // A transposition of two colours then makes the block agree with it.
    for id in search.key_order() {
        let (local, class) = colour_block(&search, id, &mut scratch);
        let local = local.as_slice();
        let top = search.blocks[id].top;
        let (alpha, beta) = match colours[top] {
            0 => (local[0], local[0]),
            c => (c, local[0]),
        };
        colours[top] = alpha;
        let swap = |c: usize| {
            if c == beta {
                alpha
            } else if c == alpha {
                beta
            } else {
                c
            }
        };
        let report = &mut components[search.blocks[id].component];
        let mut used = alpha;
        for (&x, &c) in search.members(id).iter().zip(&local[1..]) {
            let c = swap(c);
            colours[x] = c;
            used = used.max(c);
        }
        report.colours_used = report.colours_used.max(used);
        report.blocks.push(class);
    }

    BrooksColouring {
        colouring: Colouring::from_vec(colours),
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{chromatic_number_bruteforce, verify_colouring};
    use crate::testgraphs::*;

    #[test]
    fn classify_examples() {
        assert_eq!(classify_block(&cycle(5).view()), Ok(Classification::OddCycle));
        assert_eq!(classify_block(&cycle(6).view()), Ok(Classification::EvenCycle));
        assert_eq!(classify_block(&complete(4).view()), Ok(Classification::CompleteGraph));
        assert_eq!(classify_block(&complete(3).view()), Ok(Classification::CompleteGraph));
        assert_eq!(classify_block(&complete(2).view()), Ok(Classification::CompleteGraph));
        assert_eq!(classify_block(&complete(1).view()), Ok(Classification::CompleteGraph));
        assert_eq!(
            classify_block(&split(5).view()),
            Ok(Classification::SplitSpecial { hubs: (0, 1) })
        );
        assert_eq!(classify_block(&petersen().view()), Ok(Classification::General));
        assert_eq!(classify_block(&c6_chord().view()), Ok(Classification::General));
    }

    #[test]
    fn classify_rejects_non_blocks() {
        assert_eq!(classify_block(&path(3).view()), Err(ColourError::NotABlock));
        assert_eq!(classify_block(&bowtie().view()), Err(ColourError::NotABlock));
        assert_eq!(classify_block(&Graph::empty(2).view()), Err(ColourError::NotABlock));
        assert_eq!(classify_block(&Graph::empty(0).view()), Err(ColourError::NotABlock));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(brooks_bound(&complete(4)), 4);
        assert_eq!(brooks_bound(&cycle(7)), 3);
        assert_eq!(brooks_bound(&cycle(6)), 2);
        assert_eq!(brooks_bound(&graph(4, &[(0, 1), (2, 3)])), 2);
        assert_eq!(brooks_bound(&Graph::empty(0)), 0);
        assert_eq!(brooks_bound(&Graph::empty(3)), 1);
        assert_eq!(brooks_bound(&petersen()), 3);
        assert_eq!(brooks_bound(&bowtie()), 4);
    }

    fn colour_and_check(g: &Graph) -> usize {
        let out = brooks_colour(g);
        let bound = brooks_bound(g);
        assert!(verify_colouring(g, &out.colouring, Some(bound)).is_empty());
        out.colouring.num_colours()
    }

    #[test]
    fn spot_values() {
        assert_eq!(colour_and_check(&cycle(5)), 3);
        assert_eq!(colour_and_check(&complete(5)), 5);
        assert_eq!(colour_and_check(&petersen()), 3);
        assert_eq!(chromatic_number_bruteforce(&petersen()), Ok(3));
        assert!(colour_and_check(&bowtie()) <= 3);
        assert!(colour_and_check(&split(5)) <= 4);
        assert_eq!(colour_and_check(&Graph::empty(0)), 0);
        assert_eq!(colour_and_check(&Graph::empty(3)), 1);
    }

    #[test]
    fn report_per_component() {
        // K3 plus a path 3-4-5.
        let g = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]);
        let out = brooks_colour(&g);
        assert_eq!(out.components.len(), 2);
        let tri = &out.components[0];
        assert_eq!(tri.kind, ComponentKind::Complete);
        assert_eq!((tri.bound, tri.colours_used), (3, 3));
        assert_eq!(tri.blocks, vec![Classification::CompleteGraph]);
        let p = &out.components[1];
        assert_eq!((p.first_vertex, p.vertices, p.edges), (3, 3, 2));
        assert_eq!(p.kind, ComponentKind::Other);
        assert_eq!((p.bound, p.colours_used), (2, 2));
        assert_eq!(p.blocks.len(), 2);
    }

    #[test]
    fn deterministic() {
        let g = c6_chord();
        assert_eq!(brooks_colour(&g), brooks_colour(&g));
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::colouring::greedy_colour;
    use crate::oracle::{chromatic_number_bruteforce, verify_colouring};
    use crate::testgraphs::arb_graph;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn brooks_colour_is_within_bound((n, edges) in arb_graph(8)) {
            let g = Graph::new(n, &edges).unwrap();
            let out = brooks_colour(&g);
            let bound = brooks_bound(&g);
            prop_assert!(verify_colouring(&g, &out.colouring, Some(bound)).is_empty());
            let chi = chromatic_number_bruteforce(&g).unwrap();
            prop_assert!(chi <= out.colouring.num_colours());
        }

        #[test]
        fn greedy_within_delta_plus_one(
            (n, edges) in arb_graph(10),
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let g = Graph::new(n, &edges).unwrap();
            let mut perm: Vec<_> = (0..n).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let c = greedy_colour(&g, &perm).unwrap();
            prop_assert!(verify_colouring(&g, &c, Some(g.max_degree() + 1)).is_empty());
        }

        #[test]
        fn find_ab_postconditions((n, edges) in arb_graph(9)) {
            let g = Graph::new(n, &edges).unwrap();
            let view = g.view();
            if let Ok(pair) = find_ab(&view) {
                prop_assert!(pair.a != pair.b && !g.has_edge(pair.a, pair.b));
                prop_assert!(g.has_edge(pair.v1, pair.a) && g.has_edge(pair.v1, pair.b));
                prop_assert_eq!(connected_components(&view.without(&[pair.a, pair.b])).count, 1);
                let c = sequential_colour(&view, pair).unwrap();
                prop_assert_eq!((c.get(pair.a), c.get(pair.b)), (1, 1));
                prop_assert!(verify_colouring(&g, &c, Some(g.max_degree())).is_empty());
            } else {
                let applicable = is_biconnected(&view) && matches!(
                    classify_degrees(&view),
                    Classification::General | Classification::SplitSpecial { .. }
                );
                prop_assert!(!applicable);
            }
        }
    }
}
