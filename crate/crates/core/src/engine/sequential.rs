//! Δ-colouring from a distance-two pair.
//!
//! `a` and `b` both get colour 1. The rest of the graph is ordered by DFS
//! pre-order from `v1` (so every vertex but `v1` has an earlier neighbour)
//! and coloured greedily in reverse. Each vertex other than `v1` still has
//! an uncoloured neighbour when its turn comes, so it sees at most Δ-1
//! colours; `v1` sees `a` and `b` with the same colour.

use crate::colouring::{ColourError, Colouring, FreeColour};
use crate::connectivity::dfs_preorder;
use crate::graph::GraphView;

use super::ABPair;

pub fn sequential_colour(view: &GraphView<'_>, pair: ABPair) -> Result<Colouring, ColourError> {
    let ABPair { a, b, v1 } = pair;
    if ![a, b, v1].into_iter().all(|v| view.contains(v)) {
        return Err(ColourError::InvalidPair("vertex not in graph"));
    }
    if a == b || view.has_edge(a, b) {
        return Err(ColourError::InvalidPair("a and b must be distinct and non-adjacent"));
    }
    if !view.has_edge(v1, a) || !view.has_edge(v1, b) {
        return Err(ColourError::InvalidPair("v1 must be adjacent to a and b"));
    }
    let rest = view.without(&[a, b]);
    let order = dfs_preorder(&rest, v1);
    if order.len() != rest.vertex_count() {
        return Err(ColourError::InvalidPair("removing a and b disconnects the graph"));
    }

    let max_degree = view.max_degree();
    let mut colouring = Colouring::uncoloured(view.graph().n());
    colouring.set(a, 1);
    colouring.set(b, 1);
    let mut free = FreeColour::new(max_degree);
    for &v in order.iter().rev() {
        let c = free.pick(view.neighbours(v).map(|w| colouring.get(w)));
        colouring.set(v, c);
    }
    debug_assert!(colouring.num_colours() <= max_degree);
    Ok(colouring)
}
