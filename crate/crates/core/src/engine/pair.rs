//! Finding two vertices at distance two whose removal keeps a biconnected
//! graph connected.

use crate::colouring::ColourError;
use crate::connectivity::{is_biconnected, Lowpoint};
use crate::graph::{GraphView, Vertex};

use super::{classify_degrees, Classification};

/// `a` and `b` are non-adjacent, `v1` is adjacent to both, and removing
/// `a` and `b` leaves the graph connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ABPair {
    pub a: Vertex,
    pub b: Vertex,
    pub v1: Vertex,
}

/// Which construction produced an [`ABPair`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairRule {
    /// K_{1,1,n-2}: two degree-2 vertices, joined through a hub.
    SplitSpecial,
    /// `view - x` is biconnected: `x` and a vertex at distance two from it.
    StillBiconnected,
    /// `view - x` has cut vertices: a neighbour of `x` in each of two end
    /// blocks, joined through `x`.
    EndBlocks,
}

pub fn find_ab(view: &GraphView<'_>) -> Result<ABPair, ColourError> {
    find_ab_with_rule(view).map(|(pair, _)| pair)
}

/// [`find_ab`] together with the rule that produced the pair.
pub fn find_ab_with_rule(view: &GraphView<'_>) -> Result<(ABPair, PairRule), ColourError> {
    if !is_biconnected(view) {
        return Err(ColourError::PreconditionViolated);
    }
    pair_for_block(view, classify_degrees(view))
}

/// The pair for a view already known to be a block of class `class`.
pub(crate) fn pair_for_block(
    view: &GraphView<'_>,
    class: Classification,
) -> Result<(ABPair, PairRule), ColourError> {
    match class {
        Classification::CompleteGraph
        | Classification::EvenCycle
        | Classification::OddCycle => Err(ColourError::PreconditionViolated),
        Classification::SplitSpecial { hubs } => {
            let mut low = view.vertices().filter(|&v| view.degree(v) == 2);
            let (a, b) = (low.next().unwrap(), low.next().unwrap());
            Ok((ABPair { a, b, v1: hubs.0 }, PairRule::SplitSpecial))
        }
        Classification::General => general_pair(view),
    }
}

fn general_pair(view: &GraphView<'_>) -> Result<(ABPair, PairRule), ColourError> {
    let n = view.vertex_count();
    // 3 <= deg(x) <= n-2 exists: otherwise every degree is 2 or n-1,
    // which classify_degrees has already ruled out.
    let x = view
        .vertices()
        .find(|&v| (3..=n - 2).contains(&view.degree(v)))
        .ok_or(ColourError::PreconditionViolated)?;

    let without_x = view.without(&[x]);
    let search = Lowpoint::new(&without_x);
    if search.components.len() != 1 {
        return Err(ColourError::PreconditionViolated);
    }
    if search.blocks.len() == 1 {
        let (b, v1) = view
            .distance_two_path(x)
            .ok_or(ColourError::PreconditionViolated)?;
        return Ok((ABPair { a: x, b, v1 }, PairRule::StillBiconnected));
    }

    // End blocks are the blocks holding a single cut vertex; take the
    // first two in pre-order.
    let counts = search.cut_counts();
    let mut ends = search.key_order().into_iter().filter(|&b| counts[b] == 1);
    let mut pick = || {
        let block = ends.next().ok_or(ColourError::PreconditionViolated)?;
        let top = search.blocks[block].top;
        let cut = if search.cut[top] {
            top
        } else {
            *search
                .members(block)
                .iter()
                .find(|&&v| search.cut[v])
                .ok_or(ColourError::PreconditionViolated)?
        };
        view.neighbours(x)
            .find(|&w| w != cut && search.contains(block, w))
            .ok_or(ColourError::PreconditionViolated)
    };
    let a = pick()?;
    let b = pick()?;
    Ok((ABPair { a, b, v1: x }, PairRule::EndBlocks))
}
