//! Combining per-block colourings into one colouring of the whole graph.

use crate::colouring::{ColourError, Colouring};
use crate::connectivity::{BlockCutForest, BlockDecomposition, ForestNode};
use crate::graph::Graph;

/// Merges block colourings by a pre-order walk of the block-cut forest.
///
/// `locals[i]` colours `decomp.blocks[i]`, indexed by position in the
/// block's vertex list. Root blocks are copied. Every other block is
/// written through the transposition of its parent cut vertex's fixed
/// colour and its local colour, so the block agrees with what is already
/// placed. The largest global colour never exceeds the largest local one.
pub fn merge_block_colourings(
    g: &Graph,
    decomp: &BlockDecomposition<'_>,
    forest: &BlockCutForest,
    locals: &[Colouring],
) -> Result<Colouring, ColourError> {
    if locals.len() != decomp.blocks.len() {
        return Err(ColourError::ImproperLocal {
            block: locals.len().min(decomp.blocks.len()),
        });
    }
    let mut position = vec![0; g.n()];
    for (id, (block, local)) in decomp.blocks.iter().zip(locals).enumerate() {
        if local.len() != block.vertices.len() || !local.is_complete() {
            return Err(ColourError::ImproperLocal { block: id });
        }
        for (i, &v) in block.vertices.iter().enumerate() {
            position[v] = i;
        }
        if block
            .edges
            .iter()
            .any(|&(u, v)| local.get(position[u]) == local.get(position[v]))
        {
            return Err(ColourError::ImproperLocal { block: id });
        }
    }

    let mut global = Colouring::uncoloured(g.n());
    for &node in forest.preorder() {
        let ForestNode::Block(id) = node else { continue };
        let block = &decomp.blocks[id];
        let local = &locals[id];
        let Some(cut) = forest.parent_cut(id) else {
            for (i, &v) in block.vertices.iter().enumerate() {
                global.set(v, local.get(i));
            }
            continue;
        };
        let fixed = global.get(cut);
        let here = local.get(block.position(cut).expect("parent cut lies in its child block"));
        for (i, &v) in block.vertices.iter().enumerate() {
            let c = local.get(i);
            let c = if c == fixed {
                here
            } else if c == here {
                fixed
            } else {
                c
            };
            global.set(v, c);
        }
    }
    Ok(global)
}
