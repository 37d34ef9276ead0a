//! Depth-first search machinery: connected components, blocks
//! (biconnected components), cut vertices and the block-cut forest.
//!
//! All searches are iterative and explore neighbours in ascending id order,
//! so every decomposition is deterministic.

use thiserror::Error;

use crate::graph::{prefix_offsets, Graph, GraphView, Vertex};

pub(crate) mod lowpoint;

pub(crate) use lowpoint::Lowpoint;
use lowpoint::NONE as UNSEEN;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("end blocks need a connected graph that is not a single block")]
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Component id per vertex; `None` for removed vertices.
    pub id: Vec<Option<usize>>,
    pub count: usize,
}

pub fn connected_components(view: &GraphView<'_>) -> Components {
    let n = view.graph().n();
    let mut id = vec![None; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for root in view.vertices() {
        if id[root].is_some() {
            continue;
        }
        id[root] = Some(count);
        stack.push(root);
        while let Some(v) = stack.pop() {
            for w in view.neighbours(v) {
                if id[w].is_none() {
                    id[w] = Some(count);
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    Components { id, count }
}

/// Depth-first pre-order of the vertices reachable from `root`, exploring
/// neighbours in ascending id order.
pub fn dfs_preorder(view: &GraphView<'_>, root: Vertex) -> Vec<Vertex> {
    let graph = view.graph();
    let mut seen = vec![false; graph.n()];
    let mut order = vec![root];
    let mut stack = vec![(root, 0usize)];
    seen[root] = true;
    while let Some((v, i)) = stack.last_mut() {
        let nbrs = graph.neighbours(*v);
        match nbrs[*i..].iter().position(|&w| view.contains(w) && !seen[w]) {
            Some(step) => {
                let w = nbrs[*i + step];
                *i += step + 1;
                seen[w] = true;
                order.push(w);
                stack.push((w, 0));
            }
            None => {
                stack.pop();
            }
        }
    }
    order
}

/// A biconnected component: an isolated vertex, a bridge, or a maximal
/// biconnected subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Ascending.
    pub vertices: Vec<Vertex>,
    /// Each edge as `(u, v)` with `u < v`.
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Block {
    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Position of `v` in `vertices`.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

/// Blocks of a view in DFS discovery order, which is a pre-order of the
/// block-cut forest.
#[derive(Debug, Clone)]
pub struct BlockDecomposition<'g> {
    graph: &'g Graph,
    pub blocks: Vec<Block>,
    /// Per vertex of the base graph.
    pub cut_vertex: Vec<bool>,
    search: Lowpoint,
    /// Public block id of each block of `search`.
    public_id: Vec<usize>,
}

impl<'g> BlockDecomposition<'g> {
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// The block holding edge `uv`, or `None` if `uv` is not an edge of
    /// the decomposed view.
    pub fn block_of_edge(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let present = |x: Vertex| x < self.graph.n() && self.search.disc(x) != UNSEEN;
        if !present(u) || !present(v) || !self.graph.has_edge(u, v) {
            return None;
        }
        Some(self.public_id[self.search.block_of_edge(u, v)])
    }

    pub fn cut_vertices(&self) -> Vec<Vertex> {
        (0..self.cut_vertex.len())
            .filter(|&v| self.cut_vertex[v])
            .collect()
    }
}

/// Hopcroft-Tarjan lowpoint decomposition in a single iterative DFS.
pub fn biconnected_components<'g>(view: &GraphView<'g>) -> BlockDecomposition<'g> {
    let graph = view.graph();
    let n = graph.n();
    let search = Lowpoint::new(view);
    let order = search.key_order();
    let mut public_id = vec![0; order.len()];
    for (i, &id) in order.iter().enumerate() {
        public_id[id] = i;
    }

    let mut blocks: Vec<Block> = order
        .iter()
        .map(|&id| {
            let mut vertices = Vec::with_capacity(search.size(id));
            vertices.push(search.blocks[id].top);
            vertices.extend_from_slice(search.members(id));
            Block {
                vertices,
                edges: Vec::new(),
            }
        })
        .collect();
    sort_block_vertices(&mut blocks, n);
    // Scanning sources in ascending order lists each block's edges in
    // lexicographic order.
    for u in view.vertices() {
        for w in view.neighbours(u).filter(|&w| u < w) {
            let id = public_id[search.block_of_edge(u, w)];
            blocks[id].edges.push((u, w));
        }
    }

    BlockDecomposition {
        graph,
        blocks,
        cut_vertex: search.cut.clone(),
        search,
        public_id,
    }
}

/// Sorts every block's vertex list in `O(n + total block size)`.
fn sort_block_vertices(blocks: &mut [Block], n: usize) {
    let mut count = vec![0; n];
    for block in blocks.iter() {
        for &v in &block.vertices {
            count[v] += 1;
        }
    }
    let offsets = prefix_offsets(&count);
    let mut cursor = offsets.clone();
    let mut membership = vec![0; offsets[n]];
    for (id, block) in blocks.iter_mut().enumerate() {
        for &v in &block.vertices {
            membership[cursor[v]] = id;
            cursor[v] += 1;
        }
        block.vertices.clear();
    }
    for v in 0..n {
        for &id in &membership[offsets[v]..offsets[v + 1]] {
            blocks[id].vertices.push(v);
        }
    }
}

/// Connected, at least three vertices and no cut vertex.
pub fn is_biconnected(view: &GraphView<'_>) -> bool {
    view.vertex_count() >= 3 && Lowpoint::new(view).blocks.len() == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForestNode {
    Block(usize),
    Cut(Vertex),
}

/// Bipartite forest of blocks and cut vertices, one tree per connected
/// component. The root of each tree is its lowest-numbered block.
#[derive(Debug, Clone)]
pub struct BlockCutForest {
    block_cuts: Vec<Vec<Vertex>>,
    cut_vertices: Vec<Vertex>,
    cut_blocks: Vec<Vec<usize>>,
    cut_index: Vec<usize>,
    parent_cut: Vec<Option<Vertex>>,
    roots: Vec<usize>,
    preorder: Vec<ForestNode>,
}

impl BlockCutForest {
    pub fn block_count(&self) -> usize {
        self.block_cuts.len()
    }

    /// Ascending.
    pub fn cut_vertices(&self) -> &[Vertex] {
        &self.cut_vertices
    }

    /// Cut vertices lying in `block`, ascending.
    pub fn cuts_of_block(&self, block: usize) -> &[Vertex] {
        &self.block_cuts[block]
    }

    /// Blocks containing the cut vertex `cut`, ascending.
    pub fn blocks_of_cut(&self, cut: Vertex) -> &[usize] {
        match self.cut_index.get(cut) {
            Some(&i) if i != UNSEEN => &self.cut_blocks[i],
            _ => &[],
        }
    }

    pub fn neighbours(&self, node: ForestNode) -> Vec<ForestNode> {
        match node {
            ForestNode::Block(b) => self.block_cuts[b].iter().map(|&c| ForestNode::Cut(c)).collect(),
            ForestNode::Cut(c) => self.blocks_of_cut(c).iter().map(|&b| ForestNode::Block(b)).collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.block_cuts.len() + self.cut_vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.block_cuts.iter().map(Vec::len).sum()
    }

    /// Root block of each tree.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    /// The cut vertex joining `block` to its parent, `None` for roots.
    pub fn parent_cut(&self, block: usize) -> Option<Vertex> {
        self.parent_cut[block]
    }

    /// All nodes in pre-order, trees in root order, children ascending.
    pub fn preorder(&self) -> &[ForestNode] {
        &self.preorder
    }

    /// Block nodes of degree one, each with its only cut vertex.
    pub fn leaf_blocks(&self) -> Vec<(usize, Vertex)> {
        self.block_cuts
            .iter()
            .enumerate()
            .filter(|(_, cuts)| cuts.len() == 1)
            .map(|(b, cuts)| (b, cuts[0]))
            .collect()
    }
}

pub fn block_cut_forest(decomp: &BlockDecomposition<'_>) -> BlockCutForest {
    let n = decomp.cut_vertex.len();
    let cut_vertices = decomp.cut_vertices();
    let mut cut_index = vec![UNSEEN; n];
    for (i, &c) in cut_vertices.iter().enumerate() {
        cut_index[c] = i;
    }
    let mut cut_blocks = vec![Vec::new(); cut_vertices.len()];
    let block_cuts: Vec<Vec<Vertex>> = decomp
        .blocks
        .iter()
        .enumerate()
        .map(|(b, block)| {
            let cuts: Vec<_> = block
                .vertices
                .iter()
                .copied()
                .filter(|&v| decomp.cut_vertex[v])
                .collect();
            for &c in &cuts {
                cut_blocks[cut_index[c]].push(b);
            }
            cuts
        })
        .collect();

    let mut parent_cut = vec![None; block_cuts.len()];
    let mut seen_block = vec![false; block_cuts.len()];
    let mut seen_cut = vec![false; cut_vertices.len()];
    let mut roots = Vec::new();
    let mut preorder = Vec::with_capacity(block_cuts.len() + cut_vertices.len());
    let mut stack = Vec::new();
    for root in 0..block_cuts.len() {
        if seen_block[root] {
            continue;
        }
        roots.push(root);
        seen_block[root] = true;
        stack.push(ForestNode::Block(root));
        while let Some(node) = stack.pop() {
            preorder.push(node);
            match node {
                ForestNode::Block(b) => {
                    for &c in block_cuts[b].iter().rev() {
                        let ci = cut_index[c];
                        if !seen_cut[ci] {
                            seen_cut[ci] = true;
                            stack.push(ForestNode::Cut(c));
                        }
                    }
                }
                ForestNode::Cut(c) => {
                    for &b in cut_blocks[cut_index[c]].iter().rev() {
                        if !seen_block[b] {
                            seen_block[b] = true;
                            parent_cut[b] = Some(c);
                            stack.push(ForestNode::Block(b));
                        }
                    }
                }
            }
        }
    }

    BlockCutForest {
        block_cuts,
        cut_vertices,
        cut_blocks,
        cut_index,
        parent_cut,
        roots,
        preorder,
    }
}

/// A leaf block of the block-cut tree with its unique cut vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndBlock {
    pub block: usize,
    pub cut: Vertex,
}

/// End blocks of a connected decomposition with at least two blocks.
pub fn end_blocks(decomp: &BlockDecomposition<'_>) -> Result<Vec<EndBlock>, ConnectivityError> {
    let forest = block_cut_forest(decomp);
    if forest.roots().len() != 1 || forest.block_count() < 2 {
        return Err(ConnectivityError::NotApplicable);
    }
    Ok(forest
        .leaf_blocks()
        .into_iter()
        .map(|(block, cut)| EndBlock { block, cut })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgraphs::*;

    fn block_sets(d: &BlockDecomposition<'_>) -> Vec<Vec<Vertex>> {
        d.blocks.iter().map(|b| b.vertices.clone()).collect()
    }

    #[test]
    fn components_examples() {
        let p = path(3);
        assert_eq!(connected_components(&p.view()).count, 1);
        let c = connected_components(&p.view().without(&[1]));
        assert_eq!(c.count, 2);
        assert_eq!(c.id, vec![Some(0), None, Some(1)]);

        let g = c6_chord();
        assert_eq!(connected_components(&g.view().without(&[1, 5])).count, 1);
    }

    #[test]
    fn preorder_follows_ascending_ids() {
        let g = c6_chord();
        assert_eq!(dfs_preorder(&g.view().without(&[1, 5]), 0), vec![0, 3, 2, 4]);
        assert_eq!(dfs_preorder(&g.view(), 0), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn blocks_of_c4() {
        let g = cycle(4);
        let d = biconnected_components(&g.view());
        assert_eq!(block_sets(&d), vec![vec![0, 1, 2, 3]]);
        assert!(d.cut_vertices().is_empty());
    }

    #[test]
    fn blocks_of_path() {
        let g = path(3);
        let d = biconnected_components(&g.view());
        assert_eq!(block_sets(&d), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(d.cut_vertices(), vec![1]);
        assert_eq!(d.block_of_edge(2, 1), Some(1));
        assert_eq!(d.block_of_edge(0, 2), None);
    }

    #[test]
    fn blocks_of_bowtie() {
        let g = bowtie();
        let d = biconnected_components(&g.view());
        assert_eq!(block_sets(&d), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(d.cut_vertices(), vec![2]);
        for (u, v) in g.edges() {
            let expected = if u.max(v) <= 2 { 0 } else { 1 };
            assert_eq!(d.block_of_edge(u, v), Some(expected));
        }
    }

    #[test]
    fn isolated_vertices_get_blocks() {
        let g = graph(4, &[(1, 2)]);
        let d = biconnected_components(&g.view());
        assert_eq!(block_sets(&d), vec![vec![0], vec![1, 2], vec![3]]);
        let f = block_cut_forest(&d);
        assert_eq!(f.roots(), &[0, 1, 2]);
    }

    #[test]
    fn removed_vertices_are_ignored() {
        let g = c6_chord();
        let d = biconnected_components(&g.view().without(&[0]));
        assert_eq!(
            block_sets(&d),
            vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5]]
        );
        assert_eq!(d.cut_vertices(), vec![2, 3, 4]);
    }

    #[test]
    fn biconnectivity_examples() {
        assert!(is_biconnected(&cycle(5).view()));
        assert!(!is_biconnected(&path(3).view()));
        assert!(!is_biconnected(&complete(2).view()));
        assert!(!is_biconnected(&complete(1).view()));
        let p = petersen();
        assert!(is_biconnected(&p.view().without(&[0])));
    }

    #[test]
    fn forest_examples() {
        let g = bowtie();
        let d = biconnected_components(&g.view());
        let f = block_cut_forest(&d);
        assert_eq!(
            f.preorder(),
            &[ForestNode::Block(0), ForestNode::Cut(2), ForestNode::Block(1)]
        );
        assert_eq!(f.parent_cut(1), Some(2));

        let g = cycle(4);
        let f = block_cut_forest(&biconnected_components(&g.view()));
        assert_eq!(f.preorder(), &[ForestNode::Block(0)]);
        assert!(f.cut_vertices().is_empty());

        let g = path(4);
        let f = block_cut_forest(&biconnected_components(&g.view()));
        use ForestNode::*;
        assert_eq!(
            f.preorder(),
            &[Block(0), Cut(1), Block(1), Cut(2), Block(2)]
        );
        assert_eq!(f.node_count() - f.edge_count(), 1);
    }

    #[test]
    fn end_block_examples() {
        let g = path(4);
        let d = biconnected_components(&g.view());
        let ends = end_blocks(&d).unwrap();
        assert_eq!(
            ends,
            vec![EndBlock { block: 0, cut: 1 }, EndBlock { block: 2, cut: 2 }]
        );
        assert_eq!(d.blocks[0].vertices, [0, 1]);
        assert_eq!(d.blocks[2].vertices, [2, 3]);

        let g = bowtie();
        let d = biconnected_components(&g.view());
        let ends = end_blocks(&d).unwrap();
        assert_eq!(ends.len(), 2);
        assert!(ends.iter().all(|e| e.cut == 2));

        let g = c6_chord();
        let d = biconnected_components(&g.view().without(&[0]));
        let ends: Vec<_> = end_blocks(&d)
            .unwrap()
            .into_iter()
            .map(|e| (d.blocks[e.block].vertices.clone(), e.cut))
            .collect();
        assert_eq!(ends, vec![(vec![1, 2], 2), (vec![4, 5], 4)]);
    }

    #[test]
    fn end_blocks_not_applicable() {
        let g = cycle(5);
        let d = biconnected_components(&g.view());
        assert_eq!(end_blocks(&d), Err(ConnectivityError::NotApplicable));
        let g = graph(4, &[(0, 1), (2, 3)]);
        let d = biconnected_components(&g.view());
        assert_eq!(end_blocks(&d), Err(ConnectivityError::NotApplicable));
    }

    #[test]
    fn deep_path_does_not_overflow() {
        let g = path(1 << 20);
        let d = biconnected_components(&g.view());
        assert_eq!(d.blocks.len(), (1 << 20) - 1);
    }
}
