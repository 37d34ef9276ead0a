//! The lowpoint search shared by every block computation.
//!
//! Besides the usual edge stack, the search stacks discovered vertices and,
//! when a block closes, labels each popped vertex with that block. Every
//! vertex except a search root is popped exactly once. Its label names the
//! one block in which it is not the attachment vertex (the `top`). An edge
//! belongs to the block of its later-discovered endpoint, because every
//! non-tree edge joins a vertex to one of its ancestors.
//!
//! Search state is stored as `u32`, which keeps the working set small on
//! large graphs; graphs must have fewer than 2^32 - 1 adjacency slots.

use std::ops::Range;

use crate::graph::{GraphView, Vertex};

pub(crate) const NONE: usize = usize::MAX;
const NIL: u32 = u32::MAX;

#[inline]
fn wide(x: u32) -> usize {
    if x == NIL {
        NONE
    } else {
        x as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RawBlock {
    /// The block's vertex closest to the search root: the cut vertex to
    /// its parent block, or the root itself.
    pub top: Vertex,
    pub top_disc: u32,
    /// Discovery time of the first vertex found below `top` (of `top`
    /// itself for an isolated vertex). Distinct across blocks.
    pub key: usize,
    members: Range<usize>,
    edges: Range<usize>,
    pub component: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct ComponentStats {
    /// Lowest vertex of the component.
    pub root: Vertex,
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
}

/// Per-vertex search state, kept in one record so that the load which
/// tests whether a vertex is discovered also brings in its adjacency range.
#[derive(Debug, Clone, Copy)]
struct Node {
    disc: u32,
    /// Lowpoint while on the search path, then the vertex's block label.
    low: u32,
    next: u32,
    end: u32,
}

struct Frame {
    v: Vertex,
    parent: Vertex,
    degree: usize,
    /// Lengths of the vertex and edge stacks before `v` was discovered.
    vertex_mark: usize,
    edge_mark: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct Lowpoint {
    nodes: Vec<Node>,
    pub cut: Vec<bool>,
    /// Blocks in the order they closed.
    pub blocks: Vec<RawBlock>,
    members: Vec<Vertex>,
    member_disc: Vec<u32>,
    /// Block edges as pairs of discovery times, later endpoint first. Only
    /// filled when requested.
    edges: Vec<(u32, u32)>,
    /// In root order, so ordered by lowest vertex.
    pub components: Vec<ComponentStats>,
}

impl Lowpoint {
    pub fn new(view: &GraphView<'_>) -> Self {
        Self::search(view, false)
    }

    /// Also records the edges of every block.
    pub fn with_edges(view: &GraphView<'_>) -> Self {
        Self::search(view, true)
    }

    fn search(view: &GraphView<'_>, record_edges: bool) -> Self {
        let g = view.graph();
        let n = g.n();
        assert!(
            u32::try_from(2 * g.m()).is_ok_and(|s| s < NIL) && n < NIL as usize,
            "graph too large for the block search"
        );
        let mut nodes: Vec<Node> = (0..n)
            .map(|v| {
                let slots = g.slots(v);
                Node {
                    disc: NIL,
                    low: NIL,
                    next: slots.start as u32,
                    end: slots.end as u32,
                }
            })
            .collect();
        let mut cut = vec![false; n];
        let mut blocks = Vec::new();
        let mut members = Vec::with_capacity(view.vertex_count());
        let mut member_disc = Vec::with_capacity(view.vertex_count());
        let mut edges = Vec::new();
        let mut components = Vec::new();
        let mut frames: Vec<Frame> = Vec::new();
        let mut vertex_stack: Vec<(Vertex, u32)> = Vec::new();
        let mut edge_stack: Vec<(u32, u32)> = Vec::new();
        let mut time: u32 = 0;

        for root in view.vertices() {
            if nodes[root].disc != NIL {
                continue;
            }
            let component = components.len();
            let mut stats = ComponentStats {
                root,
                vertices: 0,
                edges: 0,
                max_degree: 0,
            };
            let first = time;
            nodes[root].disc = time;
            nodes[root].low = time;
            time += 1;
            let mut root_children = 0;
            frames.push(Frame {
                v: root,
                parent: NONE,
                degree: 0,
                vertex_mark: 0,
                edge_mark: 0,
            });

            while let Some(f) = frames.last_mut() {
                let v = f.v;
                let node = nodes[v];
                if node.next < node.end {
                    let w = g.target(node.next as usize);
                    nodes[v].next += 1;
                    if !view.contains(w) {
                        continue;
                    }
                    f.degree += 1;
                    let seen = nodes[w].disc;
                    if seen == NIL {
                        nodes[w].disc = time;
                        nodes[w].low = time;
                        let edge_mark = edge_stack.len();
                        if record_edges {
                            edge_stack.push((time, node.disc));
                        }
                        frames.push(Frame {
                            v: w,
                            parent: v,
                            degree: 0,
                            vertex_mark: vertex_stack.len(),
                            edge_mark,
                        });
                        vertex_stack.push((w, time));
                        time += 1;
                    } else if seen < node.disc && w != f.parent {
                        if record_edges {
                            edge_stack.push((node.disc, seen));
                        }
                        if seen < node.low {
                            nodes[v].low = seen;
                        }
                    }
                    continue;
                }

                let done = frames.pop().expect("loop condition");
                stats.edges += done.degree;
                stats.max_degree = stats.max_degree.max(done.degree);
                let Some(up) = frames.last() else { break };
                let u = up.v;
                let up_node = nodes[u];
                if node.low < up_node.low {
                    nodes[u].low = node.low;
                }
                if node.low >= up_node.disc {
                    let id = blocks.len() as u32;
                    let start = members.len();
                    for &(x, d) in &vertex_stack[done.vertex_mark..] {
                        nodes[x].low = id;
                        members.push(x);
                        member_disc.push(d);
                    }
                    vertex_stack.truncate(done.vertex_mark);
                    let edge_start = edges.len();
                    edges.extend_from_slice(&edge_stack[done.edge_mark..]);
                    edge_stack.truncate(done.edge_mark);
                    blocks.push(RawBlock {
                        top: u,
                        top_disc: up_node.disc,
                        key: node.disc as usize,
                        members: start..members.len(),
                        edges: edge_start..edges.len(),
                        component,
                    });
                    if u == root {
                        root_children += 1;
                    } else {
                        cut[u] = true;
                    }
                }
            }

            cut[root] = root_children >= 2;
            nodes[root].low = NIL;
            if root_children == 0 {
                blocks.push(RawBlock {
                    top: root,
                    top_disc: nodes[root].disc,
                    key: nodes[root].disc as usize,
                    members: members.len()..members.len(),
                    edges: edges.len()..edges.len(),
                    component,
                });
            }
            stats.vertices = (time - first) as usize;
            stats.edges /= 2;
            components.push(stats);
        }

        Lowpoint {
            nodes,
            cut,
            blocks,
            members,
            member_disc,
            edges,
            components,
        }
    }

    /// Discovery time of `v`; `NONE` outside the view.
    #[inline]
    pub fn disc(&self, v: Vertex) -> usize {
        wide(self.nodes[v].disc)
    }

    /// The block in which `v` is not the top; `NONE` for search roots and
    /// vertices outside the view.
    #[inline]
    pub fn label(&self, v: Vertex) -> usize {
        if self.nodes[v].disc == NIL {
            NONE
        } else {
            wide(self.nodes[v].low)
        }
    }

    /// Vertices of `block` other than its top, in discovery order.
    pub fn members(&self, block: usize) -> &[Vertex] {
        &self.members[self.blocks[block].members.clone()]
    }

    /// Discovery times of [`Self::members`].
    pub fn member_discs(&self, block: usize) -> &[u32] {
        &self.member_disc[self.blocks[block].members.clone()]
    }

    /// Edges of `block` as discovery-time pairs; empty unless the search
    /// was run by [`Self::with_edges`].
    pub fn edges(&self, block: usize) -> &[(u32, u32)] {
        &self.edges[self.blocks[block].edges.clone()]
    }

    /// Number of vertices in `block`, top included.
    pub fn size(&self, block: usize) -> usize {
        self.blocks[block].members.len() + 1
    }

    pub fn contains(&self, block: usize, v: Vertex) -> bool {
        self.label(v) == block || self.blocks[block].top == v
    }

    /// Block of the edge `uv`, which must be an edge of the view.
    pub fn block_of_edge(&self, u: Vertex, v: Vertex) -> usize {
        if self.disc(u) > self.disc(v) {
            self.label(u)
        } else {
            self.label(v)
        }
    }

    /// Block ids sorted by key. Along this order each block comes after
    /// the block holding its top as a non-top vertex, which makes it a
    /// pre-order of the block-cut forest.
    pub fn key_order(&self) -> Vec<usize> {
        let mut by_key = vec![NONE; self.nodes.len()];
        for (id, b) in self.blocks.iter().enumerate() {
            by_key[b.key] = id;
        }
        by_key.retain(|&id| id != NONE);
        by_key
    }

    /// Number of cut vertices in each block.
    pub fn cut_counts(&self) -> Vec<usize> {
        let mut count: Vec<usize> = self
            .blocks
            .iter()
            .map(|b| usize::from(self.cut[b.top]))
            .collect();
        for v in 0..self.nodes.len() {
            let label = self.label(v);
            if label != NONE && self.cut[v] {
                count[label] += 1;
            }
        }
        count
    }
}
