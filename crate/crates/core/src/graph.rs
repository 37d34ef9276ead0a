//! Compact immutable graphs and vertex-masked views.
//!
//! A [`Graph`] stores a simple undirected graph on the dense vertex ids
//! `0..n` as a CSR adjacency structure with every neighbour list sorted
//! ascending. A [`GraphView`] pairs a graph with a removal mask so that
//! vertex-deleted subgraphs can be traversed without copying the graph.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

/// Vertex ids are dense indices `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex id {0} out of range")]
    IdOutOfRange(Vertex),
}

/// Simple undirected graph with sorted adjacency arrays.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph on `n` vertices from unordered edge pairs.
    ///
    /// Runs in `O(n + m)`: adjacency is bucketed by source, then transposed,
    /// which leaves every neighbour list sorted, so duplicates sit next to
    /// each other.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::IdOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::IdOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let offsets = prefix_offsets(&degree);

        let mut cursor = offsets.clone();
        let mut unsorted = vec![0; 2 * edges.len()];
        for &(u, v) in edges {
            unsorted[cursor[u]] = v;
            cursor[u] += 1;
            unsorted[cursor[v]] = u;
            cursor[v] += 1;
        }

        // Transposing a symmetric structure while scanning sources in
        // ascending order fills every target list in ascending order.
        cursor.copy_from_slice(&offsets);
        let mut targets = vec![0; unsorted.len()];
        for u in 0..n {
            for &w in &unsorted[offsets[u]..offsets[u + 1]] {
                targets[cursor[w]] = u;
                cursor[w] += 1;
            }
        }

        for u in 0..n {
            let list = &targets[offsets[u]..offsets[u + 1]];
            if let Some(pair) = list.windows(2).find(|p| p[0] == p[1]) {
                return Err(GraphError::DuplicateEdge(u.min(pair[0]), u.max(pair[0])));
            }
        }

        Ok(Graph { offsets, targets })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.neighbours(u).binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbours(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Positions of `v`'s neighbours in the flat adjacency array.
    #[inline]
    pub(crate) fn slots(&self, v: Vertex) -> Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    #[inline]
    pub(crate) fn target(&self, slot: usize) -> Vertex {
        self.targets[slot]
    }

    /// A view of the whole graph.
    pub fn view(&self) -> GraphView<'_> {
        GraphView::new(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub(crate) fn prefix_offsets(counts: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(counts.len() + 1);
    let mut total = 0;
    offsets.push(0);
    for &c in counts {
        total += c;
        offsets.push(total);
    }
    offsets
}

/// A graph with some vertices masked out; behaves as the induced subgraph
/// on the remaining vertices.
#[derive(Clone)]
pub struct GraphView<'g> {
    graph: &'g Graph,
    removed: Vec<bool>,
    present: usize,
}

impl<'g> GraphView<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        GraphView {
            graph,
            removed: vec![false; graph.n()],
            present: graph.n(),
        }
    }

    /// A copy of this view with the given vertices also removed.
    pub fn without(&self, vertices: &[Vertex]) -> Self {
        let mut view = self.clone();
        for &v in vertices {
            view.remove(v);
        }
        view
    }

    pub fn remove(&mut self, v: Vertex) {
        if !self.removed[v] {
            self.removed[v] = true;
            self.present -= 1;
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v < self.removed.len() && !self.removed[v]
    }

    /// Number of vertices not removed.
    pub fn vertex_count(&self) -> usize {
        self.present
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.removed.len()).filter(move |&v| !self.removed[v])
    }

    /// Neighbours of `v` inside the view, ascending.
    #[inline]
    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + Clone + '_ {
        self.graph
            .neighbours(v)
            .iter()
            .copied()
            .filter(move |&w| !self.removed[w])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        if self.present == self.graph.n() {
            self.graph.degree(v)
        } else {
            self.neighbours(v).count()
        }
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains(u) && self.contains(v) && self.graph.has_edge(u, v)
    }

    /// Δ of the induced subgraph; 0 when it has no edges.
    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Some vertex at distance exactly two from `x`, or `None`.
    pub fn distance_two_vertex(&self, x: Vertex) -> Option<Vertex> {
        self.distance_two_path(x).map(|(w, _)| w)
    }

    /// Some `(w, via)` with `w` at distance two from `x` and `via` adjacent
    /// to both. Neighbours are scanned in ascending order, so `via` is the
    /// lowest common neighbour of `x` and `w`.
    pub fn distance_two_path(&self, x: Vertex) -> Option<(Vertex, Vertex)> {
        debug_assert!(self.contains(x));
        let mut near = vec![false; self.graph.n()];
        near[x] = true;
        for u in self.neighbours(x) {
            near[u] = true;
        }
        for u in self.neighbours(x) {
            if let Some(w) = self.neighbours(u).find(|&w| !near[w]) {
                return Some((w, u));
            }
        }
        None
    }
}

impl fmt::Debug for GraphView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let removed: Vec<_> = (0..self.removed.len()).filter(|&v| self.removed[v]).collect();
        f.debug_struct("GraphView")
            .field("graph", self.graph)
            .field("removed", &removed)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgraphs::*;

    #[test]
    fn builds_path() {
        let g = Graph::new(3, &[(1, 2), (0, 1)]).unwrap();
        assert_eq!(g.m(), 2);
        let degrees: Vec<_> = (0..3).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, [1, 2, 1]);
        assert_eq!(g.neighbours(1), &[0, 2]);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert_eq!(g.max_degree(), 0);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::new(0, &[]).unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.view().max_degree(), 0);
        assert_eq!(g.edges().count(), 0);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(4, &[(0, 1), (0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::new(4, &[(0, 1), (2, 3), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(2, &[(0, 2)]), Err(GraphError::IdOutOfRange(2)));
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(complete(4).view().max_degree(), 3);
        assert_eq!(cycle(5).view().max_degree(), 2);
        let g = split(5);
        let view = g.view().without(&[4]);
        assert_eq!(view.max_degree(), 3);
        assert_eq!(view.degree(0), 3);
        assert_eq!(view.degree(2), 2);
    }

    #[test]
    fn distance_two_examples() {
        let c5 = cycle(5);
        let w = c5.view().distance_two_vertex(0).unwrap();
        assert!(w == 2 || w == 3);
        assert_eq!(complete(4).view().distance_two_vertex(0), None);

        let p = petersen();
        let (w, via) = p.view().distance_two_path(0).unwrap();
        assert!(w != 0 && !p.has_edge(0, w));
        assert!(p.has_edge(0, via) && p.has_edge(via, w));
    }

    #[test]
    fn distance_two_respects_mask() {
        // Path 0-1-2: with 1 removed, 2 is unreachable from 0.
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.view().distance_two_vertex(0), Some(2));
        assert_eq!(g.view().without(&[1]).distance_two_vertex(0), None);
    }
}
