//! Vertex colourings and the direct colouring rules: first-fit greedy,
//! cycles and complete graphs.

use thiserror::Error;

use crate::graph::{Graph, GraphView, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColourError {
    #[error("order is not a permutation of the vertices")]
    NotAPermutation,
    #[error("graph is not a cycle")]
    NotACycle,
    #[error("graph is not complete")]
    NotComplete,
    #[error("graph is not a single connected block")]
    NotABlock,
    #[error("find_ab needs a biconnected graph that is neither complete nor a cycle")]
    PreconditionViolated,
    #[error("invalid vertex pair: {0}")]
    InvalidPair(&'static str),
    #[error("local colouring of block {block} is not proper")]
    ImproperLocal { block: usize },
}

/// Colour per vertex. Colours are `1, 2, 3, ...`; `0` means uncoloured.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Colouring {
    colours: Vec<usize>,
}

impl Colouring {
    pub fn uncoloured(n: usize) -> Self {
        Colouring { colours: vec![0; n] }
    }

    pub fn from_vec(colours: Vec<usize>) -> Self {
        Colouring { colours }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> usize {
        self.colours[v]
    }

    #[inline]
    pub fn set(&mut self, v: Vertex, colour: usize) {
        self.colours[v] = colour;
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colours
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.colours
    }

    /// Largest colour in use; 0 if nothing is coloured.
    pub fn num_colours(&self) -> usize {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct non-zero colours.
    pub fn distinct_colours(&self) -> usize {
        let mut seen = vec![false; self.num_colours() + 1];
        let mut count = 0;
        for &c in self.colours.iter().filter(|&&c| c != 0) {
            if !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }

    pub fn is_complete(&self) -> bool {
        self.colours.iter().all(|&c| c != 0)
    }
}

/// Reusable buffer for "smallest colour not used by a coloured neighbour".
pub(crate) struct FreeColour {
    used: Vec<bool>,
}

impl FreeColour {
    pub(crate) fn new(max_degree: usize) -> Self {
        FreeColour {
            used: vec![false; max_degree + 2],
        }
    }

    /// Smallest positive colour absent from `neighbour_colours`, in
    /// `O(deg)`. Colours above `deg + 1` can never block the answer and
    /// are skipped.
    pub(crate) fn pick<I>(&mut self, neighbour_colours: I) -> usize
    where
        I: Iterator<Item = usize> + Clone,
    {
        let limit = self.used.len();
        for c in neighbour_colours.clone() {
            if c < limit {
                self.used[c] = true;
            }
        }
        let mut colour = 1;
        while colour < limit && self.used[colour] {
            colour += 1;
        }
        for c in neighbour_colours {
            if c < limit {
                self.used[c] = false;
            }
        }
        colour
    }
}

/// First-fit greedy colouring in the given vertex order; at most Δ+1
/// colours.
pub fn greedy_colour(g: &Graph, order: &[Vertex]) -> Result<Colouring, ColourError> {
    let n = g.n();
    if order.len() != n {
        return Err(ColourError::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(ColourError::NotAPermutation);
        }
        seen[v] = true;
    }
    let mut colouring = Colouring::uncoloured(n);
    let mut free = FreeColour::new(g.max_degree());
    for &v in order {
        let c = free.pick(g.neighbours(v).iter().map(|&w| colouring.get(w)));
        colouring.set(v, c);
    }
    Ok(colouring)
}

/// Colours a cycle by walking it from its lowest vertex towards the lower
/// neighbour, alternating 1 and 2; the last vertex of an odd cycle gets 3.
pub fn colour_cycle(view: &GraphView<'_>) -> Result<Colouring, ColourError> {
    let len = view.vertex_count();
    let start = view.vertices().next().ok_or(ColourError::NotACycle)?;
    if len < 3 || view.vertices().any(|v| view.degree(v) != 2) {
        return Err(ColourError::NotACycle);
    }
    let mut colouring = Colouring::uncoloured(view.graph().n());
    let (mut prev, mut cur) = (start, view.neighbours(start).next().unwrap());
    colouring.set(start, 1);
    for i in 1..len {
        if cur == start {
            // Closed early: two or more disjoint cycles.
            return Err(ColourError::NotACycle);
        }
        let colour = if len % 2 == 1 && i == len - 1 { 3 } else { 1 + i % 2 };
        colouring.set(cur, colour);
        let next = view.neighbours(cur).find(|&w| w != prev).unwrap();
        (prev, cur) = (cur, next);
    }
    if cur != start {
        return Err(ColourError::NotACycle);
    }
    Ok(colouring)
}

/// Gives the vertices of a complete graph the colours `1..=n` in id order.
pub fn colour_complete(view: &GraphView<'_>) -> Result<Colouring, ColourError> {
    let n = view.vertex_count();
    if view.vertices().any(|v| view.degree(v) != n - 1) {
        return Err(ColourError::NotComplete);
    }
    let mut colouring = Colouring::uncoloured(view.graph().n());
    for (i, v) in view.vertices().enumerate() {
        colouring.set(v, i + 1);
    }
    Ok(colouring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgraphs::*;

    #[test]
    fn greedy_examples() {
        let c = greedy_colour(&path(3), &[0, 1, 2]).unwrap();
        assert_eq!(c.as_slice(), &[1, 2, 1]);
        assert_eq!(greedy_colour(&complete(3), &[2, 0, 1]).unwrap().num_colours(), 3);
        // Star K_{1,4} with the hub coloured last.
        let star = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let c = greedy_colour(&star, &[1, 2, 3, 4, 0]).unwrap();
        assert_eq!(c.as_slice(), &[2, 1, 1, 1, 1]);
    }

    #[test]
    fn greedy_rejects_bad_orders() {
        let g = path(3);
        assert_eq!(greedy_colour(&g, &[0, 1]), Err(ColourError::NotAPermutation));
        assert_eq!(greedy_colour(&g, &[0, 1, 1]), Err(ColourError::NotAPermutation));
        assert_eq!(greedy_colour(&g, &[0, 1, 3]), Err(ColourError::NotAPermutation));
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(colour_cycle(&cycle(4).view()).unwrap().as_slice(), &[1, 2, 1, 2]);
        assert_eq!(colour_cycle(&cycle(3).view()).unwrap().as_slice(), &[1, 2, 3]);
        let c5 = colour_cycle(&cycle(5).view()).unwrap();
        assert_eq!(c5.num_colours(), 3);
        assert_eq!(c5.as_slice().iter().filter(|&&c| c == 3).count(), 1);
    }

    #[test]
    fn cycle_rejects_non_cycles() {
        assert_eq!(colour_cycle(&path(4).view()), Err(ColourError::NotACycle));
        let two_triangles = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(colour_cycle(&two_triangles.view()), Err(ColourError::NotACycle));
        assert_eq!(colour_cycle(&complete(2).view()), Err(ColourError::NotACycle));
    }

    #[test]
    fn cycle_in_a_view() {
        // C5 as the wheel W5 minus its hub 5.
        let mut edges: Vec<_> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
        edges.extend((0..5).map(|v| (v, 5)));
        let g = graph(6, &edges);
        let c = colour_cycle(&g.view().without(&[5])).unwrap();
        assert_eq!(c.get(5), 0);
        assert_eq!(c.num_colours(), 3);
    }

    #[test]
    fn complete_examples() {
        assert_eq!(colour_complete(&complete(1).view()).unwrap().as_slice(), &[1]);
        assert_eq!(colour_complete(&complete(2).view()).unwrap().as_slice(), &[1, 2]);
        assert_eq!(colour_complete(&complete(5).view()).unwrap().num_colours(), 5);
        assert_eq!(colour_complete(&cycle(4).view()), Err(ColourError::NotComplete));
    }

    #[test]
    fn counts() {
        let c = Colouring::from_vec(vec![1, 3, 3, 0]);
        assert_eq!(c.num_colours(), 3);
        assert_eq!(c.distinct_colours(), 2);
        assert!(!c.is_complete());
    }
}
