//! Brute-force ground truth: a colouring verifier, an exact backtracking
//! colourability test, and removal-based cut-vertex and block oracles.
//!
//! These are deliberately naive and share no code with the fast paths they
//! check, apart from [`Graph`] itself.

use std::fmt;

use thiserror::Error;

use crate::colouring::Colouring;
use crate::graph::{Graph, Vertex};

/// Largest graph the exponential oracles accept.
pub const MAX_BRUTEFORCE_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {0} vertices; brute force is limited to {MAX_BRUTEFORCE_VERTICES}")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The colouring does not have one entry per vertex.
    SizeMismatch { expected: usize, found: usize },
    UncolouredVertex(Vertex),
    MonochromaticEdge(Vertex, Vertex),
    BoundExceeded { used: usize, bound: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::SizeMismatch { expected, found } => {
                write!(f, "colouring has {found} entries, graph has {expected} vertices")
            }
            Violation::UncolouredVertex(v) => write!(f, "vertex {} is uncoloured", v + 1),
            Violation::MonochromaticEdge(u, v) => {
                write!(f, "edge {{{}, {}}} is monochromatic", u + 1, v + 1)
            }
            Violation::BoundExceeded { used, bound } => {
                write!(f, "{used} colours used, bound is {bound}")
            }
        }
    }
}

/// Every way `c` fails to be a complete proper colouring of `g` with at
/// most `bound` colours. Empty means valid.
pub fn verify_colouring(g: &Graph, c: &Colouring, bound: Option<usize>) -> Vec<Violation> {
    let mut violations = Vec::new();
    if c.len() != g.n() {
        violations.push(Violation::SizeMismatch {
            expected: g.n(),
            found: c.len(),
        });
        return violations;
    }
    for v in 0..g.n() {
        if c.get(v) == 0 {
            violations.push(Violation::UncolouredVertex(v));
        }
    }
    for (u, v) in g.edges() {
        if c.get(u) != 0 && c.get(u) == c.get(v) {
            violations.push(Violation::MonochromaticEdge(u, v));
        }
    }
    if let Some(bound) = bound {
        let used = c.num_colours();
        if used > bound {
            violations.push(Violation::BoundExceeded { used, bound });
        }
    }
    violations
}

/// Exact k-colourability by backtracking over vertices in id order.
pub fn is_k_colourable_bruteforce(g: &Graph, k: usize) -> Result<bool, OracleError> {
    guard(g)?;
    Ok(backtrack(g, k, true))
}

/// Smallest k for which `g` is k-colourable.
pub fn chromatic_number_bruteforce(g: &Graph) -> Result<usize, OracleError> {
    guard(g)?;
    Ok((0..=g.n())
        .find(|&k| backtrack(g, k, true))
        .expect("n colours always suffice"))
}

fn guard(g: &Graph) -> Result<(), OracleError> {
    if g.n() > MAX_BRUTEFORCE_VERTICES {
        Err(OracleError::TooLarge(g.n()))
    } else {
        Ok(())
    }
}

/// With `symmetry` set, a vertex may only open one new colour beyond those
/// already in use, which removes permutations of the palette.
fn backtrack(g: &Graph, k: usize, symmetry: bool) -> bool {
    fn go(g: &Graph, k: usize, symmetry: bool, v: usize, used: usize, colour: &mut [usize]) -> bool {
        if v == colour.len() {
            return true;
        }
        let top = if symmetry { k.min(used + 1) } else { k };
        for c in 1..=top {
            if g.neighbours(v).iter().any(|&w| w < v && colour[w] == c) {
                continue;
            }
            colour[v] = c;
            if go(g, k, symmetry, v + 1, used.max(c), colour) {
                return true;
            }
        }
        colour[v] = 0;
        false
    }
    go(g, k, symmetry, 0, 0, &mut vec![0; g.n()])
}

/// Number of connected components of `g` with the vertex `skip` deleted.
fn components_without(g: &Graph, skip: Option<Vertex>) -> usize {
    let mut seen = vec![false; g.n()];
    if let Some(s) = skip {
        seen[s] = true;
    }
    let mut count = 0;
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        count += 1;
        seen[root] = true;
        let mut queue = vec![root];
        while let Some(v) = queue.pop() {
            for &w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
    }
    count
}

/// Vertices whose deletion increases the number of components, ascending.
pub fn cut_vertices_bruteforce(g: &Graph) -> Vec<Vertex> {
    let base = components_without(g, None);
    (0..g.n())
        .filter(|&v| components_without(g, Some(v)) > base)
        .collect()
}

/// Edge partition into blocks, by the removal characterisation: two edges
/// of one component share a block iff no single vertex deletion separates
/// their surviving endpoints. Each group is sorted; groups are ordered by
/// their first edge.
pub fn blocks_bruteforce(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    let n = g.n();
    let edges: Vec<_> = g.edges().collect();
    // label[z][v]: component of v in g - z; label[n][v]: component in g.
    let mut label = vec![vec![usize::MAX; n]; n + 1];
    for (z, row) in label.iter_mut().enumerate() {
        let mut next = 0;
        for root in 0..n {
            if root == z || row[root] != usize::MAX {
                continue;
            }
            row[root] = next;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &w in g.neighbours(v) {
                    if w != z && row[w] == usize::MAX {
                        row[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
    }
    let same_block = |e: (Vertex, Vertex), f: (Vertex, Vertex)| {
        if label[n][e.0] != label[n][f.0] {
            return false;
        }
        (0..n).all(|z| {
            let x = if e.0 == z { e.1 } else { e.0 };
            let y = if f.0 == z { f.1 } else { f.0 };
            label[z][x] == label[z][y]
        })
    };

    let mut group = vec![usize::MAX; edges.len()];
    let mut groups: Vec<Vec<(Vertex, Vertex)>> = Vec::new();
    for i in 0..edges.len() {
        if group[i] != usize::MAX {
            continue;
        }
        group[i] = groups.len();
        let mut members = vec![edges[i]];
        for j in i + 1..edges.len() {
            if group[j] == usize::MAX && same_block(edges[i], edges[j]) {
                group[j] = groups.len();
                members.push(edges[j]);
            }
        }
        groups.push(members);
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgraphs::*;

    #[test]
    fn verifier_examples() {
        let k3 = complete(3);
        assert!(verify_colouring(&k3, &Colouring::from_vec(vec![1, 2, 3]), Some(3)).is_empty());
        let k2 = complete(2);
        assert_eq!(
            verify_colouring(&k2, &Colouring::from_vec(vec![1, 1]), None),
            vec![Violation::MonochromaticEdge(0, 1)]
        );
        let c5 = cycle(5);
        assert_eq!(
            verify_colouring(&c5, &Colouring::from_vec(vec![1, 2, 1, 2, 3]), Some(2)),
            vec![Violation::BoundExceeded { used: 3, bound: 2 }]
        );
        assert_eq!(
            verify_colouring(&k2, &Colouring::from_vec(vec![1, 0]), None),
            vec![Violation::UncolouredVertex(1)]
        );
        assert_eq!(
            verify_colouring(&k2, &Colouring::from_vec(vec![1]), None),
            vec![Violation::SizeMismatch { expected: 2, found: 1 }]
        );
    }

    #[test]
    fn colourability_examples() {
        let c5 = cycle(5);
        assert_eq!(is_k_colourable_bruteforce(&c5, 2), Ok(false));
        assert_eq!(is_k_colourable_bruteforce(&c5, 3), Ok(true));
        let p = petersen();
        assert_eq!(is_k_colourable_bruteforce(&p, 3), Ok(true));
        assert_eq!(is_k_colourable_bruteforce(&p, 2), Ok(false));
        assert_eq!(
            is_k_colourable_bruteforce(&cycle(13), 3),
            Err(OracleError::TooLarge(13))
        );
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number_bruteforce(&complete(4)), Ok(4));
        assert_eq!(chromatic_number_bruteforce(&cycle(6)), Ok(2));
        assert_eq!(chromatic_number_bruteforce(&split(5)), Ok(3));
        assert_eq!(chromatic_number_bruteforce(&Graph::empty(0)), Ok(0));
        assert_eq!(chromatic_number_bruteforce(&Graph::empty(4)), Ok(1));
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(cut_vertices_bruteforce(&bowtie()), vec![2]);
        assert!(cut_vertices_bruteforce(&cycle(5)).is_empty());
        assert_eq!(cut_vertices_bruteforce(&path(4)), vec![1, 2]);
    }

    #[test]
    fn block_oracle_examples() {
        assert_eq!(
            blocks_bruteforce(&bowtie()),
            vec![vec![(0, 1), (0, 2), (1, 2)], vec![(2, 3), (2, 4), (3, 4)]]
        );
        assert_eq!(blocks_bruteforce(&path(3)), vec![vec![(0, 1)], vec![(1, 2)]]);
        assert_eq!(blocks_bruteforce(&cycle(4)).len(), 1);
    }

    /// Symmetry pruning never changes the answer (all graphs on 5 vertices).
    #[test]
    fn pruning_preserves_decisions() {
        let pairs: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::new(5, &edges).unwrap();
            for k in 0..=5 {
                assert_eq!(backtrack(&g, k, true), backtrack(&g, k, false), "{g:?} k={k}");
            }
            let chi = chromatic_number_bruteforce(&g).unwrap();
            assert!(is_k_colourable_bruteforce(&g, chi).unwrap());
            assert!(chi == 0 || !is_k_colourable_bruteforce(&g, chi - 1).unwrap());
        }
    }
}
