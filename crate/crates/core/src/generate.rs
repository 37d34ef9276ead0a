//! Deterministic graph families for tests, benchmarks and the CLI.

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad parameters: {0}")]
    BadParams(String),
}

fn bad<T>(msg: impl Into<String>) -> Result<T, GenError> {
    Err(GenError::BadParams(msg.into()))
}

fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::new(n, edges).expect("generators emit simple graphs")
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle { n: usize },
    Complete { n: usize },
    /// K_{1,1,n-2}.
    Split { n: usize },
    RandomConnected { n: usize, m: usize },
    BlockChain { blocks: usize, size: usize },
    /// Three internally disjoint paths of the given lengths between two hubs.
    Theta { p: usize, q: usize, r: usize },
    Petersen,
}

impl Family {
    pub const KINDS: [&'static str; 7] = [
        "cycle",
        "complete",
        "split",
        "random",
        "block-chain",
        "theta",
        "petersen",
    ];

    /// Parses a family name and its positional parameters, e.g.
    /// `("random", [100, 300])`.
    pub fn parse(kind: &str, params: &[usize]) -> Result<Family, GenError> {
        let arity = |k: usize| -> Result<(), GenError> {
            if params.len() == k {
                Ok(())
            } else {
                bad(format!("{kind} takes {k} parameter(s), got {}", params.len()))
            }
        };
        let family = match kind {
            "cycle" => {
                arity(1)?;
                Family::Cycle { n: params[0] }
            }
            "complete" => {
                arity(1)?;
                Family::Complete { n: params[0] }
            }
            "split" => {
                arity(1)?;
                Family::Split { n: params[0] }
            }
            "random" | "random-connected" => {
                arity(2)?;
                Family::RandomConnected {
                    n: params[0],
                    m: params[1],
                }
            }
            "block-chain" => {
                arity(2)?;
                Family::BlockChain {
                    blocks: params[0],
                    size: params[1],
                }
            }
            "theta" => {
                arity(3)?;
                Family::Theta {
                    p: params[0],
                    q: params[1],
                    r: params[2],
                }
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            _ => return bad(format!("unknown graph kind {kind:?}")),
        };
        Ok(family)
    }

    /// Builds the graph; `seed` only matters for the random families.
    pub fn generate(&self, seed: u64) -> Result<Graph, GenError> {
        match *self {
            Family::Cycle { n } => cycle(n),
            Family::Complete { n } => complete(n),
            Family::Split { n } => split(n),
            Family::RandomConnected { n, m } => random_connected(n, m, seed),
            Family::BlockChain { blocks, size } => block_chain(blocks, size, seed),
            Family::Theta { p, q, r } => theta(p, q, r),
            Family::Petersen => Ok(petersen()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle { n } => write!(f, "cycle({n})"),
            Family::Complete { n } => write!(f, "complete({n})"),
            Family::Split { n } => write!(f, "split({n})"),
            Family::RandomConnected { n, m } => write!(f, "random_connected({n}, {m})"),
            Family::BlockChain { blocks, size } => write!(f, "block_chain({blocks}, {size})"),
            Family::Theta { p, q, r } => write!(f, "theta({p}, {q}, {r})"),
            Family::Petersen => write!(f, "petersen"),
        }
    }
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return bad("a cycle needs at least 3 vertices");
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Ok(build(n, &edges))
}

pub fn complete(n: usize) -> Result<Graph, GenError> {
    if n == 0 {
        return bad("a complete graph needs at least 1 vertex");
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(build(n, &edges))
}

/// K_{1,1,n-2}: hubs 0 and 1 adjacent to each other and to every other
/// vertex.
pub fn split(n: usize) -> Result<Graph, GenError> {
    if n < 4 {
        return bad("split(n) needs n >= 4");
    }
    let mut edges = vec![(0, 1)];
    for v in 2..n {
        edges.push((0, v));
        edges.push((1, v));
    }
    Ok(build(n, &edges))
}

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// Edge list of a uniformly random labelled tree (Prüfer decoding).
fn random_tree(n: usize, rng: &mut impl Rng) -> Vec<(Vertex, Vertex)> {
    match n {
        0 | 1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &v in &code {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Edge list for [`random_connected`].
pub fn random_connected_edges(
    n: usize,
    m: usize,
    seed: u64,
) -> Result<Vec<(Vertex, Vertex)>, GenError> {
    if n == 0 {
        return bad("random_connected needs at least 1 vertex");
    }
    let max = n * (n - 1) / 2;
    if m < n - 1 || m > max {
        return bad(format!("m must lie in [{}, {max}] for n = {n}", n - 1));
    }
    let mut rng = rng(seed);
    let mut edges = random_tree(n, &mut rng);
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    let mut present: HashSet<(usize, usize)> = edges.iter().map(|&(u, v)| key(u, v)).collect();
    let extra = m - edges.len();
    let free = max - edges.len();
    if extra * 2 <= free {
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && present.insert(key(u, v)) {
                edges.push(key(u, v));
            }
        }
    } else {
        let candidates: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !present.contains(e))
            .collect();
        edges.extend(candidates.choose_multiple(&mut rng, extra).copied());
    }
    Ok(edges)
}

/// A uniform random spanning tree on `n` vertices plus `m - (n-1)` distinct
/// random extra edges.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    Ok(build(n, &random_connected_edges(n, m, seed)?))
}

/// `blocks` random biconnected blocks of `size` vertices each (a single
/// edge when `size` is 2), each glued at one vertex to a random vertex of
/// the previous block. Vertex ids are shuffled.
pub fn block_chain(blocks: usize, size: usize, seed: u64) -> Result<Graph, GenError> {
    if blocks == 0 || size < 2 {
        return bad("block_chain needs at least one block of at least 2 vertices");
    }
    let mut rng = rng(seed);
    let n = blocks * (size - 1) + 1;
    let mut edges = Vec::new();
    let mut members: Vec<usize> = (0..size).collect();
    let mut next_vertex = size;
    for b in 0..blocks {
        if b > 0 {
            let glue = *members.choose(&mut rng).unwrap();
            members = std::iter::once(glue)
                .chain(next_vertex..next_vertex + size - 1)
                .collect();
            next_vertex += size - 1;
        }
        if size == 2 {
            edges.push((members[0], members[1]));
            continue;
        }
        let mut ring = members.clone();
        ring.shuffle(&mut rng);
        for i in 0..size {
            edges.push((ring[i], ring[(i + 1) % size]));
        }
        for i in 0..size {
            for j in i + 2..size {
                if (i, j) != (0, size - 1) && rng.gen_bool(0.5) {
                    edges.push((ring[i], ring[j]));
                }
            }
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (label[u], label[v])).collect();
    Ok(build(n, &edges))
}

/// Hubs 0 and 1 joined by three internally disjoint paths with `p`, `q`
/// and `r` edges.
pub fn theta(p: usize, q: usize, r: usize) -> Result<Graph, GenError> {
    let lengths = [p, q, r];
    if lengths.contains(&0) || lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return bad("theta path lengths must be >= 1 with at most one equal to 1");
    }
    let n = 2 + lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Ok(build(n, &edges))
}
