//! DIMACS edge-format graphs and the colouring output format.
//!
//! Graph files:
//!
//! ```text
//! c optional comments
//! p edge <n> <m>
//! e <u> <v>        (m lines, 1-based endpoints)
//! ```
//!
//! Colouring files are a `s col <k>` header followed by one `v <vertex>
//! <colour>` line per vertex, again 1-based.

use std::collections::HashSet;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::colouring::Colouring;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: problem line declares {declared} edges but {found} were given")]
    CountMismatch {
        line: usize,
        declared: usize,
        found: usize,
    },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl DimacsError {
    /// 1-based line the error refers to, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            DimacsError::Syntax { line, .. }
            | DimacsError::CountMismatch { line, .. }
            | DimacsError::Graph { line, .. } => Some(*line),
            DimacsError::Io(_) => None,
        }
    }
}

fn syntax<T>(line: usize, message: impl Into<String>) -> Result<T, DimacsError> {
    Err(DimacsError::Syntax {
        line,
        message: message.into(),
    })
}

fn number(line: usize, token: &str) -> Result<usize, DimacsError> {
    token
        .parse()
        .or_else(|_| syntax(line, format!("expected a non-negative integer, found {token:?}")))
}

/// Converts a 1-based id token to a 0-based vertex, checking `1..=n`.
fn vertex(line: usize, token: &str, n: usize) -> Result<usize, DimacsError> {
    match number(line, token)? {
        0 => syntax(line, "vertex ids are 1-based"),
        v if v > n => Err(DimacsError::Graph {
            line,
            source: GraphError::IdOutOfRange(v - 1),
        }),
        v => Ok(v - 1),
    }
}

pub fn parse_dimacs<R: BufRead>(reader: R) -> Result<Graph, DimacsError> {
    let mut problem: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;
    for (i, text) in reader.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let text = text?;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if problem.is_some() {
                    return syntax(line, "second problem line");
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return syntax(line, "problem line must be `p edge <n> <m>`");
                }
                problem = Some((number(line, tokens[2])?, number(line, tokens[3])?, line));
            }
            Some("e") => {
                let Some((n, _, _)) = problem else {
                    return syntax(line, "edge before the problem line");
                };
                if tokens.len() != 3 {
                    return syntax(line, "edge line must be `e <u> <v>`");
                }
                let u = vertex(line, tokens[1], n)?;
                let v = vertex(line, tokens[2], n)?;
                if u == v {
                    return Err(DimacsError::Graph {
                        line,
                        source: GraphError::SelfLoop(u),
                    });
                }
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    return Err(DimacsError::Graph {
                        line,
                        source: GraphError::DuplicateEdge(key.0, key.1),
                    });
                }
                edges.push(key);
            }
            Some(other) => return syntax(line, format!("unknown line type {other:?}")),
        }
    }
    let Some((n, m, _)) = problem else {
        return syntax(last_line.max(1), "missing problem line");
    };
    if edges.len() != m {
        return Err(DimacsError::CountMismatch {
            line: last_line,
            declared: m,
            found: edges.len(),
        });
    }
    Graph::new(n, &edges).map_err(|source| DimacsError::Graph {
        line: last_line,
        source,
    })
}

pub fn parse_dimacs_str(text: &str) -> Result<Graph, DimacsError> {
    parse_dimacs(text.as_bytes())
}

pub fn write_dimacs<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "p edge {} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("vertex {} is uncoloured", .0 + 1)]
    IncompleteColouring(usize),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Writes `s col <k>` then `v <vertex> <colour>` for every vertex.
pub fn emit_colouring<W: Write>(c: &Colouring, mut out: W) -> Result<(), EmitError> {
    if let Some(v) = c.as_slice().iter().position(|&col| col == 0) {
        return Err(EmitError::IncompleteColouring(v));
    }
    writeln!(out, "s col {}", c.num_colours())?;
    for (v, &colour) in c.as_slice().iter().enumerate() {
        writeln!(out, "v {} {}", v + 1, colour)?;
    }
    Ok(())
}

/// Reads a colouring of an `n`-vertex graph. Vertices without a `v` line
/// are left uncoloured.
pub fn parse_colouring<R: BufRead>(reader: R, n: usize) -> Result<Colouring, DimacsError> {
    let mut colouring = Colouring::uncoloured(n);
    let mut header: Option<(usize, usize)> = None;
    let mut last_line = 0;
    for (i, text) in reader.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let text = text?;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => {}
            Some("s") => {
                if header.is_some() {
                    return syntax(line, "second solution line");
                }
                if tokens.len() != 3 || tokens[1] != "col" {
                    return syntax(line, "solution line must be `s col <k>`");
                }
                header = Some((number(line, tokens[2])?, line));
            }
            Some("v") => {
                if header.is_none() {
                    return syntax(line, "vertex line before `s col`");
                }
                if tokens.len() != 3 {
                    return syntax(line, "vertex line must be `v <vertex> <colour>`");
                }
                let v = vertex(line, tokens[1], n)?;
                let colour = number(line, tokens[2])?;
                if colour == 0 {
                    return syntax(line, "colours are positive");
                }
                if colouring.get(v) != 0 {
                    return syntax(line, format!("vertex {} coloured twice", v + 1));
                }
                colouring.set(v, colour);
            }
            Some(other) => return syntax(line, format!("unknown line type {other:?}")),
        }
    }
    let Some((declared, line)) = header else {
        return syntax(last_line.max(1), "missing `s col` line");
    };
    if declared != colouring.num_colours() {
        return syntax(
            line,
            format!(
                "header declares {declared} colours but the largest colour is {}",
                colouring.num_colours()
            ),
        );
    }
    Ok(colouring)
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::testgraphs::arb_graph;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn graph_round_trip((n, edges) in arb_graph(15)) {
            let g = Graph::new(n, &edges).unwrap();
            let mut out = Vec::new();
            write_dimacs(&g, &mut out).unwrap();
            prop_assert_eq!(parse_dimacs(&out[..]).unwrap(), g);
        }
    }
}
