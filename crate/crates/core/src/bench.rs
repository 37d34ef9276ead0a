//! Scaling benchmark: Brooks colouring of random connected graphs with
//! `m = 3n`, timed over repeats.

use std::io::{self, Write};
use std::time::Instant;

use thiserror::Error;

use crate::engine::{brooks_bound, brooks_colour};
use crate::generate::{random_connected_edges, GenError};
use crate::graph::Graph;
use crate::oracle::verify_colouring;

pub const CSV_HEADER: &str = "n,m,build_ns,colour_ns,colours,delta";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchmarkRecord {
    pub n: usize,
    pub m: usize,
    /// Median time to build the graph from its edge list.
    pub build_ns: u64,
    /// Median time of `brooks_colour`.
    pub colour_ns: u64,
    pub colours: usize,
    pub delta: usize,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("sizes must be ascending")]
    UnsortedSizes,
    #[error("repeats must be at least 1")]
    NoRepeats,
    #[error(transparent)]
    Generate(#[from] GenError),
    #[error("colouring of the n = {n} graph failed verification: {detail}")]
    Verification { n: usize, detail: String },
}

fn median(mut samples: Vec<u64>) -> u64 {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// Runs one size; exposed for callers that want their own sweep.
pub fn bench_size(n: usize, repeats: usize, seed: u64) -> Result<BenchmarkRecord, BenchError> {
    if repeats == 0 {
        return Err(BenchError::NoRepeats);
    }
    let edges = random_connected_edges(n, 3 * n, seed)?;
    let mut build = Vec::with_capacity(repeats);
    let mut colour = Vec::with_capacity(repeats);
    let mut record = None;
    for _ in 0..repeats {
        let start = Instant::now();
        let g = Graph::new(n, &edges).expect("generated edges are simple");
        build.push(start.elapsed().as_nanos() as u64);

        let start = Instant::now();
        let out = brooks_colour(&g);
        colour.push(start.elapsed().as_nanos() as u64);

        let violations = verify_colouring(&g, &out.colouring, Some(brooks_bound(&g)));
        if let Some(v) = violations.first() {
            return Err(BenchError::Verification {
                n,
                detail: v.to_string(),
            });
        }
        record.get_or_insert((g.m(), out.colouring.num_colours(), g.max_degree()));
    }
    let (m, colours, delta) = record.expect("at least one repeat");
    Ok(BenchmarkRecord {
        n,
        m,
        build_ns: median(build),
        colour_ns: median(colour),
        colours,
        delta,
    })
}

/// One record per size, each the median over `repeats` runs. Every
/// colouring is verified before its timing is kept.
pub fn bench(sizes: &[usize], repeats: usize, seed: u64) -> Result<Vec<BenchmarkRecord>, BenchError> {
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(BenchError::UnsortedSizes);
    }
    sizes
        .iter()
        .enumerate()
        .map(|(i, &n)| bench_size(n, repeats, seed.wrapping_add(i as u64)))
        .collect()
}

pub fn write_csv<W: Write>(records: &[BenchmarkRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n, r.m, r.build_ns, r.colour_ns, r.colours, r.delta
        )?;
    }
    Ok(())
}
