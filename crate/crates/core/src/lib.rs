//! Linear-time Brooks colouring.
//!
//! Every simple graph with maximum degree Δ can be properly coloured with Δ
//! colours unless a connected component is a complete graph or an odd
//! cycle, which need Δ+1. [`brooks_colour`] finds such a colouring in
//! `O(n + m)` time.
//!
//! ```
//! use brooks::{brooks_colour, generate, verify_colouring};
//!
//! let g = generate::petersen();
//! let out = brooks_colour(&g);
//! assert_eq!(out.colouring.num_colours(), 3);
//! assert!(verify_colouring(&g, &out.colouring, Some(3)).is_empty());
//! ```

pub mod bench;
pub mod engine;
pub mod colouring;
pub mod connectivity;
pub mod dimacs;
pub mod generate;
pub mod graph;
pub mod oracle;

#[cfg(test)]
mod testgraphs;

pub use crate::engine::{
    brooks_bound, brooks_colour, classify_block, find_ab, merge_block_colourings,
    sequential_colour, ABPair, BrooksColouring, Classification, ComponentKind, ComponentReport,
    PairRule,
};
pub use crate::colouring::{colour_complete, colour_cycle, greedy_colour, ColourError, Colouring};
pub use crate::connectivity::{
    biconnected_components, block_cut_forest, connected_components, end_blocks, is_biconnected,
    BlockCutForest, BlockDecomposition,
};
pub use crate::graph::{Graph, GraphError, GraphView, Vertex};
pub use crate::oracle::{verify_colouring, Violation};
