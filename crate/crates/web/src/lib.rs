//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes a graph description such as `"theta 2 3 4"` or
//! `"random 30 60"` (family name then its integer parameters) and a seed,
//! and returns a JSON document. The plain-Rust functions behind the exports
//! are public too, so they can be tested natively.

use brooks::connectivity::Block;
use brooks::engine::find_ab_with_rule;
use brooks::generate::Family;
use brooks::{
    biconnected_components, brooks_colour, greedy_colour, verify_colouring, Graph, GraphView,
    Vertex,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest graph the demo will draw.
pub const MAX_VERTICES: usize = 400;

#[derive(Debug, Serialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    pub max_degree: usize,
}

#[derive(Debug, Serialize)]
pub struct ColourResult {
    pub graph: GraphJson,
    pub colours: Vec<usize>,
    pub colours_used: usize,
    pub bound: usize,
    pub greedy: Vec<usize>,
    pub greedy_used: usize,
    pub components: Vec<ComponentJson>,
}

#[derive(Debug, Serialize)]
pub struct ComponentJson {
    pub first_vertex: Vertex,
    pub vertices: usize,
    pub kind: String,
    pub bound: usize,
    pub colours_used: usize,
    pub blocks: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct BlockJson {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Serialize)]
pub struct DecompositionResult {
    pub graph: GraphJson,
    pub blocks: Vec<BlockJson>,
    pub cut_vertices: Vec<Vertex>,
}

#[derive(Debug, Serialize)]
pub struct PairResult {
    pub graph: GraphJson,
    /// Index into the block list of the decomposition.
    pub block: usize,
    pub block_vertices: Vec<Vertex>,
    pub rule: String,
    pub a: Vertex,
    pub b: Vertex,
    pub v1: Vertex,
}

/// Parses `"<kind> <p1> <p2> ..."` and builds the graph.
pub fn build_graph(description: &str, seed: u64) -> Result<Graph, String> {
    let mut tokens = description.split_whitespace();
    let kind = tokens.next().ok_or("empty graph description")?;
    let params = tokens
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad parameter {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let family = Family::parse(kind, &params).map_err(|e| e.to_string())?;
    let g = family.generate(seed).map_err(|e| e.to_string())?;
    if g.n() > MAX_VERTICES {
        return Err(format!("{family} has {} vertices; the demo draws at most {MAX_VERTICES}", g.n()));
    }
    Ok(g)
}

fn graph_json(g: &Graph) -> GraphJson {
    GraphJson {
        n: g.n(),
        edges: g.edges().collect(),
        max_degree: g.max_degree(),
    }
}

pub fn colour(description: &str, seed: u64) -> Result<ColourResult, String> {
    let g = build_graph(description, seed)?;
    let out = brooks_colour(&g);
    if let Some(v) = verify_colouring(&g, &out.colouring, None).first() {
        return Err(format!("internal error: {v}"));
    }
    let order: Vec<Vertex> = (0..g.n()).collect();
    let greedy = greedy_colour(&g, &order).map_err(|e| e.to_string())?;
    let components = out
        .components
        .iter()
        .map(|c| ComponentJson {
            first_vertex: c.first_vertex,
            vertices: c.vertices,
            kind: format!("{:?}", c.kind),
            bound: c.bound,
            colours_used: c.colours_used,
            blocks: c.blocks.iter().map(|b| format!("{b:?}")).collect(),
        })
        .collect();
    Ok(ColourResult {
        graph: graph_json(&g),
        colours_used: out.colouring.num_colours(),
        bound: brooks::brooks_bound(&g),
        colours: out.colouring.into_vec(),
        greedy_used: greedy.num_colours(),
        greedy: greedy.into_vec(),
        components,
    })
}

fn block_json(block: &Block) -> BlockJson {
    BlockJson {
        vertices: block.vertices.clone(),
        edges: block.edges.clone(),
    }
}

pub fn decompose(description: &str, seed: u64) -> Result<DecompositionResult, String> {
    let g = build_graph(description, seed)?;
    let decomp = biconnected_components(&g.view());
    Ok(DecompositionResult {
        graph: graph_json(&g),
        blocks: decomp.blocks.iter().map(block_json).collect(),
        cut_vertices: decomp.cut_vertices(),
    })
}

/// The distance-two pair of the first block that needs one. Complete
/// blocks and cycles are coloured directly, so they have no pair.
pub fn explain_pair(description: &str, seed: u64) -> Result<PairResult, String> {
    let g = build_graph(description, seed)?;
    let decomp = biconnected_components(&g.view());
    for (index, block) in decomp.blocks.iter().enumerate() {
        if block.vertices.len() < 4 {
            continue;
        }
        let outside: Vec<Vertex> = (0..g.n()).filter(|&v| !block.contains(v)).collect();
        let view = GraphView::new(&g).without(&outside);
        if let Ok((pair, rule)) = find_ab_with_rule(&view) {
            return Ok(PairResult {
                graph: graph_json(&g),
                block: index,
                block_vertices: block.vertices.clone(),
                rule: format!("{rule:?}"),
                a: pair.a,
                b: pair.b,
                v1: pair.v1,
            });
        }
    }
    Err("every block is a complete graph or a cycle, so no pair is needed".into())
}

fn to_js<T: Serialize>(result: Result<T, String>) -> Result<String, JsValue> {
    result
        .and_then(|value| serde_json::to_string(&value).map_err(|e| e.to_string()))
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = colourGraph)]
pub fn colour_graph(description: &str, seed: u32) -> Result<String, JsValue> {
    to_js(colour(description, u64::from(seed)))
}

#[wasm_bindgen(js_name = blockDecomposition)]
pub fn block_decomposition(description: &str, seed: u32) -> Result<String, JsValue> {
    to_js(decompose(description, u64::from(seed)))
}

#[wasm_bindgen(js_name = findPair)]
pub fn find_pair(description: &str, seed: u32) -> Result<String, JsValue> {
    to_js(explain_pair(description, u64::from(seed)))
}
