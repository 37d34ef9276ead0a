// Built with `wasm-pack build crates/web --target web --out-dir www/pkg`.
import init, { colourGraph, blockDecomposition, findPair } from "./pkg/brooks_web.js";

const SVG = "http://www.w3.org/2000/svg";
const SIZE = 480;
const PALETTE = [
  "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
  "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
];

const canvas = document.getElementById("canvas");
const report = document.getElementById("report");

function colourOf(c) {
  if (c <= 0) return "#fff";
  return PALETTE[(c - 1) % PALETTE.length];
}

function layout(n) {
  const r = SIZE / 2 - 24;
  return Array.from({ length: n }, (_, i) => {
    const t = (2 * Math.PI * i) / Math.max(n, 1) - Math.PI / 2;
    return [SIZE / 2 + r * Math.cos(t), SIZE / 2 + r * Math.sin(t)];
  });
}

function el(name, attrs) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

// fill(v) gives a vertex colour, hot(u, v) marks an edge, ring(v) marks a vertex.
function draw(graph, { fill = () => "#fff", hot = () => false, ring = () => false } = {}) {
  canvas.replaceChildren();
  const pos = layout(graph.n);
  const radius = graph.n > 120 ? 4 : 9;
  for (const [u, v] of graph.edges) {
    const line = el("line", { x1: pos[u][0], y1: pos[u][1], x2: pos[v][0], y2: pos[v][1] });
    if (hot(u, v)) line.classList.add("hot");
    canvas.append(line);
  }
  pos.forEach(([x, y], v) => {
    const circle = el("circle", { cx: x, cy: y, r: radius, fill: fill(v) });
    if (ring(v)) circle.classList.add("ring");
    const title = el("title", {});
    title.textContent = `vertex ${v + 1}`;
    circle.append(title);
    canvas.append(circle);
    if (radius > 5) {
      const label = el("text", { x, y });
      label.textContent = v + 1;
      canvas.append(label);
    }
  });
}

function showColouring(r) {
  draw(r.graph, { fill: (v) => colourOf(r.colours[v]) });
  const lines = [
    `n = ${r.graph.n}, m = ${r.graph.edges.length}, max degree ${r.graph.max_degree}`,
    `Brooks colouring: ${r.colours_used} colours (bound ${r.bound})`,
    `first-fit greedy in id order: ${r.greedy_used} colours`,
    "",
  ];
  r.components.forEach((c, i) => {
    lines.push(`component ${i + 1} (from vertex ${c.first_vertex + 1}): ${c.vertices} vertices, ${c.kind}, ` +
      `${c.colours_used} colours of ${c.bound}`);
    lines.push(`  blocks: ${c.blocks.join(", ")}`);
  });
  report.textContent = lines.join("\n");
}

function showBlocks(r) {
  const blockOf = new Map();
  r.blocks.forEach((b, i) => b.edges.forEach(([u, v]) => blockOf.set(`${u},${v}`, i)));
  const cuts = new Set(r.cut_vertices);
  const home = new Array(r.graph.n).fill(-1);
  r.blocks.forEach((b, i) => b.vertices.forEach((v) => { if (home[v] < 0) home[v] = i; }));
  draw(r.graph, {
    fill: (v) => (cuts.has(v) ? "#222" : colourOf(home[v] + 1)),
    ring: (v) => cuts.has(v),
  });
  // Colour edges by block so shared cut vertices stay readable.
  canvas.querySelectorAll("line").forEach((line, k) => {
    const [u, v] = r.graph.edges[k];
    line.style.stroke = colourOf(blockOf.get(`${u},${v}`) + 1);
    line.style.strokeWidth = 2;
  });
  const lines = [
    `${r.blocks.length} blocks, cut vertices: ${r.cut_vertices.map((v) => v + 1).join(" ") || "none"}`,
    "",
  ];
  r.blocks.forEach((b, i) => {
    lines.push(`block ${i + 1}: {${b.vertices.map((v) => v + 1).join(" ")}}, ${b.edges.length} edges`);
  });
  report.textContent = lines.join("\n");
}

function showPair(r) {
  const inBlock = new Set(r.block_vertices);
  const marked = new Set([r.a, r.b, r.v1]);
  draw(r.graph, {
    fill: (v) => (v === r.v1 ? "#4363d8" : v === r.a || v === r.b ? "#f58231" : inBlock.has(v) ? "#ddd" : "#fff"),
    ring: (v) => marked.has(v),
    hot: (u, v) => (u === r.v1 || v === r.v1) && (marked.has(u) && marked.has(v)),
  });
  report.textContent = [
    `block ${r.block + 1} with ${r.block_vertices.length} vertices`,
    `rule: ${r.rule}`,
    `a = ${r.a + 1}, b = ${r.b + 1} (orange): not adjacent`,
    `v1 = ${r.v1 + 1} (blue): adjacent to both`,
    "",
    "a and b get the same colour first; the rest of the block is",
    "coloured in reverse DFS order from v1, so v1 comes last and",
    "always has a colour to spare.",
  ].join("\n");
}

const OPS = {
  colour: [colourGraph, showColouring],
  blocks: [blockDecomposition, showBlocks],
  pair: [findPair, showPair],
};

function run(op) {
  const description = document.getElementById("description").value;
  const seed = Math.max(0, Number(document.getElementById("seed").value) | 0);
  const [call, show] = OPS[op];
  report.classList.remove("error");
  try {
    show(JSON.parse(call(description, seed)));
  } catch (e) {
    canvas.replaceChildren();
    report.classList.add("error");
    report.textContent = String(e);
  }
}

await init();
document.querySelectorAll("button[data-op]").forEach((b) => b.addEventListener("click", () => run(b.dataset.op)));
run("colour");
