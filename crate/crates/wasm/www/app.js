import init, { enumerator, lattice, pipeline } from "./pkg/indsublab_wasm.js";

const PARAMETERS = [
  "connected", "disconnected", "component-count", "edge-count", "edge-power:2", "max-degree",
  "chromatic-number", "universal-vertex-count", "hamiltonian-path-count", "perfect-matching-count",
  "clique-indicator", "independent-set-indicator", "independence-number", "edge-parity",
];

const $ = (id) => document.getElementById(id);

function fillSelect(sel, names, chosen) {
  for (const name of names) {
    const opt = document.createElement("option");
    opt.textContent = name;
    opt.selected = name === chosen;
    sel.appendChild(opt);
  }
}

// vertices on a circle
function drawGraph(n, edges, caption, size = 110) {
  const ns = "http://www.w3.org/2000/svg";
  const r = size / 2 - 8;
  const pos = Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / Math.max(n, 1) - Math.PI / 2;
    return [size / 2 + r * Math.cos(a), size / 2 + r * Math.sin(a)];
  });
  const svg = document.createElementNS(ns, "svg");
  svg.setAttribute("width", size);
  svg.setAttribute("height", size);
  for (const [u, v] of edges) {
    const line = document.createElementNS(ns, "line");
    line.setAttribute("x1", pos[u][0]);
    line.setAttribute("y1", pos[u][1]);
    line.setAttribute("x2", pos[v][0]);
    line.setAttribute("y2", pos[v][1]);
    svg.appendChild(line);
  }
  for (const [x, y] of pos) {
    const c = document.createElementNS(ns, "circle");
    c.setAttribute("cx", x);
    c.setAttribute("cy", y);
    c.setAttribute("r", 3.5);
    svg.appendChild(c);
  }
  const fig = document.createElement("figure");
  fig.appendChild(svg);
  const cap = document.createElement("figcaption");
  cap.textContent = caption;
  fig.appendChild(cap);
  return fig;
}

function show(out, build) {
  out.replaceChildren();
  try {
    build(out);
  } catch (e) {
    const p = document.createElement("p");
    p.className = "error";
    p.textContent = e.message ?? String(e);
    out.appendChild(p);
  }
}

function pre(text) {
  const el = document.createElement("pre");
  el.textContent = text;
  return el;
}

function runEnumerator(ev) {
  ev?.preventDefault();
  show($("ae-out"), (out) => {
    const r = JSON.parse(enumerator($("ae-phi").value, $("ae-graph").value));
    out.appendChild(drawGraph(r.n, r.edges, `${r.graph6} (canonical ${r.canonical})`, 140));
    const rows = r.by_size.map((s, i) => `  |A| = ${i}: ${s}`).join("\n");
    out.appendChild(pre(`sums of the parameter over edge subsets A:\n${rows}\nalternating enumerator: ${r.value}`));
  });
}

function runLattice(ev) {
  ev?.preventDefault();
  show($("fp-out"), (out) => {
    const r = JSON.parse(lattice(Number($("fp-p").value), Number($("fp-m").value)));
    out.appendChild(pre(`K_${r.n}: ${r.orbits} edge orbits, ${r.points.length} fixed points`));
    const box = document.createElement("div");
    box.className = "graphs";
    for (const pt of r.points) {
      const tuple = pt.tuple.map((a) => `{${a.join(",")}}`).join(" ");
      box.appendChild(drawGraph(r.n, pt.edges, `${tuple} · level ${pt.level}`));
    }
    out.appendChild(box);
  });
}

function runPipeline(ev) {
  ev?.preventDefault();
  show($("pl-out"), (out) => {
    const r = JSON.parse(pipeline(Number($("pl-l").value), $("pl-phi").value, $("pl-graph").value));
    out.appendChild(drawGraph(r.f_n, r.f_edges, `pattern F = ${r.f}`));
    out.appendChild(pre(
      `cliques via oracle: ${r.count}\ndirect count:       ${r.direct}\n` +
      `oracle calls: ${r.oracle_calls}, largest query: ${r.max_query_size} vertices (bound ${r.size_bound})`,
    ));
  });
}

await init();
fillSelect($("ae-phi"), PARAMETERS, "connected");
fillSelect($("pl-phi"), PARAMETERS, "disconnected");
$("ae-form").addEventListener("submit", runEnumerator);
$("fp-form").addEventListener("submit", runLattice);
$("pl-form").addEventListener("submit", runPipeline);
runEnumerator();
runLattice();
