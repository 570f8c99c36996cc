import init, { grid_view, grid_coloring, hypercube_layered } from "./pkg/xdist_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function hue(i, total) {
  return `hsl(${Math.round((360 * i) / Math.max(total, 1))}, 65%, 62%)`;
}

function fail(statusId, e) {
  const el = $(statusId);
  el.textContent = String(e);
  el.className = "status err";
}

function ok(statusId, text) {
  const el = $(statusId);
  el.textContent = text;
  el.className = "status";
}

// Grid panel

let gridState = null;

function drawGrid(selected) {
  const { data, canvas } = gridState;
  const ctx = canvas.getContext("2d");
  const m = data.m;
  const cell = canvas.width / m;
  const marked = new Set(selected === null ? [] : data.neighbors[selected]);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let v = 0; v < m * m; v++) {
    const x = (v % m) * cell + cell / 2;
    const y = Math.floor(v / m) * cell + cell / 2;
    ctx.beginPath();
    ctx.arc(x, y, cell * 0.3, 0, 2 * Math.PI);
    ctx.fillStyle = hue(data.component[v], data.components);
    ctx.fill();
    if (v === selected || marked.has(v)) {
      ctx.lineWidth = v === selected ? 4 : 2.5;
      ctx.strokeStyle = v === selected ? "#000" : "#333";
      ctx.stroke();
    }
  }
  if (selected !== null) {
    ctx.strokeStyle = "rgba(0,0,0,0.35)";
    ctx.lineWidth = 1;
    const sx = (selected % m) * cell + cell / 2;
    const sy = Math.floor(selected / m) * cell + cell / 2;
    for (const u of data.neighbors[selected]) {
      ctx.beginPath();
      ctx.moveTo(sx, sy);
      ctx.lineTo((u % m) * cell + cell / 2, Math.floor(u / m) * cell + cell / 2);
      ctx.stroke();
    }
  }
}

function runGrid() {
  try {
    const data = JSON.parse(grid_view($("grid-kind").value, num("grid-m"), num("grid-p")));
    gridState = { data, canvas: $("grid-canvas") };
    ok("grid-status", `${data.m * data.m} vertices, ${data.edges} edges, ${data.components} components`);
    drawGrid(null);
  } catch (e) {
    fail("grid-status", e);
  }
}

$("grid-canvas").addEventListener("click", (ev) => {
  if (!gridState) return;
  const { data, canvas } = gridState;
  const rect = canvas.getBoundingClientRect();
  const cell = rect.width / data.m;
  const col = Math.floor((ev.clientX - rect.left) / cell);
  const row = Math.floor((ev.clientY - rect.top) / cell);
  if (col < 0 || row < 0 || col >= data.m || row >= data.m) return;
  const v = row * data.m + col;
  drawGrid(v);
  ok("grid-status", `vertex (${row}, ${col}): ${data.neighbors[v].length} neighbors, component ${data.component[v]} of ${data.components}`);
});

// Block coloring panel

const BLOCK_COLORS = ["#e41a1c", "#377eb8", "#4daf4a", "#ff7f00"];

function runBlock() {
  try {
    const data = JSON.parse(grid_coloring(num("block-m"), num("block-p")));
    const canvas = $("block-canvas");
    const ctx = canvas.getContext("2d");
    const cell = canvas.width / data.m;
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    data.colors.forEach((c, v) => {
      ctx.fillStyle = BLOCK_COLORS[(c - 1) % BLOCK_COLORS.length];
      ctx.fillRect((v % data.m) * cell + 1, Math.floor(v / data.m) * cell + 1, cell - 2, cell - 2);
    });
    ok("block-status", `${data.colors_used} colors, ${data.proper ? "proper" : `improper: ${data.violations.length} conflicts`}`);
  } catch (e) {
    fail("block-status", e);
  }
}

// Hypercube panel

function runCube() {
  const table = $("cube-levels");
  table.innerHTML = "";
  ok("cube-status", "working...");
  // let the status repaint before the solver runs
  setTimeout(() => {
    try {
      const data = JSON.parse(hypercube_layered(num("cube-n"), $("cube-variant").value));
      const levels = Array.from({ length: data.n + 1 }, () => []);
      data.words.forEach((w, v) => levels[[...w].filter((b) => b === "1").length].push(v));
      levels.forEach((vs, j) => {
        const row = table.insertRow();
        row.insertCell().textContent = `L${j}`;
        const cell = row.insertCell();
        for (const v of vs) {
          const chip = document.createElement("span");
          chip.className = "chip";
          chip.title = `${data.words[v]} -> color ${data.colors[v]}`;
          chip.textContent = data.colors[v];
          chip.style.background = hue(data.colors[v] - 1, data.colors_used);
          cell.appendChild(chip);
        }
      });
      const extra = [];
      if (data.uncovered_levels.length) extra.push(`levels without a rule: ${data.uncovered_levels.join(", ")}`);
      if (data.cleared_levels.length) extra.push(`levels recolored after conflicts: ${data.cleared_levels.join(", ")}`);
      ok(
        "cube-status",
        `Q_${data.n} at distance ${data.p}: ${data.colors_used} colors (${data.rule_colors} from the rules, ` +
          `${data.fresh_colors} added), ${data.proper ? "proper" : "improper"}` +
          (extra.length ? `\n${extra.join("\n")}` : ""),
      );
    } catch (e) {
      fail("cube-status", e);
    }
  }, 10);
}

await init();
$("grid-go").addEventListener("click", runGrid);
$("block-go").addEventListener("click", runBlock);
$("cube-go").addEventListener("click", runCube);
runGrid();
runBlock();
