import init, {
  simplex_distance_field,
  power_trace,
  transfer_eigenfunction,
} from "./pkg/hilbert_cone_demo.js";

const H = Math.sqrt(3) / 2;

function show(id, text, isError = false) {
  const el = document.getElementById(id);
  el.textContent = text;
  el.className = isError ? "out err" : "out";
}

function drawField(cx, cy) {
  const canvas = document.getElementById("field");
  const w = canvas.width, h = canvas.height;
  const d = simplex_distance_field(cx, cy, w, h);
  const ctx = canvas.getContext("2d");
  const img = ctx.createImageData(w, h);
  for (let i = 0; i < d.length; i++) {
    const v = d[i];
    let r = 255, g = 255, b = 255;
    if (!Number.isNaN(v)) {
      const band = Math.floor(v / 0.25);
      const t = Math.exp(-v / 2);
      const shade = band % 2 === 0 ? 1 : 0.85;
      r = 40 + 200 * t * shade;
      g = 80 + 150 * t * shade;
      b = 200 * shade;
    }
    img.data.set([r, g, b, 255], 4 * i);
  }
  ctx.putImageData(img, 0, 0);
  ctx.fillStyle = "#000";
  ctx.beginPath();
  ctx.arc(cx * w, (1 - cy / H) * h, 3, 0, 2 * Math.PI);
  ctx.fill();
  show("field-out", `centre (${cx.toFixed(3)}, ${cy.toFixed(3)})`);
}

function logPlot(canvas, series) {
  const ctx = canvas.getContext("2d");
  const w = canvas.width, h = canvas.height, pad = 30;
  ctx.clearRect(0, 0, w, h);
  const all = series.flatMap((s) => Array.from(s.data)).filter((v) => v > 0);
  if (all.length === 0) return;
  const lo = Math.log10(Math.min(...all)), hi = Math.log10(Math.max(...all));
  const n = Math.max(...series.map((s) => s.data.length));
  const x = (k) => pad + (k / Math.max(n - 1, 1)) * (w - 2 * pad);
  const y = (v) => h - pad - ((Math.log10(v) - lo) / Math.max(hi - lo, 1e-9)) * (h - 2 * pad);
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w - 2 * pad, h - 2 * pad);
  ctx.fillStyle = "#333";
  ctx.fillText(`1e${hi.toFixed(0)}`, 2, pad);
  ctx.fillText(`1e${lo.toFixed(0)}`, 2, h - pad);
  for (const s of series) {
    ctx.strokeStyle = s.color;
    ctx.beginPath();
    let started = false;
    s.data.forEach((v, k) => {
      if (!(v > 0)) return;
      if (started) ctx.lineTo(x(k), y(v));
      else ctx.moveTo(x(k), y(v));
      started = true;
    });
    ctx.stroke();
  }
}

function runPower() {
  const rows = document.getElementById("matrix").value.trim().split("\n")
    .map((r) => r.trim().split(/[\s,]+/).map(Number));
  const n = rows.length;
  try {
    const t = power_trace(new Float64Array(rows.flat()), n, 1e-12);
    const res = t.residuals;
    const bound = res.map((_, k) => res[0] * Math.pow(t.kappa, k));
    logPlot(document.getElementById("power"), [
      { data: res, color: "#1f5fbf" },
      { data: bound, color: "#d04020" },
    ]);
    show("power-out",
      `eigenvalue ${t.eigenvalue}\n` +
      `delta ${t.delta}  kappa ${t.kappa}\n` +
      `iterations ${res.length}  certified ${t.certified}\n` +
      `eigenvector [${Array.from(t.eigenvector).map((v) => v.toFixed(6)).join(", ")}]`);
    t.free();
  } catch (e) {
    show("power-out", String(e), true);
  }
}

function runTransfer() {
  const val = (id) => Number(document.getElementById(id).value);
  try {
    const t = transfer_eigenfunction(val("depth"), val("p0"), val("p1"), val("q0"), val("q1"), 1, 4);
    const pts = t.points, v = t.values;
    const canvas = document.getElementById("transfer");
    const ctx = canvas.getContext("2d");
    const w = canvas.width, h = canvas.height, pad = 30;
    ctx.clearRect(0, 0, w, h);
    const lo = Math.min(...v), hi = Math.max(...v);
    const span = Math.max(hi - lo, 1e-12);
    ctx.strokeStyle = "#999";
    ctx.strokeRect(pad, pad, w - 2 * pad, h - 2 * pad);
    ctx.strokeStyle = "#1f5fbf";
    ctx.beginPath();
    pts.forEach((s, i) => {
      const px = pad + s * (w - 2 * pad);
      const py = h - pad - ((v[i] - lo) / span) * (h - 2 * pad);
      if (i === 0) ctx.moveTo(px, py);
      else ctx.lineTo(px, py);
    });
    ctx.stroke();
    show("transfer-out",
      `eigenvalue ${t.eigenvalue}\nkappa ${t.kappa}\n` +
      `iterations ${t.residuals.length}  range [${lo.toFixed(6)}, ${hi.toFixed(6)}]`);
    t.free();
  } catch (e) {
    show("transfer-out", String(e), true);
  }
}

await init();

drawField(0.5, H / 3);
document.getElementById("field").addEventListener("click", (ev) => {
  const c = ev.currentTarget;
  const r = c.getBoundingClientRect();
  const px = (ev.clientX - r.left) / r.width;
  const py = (1 - (ev.clientY - r.top) / r.height) * H;
  drawField(px, py);
});
document.getElementById("power-run").addEventListener("click", runPower);
document.getElementById("transfer-run").addEventListener("click", runTransfer);
runPower();
runTransfer();
