import init, { trajectory, ensemble, densities } from "./pkg/fuzzy_rabi_web.js";

const $ = (id) => document.getElementById(id);

const families = {
  "constant": { name: "T_eff", min: 0.5, max: 20, step: 0.1, value: 5 },
  "time-gaussian": { name: "δT", min: 0.05, max: 0.5, step: 0.01, value: 0.2 },
  "energy-gaussian": { name: "δE", min: 0.1, max: 0.6, step: 0.01, value: 0.3 },
};

function setFamily() {
  const f = families[$("kind").value];
  const p = $("param");
  Object.assign(p, { min: f.min, max: f.max, step: f.step, value: f.value });
  $("param-name").textContent = f.name;
}

const current = () => [$("kind").value, Number($("param").value), BigInt($("seed").value || 0)];

function status(msg) {
  $("status").textContent = msg || "";
}

function guard(fn) {
  return () => {
    try {
      status("");
      fn();
    } catch (e) {
      status(e.message || String(e));
    }
  };
}

function drawTrajectory() {
  const [kind, param, seed] = current();
  const idx = BigInt($("index").value);
  $("param-out").value = param;
  $("index-out").value = $("index").value;
  const tr = trajectory(kind, param, seed, idx);
  const c = $("traj");
  const g = c.getContext("2d");
  const w = c.width, h = c.height, pad = 28;
  g.clearRect(0, 0, w, h);
  const t = tr.times, tmax = t[t.length - 1];
  const x = (v) => pad + (v / tmax) * (w - 2 * pad);
  // Energies span [-0.5, 1.5]; |c2|² shares the axis with E1 = 0 and E2 = 1.
  const y = (v) => h - pad - ((v + 0.5) / 2) * (h - 2 * pad);
  g.strokeStyle = "#eee";
  for (const level of [0, 1]) {
    g.beginPath(); g.moveTo(pad, y(level)); g.lineTo(w - pad, y(level)); g.stroke();
  }
  g.fillStyle = "#666";
  g.fillText("E₁", 4, y(0) + 4);
  g.fillText("E₂", 4, y(1) + 4);
  const line = (ys, color, width) => {
    g.strokeStyle = color; g.lineWidth = width; g.beginPath();
    ys.forEach((v, i) => (i ? g.lineTo(x(t[i]), y(v)) : g.moveTo(x(t[i]), y(v))));
    g.stroke();
  };
  line(tr.readout, "#999", 1);
  line(tr.smoothed, "#07c", 2);
  line(tr.excitation, "#c30", 2);
  g.lineWidth = 1;
  $("traj-info").textContent =
    `weight ${tr.weight.toExponential(3)}, final |c2|² ${tr.finalExcitation.toFixed(4)}`;
  tr.free();
}

function showMetrics(m) {
  const rows = [
    ["softness s", m.softness, m.softnessSe],
    ["deviation d / ΔE", m.deviation, m.deviationSe],
    ["reliability r", m.reliability, m.reliabilitySe],
    ["effective samples", m.effectiveSampleSize, NaN],
  ];
  $("metrics").innerHTML = "<tr><th></th><th>value</th><th>std. error</th></tr>" + rows
    .map(([k, v, se]) => `<tr><td>${k}</td><td>${v.toFixed(4)}</td><td>${isNaN(se) ? "" : se.toFixed(4)}</td></tr>`)
    .join("");
}

function paintGrid(canvas, cells, bins) {
  canvas.width = bins; canvas.height = bins;
  const g = canvas.getContext("2d");
  const img = g.createImageData(bins, bins);
  for (let v = 0; v < bins; v++) {
    for (let t = 0; t < bins; t++) {
      const gray = Math.round(255 * (1 - cells[v * bins + t]));
      const o = 4 * ((bins - 1 - v) * bins + t);
      img.data[o] = img.data[o + 1] = img.data[o + 2] = gray;
      img.data[o + 3] = 255;
    }
  }
  g.putImageData(img, 0, 0);
}

function runMetrics() {
  const [kind, param, seed] = current();
  const m = ensemble(kind, param, seed, Number($("samples").value));
  showMetrics(m);
  m.free();
}

function runDensity() {
  const [kind, param, seed] = current();
  const d = densities(kind, param, seed, Number($("samples").value), 40);
  paintGrid($("grid-readout"), d.readout, d.bins);
  paintGrid($("grid-excitation"), d.excitation, d.bins);
  const m = d.metrics;
  showMetrics(m);
  m.free();
  d.free();
}

function later(fn) {
  return () => {
    status("running…");
    setTimeout(guard(fn), 10);
  };
}

await init();
setFamily();
$("kind").addEventListener("change", () => { setFamily(); guard(drawTrajectory)(); });
for (const id of ["param", "index", "seed"]) $(id).addEventListener("input", guard(drawTrajectory));
$("run-metrics").addEventListener("click", later(runMetrics));
$("run-density").addEventListener("click", later(runDensity));
guard(drawTrajectory)();
