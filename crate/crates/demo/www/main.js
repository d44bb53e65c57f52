import init, { exchangeWord, normalForm, degeneracy, entropyCurve } from "./pkg/braidforge_demo.js";

const $ = (id) => document.getElementById(id);

function presentation() {
  return [Number($("n").value), $("a").value.trim(), $("b").value.trim()];
}

function show(id, fn) {
  const el = $(id);
  try {
    el.textContent = fn();
    el.classList.remove("err");
  } catch (e) {
    el.textContent = String(e);
    el.classList.add("err");
  }
}

function plot(points) {
  const canvas = $("chart");
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  const pad = 40;
  ctx.clearRect(0, 0, width, height);

  const ks = points.map((p) => p.k);
  const ys = points.flatMap((p) => [p.estimate, p.lower_bound]);
  const kLo = Math.min(...ks), kHi = Math.max(...ks);
  const yHi = Math.max(1, ...ys) * 1.1;
  const x = (k) => pad + ((k - kLo) / Math.max(1, kHi - kLo)) * (width - 2 * pad);
  const y = (v) => height - pad - (v / yHi) * (height - 2 * pad);

  ctx.strokeStyle = "#999";
  ctx.fillStyle = "#444";
  ctx.font = "12px sans-serif";
  ctx.beginPath();
  ctx.moveTo(pad, pad / 2);
  ctx.lineTo(pad, height - pad);
  ctx.lineTo(width - pad / 2, height - pad);
  ctx.stroke();
  for (const k of ks) ctx.fillText(String(k), x(k) - 4, height - pad + 16);
  for (let i = 0; i <= 4; i++) {
    const v = (yHi * i) / 4;
    ctx.fillText(v.toFixed(1), 4, y(v) + 4);
  }

  const series = (key, colour, mark) => {
    ctx.strokeStyle = colour;
    ctx.fillStyle = colour;
    ctx.beginPath();
    points.forEach((p, i) => (i ? ctx.lineTo(x(p.k), y(p[key])) : ctx.moveTo(x(p.k), y(p[key]))));
    ctx.stroke();
    for (const p of points) mark(x(p.k), y(p[key]));
  };
  series("lower_bound", "#d9822b", (px, py) => ctx.fillRect(px - 3, py - 3, 6, 6));
  series("estimate", "#1f5fbf", (px, py) => {
    ctx.beginPath();
    ctx.arc(px, py, 3, 0, 2 * Math.PI);
    ctx.fill();
  });
}

await init();

$("check").onclick = () =>
  show("degeneracy", () => {
    const r = JSON.parse(degeneracy(...presentation()));
    return [
      `A commutes with tau: ${r.a_commutes}   A moves c: ${r.a_moves_curve}`,
      `B commutes with tau: ${r.b_commutes}   B moves c: ${r.b_moves_curve}`,
      `degenerate: ${r.degenerate}`,
    ].join("\n");
  });

$("word").onclick = () => {
  const [n, a, b] = presentation();
  let word = null;
  show("word-out", () => (word = exchangeWord(n, a, b, Number($("k").value))));
  show("nf-out", () => (word === null ? "" : normalForm(n, word)));
};

$("plot").onclick = () => {
  const el = $("degeneracy");
  try {
    plot(JSON.parse(entropyCurve(...presentation(), Number($("kmin").value), Number($("kmax").value))));
  } catch (e) {
    el.textContent = String(e);
    el.classList.add("err");
  }
};
