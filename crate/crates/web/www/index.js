import init, { examples, analyze, product, ybe } from "./pkg/brace_forge_web.js";

const $ = (id) => document.getElementById(id);

function colour(v, n) {
  return `hsl(${Math.round((360 * v) / n)}, 65%, ${v === 0 ? 95 : 78}%)`;
}

function grid(title, rows, highlight = new Set()) {
  const n = rows.length;
  const table = document.createElement("table");
  table.className = "cayley";
  const head = table.insertRow();
  head.insertCell().textContent = title;
  head.cells[0].className = "head";
  for (let b = 0; b < n; b++) {
    const c = head.insertCell();
    c.textContent = b;
    c.className = "head";
  }
  rows.forEach((row, a) => {
    const tr = table.insertRow();
    const h = tr.insertCell();
    h.textContent = a;
    h.className = "head";
    row.forEach((v) => {
      const c = tr.insertCell();
      c.textContent = v;
      c.style.background = colour(v, n);
      if (highlight.has(v)) c.classList.add("in-ideal");
    });
  });
  const box = document.createElement("div");
  box.append(table);
  return box;
}

function text(tag, content) {
  const el = document.createElement(tag);
  el.textContent = content;
  return el;
}

function showSummary(s) {
  const out = $("output");
  out.replaceChildren();
  const verdict = s.semiprime ? "semiprime" : `not semiprime, witness {${s.witness.join(",")}}`;
  out.append(text("h2", `${s.name}: order ${s.order}, ${verdict}`));
  out.append(text("p", `(A,+) ${s.add_abelian ? "abelian" : "nonabelian"}, (A,∘) ${s.circ_abelian ? "abelian" : "nonabelian"}`));
  out.append(text("p", `${s.ideals.length} ideals: ` + s.ideals.map((i) => `{${i.join(",")}}`).join(" ")));
  if (!s.add) {
    out.append(text("p", "Too large to draw."));
    return;
  }
  const mark = new Set(s.witness ?? []);
  const row = document.createElement("div");
  row.className = "row";
  row.append(grid("+", s.add, mark), grid("∘", s.circ, mark));
  out.append(row);
  if (s.witness) out.append(text("p", "Outlined entries lie in the witness ideal."));
  out.append(text("pre", s.document));
}

function showSolution(s) {
  const out = $("output");
  out.replaceChildren();
  const braid = s.braid ? `fails at (${s.braid.join(",")})` : "holds";
  out.append(text("h2", `r on ${s.name}: braid relation ${braid}, ${s.nondegenerate ? "non-degenerate" : "degenerate"}${s.flip ? ", the flip" : ""}`));
  const row = document.createElement("div");
  row.className = "row";
  row.append(grid("λ", s.left), grid("ρ", s.right));
  out.append(row);
}

function guard(f) {
  return () => {
    $("error").textContent = "";
    try {
      f();
    } catch (e) {
      $("error").textContent = String(e.message ?? e);
    }
  };
}

await init();
const list = JSON.parse(examples());
for (const [pick, doc, start] of [["pick-a", "doc-a", "S3op"], ["pick-b", "doc-b", "T2"]]) {
  for (const e of list) $(pick).append(new Option(`${e.name} (order ${e.order})`, e.document));
  $(pick).onchange = () => ($(doc).value = $(pick).value);
  const first = list.find((e) => e.name === start) ?? list[0];
  $(pick).value = first.document;
  $(doc).value = first.document;
}
$("analyze").onclick = guard(() => showSummary(JSON.parse(analyze($("doc-a").value))));
$("ybe").onclick = guard(() => showSolution(JSON.parse(ybe($("doc-a").value))));
$("product").onclick = guard(() =>
  showSummary(JSON.parse(product($("doc-a").value, $("doc-b").value, $("kind").value, $("sigma").value))),
);
