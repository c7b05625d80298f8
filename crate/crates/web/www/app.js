import init, { classify, family_member, family_report, quadratic_points } from "./pkg/bitangent_web.js";

const $ = (id) => document.getElementById(id);

function show(pre, text) {
  const v = JSON.parse(text);
  pre.textContent = JSON.stringify(v, null, 2);
  return v;
}

function runClassify() {
  const v = show($("c-out"), classify($("c-quartic").value, $("c-line").value));
  $("c-kind").textContent = v.error ? "error" : v.kind;
}

function runMember() {
  const v = show($("f-out"), family_member(Number($("f-s0").value), Number($("f-s1").value)));
  $("f-kind").textContent = v.error ? "error" : v.kind;
}

function runReport() {
  const v = show($("f-out"), family_report());
  $("f-kind").textContent = "holds for: " + v.claim_holds_for.join(", ");
}

function runSections() {
  const v = show($("q-out"), quadratic_points($("q-quartic").value, $("q-point").value,
    Number($("q-lo").value), Number($("q-hi").value)));
  const table = $("q-table");
  table.innerHTML = "";
  if (v.error) {
    $("q-summary").textContent = v.error;
    return;
  }
  const tp = v.through_point;
  let summary = `Section: ${v.section.curve} (${v.section.singularity_kind}). ` +
    `Branch form: ${tp.branch.form.text}. Rational bitangent directions: ` +
    (v.directions.map((d) => `(${d.param}) ${d.kind}`).join(", ") || "none") + ".";
  if (v.batch.error) {
    $("q-summary").textContent = summary + " " + v.batch.error;
    return;
  }
  $("q-summary").textContent = summary + ` Distinct kernels: ${v.batch.distinct_kernels}.`;
  table.insertAdjacentHTML("beforeend", "<tr><th>t</th><th>residual</th><th>kernel</th><th>points</th></tr>");
  for (const item of v.batch.items) {
    const row = document.createElement("tr");
    const t = `${item.param[0]}:${item.param[1]}`;
    if (item.outcome.Ok) {
      const p = item.outcome.Ok;
      const pts = p.points.map((q) => `(${q.coords.join(", ")})`).join(" ");
      const kernel = p.points.length ? p.points[0].discriminant_kernel : "";
      const minPoly = p.points.length && !p.points[0].rational ? `, ${p.points[0].min_poly} = 0` : "";
      row.innerHTML = `<td>${t}</td><td>${p.residual.text}</td><td>${kernel}</td><td>${pts}${minPoly}</td>`;
    } else {
      row.innerHTML = `<td>${t}</td><td colspan="3">${item.outcome.Err}</td>`;
    }
    table.appendChild(row);
  }
}

await init();
$("status").textContent = "Ready.";
$("c-run").onclick = runClassify;
$("f-run").onclick = runMember;
$("f-report").onclick = runReport;
$("q-run").onclick = runSections;
runClassify();
runMember();
runSections();
