import { arrowsFromB, exchangeable, layout } from "./quiver.js";
import type { SeedJson, WeightJson, HistoryStep } from "./types.js";

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function weightLabel(w: WeightJson): string {
  const parts: string[] = [];
  w.phi.forEach((c, i) => {
    if (c) parts.push(`${c === 1 ? "" : c === -1 ? "-" : c}ω${i + 1}`);
  });
  w.alpha.forEach((c, i) => {
    if (c) parts.push(`${c > 0 ? "+" : "-"}${Math.abs(c) === 1 ? "" : Math.abs(c)}α${i + 1}`);
  });
  const label = parts.join("").replace(/^\+/, "");
  return label || "0";
}

/** SVG for the quiver: squares are frozen, circles exchangeable, arrow
 * bundles carry multiplicity badges.  Pure string generation so the same
 * code is exercised in node tests. */
export function quiverSvg(seed: SeedJson, hoverK: number | null = null): string {
  const pos = layout(seed);
  const byK = new Map(pos.map((p) => [p.k, p]));
  const width = Math.max(...pos.map((p) => p.x)) + 70;
  const height = Math.max(...pos.map((p) => p.y)) + 60;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" width="${width}" height="${height}">`,
  );
  parts.push(
    `<defs><marker id="arr" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse">` +
      `<path d="M 0 0 L 10 5 L 0 10 z" fill="#555"/></marker></defs>`,
  );
  for (const a of arrowsFromB(seed)) {
    const f = byK.get(a.from)!;
    const t = byK.get(a.to)!;
    const dx = t.x - f.x;
    const dy = t.y - f.y;
    const len = Math.hypot(dx, dy) || 1;
    const pad = 26;
    const x1 = f.x + (dx / len) * pad;
    const y1 = f.y + (dy / len) * pad;
    const x2 = t.x - (dx / len) * pad;
    const y2 = t.y - (dy / len) * pad;
    parts.push(
      `<line data-arrow="${a.from}-${a.to}" data-mult="${a.mult}" x1="${x1}" y1="${y1}" x2="${x2}" y2="${y2}" stroke="#555" stroke-width="1.6" marker-end="url(#arr)"/>`,
    );
    if (a.mult > 1) {
      parts.push(
        `<text x="${(x1 + x2) / 2}" y="${(y1 + y2) / 2 - 6}" class="mult" font-size="12" fill="#b00">${a.mult}</text>`,
      );
    }
  }
  for (const p of pos) {
    const cls = p.frozen ? "vertex frozen" : "vertex exchangeable";
    const hover = hoverK === p.k ? ' data-hover="1"' : "";
    if (p.frozen) {
      parts.push(
        `<rect data-k="${p.k}" class="${cls}"${hover} x="${p.x - 20}" y="${p.y - 20}" width="40" height="40" fill="#eee" stroke="#888" stroke-width="1.5"/>`,
      );
    } else {
      parts.push(
        `<circle data-k="${p.k}" class="${cls}"${hover} cx="${p.x}" cy="${p.y}" r="22" fill="#dff" stroke="#067" stroke-width="2"/>`,
      );
    }
    parts.push(
      `<text x="${p.x}" y="${p.y + 5}" text-anchor="middle" font-size="15" pointer-events="none">${p.k}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function matrixTable(name: string, rows: number[][]): string {
  const body = rows
    .map(
      (r) =>
        `<tr>${r.map((x) => `<td class="${x > 0 ? "pos" : x < 0 ? "neg" : ""}">${x}</td>`).join("")}</tr>`,
    )
    .join("");
  return `<div class="panel"><h3>${esc(name)}</h3><table>${body}</table></div>`;
}

export function weightPanel(seed: SeedJson): string {
  const items = seed.D.map((w, i) => `<li><b>d<sub>${i + 1}</sub></b> = ${esc(weightLabel(w))}</li>`);
  return `<div class="panel"><h3>weights</h3><ul>${items.join("")}</ul></div>`;
}

export function historyPanel(history: HistoryStep[]): string {
  if (!history.length) {
    return `<div class="panel"><h3>history</h3><p class="dim">initial seed</p></div>`;
  }
  const items = history.map(
    (h, i) => `<li>#${i + 1}: μ<sub>${h.k}</sub> (m=${h.m_k}, m'=${h.m_k_prime})</li>`,
  );
  return `<div class="panel"><h3>history</h3><ol>${items.join("")}</ol></div>`;
}

export function previewPanel(k: number, column: number[], weight: WeightJson): string {
  return (
    `<div class="panel preview"><h3>preview μ<sub>${k}</sub></h3>` +
    `<p>new column: [${column.join(", ")}]</p>` +
    `<p>new weight: ${esc(weightLabel(weight))}</p></div>`
  );
}

export function view(seed: SeedJson, history: HistoryStep[], hoverK: number | null): string {
  const ex = exchangeable(seed);
  return (
    `<div class="quiver">${quiverSvg(seed, hoverK)}</div>` +
    `<div class="panels">` +
    matrixTable("L", seed.L) +
    matrixTable(`B (columns ${ex.join(", ")})`, seed.B) +
    weightPanel(seed) +
    historyPanel(history) +
    `</div>`
  );
}
