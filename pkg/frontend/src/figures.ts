// One renderer per figure id.  Every plotted number comes straight from the
// input file; the only arithmetic here is axis transforms.

import { columns, numeric, parseCsv, Table } from "./csv.js";
import { axes, el, PALETTE, polyline, scale, svgDoc, text } from "./svg.js";

export const FIGURE_IDS = [
  "growth",
  "shifted",
  "balanced",
  "deterministic-margins",
  "skip2-forced",
  "multicolor-margins",
  "sat-scale",
  "k10-strip",
  "offdiag-heatmap",
] as const;

export type FigureId = (typeof FIGURE_IDS)[number];

const W = 560;
const H = 360;
const PAD = 44;

function series(table: Table, xCol: string, yCol: string): Array<[number, number]> {
  const [xi, yi] = columns(table, [xCol, yCol]);
  return table.rows.map((r) => [numeric(r[xi], xCol), numeric(r[yi], yCol)]);
}

function lineChart(
  data: Array<{ label: string; points: Array<[number, number]> }>,
  title: string,
  logY = false,
): string {
  const all = data.flatMap((d) => d.points);
  const ty = (y: number) => (logY ? Math.log10(y) : y);
  const xs = all.map((p) => p[0]);
  const ys = all.map((p) => ty(p[1]));
  const sx = scale(Math.min(...xs), Math.max(...xs), PAD, W - PAD);
  const sy = scale(Math.min(...ys), Math.max(...ys), H - PAD, PAD);
  const body = data.map((d, i) =>
    polyline(
      d.points.map(([x, y]) => [sx(x), sy(ty(y))] as [number, number]),
      PALETTE[i % PALETTE.length],
    ),
  );
  const legend = data.map((d, i) =>
    text(PAD + 8, PAD + 12 * (i + 1), d.label, { fill: PALETTE[i % PALETTE.length] }),
  );
  return svgDoc(W, H, [axes(W, H, PAD), ...body, ...legend, text(PAD, 16, title)]);
}

function renderGrowth(input: string): string {
  const t = parseCsv(input);
  return lineChart(
    [{ label: "R / (k log k)", points: series(t, "k", "ratio_k_log_k") }],
    "Growth ratio of the diagonal threshold",
  );
}

function renderShifted(input: string): string {
  const t = parseCsv(input);
  const kCols = t.header.filter((h) => /^k\d+$/.test(h));
  if (kCols.length === 0) {
    throw new Error(`missing column "k<i>" (have: ${t.header.join(", ")})`);
  }
  const [mi] = columns(t, ["m"]);
  const sx = scale(0, Math.max(...t.rows.map((r) => numeric(r[mi], "m"))), PAD, W - PAD);
  const vals = t.rows.flatMap((r) => kCols.map((c) => numeric(r[t.header.indexOf(c)], c)));
  const sy = scale(0, Math.max(...vals), H - PAD, PAD);
  const dots = t.rows.flatMap((r) =>
    kCols.map((c, i) =>
      el("circle", {
        cx: sx(numeric(r[mi], "m")),
        cy: sy(numeric(r[t.header.indexOf(c)], c)),
        r: 3,
        fill: PALETTE[i % PALETTE.length],
      }),
    ),
  );
  const legend = kCols.map((c, i) => text(PAD + 8, PAD + 12 * (i + 1), c, { fill: PALETTE[i] }));
  return svgDoc(W, H, [axes(W, H, PAD), ...dots, ...legend, text(PAD, 16, "Shifted-interval thresholds")]);
}

function renderBalanced(input: string): string {
  const t = parseCsv(input);
  return lineChart(
    [
      { label: "balanced threshold", points: series(t, "k", "balanced_threshold") },
      { label: "last feasible", points: series(t, "k", "last_feasible") },
    ],
    "Balanced two-color thresholds",
  );
}

function renderDeterministicMargins(input: string): string {
  const t = parseCsv(input);
  return lineChart(
    [{ label: "|majority - minority|", points: series(t, "k", "imbalance") }],
    "Imbalance of the canonical certificate",
  );
}

function renderSkip2Forced(input: string): string {
  const t = parseCsv(input);
  return lineChart(
    [
      { label: "forced set size", points: series(t, "k", "forced0") },
      { label: "window width", points: series(t, "k", "window") },
    ],
    "Skip-2 split: forced sizes and density window",
    true,
  );
}

function renderMulticolorMargins(input: string): string {
  const t = parseCsv(input);
  return lineChart(
    [
      { label: "last failure", points: series(t, "c", "last_failure") },
      { label: "all-success from", points: series(t, "c", "all_success_from") },
    ],
    "Multicolor balanced certificate onset",
  );
}

function renderSatScale(input: string): string {
  const t = parseCsv(input);
  return lineChart(
    [
      { label: "cliques (log10)", points: series(t, "k", "all_cliques") },
      { label: "clauses (log10)", points: series(t, "k", "clauses") },
    ],
    "Encoding scale at the exact threshold",
    true,
  );
}

function renderK10Strip(input: string): string {
  let doc: { witness?: { colors?: number[]; length?: number } };
  try {
    doc = JSON.parse(input);
  } catch {
    throw new Error("k10-strip expects the certificate JSON document");
  }
  const colors = doc.witness?.colors;
  if (!colors || !Array.isArray(colors)) {
    throw new Error('missing "witness.colors" in certificate JSON');
  }
  const cell = 16;
  const perRow = 15;
  const cells = colors.map((c, i) => {
    const x = 10 + (i % perRow) * cell;
    const y = 28 + Math.floor(i / perRow) * cell;
    return el("rect", {
      x,
      y,
      width: cell - 2,
      height: cell - 2,
      fill: c === 1 ? PALETTE[0] : PALETTE[1],
      "data-vertex": i + 1,
    });
  });
  const w = 10 + perRow * cell + 10;
  const h = 38 + Math.ceil(colors.length / perRow) * cell;
  return svgDoc(w, h, [text(10, 16, `Extremal coloring, n=${colors.length}`), ...cells]);
}

function renderOffdiagHeatmap(input: string): string {
  const t = parseCsv(input);
  const [si, ti, ni, bi] = columns(t, ["s", "t", "n", "balanced"]);
  const ss = t.rows.map((r) => numeric(r[si], "s"));
  const ts = t.rows.map((r) => numeric(r[ti], "t"));
  const sx = scale(Math.min(...ss), Math.max(...ss), PAD, W - PAD);
  const sy = scale(Math.min(...ts), Math.max(...ts), H - PAD, PAD);
  const cells = t.rows.map((r) =>
    el("rect", {
      x: sx(numeric(r[si], "s")) - 5,
      y: sy(numeric(r[ti], "t")) - 5,
      width: 10,
      height: 10,
      fill: r[bi] === "yes" ? PALETTE[2] : PALETTE[3],
      "data-n": r[ni],
    }),
  );
  return svgDoc(W, H, [axes(W, H, PAD), ...cells, text(PAD, 16, "Off-diagonal balanced endpoints")]);
}

const RENDERERS: Record<FigureId, (input: string) => string> = {
  growth: renderGrowth,
  shifted: renderShifted,
  balanced: renderBalanced,
  "deterministic-margins": renderDeterministicMargins,
  "skip2-forced": renderSkip2Forced,
  "multicolor-margins": renderMulticolorMargins,
  "sat-scale": renderSatScale,
  "k10-strip": renderK10Strip,
  "offdiag-heatmap": renderOffdiagHeatmap,
};

export function renderFigure(id: string, input: string): string {
  const renderer = RENDERERS[id as FigureId];
  if (!renderer) {
    throw new Error(`unknown figure id "${id}" (known: ${FIGURE_IDS.join(", ")})`);
  }
  return renderer(input);
}
