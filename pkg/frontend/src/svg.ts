// Deterministic string-based SVG assembly: no DOM, no timestamps, fixed
// float formatting so identical inputs produce identical bytes.

export type Attrs = Record<string, string | number>;

export function fmt(x: number): string {
  return Number.isInteger(x) ? String(x) : x.toFixed(2);
}

export function el(tag: string, attrs: Attrs, children: string[] = []): string {
  const parts = Object.entries(attrs)
    .map(([k, v]) => `${k}="${typeof v === "number" ? fmt(v) : v}"`)
    .join(" ");
  const open = parts.length > 0 ? `<${tag} ${parts}>` : `<${tag}>`;
  if (children.length === 0) {
    return open.replace(/>$/, "/>");
  }
  return `${open}${children.join("")}</${tag}>`;
}

export function text(x: number, y: number, s: string, attrs: Attrs = {}): string {
  const base: Attrs = { x, y, "font-size": 10, "font-family": "sans-serif", ...attrs };
  const parts = Object.entries(base)
    .map(([k, v]) => `${k}="${typeof v === "number" ? fmt(v) : v}"`)
    .join(" ");
  return `<text ${parts}>${escapeXml(s)}</text>`;
}

export function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function svgDoc(width: number, height: number, children: string[]): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}">` +
    children.join("") +
    `</svg>\n`
  );
}

/** Linear map from data range to pixel range. */
export function scale(d0: number, d1: number, p0: number, p1: number): (x: number) => number {
  const span = d1 - d0 || 1;
  return (x) => p0 + ((x - d0) / span) * (p1 - p0);
}

export function polyline(points: Array<[number, number]>, stroke: string): string {
  const pts = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
  return `<polyline fill="none" stroke="${stroke}" points="${pts}"/>`;
}

export function axes(w: number, h: number, pad: number): string {
  return (
    el("line", { x1: pad, y1: h - pad, x2: w - pad, y2: h - pad, stroke: "#000" }) +
    el("line", { x1: pad, y1: pad, x2: pad, y2: h - pad, stroke: "#000" })
  );
}

export const PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];
