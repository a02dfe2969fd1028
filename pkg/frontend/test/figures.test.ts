import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { parseCsv, columns } from "../src/csv.js";
import { FIGURE_IDS, renderFigure } from "../src/figures.js";

const GOLDEN = join(dirname(fileURLToPath(import.meta.url)), "..", "..", "golden");

const INPUTS: Record<string, string> = {
  growth: "values.csv",
  shifted: "shifted.csv",
  balanced: "balanced-split.csv",
  "deterministic-margins": "imbalance.csv",
  "skip2-forced": "window.csv",
  "multicolor-margins": "phase.csv",
  "sat-scale": "sat-diag.csv",
  "k10-strip": "k10-witness.json",
  "offdiag-heatmap": "offdiag.csv",
};

function input(id: string): string {
  return readFileSync(join(GOLDEN, INPUTS[id]), "utf8");
}

describe("figure rendering", () => {
  for (const id of FIGURE_IDS) {
    it(`renders ${id} from its golden input`, () => {
      const svg = renderFigure(id, input(id));
      expect(svg.startsWith("<svg ")).toBe(true);
      expect(svg.endsWith("</svg>\n")).toBe(true);
      expect(svg).not.toContain("NaN");
    });

    it(`renders ${id} deterministically`, () => {
      expect(renderFigure(id, input(id))).toBe(renderFigure(id, input(id)));
    });
  }

  it("encodes the k=10 extremal strip as exactly 51 + 9 cells", () => {
    const svg = renderFigure("k10-strip", input("k10-strip"));
    const fills = [...svg.matchAll(/<rect [^>]*fill="([^"]+)"/g)].map((m) => m[1]);
    expect(fills.length).toBe(60);
    const byColor = new Map<string, number>();
    for (const f of fills) byColor.set(f, (byColor.get(f) ?? 0) + 1);
    expect(byColor.size).toBe(2);
    expect([...byColor.values()].sort((a, b) => b - a)).toEqual([51, 9]);
  });

  it("rejects unknown figure ids", () => {
    expect(() => renderFigure("volcano", "a,b\n1,2\n")).toThrow(/unknown figure id/);
  });

  it("rejects empty input", () => {
    expect(() => renderFigure("growth", "")).toThrow(/empty CSV/);
  });

  it("names the missing column", () => {
    expect(() => renderFigure("growth", "k,wrong\n2,1\n")).toThrow(/ratio_k_log_k/);
  });

  it("rejects a header-only CSV", () => {
    expect(() => renderFigure("growth", "k,ratio_k_log_k\n")).toThrow(/no data rows/);
  });

  it("rejects non-JSON input for the strip", () => {
    expect(() => renderFigure("k10-strip", "k,v\n1,2\n")).toThrow(/certificate JSON/);
  });
});

describe("csv reader", () => {
  it("handles quoted fields", () => {
    const t = parseCsv('a,b\n"x,y","he said ""hi"""\n');
    expect(t.rows[0]).toEqual(["x,y", 'he said "hi"']);
  });

  it("locates columns by name", () => {
    const t = parseCsv("a,b,c\n1,2,3\n");
    expect(columns(t, ["c", "a"])).toEqual([2, 0]);
    expect(() => columns(t, ["zz"])).toThrow(/missing column "zz"/);
  });
});
