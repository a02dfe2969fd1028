#!/usr/bin/env node
// render --figure <id> --in <csv-or-json> --out <svg>

import { readFileSync, writeFileSync } from "node:fs";
import { FIGURE_IDS, renderFigure } from "./figures.js";

function usage(): never {
  process.stderr.write(
    "usage: render --figure <id> --in <file> --out <file>\n" +
      `figure ids: ${FIGURE_IDS.join(", ")}\n`,
  );
  process.exit(2);
}

function main(argv: string[]): number {
  if (argv[0] !== "render") {
    usage();
  }
  const opts: Record<string, string> = {};
  for (let i = 1; i < argv.length; i += 2) {
    const key = argv[i];
    const val = argv[i + 1];
    if (!key.startsWith("--") || val === undefined) {
      usage();
    }
    opts[key.slice(2)] = val;
  }
  const { figure, in: inPath, out: outPath } = opts;
  if (!figure || !inPath || !outPath) {
    usage();
  }
  let input: string;
  try {
    input = readFileSync(inPath, "utf8");
  } catch (err) {
    process.stderr.write(`cannot read ${inPath}: ${(err as Error).message}\n`);
    return 1;
  }
  let svg: string;
  try {
    svg = renderFigure(figure, input);
  } catch (err) {
    process.stderr.write(`render failed: ${(err as Error).message}\n`);
    return 1;
  }
  writeFileSync(outPath, svg);
  return 0;
}

process.exit(main(process.argv.slice(2)));
