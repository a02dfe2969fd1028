// Minimal RFC-4180 reader for the toolkit's CSV outputs.

export interface Table {
  header: string[];
  rows: string[][];
}

export function parseCsv(text: string): Table {
  const lines = text.split("\n").filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new Error("empty CSV input");
  }
  const parseLine = (line: string): string[] => {
    const out: string[] = [];
    let field = "";
    let quoted = false;
    for (let i = 0; i < line.length; i++) {
      const ch = line[i];
      if (quoted) {
        if (ch === '"') {
          if (line[i + 1] === '"') {
            field += '"';
            i++;
          } else {
            quoted = false;
          }
        } else {
          field += ch;
        }
      } else if (ch === '"') {
        quoted = true;
      } else if (ch === ",") {
        out.push(field);
        field = "";
      } else {
        field += ch;
      }
    }
    out.push(field);
    return out;
  };
  const header = parseLine(lines[0]);
  const rows = lines.slice(1).map(parseLine);
  if (rows.length === 0) {
    throw new Error("CSV has a header but no data rows");
  }
  return { header, rows };
}

/** Returns per-row getters for the named columns, failing loudly on absence. */
export function columns(table: Table, names: string[]): number[] {
  return names.map((name) => {
    const idx = table.header.indexOf(name);
    if (idx < 0) {
      throw new Error(`missing column "${name}" (have: ${table.header.join(", ")})`);
    }
    return idx;
  });
}

export function numeric(value: string, column: string): number {
  const x = Number(value);
  if (!Number.isFinite(x)) {
    throw new Error(`non-numeric value "${value}" in column "${column}"`);
  }
  return x;
}
