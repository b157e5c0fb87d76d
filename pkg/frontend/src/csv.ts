import fs from "fs";
import Papa from "papaparse";

/** One row of a marker-sweep CSV produced by the bosonspin CLI. */
export interface MarkerRow {
  route: string;
  label: string;
  tau: number;
  gammaSq: number;
  b: number;
}

export const REQUIRED_COLUMNS = ["route", "label", "tau", "gammaSq", "b"] as const;

/** Parse a sweep CSV; throws with a readable message on a missing file,
 *  missing columns or an empty dataset. */
export function loadMarkerCsv(path: string): MarkerRow[] {
  if (!fs.existsSync(path)) {
    throw new Error(`CSV file not found: ${path}`);
  }
  const text = fs.readFileSync(path, "utf8");
  const parsed = Papa.parse<Record<string, string>>(text, {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new Error(`CSV parse error in ${path}: ${first.message} (row ${first.row})`);
  }
  const fields = parsed.meta.fields ?? [];
  for (const column of REQUIRED_COLUMNS) {
    if (!fields.includes(column)) {
      throw new Error(`CSV ${path} is missing required column '${column}'`);
    }
  }
  const rows = parsed.data.map((raw) => ({
    route: raw.route,
    label: raw.label,
    tau: Number(raw.tau),
    gammaSq: Number(raw.gammaSq),
    b: Number(raw.b),
  }));
  if (rows.length === 0) {
    throw new Error(`CSV ${path} contains no data rows`);
  }
  for (const row of rows) {
    if (!Number.isFinite(row.tau) || !Number.isFinite(row.gammaSq) || !Number.isFinite(row.b)) {
      throw new Error(`CSV ${path} contains a non-numeric tau/gammaSq/b entry`);
    }
  }
  return rows;
}

/** Group rows into labelled curves, preserving the file's tau order. */
export function groupCurves(rows: MarkerRow[]): Map<string, MarkerRow[]> {
  const curves = new Map<string, MarkerRow[]>();
  for (const row of rows) {
    const key = row.label === "" ? row.route : row.label;
    const bucket = curves.get(key);
    if (bucket) {
      bucket.push(row);
    } else {
      curves.set(key, [row]);
    }
  }
  return curves;
}
