import fs from "fs";
import path from "path";

import { groupCurves, loadMarkerCsv } from "./csv.js";
import { DASH_PATTERNS, FigureSpec } from "./figures.js";
import { Curve, lineChart } from "./svg.js";

/** Render one figure from its CSV; returns the output path.
 *  Data flows into the SVG verbatim (no resampling, no reordering). */
export function renderFigure(spec: FigureSpec, csvDir: string, outDir: string): string {
  const rows = loadMarkerCsv(path.join(csvDir, spec.csv));
  const curves: Curve[] = [];
  let index = 0;
  for (const [label, curveRows] of groupCurves(rows)) {
    curves.push({
      label,
      points: curveRows.map((r) => [r.tau, r[spec.column]]),
      dash: DASH_PATTERNS[index % DASH_PATTERNS.length],
    });
    index += 1;
  }
  const svg = lineChart(curves, {
    title: spec.title,
    xLabel: "τ",
    yLabel: spec.yLabel,
  });
  fs.mkdirSync(outDir, { recursive: true });
  const outPath = path.join(outDir, `${spec.name}.svg`);
  fs.writeFileSync(outPath, svg, "utf8");
  return outPath;
}
