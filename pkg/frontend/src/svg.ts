/** Minimal deterministic SVG line charts; no DOM, just strings. */

export interface Curve {
  label: string;
  points: Array<[number, number]>;
  dash: string;
}

export interface ChartOptions {
  title: string;
  xLabel: string;
  yLabel: string;
  width?: number;
  height?: number;
}

const MARGIN = { top: 42, right: 24, bottom: 46, left: 62 };

function niceTicks(lo: number, hi: number, count: number): number[] {
  if (!(hi > lo)) {
    return [lo];
  }
  const span = hi - lo;
  const step = Math.pow(10, Math.floor(Math.log10(span / count)));
  const candidates = [step, 2 * step, 2.5 * step, 5 * step, 10 * step];
  const chosen = candidates.find((s) => span / s <= count) ?? 10 * step;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / chosen) * chosen; v <= hi + 1e-12 * span; v += chosen) {
    ticks.push(v);
  }
  return ticks;
}

function fmt(value: number): string {
  return Number(value.toPrecision(6)).toString();
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Render labelled curves into a standalone SVG document. */
export function lineChart(curves: Curve[], options: ChartOptions): string {
  if (curves.length === 0) {
    throw new Error("lineChart needs at least one curve");
  }
  const width = options.width ?? 720;
  const height = options.height ?? 430;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const xs = curves.flatMap((c) => c.points.map((p) => p[0]));
  const ys = curves.flatMap((c) => c.points.map((p) => p[1]));
  const xLo = Math.min(...xs);
  const xHi = Math.max(...xs);
  const yLo = Math.min(0, Math.min(...ys));
  const yHi = Math.max(1, Math.max(...ys));

  const sx = (x: number) => MARGIN.left + ((x - xLo) / (xHi - xLo || 1)) * plotW;
  const sy = (y: number) => MARGIN.top + (1 - (y - yLo) / (yHi - yLo || 1)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
    `<rect width="${width}" height="${height}" fill="white"/>`,
    `<text x="${width / 2}" y="24" text-anchor="middle" font-size="15">` +
    `${escapeXml(options.title)}</text>`,
  );

  // frame and ticks
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" ` +
    `fill="none" stroke="#333" stroke-width="1"/>`,
  );
  for (const t of niceTicks(xLo, xHi, 8)) {
    const x = sx(t);
    parts.push(
      `<line x1="${x.toFixed(2)}" y1="${MARGIN.top + plotH}" x2="${x.toFixed(2)}" ` +
      `y2="${MARGIN.top + plotH + 5}" stroke="#333"/>`,
      `<text x="${x.toFixed(2)}" y="${MARGIN.top + plotH + 19}" text-anchor="middle" ` +
      `font-size="11">${fmt(t)}</text>`,
    );
  }
  for (const t of niceTicks(yLo, yHi, 6)) {
    const y = sy(t);
    parts.push(
      `<line x1="${MARGIN.left - 5}" y1="${y.toFixed(2)}" x2="${MARGIN.left}" ` +
      `y2="${y.toFixed(2)}" stroke="#333"/>`,
      `<text x="${MARGIN.left - 9}" y="${(y + 4).toFixed(2)}" text-anchor="end" ` +
      `font-size="11">${fmt(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${height - 10}" text-anchor="middle" ` +
    `font-size="13">${escapeXml(options.xLabel)}</text>`,
    `<text x="18" y="${MARGIN.top + plotH / 2}" text-anchor="middle" font-size="13" ` +
    `transform="rotate(-90 18 ${MARGIN.top + plotH / 2})">${escapeXml(options.yLabel)}</text>`,
  );

  // curves drawn verbatim from the data, one path per labelled curve
  curves.forEach((curve, index) => {
    const d = curve.points
      .map(([x, y], i) => `${i === 0 ? "M" : "L"}${sx(x).toFixed(3)},${sy(y).toFixed(3)}`)
      .join("");
    const dash = curve.dash ? ` stroke-dasharray="${curve.dash}"` : "";
    parts.push(
      `<path class="curve" data-label="${escapeXml(curve.label)}" d="${d}" fill="none" ` +
      `stroke="#1040a0" stroke-width="1.4"${dash}/>`,
    );
    const lx = MARGIN.left + plotW - 180;
    const ly = MARGIN.top + 16 + 18 * index;
    parts.push(
      `<line x1="${lx}" y1="${ly - 4}" x2="${lx + 34}" y2="${ly - 4}" stroke="#1040a0" ` +
      `stroke-width="1.4"${dash}/>`,
      `<text x="${lx + 40}" y="${ly}" font-size="12">${escapeXml(curve.label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n");
}
