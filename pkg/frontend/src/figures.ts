/** Figure presets: which CSV each figure reads, which marker column it plots,
 *  and how the curves are styled.  Names mirror the CLI's figure presets. */

export type MarkerColumn = "gammaSq" | "b";

export interface FigureSpec {
  name: string;
  csv: string;
  column: MarkerColumn;
  title: string;
  yLabel: string;
}

const GAMMA = "|Γ|²"; // |Γ|²

export const FIGURE_SPECS: FigureSpec[] = [
  {
    name: "fig1",
    csv: "fig1.csv",
    column: "gammaSq",
    title: "Single-spin decoherence factor, cosine drive",
    yLabel: GAMMA,
  },
  {
    name: "fig2",
    csv: "fig2.csv",
    column: "b",
    title: "Single-spin generalized overlap, cosine drive",
    yLabel: "B",
  },
  {
    name: "fig3",
    csv: "fig3.csv",
    column: "b",
    title: "Generalized overlap, 100-spin macrofraction",
    yLabel: "B",
  },
  {
    name: "fig4",
    csv: "fig4.csv",
    column: "gammaSq",
    title: "Decoherence factor, 20 unobserved spins",
    yLabel: GAMMA,
  },
  {
    name: "fig5",
    csv: "fig5.csv",
    column: "gammaSq",
    title: "Single-spin decoherence factor, quarter-phase drive",
    yLabel: GAMMA,
  },
  {
    name: "fig6",
    csv: "fig6.csv",
    column: "b",
    title: "Single-spin generalized overlap, quarter-phase drive",
    yLabel: "B",
  },
  {
    name: "fig7",
    csv: "fig7.csv",
    column: "gammaSq",
    title: "Decoherence factor vs drive phase, 20 spins",
    yLabel: GAMMA,
  },
  {
    name: "fig8",
    csv: "fig8.csv",
    column: "b",
    title: "Generalized overlap vs drive phase, 100-spin macrofraction",
    yLabel: "B",
  },
];

/** solid for the first curve, dashed/dotted for the rest (print-friendly) */
export const DASH_PATTERNS = ["", "8 4", "2 3", "8 4 2 4"];

export function figureByName(name: string): FigureSpec {
  const spec = FIGURE_SPECS.find((f) => f.name === name);
  if (!spec) {
    const known = FIGURE_SPECS.map((f) => f.name).join(", ");
    throw new Error(`unknown figure '${name}' (choose from ${known})`);
  }
  return spec;
}
