#!/usr/bin/env node
/** render_figures <csv-dir> <out-dir> [--figures fig1,fig2,...]
 *
 *  Reads the CLI-produced CSV datasets in <csv-dir> and writes one SVG per
 *  figure into <out-dir>.  Without --figures, all eight presets render.
 */

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { FIGURE_SPECS, figureByName } from "./figures.js";
import { renderFigure } from "./render.js";

export async function main(argv: string[]): Promise<number> {
  const args = await yargs(argv)
    .command("$0 <csvDir> <outDir>", "render figure SVGs from marker CSVs", (cmd) =>
      cmd
        .positional("csvDir", { type: "string", demandOption: true })
        .positional("outDir", { type: "string", demandOption: true }),
    )
    .option("figures", {
      type: "string",
      describe: "comma-separated subset of fig1..fig8",
    })
    .strict()
    .parse();

  const names = args.figures
    ? String(args.figures).split(",").map((s) => s.trim()).filter(Boolean)
    : FIGURE_SPECS.map((f) => f.name);

  try {
    for (const name of names) {
      const spec = figureByName(name);
      const out = renderFigure(spec, String(args.csvDir), String(args.outDir));
      console.log(`wrote ${out}`);
    }
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  main(hideBin(process.argv)).then((code) => {
    process.exitCode = code;
  });
}
