/** Deterministic DOM builders: the same state always yields the same tree.
 *
 * Everything here is a pure function from data to elements; event wiring is
 * injected by the caller so these stay testable and render-order stable.
 * All text lands via textContent, never innerHTML.
 */

import type { MatrixViewState } from "./state.js";
import type { TacticDoc, TaxonomyDoc, TechniqueDoc } from "./types.js";

export interface CellDecoration {
  /** CSS background color; undefined leaves the neutral cell color */
  color?: string;
  /** small corner note, e.g. a count */
  badge?: string;
  highlighted?: boolean;
}

export interface MatrixHandlers {
  onCellClick?: (techniqueId: string) => void;
}

const PHASE_ORDER = ["Mounting", "Execution", "Results"];

export function techniquesByTactic(
  taxonomy: TaxonomyDoc,
): Map<string, TechniqueDoc[]> {
  const grouped = new Map<string, TechniqueDoc[]>();
  for (const tactic of taxonomy.tactics) grouped.set(tactic.id, []);
  for (const technique of taxonomy.techniques) {
    grouped.get(technique.tactic)?.push(technique);
  }
  return grouped;
}

function phaseBand(doc: Document, name: string, span: number): HTMLElement {
  const band = doc.createElement("div");
  band.className = "phase-band";
  band.dataset["phase"] = name;
  band.style.gridColumn = `span ${span}`;
  band.textContent = name;
  return band;
}

function tacticHeader(doc: Document, tactic: TacticDoc): HTMLElement {
  const header = doc.createElement("div");
  header.className = "tactic-header";
  header.dataset["tactic"] = tactic.id;
  header.textContent = tactic.name;
  header.title = tactic.description;
  return header;
}

function techniqueCell(
  doc: Document,
  technique: TechniqueDoc,
  decoration: CellDecoration,
  handlers: MatrixHandlers,
): HTMLElement {
  const cell = doc.createElement("button");
  cell.type = "button";
  cell.className = "cell";
  cell.dataset["technique"] = technique.id;
  if (decoration.highlighted) cell.classList.add("tagged");
  if (decoration.color) {
    cell.style.backgroundColor = decoration.color;
    cell.dataset["color"] = decoration.color;
  }
  const idSpan = doc.createElement("span");
  idSpan.className = "cell-id";
  idSpan.textContent = technique.id;
  const nameSpan = doc.createElement("span");
  nameSpan.className = "cell-name";
  nameSpan.textContent = technique.name;
  cell.append(idSpan, nameSpan);
  if (decoration.badge) {
    const badge = doc.createElement("span");
    badge.className = "cell-badge";
    badge.textContent = decoration.badge;
    cell.append(badge);
  }
  if (handlers.onCellClick) {
    cell.addEventListener("click", () => handlers.onCellClick?.(technique.id));
  }
  return cell;
}

/** The 8-column matrix grid, phase bands on top, one column per tactic. */
export function renderMatrix(
  doc: Document,
  state: MatrixViewState,
  decorations: ReadonlyMap<string, CellDecoration>,
  handlers: MatrixHandlers = {},
): HTMLElement {
  const taxonomy = state.taxonomy;
  const root = doc.createElement("div");
  root.className = "matrix";
  root.dataset["mode"] = state.mode;

  const bands = doc.createElement("div");
  bands.className = "matrix-phases";
  for (const phaseName of PHASE_ORDER) {
    const span = taxonomy.tactics.filter((t) => t.phase === phaseName).length;
    bands.append(phaseBand(doc, phaseName, span));
  }
  root.append(bands);

  const columns = doc.createElement("div");
  columns.className = "matrix-columns";
  const grouped = techniquesByTactic(taxonomy);
  for (const tactic of taxonomy.tactics) {
    const column = doc.createElement("div");
    column.className = "matrix-column";
    column.dataset["tactic"] = tactic.id;
    column.append(tacticHeader(doc, tactic));
    for (const technique of grouped.get(tactic.id) ?? []) {
      const decoration =
        decorations.get(technique.id) ??
        ({ highlighted: state.selection.has(technique.id) } as CellDecoration);
      column.append(techniqueCell(doc, technique, decoration, handlers));
    }
    columns.append(column);
  }
  root.append(columns);
  return root;
}

/** Hover/click detail panel: description, subsystems, adversaries, references. */
export function renderTechniqueDetail(
  doc: Document,
  taxonomy: TaxonomyDoc,
  techniqueId: string,
): HTMLElement {
  const technique = taxonomy.techniques.find((t) => t.id === techniqueId);
  const panel = doc.createElement("aside");
  panel.className = "detail";
  if (!technique) {
    panel.textContent = `unknown technique ${techniqueId}`;
    return panel;
  }
  const heading = doc.createElement("h3");
  heading.textContent = `${technique.id} ${technique.name}`;
  const description = doc.createElement("p");
  description.textContent = technique.description;
  panel.append(heading, description);

  const facts: Array<[string, string[]]> = [
    ["Subsystems", technique.subsystems],
    ["Adversaries", technique.adversaries],
    ["References", technique.references],
  ];
  for (const [label, values] of facts) {
    const block = doc.createElement("dl");
    const term = doc.createElement("dt");
    term.textContent = label;
    block.append(term);
    for (const value of values.length ? values : ["none recorded"]) {
      const item = doc.createElement("dd");
      item.textContent = value;
      block.append(item);
    }
    panel.append(block);
  }
  return panel;
}

/** Legend mapping each compared model to its color, plus the overlap swatch. */
export function renderCompareLegend(
  doc: Document,
  models: readonly string[],
  palette: readonly string[],
): HTMLElement {
  const legend = doc.createElement("div");
  legend.className = "legend";
  models.forEach((modelId, index) => {
    legend.append(legendEntry(doc, modelId, palette[index] ?? "#cccccc"));
  });
  if (models.length > 1) {
    legend.append(
      legendEntry(doc, "shared by several", palette[palette.length - 1] ?? "#333333"),
    );
  }
  return legend;
}

function legendEntry(doc: Document, label: string, color: string): HTMLElement {
  const entry = doc.createElement("span");
  entry.className = "legend-entry";
  const swatch = doc.createElement("span");
  swatch.className = "legend-swatch";
  swatch.style.backgroundColor = color;
  swatch.dataset["color"] = color;
  const text = doc.createElement("span");
  text.textContent = label;
  entry.append(swatch, text);
  return entry;
}
