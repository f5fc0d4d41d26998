/** View state and its pure transitions. Invariants live here, not in the DOM. */

import type { TaxonomyDoc } from "./types.js";

export type Mode = "Browse" | "Edit" | "Compare";

export interface MatrixViewState {
  taxonomy: TaxonomyDoc;
  /** true when the taxonomy came from the bundled copy, not the API */
  offline: boolean;
  mode: Mode;
  activeModelId: string | null;
  /** technique ids highlighted in Browse/Edit (the active model's tags) */
  selection: ReadonlySet<string>;
  compareIds: readonly string[];
  /** local changes not yet confirmed by the server */
  dirty: boolean;
}

export function initialState(taxonomy: TaxonomyDoc, offline = false): MatrixViewState {
  return {
    taxonomy,
    offline,
    mode: "Browse",
    activeModelId: null,
    selection: new Set(),
    compareIds: [],
    dirty: false,
  };
}

function knownIds(taxonomy: TaxonomyDoc): Set<string> {
  return new Set(taxonomy.techniques.map((t) => t.id));
}

/** selection is always clamped to ids that exist in the taxonomy snapshot */
export function withSelection(
  state: MatrixViewState,
  ids: Iterable<string>,
): MatrixViewState {
  const known = knownIds(state.taxonomy);
  const selection = new Set<string>();
  for (const id of ids) {
    if (known.has(id)) selection.add(id);
  }
  return { ...state, selection };
}

export function enterBrowse(state: MatrixViewState): MatrixViewState {
  return { ...state, mode: "Browse", compareIds: [] };
}

export function enterEdit(state: MatrixViewState, modelId: string): MatrixViewState {
  if (!modelId) throw new Error("Edit mode requires an active model");
  return { ...state, mode: "Edit", activeModelId: modelId, compareIds: [] };
}

export function enterCompare(
  state: MatrixViewState,
  ids: readonly string[],
): MatrixViewState {
  if (ids.length < 2) throw new Error("Compare mode requires at least 2 models");
  return { ...state, mode: "Compare", compareIds: [...ids] };
}

export function toggleSelected(state: MatrixViewState, id: string): MatrixViewState {
  const next = new Set(state.selection);
  if (next.has(id)) {
    next.delete(id);
  } else {
    next.add(id);
  }
  return withSelection(state, next);
}

export function markDirty(state: MatrixViewState, dirty: boolean): MatrixViewState {
  return { ...state, dirty };
}
