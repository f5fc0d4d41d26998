/** Navigator controller: one instance per page session.
 *
 * Owns the view state plus the active model document, talks to the service,
 * and re-renders into its container. Overlap, stats, and layer colors all
 * come from the API; the client never recomputes them.
 */

import { ApiClient, ApiError } from "./api.js";
import { BUNDLED_TAXONOMY } from "./bundled-taxonomy.js";
import {
  renderCompareLegend,
  renderMatrix,
  renderTechniqueDetail,
  type CellDecoration,
} from "./matrix.js";
import {
  enterBrowse,
  enterCompare,
  enterEdit,
  initialState,
  markDirty,
  withSelection,
  type MatrixViewState,
} from "./state.js";
import type { ComparisonDoc, FindingDoc, ModelDoc, StatsDoc } from "./types.js";

export const COMPARE_PALETTE = [
  "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
  "#a6d854", "#ffd92f", "#e5c494", "#b3b3b3",
];

/** bucket index -> fill; values come straight from the stats endpoint */
export const BUCKET_SHADES = [
  "#f7f7f7", "#c6dbef", "#9ecae1", "#6baed6", "#2171b5",
];

interface PendingSave {
  doc: ModelDoc;
  expected: string | null;
}

export class NavigatorApp {
  readonly api: ApiClient;
  state: MatrixViewState;
  activeModel: ModelDoc | null = null;
  /** the modified timestamp the server last confirmed; concurrency token */
  lastStoredModified: string | null = null;
  comparison: ComparisonDoc | null = null;
  comparedModels = new Map<string, ModelDoc>();
  stats: StatsDoc | null = null;
  statsVisible = false;
  banner: { kind: string; text: string } | null = null;
  findings: FindingDoc[] = [];
  detailTechniqueId: string | null = null;
  private pendingSave: PendingSave | null = null;
  private readonly doc: Document;

  constructor(
    private readonly container: HTMLElement,
    baseUrl: string,
  ) {
    this.api = new ApiClient(baseUrl);
    this.doc = container.ownerDocument;
    this.state = initialState(BUNDLED_TAXONOMY, true);
  }

  /** Load the taxonomy, falling back to the bundled snapshot read-only. */
  async init(): Promise<void> {
    try {
      const taxonomy = await this.api.fetchTaxonomy();
      this.state = initialState(taxonomy, false);
      this.banner = null;
    } catch {
      this.state = initialState(BUNDLED_TAXONOMY, true);
      this.banner = {
        kind: "offline",
        text: "service unreachable; showing the bundled matrix read-only",
      };
    }
    this.render();
  }

  get offline(): boolean {
    return this.state.offline;
  }

  // -- browse / edit ------------------------------------------------

  async openModel(id: string, edit = false): Promise<void> {
    const model = await this.api.fetchModel(id);
    this.activeModel = model;
    this.lastStoredModified = model.modified;
    this.findings = [];
    this.statsVisible = false;
    this.comparison = null;
    let state = withSelection(this.state, model.tags.map((t) => t.technique));
    state = edit ? enterEdit(state, id) : { ...enterBrowse(state), activeModelId: id };
    this.state = markDirty(state, false);
    this.render();
  }

  enterEditMode(): void {
    if (!this.activeModel) throw new Error("Edit mode requires an active model");
    this.state = enterEdit(this.state, this.activeModel.id);
    this.render();
  }

  isTagged(techniqueId: string): boolean {
    return !!this.activeModel?.tags.some((t) => t.technique === techniqueId);
  }

  /** Add (or replace) a tag locally, then persist. */
  async addTag(
    techniqueId: string,
    evidence: string,
    confidence: "Confirmed" | "Suspected" = "Confirmed",
  ): Promise<void> {
    const model = this.requireEditable();
    const others = model.tags.filter((t) => t.technique !== techniqueId);
    const next: ModelDoc = {
      ...model,
      tags: [...others, { technique: techniqueId, evidence, confidence }],
      modified: new Date().toISOString().replace(/\.\d{3}Z$/, ".000000Z"),
    };
    await this.persist(next);
  }

  /** Remove a tag locally, then persist. */
  async removeTag(techniqueId: string): Promise<void> {
    const model = this.requireEditable();
    const next: ModelDoc = {
      ...model,
      tags: model.tags.filter((t) => t.technique !== techniqueId),
      modified: new Date().toISOString().replace(/\.\d{3}Z$/, ".000000Z"),
    };
    await this.persist(next);
  }

  /** Retry the last save that failed on a network error. */
  async retrySave(): Promise<void> {
    if (!this.pendingSave) return;
    const { doc, expected } = this.pendingSave;
    await this.persistWith(doc, expected);
  }

  private requireEditable(): ModelDoc {
    if (this.state.mode !== "Edit" || !this.activeModel) {
      throw new Error("tagging requires Edit mode with an active model");
    }
    if (this.state.offline) {
      throw new Error("read-only: service unreachable");
    }
    return this.activeModel;
  }

  private async persist(next: ModelDoc): Promise<void> {
    await this.persistWith(next, this.lastStoredModified);
  }

  private async persistWith(next: ModelDoc, expected: string | null): Promise<void> {
    let response: ModelDoc;
    try {
      response = await this.api.putModel(next, expected);
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        // someone else edited; surface it and reload their version
        this.banner = {
          kind: "conflict",
          text: "the model changed elsewhere; reloaded the stored version",
        };
        this.pendingSave = null;
        await this.reloadActiveModel();
        return;
      }
      if (error instanceof ApiError && error.status === 422) {
        // invalid change: keep the stored version, show every finding inline
        this.findings = error.body.findings ?? [];
        this.banner = { kind: "rejected", text: error.body.message };
        this.pendingSave = null;
        this.render();
        return;
      }
      // network trouble: keep the change locally, offer a retry
      this.activeModel = next;
      this.state = markDirty(
        withSelection(this.state, next.tags.map((t) => t.technique)),
        true,
      );
      this.pendingSave = { doc: next, expected };
      this.banner = {
        kind: "error",
        text: "could not reach the service; change kept locally",
      };
      this.render();
      return;
    }
    this.activeModel = response;
    this.lastStoredModified = response.modified;
    this.findings = [];
    this.banner = null;
    this.pendingSave = null;
    this.state = markDirty(
      withSelection(this.state, response.tags.map((t) => t.technique)),
      false,
    );
    this.render();
  }

  private async reloadActiveModel(): Promise<void> {
    if (!this.activeModel) return;
    const model = await this.api.fetchModel(this.activeModel.id);
    this.activeModel = model;
    this.lastStoredModified = model.modified;
    this.state = markDirty(
      withSelection(this.state, model.tags.map((t) => t.technique)),
      false,
    );
    this.render();
  }

  // -- compare ------------------------------------------------------

  async runCompare(ids: string[]): Promise<void> {
    this.state = enterCompare(this.state, ids);
    this.comparison = await this.api.compare(ids, COMPARE_PALETTE.slice(0, ids.length + 1));
    this.comparedModels.clear();
    for (const id of ids) {
      this.comparedModels.set(id, await this.api.fetchModel(id));
    }
    this.statsVisible = false;
    this.render();
  }

  // -- stats --------------------------------------------------------

  async showStats(): Promise<void> {
    this.stats = await this.api.fetchStats();
    this.statsVisible = true;
    this.comparison = null;
    this.render();
  }

  // -- rendering ----------------------------------------------------

  showDetail(techniqueId: string): void {
    this.detailTechniqueId = techniqueId;
    this.render();
  }

  private decorations(): Map<string, CellDecoration> {
    const decorations = new Map<string, CellDecoration>();
    if (this.state.mode === "Compare" && this.comparison) {
      for (const layer of this.comparison.layers) {
        decorations.set(layer.technique, {
          color: layer.color,
          badge: String(layer.members.length),
        });
      }
      return decorations;
    }
    if (this.statsVisible && this.stats) {
      for (const cell of this.stats.grid) {
        if (cell.count > 0) {
          decorations.set(cell.technique, {
            color: BUCKET_SHADES[Math.min(cell.bucket, 4)],
            badge: String(cell.count),
          });
        }
      }
      return decorations;
    }
    for (const id of this.state.selection) {
      decorations.set(id, { highlighted: true });
    }
    return decorations;
  }

  private onCellClick = (techniqueId: string): void => {
    if (this.state.mode === "Edit") {
      this.openTagDialog(techniqueId);
      return;
    }
    this.showDetail(techniqueId);
  };

  /** Evidence prompt: mandatory text, Confirmed/Suspected selector. */
  private openTagDialog(techniqueId: string): void {
    const existing = this.activeModel?.tags.find((t) => t.technique === techniqueId);
    const dialog = this.doc.createElement("div");
    dialog.className = "dialog";
    dialog.dataset["technique"] = techniqueId;

    const heading = this.doc.createElement("h3");
    heading.textContent = existing
      ? `Remove tag ${techniqueId}?`
      : `Tag ${techniqueId}`;
    dialog.append(heading);

    let evidenceInput: HTMLTextAreaElement | null = null;
    let confidenceInput: HTMLSelectElement | null = null;
    if (!existing) {
      evidenceInput = this.doc.createElement("textarea");
      evidenceInput.className = "evidence-input";
      evidenceInput.required = true;
      confidenceInput = this.doc.createElement("select");
      confidenceInput.className = "confidence-input";
      for (const value of ["Confirmed", "Suspected"]) {
        const option = this.doc.createElement("option");
        option.value = value;
        option.textContent = value;
        confidenceInput.append(option);
      }
      dialog.append(evidenceInput, confidenceInput);
    }

    const confirm = this.doc.createElement("button");
    confirm.type = "button";
    confirm.className = "dialog-confirm";
    confirm.textContent = existing ? "Remove" : "Tag";
    confirm.addEventListener("click", () => {
      if (existing) {
        dialog.remove();
        void this.removeTag(techniqueId);
        return;
      }
      const evidence = evidenceInput?.value.trim() ?? "";
      if (!evidence) {
        evidenceInput?.classList.add("invalid");
        return; // evidence entry is mandatory when tagging
      }
      const confidence =
        (confidenceInput?.value as "Confirmed" | "Suspected") ?? "Confirmed";
      dialog.remove();
      void this.addTag(techniqueId, evidence, confidence);
    });

    const cancel = this.doc.createElement("button");
    cancel.type = "button";
    cancel.className = "dialog-cancel";
    cancel.textContent = "Cancel";
    cancel.addEventListener("click", () => dialog.remove());

    dialog.append(confirm, cancel);
    this.container.append(dialog);
  }

  /** Members + evidence for a cell in compare mode (click-through panel). */
  compareCellDetail(techniqueId: string): Array<{ model: string; evidence: string }> {
    if (!this.comparison) return [];
    const members = this.comparison.cells[techniqueId] ?? [];
    return members.map((modelId) => {
      const model = this.comparedModels.get(modelId);
      const tag = model?.tags.find((t) => t.technique === techniqueId);
      return { model: modelId, evidence: tag?.evidence ?? "" };
    });
  }

  render(): void {
    this.container.textContent = "";

    if (this.banner) {
      const banner = this.doc.createElement("div");
      banner.className = `banner ${this.banner.kind}`;
      banner.textContent = this.banner.text;
      if (this.banner.kind === "error" && this.pendingSave) {
        const retry = this.doc.createElement("button");
        retry.type = "button";
        retry.className = "retry";
        retry.textContent = "Retry";
        retry.addEventListener("click", () => void this.retrySave());
        banner.append(retry);
      }
      this.container.append(banner);
    }

    if (this.state.dirty) {
      const dirty = this.doc.createElement("div");
      dirty.className = "dirty-marker";
      dirty.textContent = "unsaved local changes";
      this.container.append(dirty);
    }

    if (this.findings.length) {
      const list = this.doc.createElement("ul");
      list.className = "findings";
      for (const finding of this.findings) {
        const item = this.doc.createElement("li");
        item.dataset["code"] = finding.code;
        item.textContent = `${finding.severity} ${finding.code} [${finding.subject}] ${finding.message}`;
        list.append(item);
      }
      this.container.append(list);
    }

    if (this.state.mode === "Compare" && this.comparison) {
      this.container.append(
        renderCompareLegend(
          this.doc,
          this.comparison.models,
          COMPARE_PALETTE.slice(0, this.comparison.models.length).concat(
            COMPARE_PALETTE[this.comparison.models.length] ?? "#b3b3b3",
          ),
        ),
      );
    }

    this.container.append(
      renderMatrix(this.doc, this.state, this.decorations(), {
        onCellClick: this.onCellClick,
      }),
    );

    if (this.detailTechniqueId) {
      this.container.append(
        renderTechniqueDetail(this.doc, this.state.taxonomy, this.detailTechniqueId),
      );
      if (this.state.mode === "Compare" && this.comparison) {
        const rows = this.compareCellDetail(this.detailTechniqueId);
        if (rows.length) {
          const list = this.doc.createElement("ul");
          list.className = "compare-members";
          for (const row of rows) {
            const item = this.doc.createElement("li");
            item.dataset["model"] = row.model;
            item.textContent = `${row.model}: ${row.evidence}`;
            list.append(item);
          }
          this.container.append(list);
        }
      }
    }
  }
}
