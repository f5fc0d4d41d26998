/** Page bootstrap: toolbar wiring around one NavigatorApp instance.
 *
 * The API base URL is the only configuration: `?api=http://host:port`,
 * defaulting to the page's own origin.
 */

import { NavigatorApp } from "./app.js";

function apiBaseUrl(): string {
  const param = new URLSearchParams(window.location.search).get("api");
  return param ?? window.location.origin;
}

async function refreshModelList(app: NavigatorApp, select: HTMLSelectElement) {
  select.textContent = "";
  const placeholder = document.createElement("option");
  placeholder.value = "";
  placeholder.textContent = "choose a model";
  select.append(placeholder);
  try {
    const { models } = await app.api.listModels();
    for (const model of models) {
      const option = document.createElement("option");
      option.value = model.id;
      option.textContent = `${model.title} (${model.tag_count} tags)`;
      select.append(option);
    }
  } catch {
    // offline: the matrix still renders from the bundled copy
  }
}

async function boot(): Promise<void> {
  const matrixHost = document.getElementById("matrix-host");
  const select = document.getElementById("model-select") as HTMLSelectElement | null;
  const editButton = document.getElementById("mode-edit") as HTMLButtonElement | null;
  const compareInput = document.getElementById("compare-ids") as HTMLInputElement | null;
  const compareButton = document.getElementById("btn-compare") as HTMLButtonElement | null;
  const statsButton = document.getElementById("btn-stats") as HTMLButtonElement | null;
  if (!matrixHost || !select || !editButton || !compareInput || !compareButton || !statsButton) {
    throw new Error("navigator markup is incomplete");
  }

  const app = new NavigatorApp(matrixHost, apiBaseUrl());
  await app.init();
  await refreshModelList(app, select);

  select.addEventListener("change", () => {
    if (select.value) void app.openModel(select.value);
  });
  editButton.addEventListener("click", () => {
    if (app.activeModel) app.enterEditMode();
  });
  compareButton.addEventListener("click", () => {
    const ids = compareInput.value.split(",").map((s) => s.trim()).filter(Boolean);
    if (ids.length >= 2) void app.runCompare(ids);
  });
  statsButton.addEventListener("click", () => void app.showStats());
}

void boot();
