/** Page wiring: file inputs feed the model, every change re-renders. */

import {
  exportState,
  hoverVertex,
  importState,
  initialState,
  loadFiles,
  selectPath,
  setFilters,
} from "./model.js";
import {
  renderGraph,
  renderPathList,
  renderSignatureOptions,
  renderTooltip,
} from "./render.js";
import { LoadedData, ViewState } from "./types.js";

let graphJson: unknown = null;
let reportJson: unknown = null;
let state: ViewState | null = null;

const $ = <T extends HTMLElement>(id: string) => document.getElementById(id) as T;

function showError(message: string | null): void {
  const box = $("error");
  box.textContent = message ?? "";
  box.classList.toggle("hidden", message === null);
}

function rerender(): void {
  if (!state) return;
  const callbacks = {
    onSelectPath(index: number | null) {
      state = selectPath(state!, index);
      rerender();
    },
    onHoverVertex(id: number | null) {
      state = hoverVertex(state!, id);
      renderTooltip($("tooltip"), state);
    },
  };
  renderGraph($("svg") as unknown as SVGSVGElement, state, callbacks);
  renderPathList($("paths"), state, callbacks);
  renderSignatureOptions($("signature") as HTMLSelectElement, state);
  renderTooltip($("tooltip"), state);
}

function reload(): void {
  if (graphJson === null) return;
  try {
    const data: LoadedData = loadFiles(graphJson, reportJson);
    state = initialState(data);
    showError(null);
  } catch (err) {
    state = null;
    showError(err instanceof Error ? err.message : String(err));
  }
  rerender();
}

function bindFile(inputId: string, assign: (doc: unknown) => void): void {
  $(inputId).addEventListener("change", (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    file.text().then((text) => {
      try {
        assign(JSON.parse(text));
        reload();
      } catch (err) {
        showError(`${file.name}: ${err instanceof Error ? err.message : err}`);
      }
    });
  });
}

bindFile("graph-file", (doc) => (graphJson = doc));
bindFile("report-file", (doc) => (reportJson = doc));

$("min-score").addEventListener("input", (ev) => {
  if (!state) return;
  const raw = (ev.target as HTMLInputElement).value;
  state = setFilters(state, { minScore: raw === "" ? 0 : Number(raw) });
  rerender();
});

$("min-length").addEventListener("input", (ev) => {
  if (!state) return;
  const raw = (ev.target as HTMLInputElement).value;
  state = setFilters(state, { minLength: raw === "" ? 1 : Number(raw) });
  rerender();
});

$("max-length").addEventListener("input", (ev) => {
  if (!state) return;
  const raw = (ev.target as HTMLInputElement).value;
  state = setFilters(state, { maxLength: raw === "" ? null : Number(raw) });
  rerender();
});

$("signature").addEventListener("change", (ev) => {
  if (!state) return;
  const raw = (ev.target as HTMLSelectElement).value;
  state = setFilters(state, { signature: raw === "" ? null : raw });
  rerender();
});

$("show-wildcards").addEventListener("change", (ev) => {
  if (!state) return;
  state = setFilters(state, { showWildcards: (ev.target as HTMLInputElement).checked });
  rerender();
});

$("export").addEventListener("click", () => {
  if (!state) return;
  const blob = new Blob([exportState(state)], { type: "application/json" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = "view-state.json";
  a.click();
  URL.revokeObjectURL(a.href);
});

$("import").addEventListener("change", (ev) => {
  const input = ev.target as HTMLInputElement;
  const file = input.files?.[0];
  if (!file || !state) return;
  file.text().then((text) => {
    try {
      state = importState(state!.data, text);
      showError(null);
    } catch (err) {
      showError(err instanceof Error ? err.message : String(err));
    }
    rerender();
  });
});
