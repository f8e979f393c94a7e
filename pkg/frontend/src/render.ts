/** SVG rendering and DOM wiring for the explorer page. */

import { computeLayout, LayoutPoint } from "./layout.js";
import {
  highlightedRanks,
  reportSignatures,
  vertexTooltip,
  visiblePaths,
} from "./model.js";
import { ViewState } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const PALETTE = [
  "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
  "#a65628", "#f781bf", "#17becf", "#666666", "#bcbd22",
];

export interface RenderCallbacks {
  onSelectPath(index: number | null): void;
  onHoverVertex(id: number | null): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  cls?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

function weightColor(weight: number, lo: number, hi: number): string {
  const t = hi > lo ? (weight - lo) / (hi - lo) : 0.5;
  const r = Math.round(40 + 215 * t);
  const b = Math.round(230 - 190 * t);
  return `rgb(${r},80,${b})`;
}

export function renderGraph(
  svg: SVGSVGElement,
  state: ViewState,
  callbacks: RenderCallbacks,
): void {
  while (svg.firstChild) svg.removeChild(svg.firstChild);
  const graph = state.data.graph;
  const width = svg.clientWidth || 800;
  const height = svg.clientHeight || 600;
  const points = computeLayout(graph, { width, height });
  const at = new Map<number, LayoutPoint>(points.map((p) => [p.id, p]));
  const ranks = highlightedRanks(state);

  const defs = document.createElementNS(SVG_NS, "defs");
  defs.innerHTML =
    '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ' +
    'markerWidth="6" markerHeight="6" orient="auto-start-reverse">' +
    '<path d="M 0 0 L 10 5 L 0 10 z" fill="#999"/></marker>';
  svg.appendChild(defs);

  const selColor =
    state.selectedPath !== null
      ? PALETTE[state.selectedPath % PALETTE.length]
      : PALETTE[0];

  for (const e of graph.edges) {
    const a = at.get(e.source)!;
    const b = at.get(e.target)!;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(a.x));
    line.setAttribute("y1", String(a.y));
    line.setAttribute("x2", String(b.x));
    line.setAttribute("y2", String(b.y));
    const rank = ranks.get(e.id);
    line.setAttribute("stroke", rank !== undefined ? selColor : "#bbb");
    line.setAttribute("stroke-width", rank !== undefined ? "4" : "1.5");
    line.setAttribute("marker-end", "url(#arrow)");
    svg.appendChild(line);
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String((a.x + b.x) / 2));
    label.setAttribute("y", String((a.y + b.y) / 2 - 4));
    label.setAttribute("class", "edge-label");
    label.textContent =
      rank !== undefined
        ? `#${rank} w=${e.weight.toFixed(2)} ${e.signature}`
        : `${e.weight.toFixed(2)} ${e.signature}`;
    if (rank !== undefined) label.setAttribute("fill", selColor);
    svg.appendChild(label);
  }

  const weights = graph.vertices.map((v) => v.weight);
  const lo = Math.min(...weights);
  const hi = Math.max(...weights);
  const sizes = graph.vertices.map((v) => v.size ?? 1);
  const maxSize = Math.max(...sizes, 1);
  for (const v of graph.vertices) {
    const p = at.get(v.id)!;
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(p.x));
    circle.setAttribute("cy", String(p.y));
    const size = v.size ?? 1;
    circle.setAttribute("r", String(6 + 10 * Math.sqrt(size / maxSize)));
    circle.setAttribute("fill", weightColor(v.weight, lo, hi));
    circle.setAttribute("stroke", "#333");
    circle.addEventListener("mouseenter", () => callbacks.onHoverVertex(v.id));
    circle.addEventListener("mouseleave", () => callbacks.onHoverVertex(null));
    svg.appendChild(circle);
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(p.x));
    label.setAttribute("y", String(p.y + 3));
    label.setAttribute("class", "vertex-label");
    label.textContent = String(v.id);
    svg.appendChild(label);
  }
}

export function renderPathList(
  container: HTMLElement,
  state: ViewState,
  callbacks: RenderCallbacks,
): void {
  container.textContent = "";
  if (!state.data.report) {
    container.appendChild(el("p", "hint", "No report loaded: view-only mode."));
    return;
  }
  const rows = visiblePaths(state);
  if (rows.length === 0) {
    container.appendChild(el("p", "hint", "No paths match the active filters."));
    return;
  }
  for (const { index, path } of rows) {
    const row = el("div", "path-row" + (state.selectedPath === index ? " selected" : ""));
    row.appendChild(el("span", "score", path.score.toFixed(4)));
    row.appendChild(
      el(
        "span",
        "detail",
        `${path.edges.length} edges, sig ${path.signature ?? "any"}`,
      ),
    );
    row.addEventListener("click", () =>
      callbacks.onSelectPath(state.selectedPath === index ? null : index),
    );
    container.appendChild(row);
  }
}

export function renderSignatureOptions(select: HTMLSelectElement, state: ViewState): void {
  const current = state.filters.signature ?? "";
  select.textContent = "";
  const any = el("option");
  any.value = "";
  any.textContent = "all signatures";
  select.appendChild(any);
  for (const sig of reportSignatures(state)) {
    const opt = el("option");
    opt.value = sig;
    opt.textContent = sig;
    select.appendChild(opt);
  }
  select.value = current;
}

export function renderTooltip(box: HTMLElement, state: ViewState): void {
  if (state.hoveredVertex === null) {
    box.classList.add("hidden");
    return;
  }
  box.classList.remove("hidden");
  box.textContent = "";
  for (const line of vertexTooltip(state, state.hoveredVertex)) {
    box.appendChild(el("div", undefined, line));
  }
}
