/**
 * Pure view-state logic: validation, indexing, filtering, selection.
 *
 * Everything here is a pure transform over immutable inputs; the loaded
 * documents are never mutated and displayed scores are taken verbatim
 * from the report (no client-side recomputation).
 */

import {
  EdgeDoc,
  Filters,
  GraphDoc,
  LoadedData,
  PathDoc,
  ReportDoc,
  VertexDoc,
  ViewState,
} from "./types.js";

const SCHEMA_VERSION = 1;

function fail(path: string, message: string): never {
  throw new Error(`${path}: ${message}`);
}

function requireNumber(value: unknown, path: string): number {
  if (typeof value !== "number" || Number.isNaN(value)) {
    fail(path, `expected a number, got ${JSON.stringify(value)}`);
  }
  return value;
}

function requireArray(value: unknown, path: string): unknown[] {
  if (!Array.isArray(value)) fail(path, "expected an array");
  return value;
}

function asRecord(value: unknown, path: string): Record<string, unknown> {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    fail(path, "expected an object");
  }
  return value as Record<string, unknown>;
}

function checkVersion(doc: Record<string, unknown>, path: string): void {
  if (doc.schemaVersion !== SCHEMA_VERSION) {
    fail(`${path}.schemaVersion`, `unsupported version ${JSON.stringify(doc.schemaVersion)}`);
  }
}

export function parseGraph(json: unknown): GraphDoc {
  const doc = asRecord(json, "graph");
  checkVersion(doc, "graph");
  requireNumber(doc.h, "graph.h");
  const vertices = requireArray(doc.vertices, "graph.vertices").map((raw, i) => {
    const v = asRecord(raw, `graph.vertices[${i}]`);
    requireNumber(v.id, `graph.vertices[${i}].id`);
    requireNumber(v.weight, `graph.vertices[${i}].weight`);
    requireArray(v.filters, `graph.vertices[${i}].filters`);
    return v as unknown as VertexDoc;
  });
  const ids = new Set(vertices.map((v) => v.id));
  const edges = requireArray(doc.edges, "graph.edges").map((raw, i) => {
    const e = asRecord(raw, `graph.edges[${i}]`);
    requireNumber(e.id, `graph.edges[${i}].id`);
    requireNumber(e.weight, `graph.edges[${i}].weight`);
    for (const end of ["source", "target"] as const) {
      const vid = requireNumber(e[end], `graph.edges[${i}].${end}`);
      if (!ids.has(vid)) fail(`graph.edges[${i}].${end}`, `unknown vertex id ${vid}`);
    }
    if (typeof e.signature !== "string") {
      fail(`graph.edges[${i}].signature`, "expected a string");
    }
    return e as unknown as EdgeDoc;
  });
  return { ...(doc as unknown as GraphDoc), vertices, edges };
}

export function parseReport(json: unknown, edgeIds: Set<number>): ReportDoc {
  const doc = asRecord(json, "report");
  checkVersion(doc, "report");
  requireNumber(doc.totalScore, "report.totalScore");
  const paths = requireArray(doc.paths, "report.paths").map((raw, i) => {
    const p = asRecord(raw, `report.paths[${i}]`);
    const edges = requireArray(p.edges, `report.paths[${i}].edges`);
    edges.forEach((eid, j) => {
      const id = requireNumber(eid, `report.paths[${i}].edges[${j}]`);
      if (!edgeIds.has(id)) {
        fail(`report.paths[${i}].edges[${j}]`, `unknown edge id ${id}`);
      }
    });
    requireNumber(p.score, `report.paths[${i}].score`);
    if (p.signature !== null && typeof p.signature !== "string") {
      fail(`report.paths[${i}].signature`, "expected a bit string or null");
    }
    return p as unknown as PathDoc;
  });
  return { ...(doc as unknown as ReportDoc), paths };
}

/** Validate and index a graph document plus an optional report. */
export function loadFiles(graphJson: unknown, reportJson?: unknown): LoadedData {
  const graph = parseGraph(graphJson);
  const vertexById = new Map(graph.vertices.map((v) => [v.id, v]));
  const edgeById = new Map(graph.edges.map((e) => [e.id, e]));
  if (vertexById.size !== graph.vertices.length) fail("graph.vertices", "duplicate ids");
  if (edgeById.size !== graph.edges.length) fail("graph.edges", "duplicate ids");
  const report =
    reportJson === undefined || reportJson === null
      ? null
      : parseReport(reportJson, new Set(edgeById.keys()));
  return { graph, report, vertexById, edgeById };
}

export function defaultFilters(): Filters {
  return {
    minScore: 0,
    minLength: 1,
    maxLength: null,
    signature: null,
    showWildcards: true,
  };
}

export function initialState(data: LoadedData): ViewState {
  return { data, filters: defaultFilters(), selectedPath: null, hoveredVertex: null };
}

export interface RankedPath {
  /** Index into report.paths: the stable identity of the path. */
  index: number;
  path: PathDoc;
}

/** Report paths surviving the active filters, ranked by score (desc). */
export function visiblePaths(state: ViewState): RankedPath[] {
  const report = state.data.report;
  if (!report) return [];
  const f = state.filters;
  const out: RankedPath[] = [];
  report.paths.forEach((path, index) => {
    if (path.score < f.minScore) return;
    if (path.edges.length < f.minLength) return;
    if (f.maxLength !== null && path.edges.length > f.maxLength) return;
    if (!f.showWildcards && path.signature === null) return;
    if (f.signature !== null && path.signature !== f.signature) return;
    out.push({ index, path });
  });
  out.sort((a, b) => b.path.score - a.path.score || a.index - b.index);
  return out;
}

/** Distinct resolved signatures present in the report, sorted. */
export function reportSignatures(state: ViewState): string[] {
  const report = state.data.report;
  if (!report) return [];
  const sigs = new Set<string>();
  for (const p of report.paths) if (p.signature !== null) sigs.add(p.signature);
  return [...sigs].sort();
}

export function setFilters(state: ViewState, patch: Partial<Filters>): ViewState {
  const next: ViewState = { ...state, filters: { ...state.filters, ...patch } };
  // Keep the selection only while it stays visible under the new filters.
  if (
    next.selectedPath !== null &&
    !visiblePaths(next).some((r) => r.index === next.selectedPath)
  ) {
    next.selectedPath = null;
  }
  return next;
}

export function selectPath(state: ViewState, index: number | null): ViewState {
  if (index !== null) {
    const report = state.data.report;
    if (!report || index < 0 || index >= report.paths.length) {
      throw new Error(`selectPath: no report path with index ${index}`);
    }
  }
  return { ...state, selectedPath: index };
}

export function hoverVertex(state: ViewState, vertexId: number | null): ViewState {
  return { ...state, hoveredVertex: vertexId };
}

/** Edge id -> 1-based rank along the selected path; empty when nothing is selected. */
export function highlightedRanks(state: ViewState): Map<number, number> {
  const ranks = new Map<number, number>();
  if (state.selectedPath === null || !state.data.report) return ranks;
  const path = state.data.report.paths[state.selectedPath];
  path.edges.forEach((eid, i) => ranks.set(eid, i + 1));
  return ranks;
}

/** Tooltip lines for a vertex: target mean, filter means, cluster size. */
export function vertexTooltip(state: ViewState, vertexId: number): string[] {
  const v = state.data.vertexById.get(vertexId);
  if (!v) return [];
  const lines = [`vertex ${v.id}`, `g mean: ${v.weight}`];
  v.filters.forEach((f, i) => lines.push(`f${i + 1} mean: ${f}`));
  if (v.size !== undefined) lines.push(`points: ${v.size}`);
  return lines;
}

interface ExportedState {
  filters: Filters;
  selectedPath: number | null;
}

/** Serialize the view transform (not the data) so a session can be restored. */
export function exportState(state: ViewState): string {
  const payload: ExportedState = {
    filters: state.filters,
    selectedPath: state.selectedPath,
  };
  return JSON.stringify(payload);
}

/** Re-apply an exported view transform onto freshly loaded data. */
export function importState(data: LoadedData, serialized: string): ViewState {
  const payload = JSON.parse(serialized) as ExportedState;
  let state = initialState(data);
  state = setFilters(state, payload.filters);
  return selectPath(state, payload.selectedPath);
}
