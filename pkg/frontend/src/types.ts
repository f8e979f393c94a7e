/** Wire formats produced by the mapperpaths CLI (schemaVersion 1). */

export interface VertexDoc {
  id: number;
  weight: number;
  filters: number[];
  /** Cluster size; absent when the skeleton did not list members. */
  size?: number;
}

export interface EdgeDoc {
  id: number;
  source: number;
  target: number;
  weight: number;
  /** Bit string, or "*" for a wildcard (bidirected) edge. */
  signature: string;
  pairId?: number | null;
}

export interface GraphDoc {
  schemaVersion: number;
  h: number;
  rule: string;
  tau: number;
  vertices: VertexDoc[];
  edges: EdgeDoc[];
  meta?: Record<string, unknown>;
  stats?: Record<string, unknown>;
}

export interface PathDoc {
  edges: number[];
  vertices: number[];
  /** Resolved signature; null when every edge was a wildcard. */
  signature: string | null;
  score: number;
}

export interface ReportDoc {
  schemaVersion: number;
  command?: Record<string, unknown>;
  stats?: Record<string, unknown>;
  paths: PathDoc[];
  totalScore: number;
  bounds?: { lower: number; upper: number };
}

export interface Filters {
  minScore: number;
  minLength: number;
  /** null means unbounded. */
  maxLength: number | null;
  /** Restrict the list to one resolved signature; null shows all. */
  signature: string | null;
  /** When false, paths with an undetermined (all-wildcard) signature are hidden. */
  showWildcards: boolean;
}

export interface LoadedData {
  graph: GraphDoc;
  report: ReportDoc | null;
  vertexById: Map<number, VertexDoc>;
  edgeById: Map<number, EdgeDoc>;
}

export interface ViewState {
  data: LoadedData;
  filters: Filters;
  /** Index into report.paths, or null. Always validated. */
  selectedPath: number | null;
  hoveredVertex: number | null;
}
