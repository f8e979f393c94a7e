/**
 * Deterministic force-directed layout.
 *
 * The PRNG is seeded from a hash of the graph document, so the same file
 * always lays out identically (reproducible screenshots); there is no
 * call to Math.random anywhere.
 */

import { GraphDoc } from "./types.js";

export interface LayoutPoint {
  id: number;
  x: number;
  y: number;
}

/** FNV-1a over the canonical JSON of the graph. */
export function graphHash(graph: GraphDoc): number {
  const text = JSON.stringify(graph);
  let h = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return h >>> 0;
}

/** mulberry32: small deterministic PRNG over a 32-bit seed. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface LayoutOptions {
  width: number;
  height: number;
  iterations: number;
}

const DEFAULTS: LayoutOptions = { width: 800, height: 600, iterations: 250 };

/**
 * Spring embedding: adjacent vertices attract, all pairs repel, with a
 * mild centering pull and cooling step size.
 */
export function computeLayout(
  graph: GraphDoc,
  options: Partial<LayoutOptions> = {},
): LayoutPoint[] {
  const { width, height, iterations } = { ...DEFAULTS, ...options };
  const rand = mulberry32(graphHash(graph));
  const n = graph.vertices.length;
  if (n === 0) return [];
  const index = new Map(graph.vertices.map((v, i) => [v.id, i]));
  const xs = new Array<number>(n);
  const ys = new Array<number>(n);
  for (let i = 0; i < n; i++) {
    xs[i] = width * (0.1 + 0.8 * rand());
    ys[i] = height * (0.1 + 0.8 * rand());
  }
  const springs: Array<[number, number]> = [];
  const seen = new Set<string>();
  for (const e of graph.edges) {
    const a = index.get(e.source)!;
    const b = index.get(e.target)!;
    const key = a < b ? `${a}:${b}` : `${b}:${a}`;
    if (a !== b && !seen.has(key)) {
      seen.add(key);
      springs.push([a, b]);
    }
  }
  const area = width * height;
  const ideal = Math.sqrt(area / n) * 0.6;

  for (let step = 0; step < iterations; step++) {
    const heat = 0.1 * Math.min(width, height) * (1 - step / iterations) + 1;
    const fx = new Array<number>(n).fill(0);
    const fy = new Array<number>(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = xs[i] - xs[j];
        let dy = ys[i] - ys[j];
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-6) {
          dx = 0.01 * (rand() - 0.5);
          dy = 0.01 * (rand() - 0.5);
          d2 = dx * dx + dy * dy;
        }
        const rep = (ideal * ideal) / d2;
        fx[i] += dx * rep;
        fy[i] += dy * rep;
        fx[j] -= dx * rep;
        fy[j] -= dy * rep;
      }
    }
    for (const [a, b] of springs) {
      const dx = xs[a] - xs[b];
      const dy = ys[a] - ys[b];
      const d = Math.sqrt(dx * dx + dy * dy) || 1e-3;
      const att = (d * d) / ideal / d;
      fx[a] -= dx * att;
      fy[a] -= dy * att;
      fx[b] += dx * att;
      fy[b] += dy * att;
    }
    for (let i = 0; i < n; i++) {
      // centering pull keeps disconnected parts on screen
      fx[i] += (width / 2 - xs[i]) * 0.02;
      fy[i] += (height / 2 - ys[i]) * 0.02;
      const f = Math.sqrt(fx[i] * fx[i] + fy[i] * fy[i]) || 1e-9;
      const cap = Math.min(f, heat);
      xs[i] += (fx[i] / f) * cap;
      ys[i] += (fy[i] / f) * cap;
      xs[i] = Math.max(20, Math.min(width - 20, xs[i]));
      ys[i] = Math.max(20, Math.min(height - 20, ys[i]));
    }
  }
  return graph.vertices.map((v, i) => ({ id: v.id, x: xs[i], y: ys[i] }));
}
