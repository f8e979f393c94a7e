import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { computeLayout, graphHash, mulberry32 } from "../src/layout.js";
import { parseGraph } from "../src/model.js";

const here = dirname(fileURLToPath(import.meta.url));
const graph = () =>
  parseGraph(
    JSON.parse(readFileSync(join(here, "..", "fixtures", "chain3.graph.json"), "utf8")),
  );

describe("deterministic layout", () => {
  it("same graph, same positions", () => {
    const a = computeLayout(graph());
    const b = computeLayout(graph());
    expect(a).toEqual(b);
  });

  it("hash changes with the graph content", () => {
    const g1 = graph();
    const g2 = graph();
    g2.edges[0].weight += 1;
    expect(graphHash(g1)).not.toBe(graphHash(g2));
  });

  it("positions stay inside the viewport margins", () => {
    for (const p of computeLayout(graph(), { width: 400, height: 300 })) {
      expect(p.x).toBeGreaterThanOrEqual(20);
      expect(p.x).toBeLessThanOrEqual(380);
      expect(p.y).toBeGreaterThanOrEqual(20);
      expect(p.y).toBeLessThanOrEqual(280);
    }
  });

  it("chain neighbours end up closer than chain ends", () => {
    const points = computeLayout(graph());
    const at = new Map(points.map((p) => [p.id, p]));
    const dist = (a: number, b: number) =>
      Math.hypot(at.get(a)!.x - at.get(b)!.x, at.get(a)!.y - at.get(b)!.y);
    expect(dist(0, 1)).toBeLessThan(dist(0, 3));
  });

  it("prng is reproducible and uniform-ish", () => {
    const r1 = mulberry32(123);
    const r2 = mulberry32(123);
    const seq1 = Array.from({ length: 5 }, r1);
    const seq2 = Array.from({ length: 5 }, r2);
    expect(seq1).toEqual(seq2);
    for (const x of seq1) {
      expect(x).toBeGreaterThanOrEqual(0);
      expect(x).toBeLessThan(1);
    }
  });

  it("empty graph lays out to nothing", () => {
    expect(
      computeLayout({
        schemaVersion: 1, h: 1, rule: "a", tau: 0, vertices: [], edges: [],
      }),
    ).toEqual([]);
  });
});
