import { describe, expect, it } from "vitest";
import { layout } from "../src/layout.js";
import type { DiagramDocument } from "../src/types.js";

const TRIANGLE: DiagramDocument = {
  format_version: 1,
  vertices: [{ id: "0" }, { id: "1" }, { id: "2" }],
  edges: [
    { tail: "0", head: "1", weight: 1 },
    { tail: "1", head: "2", weight: 1 },
    { tail: "2", head: "0", weight: 1 },
  ],
};

describe("force layout", () => {
  it("assigns an in-bounds position to every vertex", () => {
    const pos = layout(TRIANGLE, new Map(), { width: 400, height: 300 });
    expect(pos.size).toBe(3);
    for (const p of pos.values()) {
      expect(p.x).toBeGreaterThanOrEqual(0);
      expect(p.x).toBeLessThanOrEqual(400);
      expect(p.y).toBeGreaterThanOrEqual(0);
      expect(p.y).toBeLessThanOrEqual(300);
    }
  });

  it("keeps pinned vertices near their previous positions", () => {
    const first = layout(TRIANGLE, new Map());
    const second = layout(TRIANGLE, first);
    for (const [id, p] of first) {
      const q = second.get(id)!;
      const drift = Math.hypot(p.x - q.x, p.y - q.y);
      expect(drift).toBeLessThan(40);
    }
  });

  it("places new vertices without disturbing existing ones much", () => {
    const first = layout(TRIANGLE, new Map());
    const grown: DiagramDocument = {
      ...TRIANGLE,
      vertices: [...TRIANGLE.vertices, { id: "3" }],
      edges: [...TRIANGLE.edges, { tail: "2", head: "3", weight: 1 }],
    };
    const second = layout(grown, first);
    expect(second.size).toBe(4);
    for (const [id, p] of first) {
      const q = second.get(id)!;
      expect(Math.hypot(p.x - q.x, p.y - q.y)).toBeLessThan(80);
    }
  });
});
