import { describe, expect, it } from "vitest";
import { ApiClient } from "../src/api.js";
import { createState, load, onVertexClick, replayMatches, save, undo } from "../src/state.js";
import { DiagramDocument, documentsEqual, serializeDocument } from "../src/types.js";

/**
 * Minimal in-process stand-in for the service: simply-laced mutation
 * only (enough for path/triangle documents), same payload shapes.
 */
function fakeService(): typeof fetch {
  const mutate = (doc: DiagramDocument, k: string): DiagramDocument => {
    const arcs = new Map(doc.edges.map((e) => [`${e.tail}|${e.head}`, e.weight]));
    const has = (t: string, h: string) => arcs.has(`${t}|${h}`);
    const next = new Map<string, number>();
    for (const e of doc.edges) {
      if (e.tail === k || e.head === k) {
        next.set(`${e.head}|${e.tail}`, e.weight);
      } else {
        next.set(`${e.tail}|${e.head}`, e.weight);
      }
    }
    for (const into of doc.edges.filter((e) => e.head === k)) {
      for (const outof of doc.edges.filter((e) => e.tail === k)) {
        const i = into.tail;
        const j = outof.head;
        if (has(j, i)) {
          next.delete(`${j}|${i}`);
        } else if (next.has(`${i}|${j}`)) {
          next.delete(`${i}|${j}`);
        } else {
          next.set(`${i}|${j}`, into.weight * outof.weight);
        }
      }
    }
    return {
      format_version: 1,
      vertices: doc.vertices,
      edges: [...next.entries()]
        .map(([key, weight]) => {
          const [tail, head] = key.split("|");
          return { tail, head, weight };
        })
        .sort((a, b) => (a.tail + a.head < b.tail + b.head ? -1 : 1)),
    };
  };

  return async (url, init) => {
    const path = String(url);
    const body = init?.body === undefined ? {} : JSON.parse(init.body as string);
    const reply = (status: number, payload: unknown) =>
      new Response(JSON.stringify(payload), { status });
    if (path.endsWith("/v1/health")) return reply(200, { status: "ok" });
    if (path.endsWith("/v1/classify")) {
      return reply(200, {
        type: "A",
        rank: body.diagram.vertices.length,
        family: "A",
        params: { n: null, m: null, stars: null },
        width: null,
        display: `A${body.diagram.vertices.length}`,
      });
    }
    if (path.endsWith("/v1/validate")) {
      const bad = body.diagram.edges.some((e: { weight: number }) => e.weight <= 0);
      return reply(200, {
        violations: bad ? [{ code: "weight", message: "weights must be positive" }] : [],
      });
    }
    if (path.endsWith("/v1/mutate")) {
      const ids = body.diagram.vertices.map((v: { id: string }) => v.id);
      if (!ids.includes(body.vertex)) {
        return reply(422, { detail: { error: "vertex", message: "unknown vertex" } });
      }
      return reply(200, { diagram: mutate(body.diagram, body.vertex) });
    }
    return reply(404, { detail: "no such endpoint" });
  };
}

const PATH: DiagramDocument = {
  format_version: 1,
  vertices: [{ id: "a" }, { id: "b" }, { id: "c" }],
  edges: [
    { tail: "a", head: "b", weight: 1 },
    { tail: "b", head: "c", weight: 1 },
  ],
};

const api = new ApiClient("http://fake", fakeService());

describe("explorer state", () => {
  it("click then click again restores the diagram (involution)", async () => {
    const s0 = await createState(api, PATH);
    const s1 = await onVertexClick(api, s0, "b");
    expect(s1.current.edges.length).toBe(3);
    const s2 = await onVertexClick(api, s1, "b");
    expect(documentsEqual(s2.current, PATH)).toBe(true);
    expect(s2.history.length).toBe(2);
  });

  it("undo restores the recorded document exactly and pops history", async () => {
    const s0 = await createState(api, PATH);
    const s1 = await onVertexClick(api, s0, "b");
    const s2 = await undo(api, s1);
    expect(documentsEqual(s2.current, PATH)).toBe(true);
    expect(s2.history.length).toBe(0);
  });

  it("undo on empty history is a no-op", async () => {
    const s0 = await createState(api, PATH);
    const s1 = await undo(api, s0);
    expect(s1).toBe(s0);
  });

  it("failed mutation leaves the document unchanged and raises a banner", async () => {
    const s0 = await createState(api, PATH);
    const s1 = await onVertexClick(api, s0, "nope");
    expect(documentsEqual(s1.current, PATH)).toBe(true);
    expect(s1.history.length).toBe(0);
    expect(s1.banner).not.toBeNull();
  });

  it("load rejects invalid documents with a violations banner", async () => {
    const s0 = await createState(api, PATH);
    const bad: DiagramDocument = {
      ...PATH,
      edges: [{ tail: "a", head: "b", weight: 0 }],
    };
    const s1 = await load(api, s0, bad);
    expect(s1.banner).toEqual({
      kind: "violations",
      violations: [{ code: "weight", message: "weights must be positive" }],
    });
    expect(documentsEqual(s1.current, PATH)).toBe(true);
  });

  it("save ∘ load is the identity on the serialized document", async () => {
    const s0 = await createState(api, PATH);
    const reparsed = JSON.parse(save(s0)) as DiagramDocument;
    const s1 = await load(api, s0, reparsed);
    expect(save(s1)).toBe(save(s0));
  });

  it("serialization is key-sorted, two-space indented and newline-terminated", () => {
    const text = serializeDocument(PATH);
    expect(text.endsWith("}\n")).toBe(true);
    expect(text.indexOf('"edges"')).toBeLessThan(text.indexOf('"format_version"'));
    expect(text.indexOf('"format_version"')).toBeLessThan(text.indexOf('"vertices"'));
  });

  it("replay of the recorded vertex sequence reproduces the document", async () => {
    let s = await createState(api, PATH);
    for (const v of ["b", "a", "c", "b", "a"]) {
      s = await onVertexClick(api, s, v);
    }
    expect(await replayMatches(api, s)).toBe(true);
  });
});
