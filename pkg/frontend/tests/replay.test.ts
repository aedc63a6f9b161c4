/**
 * End-to-end replay check against the real HTTP service.
 *
 * Spawns the Python service, performs a scripted 20-click session, and
 * verifies that (a) replaying the recorded vertex sequence server-side
 * reproduces the exact displayed document after every click, and (b)
 * the displayed classification always equals a fresh classify call.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { ApiClient } from "../src/api.js";
import { createState, onVertexClick, replayMatches } from "../src/state.js";
import type { DiagramDocument } from "../src/types.js";

const PORT = 8791;
const BASE_URL = `http://127.0.0.1:${PORT}`;
const REPO_ROOT = new URL("../..", import.meta.url).pathname;

let server: ChildProcess;

async function waitForHealth(api: ApiClient, timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    try {
      const res = await api.health();
      if (res.status === "ok") return;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) throw new Error("service did not come up");
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "uvicorn", "diagmut.server:app", "--host", "127.0.0.1", "--port", String(PORT)],
    {
      cwd: REPO_ROOT,
      env: { ...process.env, PYTHONPATH: `${REPO_ROOT}/src` },
      stdio: "ignore",
    },
  );
  await waitForHealth(new ApiClient(BASE_URL), 30000);
}, 40000);

afterAll(() => {
  server.kill();
});

/** Affine seed on five vertices: plenty of distinct classes to visit. */
const BASE_DOCUMENT: DiagramDocument = {
  format_version: 1,
  vertices: [{ id: "0" }, { id: "1" }, { id: "2" }, { id: "3" }, { id: "4" }],
  edges: [
    { tail: "0", head: "2", weight: 1 },
    { tail: "1", head: "2", weight: 1 },
    { tail: "2", head: "3", weight: 1 },
    { tail: "3", head: "4", weight: 1 },
    { tail: "3", head: "0", weight: 1 },
  ],
};

const CLICKS = [
  "2", "3", "0", "1", "4", "2", "2", "3", "1", "0",
  "4", "3", "2", "1", "0", "4", "2", "3", "0", "2",
];

describe("scripted 20-click session against the live service", () => {
  it("replay reproduces the displayed document and classification stays fresh", async () => {
    const api = new ApiClient(BASE_URL);
    let state = await createState(api, BASE_DOCUMENT);
    expect(state.classification.display).not.toBe("Unknown");

    for (const [index, vertex] of CLICKS.entries()) {
      state = await onVertexClick(api, state, vertex);
      expect(state.banner, `click ${index} at ${vertex}`).toBeNull();
      expect(state.history.length).toBe(index + 1);

      const fresh = await api.classify(state.current);
      expect(fresh, `classification after click ${index}`).toEqual(state.classification);

      expect(await replayMatches(api, state), `replay after click ${index}`).toBe(true);
    }
  }, 120000);
});
