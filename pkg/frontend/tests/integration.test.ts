// End-to-end against the real session service: perform the full E8
// reduction through the typed client, undo after each step and compare
// states byte for byte, and confirm the target overlay reports the match.
// Skips when the Python service cannot be started.

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { SessionClient } from "../src/api.js";
import { fromServerState } from "../src/state.js";

const E8_WORD =
  "a7 a6 a5 a4 a3 a2 a1 b5 b4 b7 b6 b5 b7 b6 b5 b8 b7 b6 k2 k7 k8".split(" ");
const PORT = 8797;

function pythonAvailable(): boolean {
  const probe = spawnSync("python3", ["-c", "import vctk"], {
    env: { ...process.env, PYTHONPATH: "../src" },
  });
  return probe.status === 0;
}

const available = pythonAvailable();
let service: ChildProcess | null = null;

async function waitForService(client: SessionClient): Promise<void> {
  for (let attempt = 0; attempt < 60; attempt += 1) {
    try {
      await client.createSession({ catalog: "A1" });
      return;
    } catch {
      await new Promise((resolve) => setTimeout(resolve, 250));
    }
  }
  throw new Error("service did not come up");
}

describe.runIf(available)("live service", () => {
  const client = new SessionClient(`http://127.0.0.1:${PORT}`);

  beforeAll(async () => {
    service = spawn(
      "python3",
      ["-c", `from vctk.service import serve_forever; serve_forever("127.0.0.1", ${PORT})`],
      { env: { ...process.env, PYTHONPATH: "../src" }, stdio: "ignore" },
    );
    await waitForService(client);
  }, 30000);

  afterAll(() => {
    service?.kill();
  });

  it("performs the interactive E8 reduction with per-step undo", async () => {
    const created = await client.createSession({
      catalog: "E8:gabrielov",
      target: "E8:standard",
    });
    let view = fromServerState(created.state);
    expect(view.targetMatched).toBe(false);
    expect(view.diffs.length).toBeGreaterThan(0);

    for (const token of E8_WORD) {
      const before = JSON.stringify(await client.getState(view.sessionId));
      await client.applyMove(view.sessionId, token);
      await client.undo(view.sessionId);
      const restored = JSON.stringify(await client.getState(view.sessionId));
      expect(restored).toBe(before); // undo restores the exact prior state

      const moved = await client.applyMove(view.sessionId, token);
      view = fromServerState(moved.state, view.layoutSeed);
    }

    expect(view.history).toEqual(E8_WORD);
    expect(view.targetMatched).toBe(true);
    expect(view.diffs).toEqual([]);
    // the final scene is the all-solid standard tree: 7 strokes, none dashed
    expect(view.scene.strokes).toHaveLength(7);
    expect(view.scene.strokes.every((stroke) => !stroke.dashed)).toBe(true);
  }, 60000);

  it("surfaces server rejections as errors and leaves state reachable", async () => {
    const created = await client.createSession({ catalog: "A2" });
    await expect(client.applyMove(created.id, "a5")).rejects.toMatchObject({ status: 422 });
    const state = await client.getState(created.id);
    expect(state.history).toEqual([]);
  });
});

describe.runIf(!available)("live service (unavailable)", () => {
  it.skip("python service not reachable in this environment", () => {});
});
