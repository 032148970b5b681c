/**
 * Live round trip against the real backend: a scripted click at vertex 1 on
 * an A2 session followed by undo must return byte-identical seed JSON, and
 * the rendered arrow multiset must reconstruct the exchange matrix before
 * and after the click.
 */
import { spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Client } from "../src/api.js";
import { arrowsFromB, bFromArrows, exchangeable } from "../src/quiver.js";
import { quiverSvg } from "../src/render.js";
import { arrowsFromSvg } from "./svg.js";

const PORT = 8781;
const BASE = `http://127.0.0.1:${PORT}`;

let proc: ChildProcess | null = null;
let stateDir = "";

async function waitReady(): Promise<void> {
  for (let i = 0; i < 120; i++) {
    try {
      const res = await fetch(`${BASE}/api/seeds/none`);
      if (res.status === 404) return;
    } catch {
      /* not up yet */
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error("backend did not come up");
}

beforeAll(async () => {
  stateDir = mkdtempSync(join(tmpdir(), "qck-ui-"));
  proc = spawn(
    "python3",
    ["-c", `from qck.service import create_app; import uvicorn; uvicorn.run(create_app(), host="127.0.0.1", port=${PORT}, log_level="error")`],
    { env: { ...process.env, QCK_STATE_DIR: stateDir }, stdio: "ignore" },
  );
  await waitReady();
}, 40000);

afterAll(() => {
  proc?.kill();
  if (stateDir) rmSync(stateDir, { recursive: true, force: true });
});

describe("A2 session round trip", () => {
  it("click(1) then undo restores byte-identical seed JSON", async () => {
    const client = new Client(BASE);
    const created = await client.createSeed("A2", [1, 2, 1]);
    const before = await client.getSeedRaw(created.id);

    // rendered arrows of the initial seed reconstruct B exactly
    const drawn0 = arrowsFromSvg(quiverSvg(created.seed));
    expect(bFromArrows(drawn0, 3, exchangeable(created.seed))).toEqual(created.seed.B);
    expect(drawn0).toEqual(arrowsFromB(created.seed));

    const mutated = await client.mutate(created.id, 1);
    expect(mutated.m_k).toBe(0);
    expect(mutated.seed.B).toEqual([[0], [1], [-1]]);
    expect(mutated.seed.D[0]).toEqual({ phi: [0, 0], alpha: [0, -1] });
    const drawn1 = arrowsFromSvg(quiverSvg(mutated.seed));
    expect(bFromArrows(drawn1, 3, exchangeable(mutated.seed))).toEqual(mutated.seed.B);

    await client.undo(created.id);
    const after = await client.getSeedRaw(created.id);
    expect(after).toBe(before);
  }, 30000);

  it("frozen vertex mutation is rejected by the backend", async () => {
    const client = new Client(BASE);
    const created = await client.createSeed("A2", [1, 2, 1]);
    await expect(client.mutate(created.id, 2)).rejects.toMatchObject({
      status: 400,
      detail: "FrozenDirection",
    });
  }, 30000);

  it("hover preview (dry run) leaves the session untouched and matches commit", async () => {
    const client = new Client(BASE);
    const created = await client.createSeed("A2", [1, 2, 1]);
    const before = await client.getSeedRaw(created.id);
    const preview = await client.mutate(created.id, 1, true);
    expect(await client.getSeedRaw(created.id)).toBe(before);
    const commit = await client.mutate(created.id, 1);
    expect(commit.seed).toEqual(preview.seed);
    expect(commit.exchanged_variable).toEqual(preview.exchanged_variable);
  }, 30000);
});
