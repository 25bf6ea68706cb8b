// End-to-end contract check against the real play service: the client
// starts a four-path game versus the engine, plays a scripted winning
// line, is blocked from an illegal move with the duplicate-pair
// explanation, cross-checks the hint highlight against a direct GET
// /hint, and restores the prior board with undo.

import { ChildProcess, spawn } from "node:child_process";
import { Socket, createServer } from "node:net";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";
import { HintResponse } from "../src/types.js";

let server: ChildProcess | null = null;
let serverLog = "";
let base = "";
let app: App;

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const probe = createServer();
    probe.once("error", reject);
    probe.listen(0, "127.0.0.1", () => {
      const address = probe.address();
      if (address === null || typeof address === "string") {
        reject(new Error("no port"));
        return;
      }
      probe.close(() => resolve(address.port));
    });
  });
}

function portAccepts(port: number): Promise<boolean> {
  return new Promise((resolve) => {
    const socket = new Socket();
    socket.setTimeout(250);
    socket.once("connect", () => {
      socket.destroy();
      resolve(true);
    });
    const fail = () => {
      socket.destroy();
      resolve(false);
    };
    socket.once("error", fail);
    socket.once("timeout", fail);
    socket.connect(port, "127.0.0.1");
  });
}

async function waitForHealth(port: number): Promise<void> {
  for (let attempt = 0; attempt < 50; attempt++) {
    // probe the bare socket first so failed attempts stay quiet
    if (await portAccepts(port)) {
      const r = await fetch(`${base}/api/health`);
      if (r.ok) return;
    }
    await new Promise((resolve) => setTimeout(resolve, 300));
  }
  throw new Error(`service never became healthy; log so far:\n${serverLog}`);
}

function shell(): void {
  document.body.innerHTML = `
    <input id="family" value="path:4">
    <input id="colors" value="">
    <select id="mode">
      <option value="engine-second" selected>engine-second</option>
      <option value="two-human">two-human</option>
    </select>
    <button id="new-game"></button>
    <button id="hint"></button>
    <button id="undo"></button>
    <div id="message"></div>
    <div id="board"></div>
  `;
}

function vertexLabels(): (string | null)[] {
  return Array.from(document.querySelectorAll(".vertex-color")).map(
    (el) => el.textContent,
  );
}

function message(): string {
  return document.getElementById("message")?.textContent ?? "";
}

function banner(): Element | null {
  const el = document.querySelector(".banner");
  return el !== null && el.classList.contains("visible") ? el : null;
}

beforeAll(async () => {
  const port = await freePort();
  base = `http://127.0.0.1:${port}`;
  server = spawn("python3", ["-m", "edgegame", "serve", "--port", String(port)], {
    stdio: ["ignore", "pipe", "pipe"],
  });
  server.stdout?.on("data", (chunk: Buffer) => (serverLog += chunk.toString()));
  server.stderr?.on("data", (chunk: Buffer) => (serverLog += chunk.toString()));
  await waitForHealth(port);
  shell();
  app = new App(
    {
      board: document.getElementById("board") as HTMLElement,
      family: document.getElementById("family") as HTMLInputElement,
      colors: document.getElementById("colors") as HTMLInputElement,
      mode: document.getElementById("mode") as HTMLSelectElement,
      newGame: document.getElementById("new-game") as HTMLButtonElement,
      hint: document.getElementById("hint") as HTMLButtonElement,
      undo: document.getElementById("undo") as HTMLButtonElement,
      message: document.getElementById("message") as HTMLElement,
    },
    new ApiClient(base),
  );
});

afterAll(() => {
  server?.kill();
});

describe("live service", () => {
  it("starts a four-path game with the engine seated second", async () => {
    await app.newGame();
    expect(app.currentGameId()).not.toBeNull();
    expect(vertexLabels()).toEqual(["·", "·", "·", "·"]);
    expect(document.querySelector(".status")?.textContent).toBe(
      "Player 1 (you) to move",
    );
    expect(document.querySelectorAll(".swatch").length).toBe(2);
  });

  it("gets a synchronous engine reply to the first move", async () => {
    await app.submitMove(1, 1);
    expect(message()).toBe("engine answers v2 color 1");
    expect(vertexLabels()).toEqual(["1", "1", "·", "·"]);
    expect(banner()).toBeNull();
  });

  it("is blocked from an illegal move with the duplicate-pair explanation", async () => {
    await app.submitMove(3, 1);
    expect(message()).toBe(
      "{1,1} already used — color 1 on vertex 3 repeats the edge color {1,1}",
    );
    expect(vertexLabels()).toEqual(["1", "1", "·", "·"]); // board unchanged
  });

  it("highlights exactly the move GET /hint reports", async () => {
    await app.requestHint();
    const direct = await fetch(
      `${base}/api/games/${app.currentGameId()}/hint`,
    );
    const hint = (await direct.json()) as HintResponse;
    const highlighted = document.querySelector("[data-vertex].hint");
    const swatch = document.querySelector(".swatch.hint") as HTMLElement | null;
    expect(highlighted?.getAttribute("data-vertex")).toBe(String(hint.move[0]));
    expect(Number(swatch?.dataset.color)).toBe(hint.move[1]);
    expect(vertexLabels()).toEqual(["1", "1", "·", "·"]); // nothing was played
  });

  it("completes the scripted game with a winner banner", async () => {
    await app.submitMove(4, 1);
    expect(vertexLabels()).toEqual(["1", "1", "·", "1"]);
    expect(banner()?.textContent).toBe("Player 1 wins!");
    const enabled = Array.from(document.querySelectorAll(".swatch")).filter(
      (b) => !(b as HTMLButtonElement).disabled,
    );
    expect(enabled).toEqual([]);
  });

  it("restores the prior board with undo", async () => {
    await app.requestUndo();
    expect(vertexLabels()).toEqual(["1", "1", "·", "·"]);
    expect(banner()).toBeNull();
    expect(document.querySelector(".status")?.textContent).toBe(
      "Player 1 (you) to move",
    );
    // and the game can be finished again from here
    await app.submitMove(4, 1);
    expect(banner()?.textContent).toBe("Player 1 wins!");
  });
});
