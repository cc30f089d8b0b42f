// End-to-end: a real galex service is spawned and the explorer drives it
// through the DOM, walking from the top to a valid configuration and back.

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { spawn, type ChildProcess } from "node:child_process";
import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";

import { ApiClient } from "../src/api.js";
import { Explorer, assertDeltaConsistent } from "../src/app.js";

const here = dirname(fileURLToPath(import.meta.url));
const repoRoot = join(here, "..", "..");
const contextCsv = join(repoRoot, "src", "galex", "data", "k_dm.csv");

const port = 8700 + Math.floor(Math.random() * 250);
const base = `http://127.0.0.1:${port}`;

let server: ChildProcess;

async function waitForService(): Promise<void> {
  for (let attempt = 0; attempt < 120; attempt++) {
    try {
      const response = await fetch(`${base}/api/lattice`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error("galex service did not come up");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "galex.cli", "serve", contextCsv, "--port", String(port)],
    { cwd: repoRoot, stdio: "ignore" },
  );
  await waitForService();
});

afterAll(() => {
  server.kill();
});

function texts(selector: string): string[] {
  return [...document.querySelectorAll(selector)].map((n) => n.textContent ?? "");
}

function moveCards(direction: "UP" | "DOWN"): HTMLButtonElement[] {
  return [...document.querySelectorAll<HTMLButtonElement>(`.move-card[data-direction=${direction}]`)];
}

function cardByRemovedAttr(name: string): HTMLButtonElement {
  const card = moveCards("UP").find((c) => c.textContent!.includes(`−${name}`));
  expect(card, `no UP card removing ${name}`).toBeDefined();
  return card!;
}

function currentIntent(): string[] {
  return texts('[data-field="intent"] .chip:not(.chip-none)');
}

async function clickAndSettle(explorer: Explorer, element: HTMLElement): Promise<void> {
  element.click();
  await explorer.whenIdle();
}

describe("explorer against a live service", () => {
  it("lands on top, shows the core attribute and all reachable configurations", async () => {
    document.body.innerHTML = '<main id="app"></main>';
    const explorer = new Explorer(
      document.getElementById("app")!,
      new ApiClient(base),
    );
    await explorer.init();

    expect(currentIntent()).toEqual(["OS:Windows"]);
    expect(moveCards("UP")).toHaveLength(0);
    expect(texts("#reachable li")).toHaveLength(5);
    expect(document.querySelectorAll("#minimap .map-node")).toHaveLength(10);

    // walk down to the object-concept of Astah: first add the Mac/Linux pair,
    // then DM:Conceptual
    const downToOsTriple = moveCards("DOWN").find((c) =>
      c.textContent!.includes("+OS:Linux"),
    )!;
    await clickAndSettle(explorer, downToOsTriple);
    expect(currentIntent()).toEqual(["OS:Linux", "OS:Mac", "OS:Windows"]);

    const downToAstah = moveCards("DOWN").find((c) =>
      c.textContent!.includes("+DM:Conceptual"),
    )!;
    await clickAndSettle(explorer, downToAstah);
    expect(currentIntent()).toEqual([
      "DM:Conceptual",
      "OS:Linux",
      "OS:Mac",
      "OS:Windows",
    ]);
    // Astah's concept is a valid configuration and introduces Astah
    expect(texts("#concept-panel .badge-valid")).toHaveLength(1);
    expect(texts('[data-field="introduced-objects"] .chip')).toEqual(["Astah"]);

    // the two minimal upward decisions, with their exact consequences
    const ups = moveCards("UP");
    expect(ups).toHaveLength(2);
    const cardConceptual = cardByRemovedAttr("DM:Conceptual");
    expect(cardConceptual.textContent).toContain("+MySQL-Workbench");
    const cardMacLinux = cardByRemovedAttr("OS:Mac");
    expect(cardMacLinux.textContent).toContain("−OS:Linux");
    expect(cardMacLinux.textContent).toContain("+Erwin-DM");
    expect(cardMacLinux.textContent).toContain("+ER-Studio");

    // choosing the DM:Conceptual deletion lands on the three-OS concept
    await clickAndSettle(explorer, cardConceptual);
    expect(currentIntent()).toEqual(["OS:Linux", "OS:Mac", "OS:Windows"]);
    expect(texts("#reachable li")).toEqual([
      "Astah (C4)",
      "Magic-Draw (C1)",
      "MySQL-Workbench (C3)",
    ]);

    // breadcrumb jump back to the start of the walk
    const crumbs = document.querySelectorAll<HTMLButtonElement>("#breadcrumb .crumb");
    const first = crumbs[0];
    expect(first.disabled).toBe(false);
    await clickAndSettle(explorer, first);
    expect(currentIntent()).toEqual(["OS:Windows"]);
    const seps = texts("#breadcrumb .crumb-sep");
    expect(seps[seps.length - 1]).toBe("↯"); // jump marker, not a move arrow
  });

  it("move cards mirror the service exactly (no client-side derivation)", async () => {
    const api = new ApiClient(base);
    const session = await api.createSession();
    document.body.innerHTML = '<main id="app"></main>';
    const explorer = new Explorer(document.getElementById("app")!, new ApiClient(base));
    await explorer.init();
    const rendered = moveCards("DOWN").map((c) => Number(c.dataset.target));
    const served = session.moves.map((m) => m.target);
    expect(rendered).toEqual(served);
  });

  it("restarts the session transparently when the server has forgotten it", async () => {
    document.body.innerHTML = '<main id="app"></main>';
    const explorer = new Explorer(document.getElementById("app")!, new ApiClient(base));
    await explorer.init();
    // sabotage: point the explorer at a session id the server never issued
    (explorer as unknown as { session: { session_id: string; current: number } }).session = {
      session_id: "s999999",
      current: 9,
    };
    const down = moveCards("DOWN")[0];
    await clickAndSettle(explorer, down);
    expect(document.querySelector("#error-banner.visible")).toBeNull();
    expect(currentIntent().length).toBeGreaterThan(0);
  });
});

describe("delta consistency assertion", () => {
  const card = {
    direction: "UP" as const,
    target: 5,
    attributes_added: [],
    attributes_removed: ["DM:Conceptual"],
    objects_gained: ["MySQL-Workbench"],
    objects_lost: [],
    target_is_valid_configuration: false,
  };

  it("accepts a matching transition", () => {
    expect(() =>
      assertDeltaConsistent(
        ["DM:Conceptual", "OS:Linux", "OS:Mac", "OS:Windows"],
        card,
        ["OS:Linux", "OS:Mac", "OS:Windows"],
      ),
    ).not.toThrow();
  });

  it("rejects a transition that disagrees with the card", () => {
    expect(() =>
      assertDeltaConsistent(
        ["DM:Conceptual", "OS:Linux", "OS:Mac", "OS:Windows"],
        card,
        ["OS:Linux", "OS:Windows"],
      ),
    ).toThrow(/inconsistent move delta/);
  });
});
