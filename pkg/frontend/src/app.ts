// Explorer controller: one session per page, all mutation through the API.

import {
  ApiClient,
  ApiError,
  type ConceptRecord,
  type MoveCard,
  type ReachableEntry,
  type SessionState,
} from "./api.js";
import {
  clearError,
  renderBreadcrumb,
  renderConcept,
  renderError,
  renderMinimap,
  renderMoves,
  renderReachable,
} from "./view.js";

// Above this size the mini-map switches to the AOC-poset condensation.
const MINIMAP_FULL_LATTICE_LIMIT = 200;

interface MapData {
  concepts: ConceptRecord[];
  covers: [number, number][];
  label: string;
}

function panel(root: HTMLElement, id: string, title: string | null): HTMLElement {
  const section = document.createElement("section");
  section.id = id;
  if (title) {
    const heading = document.createElement("h3");
    heading.textContent = title;
    section.appendChild(heading);
  }
  const body = document.createElement("div");
  body.className = "panel-body";
  section.appendChild(body);
  root.appendChild(section);
  return body;
}

export class Explorer {
  private readonly errorBox: HTMLElement;
  private readonly conceptBox: HTMLElement;
  private readonly movesBox: HTMLElement;
  private readonly crumbBox: HTMLElement;
  private readonly reachableBox: HTMLElement;
  private readonly mapBox: HTMLElement;

  private session: SessionState | null = null;
  private map: MapData | null = null;
  private pending: Promise<void> = Promise.resolve();

  constructor(
    root: HTMLElement,
    private readonly api: ApiClient,
  ) {
    root.replaceChildren();
    this.errorBox = panel(root, "error-banner", null);
    this.crumbBox = panel(root, "breadcrumb", "path");
    this.conceptBox = panel(root, "concept-panel", "current concept");
    this.movesBox = panel(root, "moves", "minimal decisions");
    this.reachableBox = panel(root, "reachable", "reachable configurations");
    this.mapBox = panel(root, "minimap", "overview");
  }

  whenIdle(): Promise<void> {
    return this.pending;
  }

  init(): Promise<void> {
    return this.run(async () => {
      await this.loadMap();
      this.session = await this.api.createSession();
      await this.renderAll();
    });
  }

  chooseMove(target: number): Promise<void> {
    return this.run(async () => {
      const session = await this.requireSession();
      const before = session.concept.intent;
      const card = session.moves.find((m) => m.target === target);
      let next: SessionState;
      try {
        next = await this.api.move(session.session_id, target);
      } catch (error) {
        if (error instanceof ApiError && error.status === 409) {
          // stale card: refresh the session state and its moves
          this.session = await this.api.session(session.session_id);
          await this.renderAll();
          return;
        }
        throw error;
      }
      if (card) assertDeltaConsistent(before, card, next.concept.intent);
      this.session = next;
      await this.renderAll();
    });
  }

  jumpTo(concept: number): Promise<void> {
    return this.run(async () => {
      const session = await this.requireSession();
      this.session = await this.api.jump(session.session_id, concept);
      await this.renderAll();
    });
  }

  private async requireSession(): Promise<SessionState> {
    if (this.session === null) {
      this.session = await this.api.createSession();
    }
    try {
      return await this.api.session(this.session.session_id);
    } catch (error) {
      if (error instanceof ApiError && error.code === "UnknownSession") {
        // expired on the server: restart transparently at the same concept
        this.session = await this.api.createSession(this.session.current);
        return this.session;
      }
      throw error;
    }
  }

  private async loadMap(): Promise<void> {
    const lattice = await this.api.lattice();
    if (lattice.concepts.length > MINIMAP_FULL_LATTICE_LIMIT) {
      const poset = await this.api.subhierarchy("aoc");
      this.map = { concepts: poset.concepts, covers: poset.covers, label: "AOC poset" };
    } else {
      this.map = { concepts: lattice.concepts, covers: lattice.covers, label: "lattice" };
    }
  }

  private async renderAll(): Promise<void> {
    const session = this.session;
    if (!session) return;
    renderConcept(this.conceptBox, session.concept);
    renderMoves(this.movesBox, session.moves, (target) => void this.chooseMove(target));
    renderBreadcrumb(this.crumbBox, session.history, (concept) => void this.jumpTo(concept));
    const reachable: ReachableEntry[] = await this.api.reachable(session.session_id);
    renderReachable(this.reachableBox, reachable);
    if (this.map) {
      renderMinimap(this.mapBox, this.map.concepts, this.map.covers, session.current);
    }
  }

  private run(task: () => Promise<void>): Promise<void> {
    const next = this.pending
      .catch(() => undefined)
      .then(async () => {
        try {
          await task();
          clearError(this.errorBox);
        } catch (error) {
          const message =
            error instanceof ApiError
              ? error.message
              : `connection failed: ${String(error)}`;
          renderError(this.errorBox, message, () => void this.retry());
          throw error;
        }
      });
    this.pending = next.catch(() => undefined).then(() => undefined);
    return next;
  }

  private retry(): Promise<void> {
    if (this.session === null) return this.init();
    return this.run(async () => {
      this.session = await this.requireSession();
      if (this.map === null) await this.loadMap();
      await this.renderAll();
    });
  }
}

// After any move the displayed intent must equal the previous intent plus/minus
// exactly the card's attribute delta; anything else means UI and service disagree.
export function assertDeltaConsistent(
  before: string[],
  card: MoveCard,
  after: string[],
): void {
  const expected = new Set(before);
  for (const name of card.attributes_removed) expected.delete(name);
  for (const name of card.attributes_added) expected.add(name);
  const got = new Set(after);
  const same =
    expected.size === got.size && [...expected].every((name) => got.has(name));
  if (!same) {
    throw new Error(
      `inconsistent move delta: expected {${[...expected].sort().join(", ")}}, ` +
        `got {${[...got].sort().join(", ")}}`,
    );
  }
}

export function bootstrap(): void {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app container");
  const base = (window as { __GALEX_API__?: string }).__GALEX_API__ ?? "";
  const explorer = new Explorer(root, new ApiClient(base));
  void explorer.init();
}
