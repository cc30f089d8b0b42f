// DOM rendering helpers. All content comes straight from API payloads.

import type {
  ConceptDetail,
  ConceptRecord,
  HistoryEntry,
  MoveCard,
  ReachableEntry,
} from "./api.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function nameList(parent: HTMLElement, names: string[], chipClass: string): void {
  if (names.length === 0) {
    parent.appendChild(el("span", "chip chip-none", "none"));
    return;
  }
  for (const name of names) {
    parent.appendChild(el("span", `chip ${chipClass}`, name));
  }
}

export function renderConcept(container: HTMLElement, concept: ConceptDetail): void {
  container.replaceChildren();
  const title = el("h2", "concept-title", `C${concept.id}`);
  if (concept.is_valid_configuration) {
    title.appendChild(el("span", "badge badge-valid", "valid configuration"));
  }
  container.appendChild(title);

  const rows: Array<[string, string[], string]> = [
    ["intent", concept.intent, "chip-attr"],
    ["extent", concept.extent, "chip-obj"],
    ["introduces", concept.introduced_attributes, "chip-attr chip-intro"],
    ["introduced objects", concept.introduced_objects, "chip-obj chip-intro"],
  ];
  for (const [label, names, chipClass] of rows) {
    const row = el("div", "concept-row");
    row.appendChild(el("span", "row-label", label));
    const value = el("span", "row-value");
    value.dataset.field = label.replace(/ /g, "-");
    nameList(value, names, chipClass);
    row.appendChild(value);
    container.appendChild(row);
  }
}

export function renderMoves(
  container: HTMLElement,
  moves: MoveCard[],
  onChoose: (target: number) => void,
): void {
  container.replaceChildren();
  if (moves.length === 0) {
    container.appendChild(el("p", "empty-note", "no moves from here"));
    return;
  }
  for (const move of moves) {
    const card = el("button", `move-card move-${move.direction.toLowerCase()}`);
    card.type = "button";
    card.dataset.direction = move.direction;
    card.dataset.target = String(move.target);

    const head = el("div", "move-head");
    head.appendChild(
      el("span", "move-arrow", move.direction === "UP" ? "↑" : "↓"),
    );
    head.appendChild(el("span", "move-target", `C${move.target}`));
    if (move.target_is_valid_configuration) {
      head.appendChild(el("span", "badge badge-valid", "valid configuration"));
    }
    card.appendChild(head);

    const attrs = el("div", "move-delta move-attrs");
    for (const name of move.attributes_removed) {
      attrs.appendChild(el("span", "chip chip-removed", `−${name}`));
    }
    for (const name of move.attributes_added) {
      attrs.appendChild(el("span", "chip chip-added", `+${name}`));
    }
    card.appendChild(attrs);

    const objs = el("div", "move-delta move-objs");
    for (const name of move.objects_gained) {
      objs.appendChild(el("span", "chip chip-gained", `+${name}`));
    }
    for (const name of move.objects_lost) {
      objs.appendChild(el("span", "chip chip-lost", `−${name}`));
    }
    card.appendChild(objs);

    card.addEventListener("click", () => onChoose(move.target));
    container.appendChild(card);
  }
}

export function renderBreadcrumb(
  container: HTMLElement,
  history: HistoryEntry[],
  onCrumb: (concept: number) => void,
): void {
  container.replaceChildren();
  history.forEach((entry, index) => {
    if (index > 0) {
      container.appendChild(
        el("span", "crumb-sep", entry.via === "jump" ? "↯" : "→"),
      );
    }
    const last = index === history.length - 1;
    const crumb = el("button", last ? "crumb crumb-current" : "crumb");
    crumb.type = "button";
    crumb.textContent = `C${entry.concept}`;
    crumb.dataset.concept = String(entry.concept);
    crumb.disabled = last;
    if (!last) crumb.addEventListener("click", () => onCrumb(entry.concept));
    container.appendChild(crumb);
  });
}

export function renderReachable(container: HTMLElement, entries: ReachableEntry[]): void {
  container.replaceChildren();
  if (entries.length === 0) {
    container.appendChild(el("p", "empty-note", "none"));
    return;
  }
  const list = el("ul", "reachable-list");
  for (const entry of entries) {
    const item = el("li");
    item.textContent = `${entry.object} (C${entry.concept})`;
    item.dataset.object = entry.object;
    list.appendChild(item);
  }
  container.appendChild(list);
}

// Mini-map: concepts layered by intent size, one dot each, cover edges as lines.
export function renderMinimap(
  container: HTMLElement,
  concepts: ConceptRecord[],
  covers: [number, number][],
  current: number,
): void {
  container.replaceChildren();
  const levels = new Map<number, number[]>();
  for (const concept of concepts) {
    const depth = concept.intent.length;
    if (!levels.has(depth)) levels.set(depth, []);
    levels.get(depth)!.push(concept.id);
  }
  const depths = [...levels.keys()].sort((a, b) => a - b);
  const width = 320;
  const rowHeight = 34;
  const height = Math.max(depths.length * rowHeight, rowHeight);
  const position = new Map<number, { x: number; y: number }>();
  depths.forEach((depth, row) => {
    const ids = levels.get(depth)!.sort((a, b) => a - b);
    ids.forEach((id, i) => {
      position.set(id, {
        x: ((i + 1) / (ids.length + 1)) * width,
        y: rowHeight / 2 + row * rowHeight,
      });
    });
  });

  const svgNs = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(svgNs, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("width", "100%");
  for (const [lo, hi] of covers) {
    const a = position.get(lo);
    const b = position.get(hi);
    if (!a || !b) continue;
    const line = document.createElementNS(svgNs, "line");
    line.setAttribute("x1", String(b.x));
    line.setAttribute("y1", String(b.y));
    line.setAttribute("x2", String(a.x));
    line.setAttribute("y2", String(a.y));
    line.setAttribute("class", "map-edge");
    svg.appendChild(line);
  }
  for (const concept of concepts) {
    const p = position.get(concept.id);
    if (!p) continue;
    const dot = document.createElementNS(svgNs, "circle");
    dot.setAttribute("cx", String(p.x));
    dot.setAttribute("cy", String(p.y));
    dot.setAttribute("r", concept.id === current ? "6" : "3.5");
    dot.setAttribute(
      "class",
      concept.id === current ? "map-node map-node-current" : "map-node",
    );
    dot.dataset.concept = String(concept.id);
    svg.appendChild(dot);
  }
  container.appendChild(svg);
}

export function renderError(
  container: HTMLElement,
  message: string,
  onRetry: () => void,
): void {
  container.replaceChildren();
  container.classList.add("visible");
  container.appendChild(el("span", "error-text", message));
  const retry = el("button", "retry-button", "retry");
  retry.type = "button";
  retry.addEventListener("click", onRetry);
  container.appendChild(retry);
}

export function clearError(container: HTMLElement): void {
  container.replaceChildren();
  container.classList.remove("visible");
}
