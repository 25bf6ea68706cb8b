import { swatchColor, swatchTextColor } from "./swatches.js";
import { SessionView } from "./types.js";

export interface BoardCallbacks {
  /** A markable vertex and a legal swatch for it were clicked. */
  onMove(vertex: number, color: number): void;
}

const SVG_NS = "http://www.w3.org/2000/svg";
const BOARD_W = 520;
const BOARD_H = 360;
const MARGIN = 56;
const VERTEX_R = 20;

interface Point {
  x: number;
  y: number;
}

/** Map the server's abstract layout coordinates onto the SVG canvas,
 * preserving aspect ratio; degenerate axes (a path's single row) center. */
function fitLayout(layout: [number, number][]): Point[] {
  const xs = layout.map((p) => p[0]);
  const ys = layout.map((p) => p[1]);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX;
  const spanY = maxY - minY;
  const scale = Math.min(
    (BOARD_W - 2 * MARGIN) / (spanX || 1),
    (BOARD_H - 2 * MARGIN) / (spanY || 1),
  );
  const offX = (BOARD_W - scale * spanX) / 2;
  const offY = (BOARD_H - scale * spanY) / 2;
  return layout.map(([x, y]) => ({
    x: offX + scale * (x - minX),
    y: offY + scale * (y - minY),
  }));
}

function circleLayout(n: number): [number, number][] {
  const pts: [number, number][] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    pts.push([Math.cos(angle), Math.sin(angle)]);
  }
  return pts;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

/** Renders exactly what the service said and nothing more: which vertices
 * are markable, which (vertex, color) moves are legal, the induced edge
 * colors, whose turn it is, and the winner.  The board never re-derives
 * legality on its own. */
export class BoardView {
  private readonly root: HTMLElement;
  private readonly callbacks: BoardCallbacks;
  private view: SessionView | null = null;
  private selected: number | null = null; // 1-based vertex
  private hint: [number, number] | null = null;

  constructor(root: HTMLElement, callbacks: BoardCallbacks) {
    this.root = root;
    this.callbacks = callbacks;
  }

  current(): SessionView | null {
    return this.view;
  }

  selectedVertex(): number | null {
    return this.selected;
  }

  render(view: SessionView): void {
    this.view = view;
    if (this.selected !== null && !view.markable[this.selected - 1]) {
      this.selected = null;
    }
    if (view.terminal) {
      this.selected = null;
    }
    this.redraw();
  }

  /** Highlight a suggested move without playing it. */
  showHint(vertex: number, color: number): void {
    this.hint = [vertex, color];
    this.selected = vertex;
    this.redraw();
  }

  clearHint(): void {
    if (this.hint !== null) {
      this.hint = null;
      this.redraw();
    }
  }

  private legalColorsForSelected(): Set<number> {
    const allowed = new Set<number>();
    if (this.view === null || this.selected === null) {
      return allowed;
    }
    for (const [v, c] of this.view.legalMoves) {
      if (v === this.selected) {
        allowed.add(c);
      }
    }
    return allowed;
  }

  private clickVertex(vertex: number): void {
    const view = this.view;
    if (view === null || view.terminal || !view.markable[vertex - 1]) {
      return;
    }
    this.hint = null;
    this.selected = this.selected === vertex ? null : vertex;
    this.redraw();
  }

  private clickSwatch(color: number): void {
    if (this.selected === null || !this.legalColorsForSelected().has(color)) {
      return;
    }
    const vertex = this.selected;
    this.hint = null;
    this.callbacks.onMove(vertex, color);
  }

  private redraw(): void {
    const view = this.view;
    this.root.textContent = "";
    if (view === null) {
      return;
    }

    const banner = document.createElement("div");
    banner.className = "banner";
    if (view.terminal && view.winner !== null) {
      banner.classList.add("visible");
      banner.textContent = `${view.winner.replace("Player", "Player ")} wins!`;
    }
    this.root.appendChild(banner);

    const status = document.createElement("div");
    status.className = "status";
    if (!view.terminal && view.turn !== null) {
      const who = view.turn.replace("Player", "Player ");
      const seat =
        view.engineSeat === null ? "" : view.engineSeat === view.turn ? " (engine)" : " (you)";
      status.textContent = `${who}${seat} to move`;
    }
    this.root.appendChild(status);

    this.root.appendChild(this.drawGraph(view));
    this.root.appendChild(this.drawPalette(view));
  }

  private drawGraph(view: SessionView): SVGSVGElement {
    const layout = view.graph.layout ?? circleLayout(view.graph.n);
    const pts = fitLayout(layout);
    const svg = svgEl("svg", {
      class: "graph",
      viewBox: `0 0 ${BOARD_W} ${BOARD_H}`,
      role: "group",
    });

    for (const [u, v] of view.graph.edges) {
      const a = pts[u - 1];
      const b = pts[v - 1];
      const cu = view.coloring[u - 1];
      const cv = view.coloring[v - 1];
      let mid: Point;
      if (u === v) {
        const loop = svgEl("circle", {
          class: "edge loop",
          cx: String(a.x),
          cy: String(a.y - VERTEX_R * 1.3),
          r: String(VERTEX_R * 0.8),
          "data-edge": `${u}-${v}`,
        });
        svg.appendChild(loop);
        mid = { x: a.x, y: a.y - VERTEX_R * 2.4 };
      } else {
        const line = svgEl("line", {
          class: "edge",
          x1: String(a.x),
          y1: String(a.y),
          x2: String(b.x),
          y2: String(b.y),
          "data-edge": `${u}-${v}`,
        });
        svg.appendChild(line);
        mid = { x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 };
      }
      if (cu !== null && cv !== null) {
        const [lo, hi] = cu <= cv ? [cu, cv] : [cv, cu];
        const badge = svgEl("text", {
          class: "edge-badge",
          x: String(mid.x),
          y: String(mid.y),
          "text-anchor": "middle",
          "dominant-baseline": "middle",
          "data-edge-badge": `${u}-${v}`,
        });
        badge.textContent = `{${lo},${hi}}`;
        svg.appendChild(badge);
      }
    }

    for (let v = 1; v <= view.graph.n; v++) {
      const p = pts[v - 1];
      const color = view.coloring[v - 1];
      const group = svgEl("g", {
        class: "vertex",
        "data-vertex": String(v),
      });
      if (!view.markable[v - 1] && color === null && !view.terminal) {
        group.classList.add("unmarkable");
      }
      if (this.selected === v) {
        group.classList.add("selected");
      }
      if (this.hint !== null && this.hint[0] === v) {
        group.classList.add("hint");
      }
      const circle = svgEl("circle", {
        cx: String(p.x),
        cy: String(p.y),
        r: String(VERTEX_R),
        fill: color === null ? "var(--vertex-empty)" : swatchColor(color),
      });
      group.appendChild(circle);
      const label = svgEl("text", {
        class: "vertex-color",
        x: String(p.x),
        y: String(p.y),
        "text-anchor": "middle",
        "dominant-baseline": "central",
        fill: color === null ? "var(--vertex-hole)" : swatchTextColor(color),
      });
      label.textContent = color === null ? "·" : String(color);
      group.appendChild(label);
      const name = svgEl("text", {
        class: "vertex-name",
        x: String(p.x),
        y: String(p.y + VERTEX_R + 14),
        "text-anchor": "middle",
      });
      name.textContent = `v${v}`;
      group.appendChild(name);
      group.addEventListener("click", () => this.clickVertex(v));
      svg.appendChild(group);
    }
    return svg;
  }

  private drawPalette(view: SessionView): HTMLElement {
    const allowed = this.legalColorsForSelected();
    const bar = document.createElement("div");
    bar.className = "palette";
    for (let c = 1; c <= view.k; c++) {
      const button = document.createElement("button");
      button.type = "button";
      button.className = "swatch";
      button.dataset.color = String(c);
      button.style.background = swatchColor(c);
      button.style.color = swatchTextColor(c);
      button.textContent = String(c);
      button.disabled = view.terminal || !allowed.has(c);
      if (this.hint !== null && this.hint[0] === this.selected && this.hint[1] === c) {
        button.classList.add("hint");
      }
      button.addEventListener("click", () => this.clickSwatch(c));
      bar.appendChild(button);
    }
    return bar;
  }
}
