/**
 * Alignment graph renderer: one row of token chips per edition, cubic
 * curves between aligned tokens, hover highlighting in simple (direct
 * neighbors) or cluster (two hops) mode.
 */

import type { AlignmentGraph, GraphRow } from "./api.js";
import {
  Edge,
  HighlightMode,
  highlightFor,
  tokenKey,
} from "./highlight.js";

export interface GraphOptions {
  mode: HighlightMode;
  /** Called when a token chip is clicked (used for view interconnection). */
  onTokenClick?: (row: GraphRow, tokenIndex: number, token: string) => void;
  /** Token keys to mark persistently (e.g. the queried word pair). */
  emphasize?: Set<string>;
}

export interface RenderedGraph {
  edgeCount: number;
  element: HTMLElement;
}

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderGraph(
  container: HTMLElement,
  graph: AlignmentGraph,
  options: GraphOptions,
): RenderedGraph {
  const root = container.ownerDocument.createElement("div");
  root.className = "graph";
  container.appendChild(root);

  if (graph.rows.length === 0) {
    const empty = container.ownerDocument.createElement("p");
    empty.className = "graph-empty";
    empty.textContent = "Nothing to display for this sentence.";
    root.appendChild(empty);
    return { edgeCount: 0, element: root };
  }

  const doc = container.ownerDocument;
  const svg = doc.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "graph-edges");
  root.appendChild(svg);

  const rowsBox = doc.createElement("div");
  rowsBox.className = "graph-rows";
  root.appendChild(rowsBox);

  const tokenElements = new Map<string, HTMLElement>();
  graph.rows.forEach((row, rowIndex) => {
    const rowEl = doc.createElement("div");
    rowEl.className = "graph-row";
    const label = doc.createElement("span");
    label.className = "row-label";
    label.textContent = row.edition;
    rowEl.appendChild(label);
    row.tokens.forEach((token, tokenIndex) => {
      const chip = doc.createElement("span");
      chip.className = "token";
      chip.textContent = token;
      const key = tokenKey(rowIndex, tokenIndex);
      chip.dataset.key = key;
      if (options.emphasize?.has(key)) chip.classList.add("emphasized");
      chip.addEventListener("mouseenter", () => applyHighlight({ row: rowIndex, token: tokenIndex }));
      chip.addEventListener("mouseleave", clearHighlight);
      if (options.onTokenClick) {
        chip.classList.add("clickable");
        chip.addEventListener("click", () => options.onTokenClick!(row, tokenIndex, token));
      }
      tokenElements.set(key, chip);
      rowEl.appendChild(chip);
    });
    rowsBox.appendChild(rowEl);
  });

  const paths: { path: SVGPathElement; edge: Edge }[] = [];
  for (const edge of graph.edges) {
    const path = doc.createElementNS(SVG_NS, "path") as SVGPathElement;
    path.setAttribute("class", "edge");
    svg.appendChild(path);
    paths.push({ path, edge });
  }
  layoutEdges();

  if (graph.missing.length > 0) {
    const note = doc.createElement("p");
    note.className = "graph-missing";
    note.textContent = `Verse missing in: ${graph.missing.join(", ")}`;
    root.appendChild(note);
  }

  function anchor(rowIndex: number, tokenIndex: number): { x: number; yTop: number; yBottom: number } {
    const el = tokenElements.get(tokenKey(rowIndex, tokenIndex))!;
    return {
      x: el.offsetLeft + el.offsetWidth / 2,
      yTop: el.offsetTop,
      yBottom: el.offsetTop + el.offsetHeight,
    };
  }

  function layoutEdges(): void {
    const width = rowsBox.scrollWidth || 1;
    const height = rowsBox.scrollHeight || 1;
    svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    svg.setAttribute("width", String(width));
    svg.setAttribute("height", String(height));
    for (const { path, edge } of paths) {
      const a = anchor(edge.row_a, edge.token_a);
      const b = anchor(edge.row_b, edge.token_b);
      const [top, bottom] = a.yTop <= b.yTop ? [a, b] : [b, a];
      const mid = (top.yBottom + bottom.yTop) / 2;
      path.setAttribute(
        "d",
        `M ${top.x} ${top.yBottom} C ${top.x} ${mid}, ${bottom.x} ${mid}, ${bottom.x} ${bottom.yTop}`,
      );
    }
  }

  function applyHighlight(hovered: { row: number; token: number }): void {
    const lit = highlightFor(graph.edges, hovered, options.mode);
    for (const [key, el] of tokenElements) {
      el.classList.toggle("hl", lit.has(key));
    }
    for (const { path, edge } of paths) {
      const on =
        lit.has(tokenKey(edge.row_a, edge.token_a)) &&
        lit.has(tokenKey(edge.row_b, edge.token_b));
      path.classList.toggle("hl", on);
    }
    root.classList.add("highlighting");
  }

  function clearHighlight(): void {
    for (const el of tokenElements.values()) el.classList.remove("hl");
    for (const { path } of paths) path.classList.remove("hl");
    root.classList.remove("highlighting");
  }

  return { edgeCount: paths.length, element: root };
}
