/**
 * Hover highlighting over an alignment graph.
 *
 * Tokens are nodes, alignment edges are undirected; hovering highlights
 * everything within one hop (simple view) or two hops (cluster view) of
 * the hovered token, origin included.  Pure: output depends only on the
 * edge list and the hovered token.
 */

export interface Edge {
  row_a: number;
  token_a: number;
  row_b: number;
  token_b: number;
}

export interface TokenRef {
  row: number;
  token: number;
}

export type HighlightMode = "simple" | "cluster";

export function tokenKey(row: number, token: number): string {
  return `${row}:${token}`;
}

export function parseTokenKey(key: string): TokenRef {
  const [row, token] = key.split(":").map(Number);
  return { row, token };
}

function adjacency(edges: Edge[]): Map<string, string[]> {
  const adj = new Map<string, string[]>();
  const push = (from: string, to: string) => {
    const list = adj.get(from);
    if (list === undefined) adj.set(from, [to]);
    else if (!list.includes(to)) list.push(to);
  };
  for (const e of edges) {
    const a = tokenKey(e.row_a, e.token_a);
    const b = tokenKey(e.row_b, e.token_b);
    push(a, b);
    push(b, a);
  }
  return adj;
}

/** Breadth-first traversal from the hovered token, depth <= maxHops. */
export function clusterHighlight(
  edges: Edge[],
  hovered: TokenRef,
  maxHops: number,
): Set<string> {
  const adj = adjacency(edges);
  const origin = tokenKey(hovered.row, hovered.token);
  const visited = new Set<string>([origin]);
  let frontier = [origin];
  for (let hop = 0; hop < maxHops && frontier.length > 0; hop++) {
    const next: string[] = [];
    for (const node of frontier) {
      for (const neighbor of adj.get(node) ?? []) {
        if (!visited.has(neighbor)) {
          visited.add(neighbor);
          next.push(neighbor);
        }
      }
    }
    frontier = next;
  }
  return visited;
}

export function highlightFor(edges: Edge[], hovered: TokenRef, mode: HighlightMode): Set<string> {
  return clusterHighlight(edges, hovered, mode === "cluster" ? 2 : 1);
}

/** Edges whose both endpoints are highlighted (the curves to emphasize). */
export function highlightedEdges(edges: Edge[], highlighted: Set<string>): Edge[] {
  return edges.filter(
    (e) =>
      highlighted.has(tokenKey(e.row_a, e.token_a)) &&
      highlighted.has(tokenKey(e.row_b, e.token_b)),
  );
}
