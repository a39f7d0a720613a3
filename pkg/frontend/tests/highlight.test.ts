import { describe, expect, it } from "vitest";

import {
  Edge,
  clusterHighlight,
  highlightFor,
  highlightedEdges,
  tokenKey,
} from "../src/highlight.js";

function edge(ra: number, ta: number, rb: number, tb: number): Edge {
  return { row_a: ra, token_a: ta, row_b: rb, token_b: tb };
}

// chain a-b-c-d across two rows: a=(0,0), b=(1,0), c=(0,1), d=(1,1)
const CHAIN: Edge[] = [edge(0, 0, 1, 0), edge(1, 0, 0, 1), edge(0, 1, 1, 1)];
const A = { row: 0, token: 0 };

describe("clusterHighlight", () => {
  it("chain a-b-c-d from a yields {a,b,c} in cluster mode", () => {
    const got = highlightFor(CHAIN, A, "cluster");
    expect(got).toEqual(new Set(["0:0", "1:0", "0:1"]));
  });

  it("chain a-b-c-d from a yields {a,b} in simple mode", () => {
    const got = highlightFor(CHAIN, A, "simple");
    expect(got).toEqual(new Set(["0:0", "1:0"]));
  });

  it("isolated token highlights only itself", () => {
    expect(highlightFor(CHAIN, { row: 5, token: 9 }, "cluster"))
      .toEqual(new Set(["5:9"]));
  });

  it("depth 0 is just the origin", () => {
    expect(clusterHighlight(CHAIN, A, 0)).toEqual(new Set(["0:0"]));
  });

  it("simple mode output is a subset of cluster mode on 100 random graphs", () => {
    let seed = 0x2545f49;
    const rand = () => {
      // xorshift, deterministic across runs
      seed ^= seed << 13; seed ^= seed >>> 17; seed ^= seed << 5;
      return ((seed >>> 0) % 1000) / 1000;
    };
    for (let g = 0; g < 100; g++) {
      const rows = 2 + Math.floor(rand() * 3);
      const tokens = 2 + Math.floor(rand() * 5);
      const edges: Edge[] = [];
      const n = Math.floor(rand() * 15);
      for (let k = 0; k < n; k++) {
        const ra = Math.floor(rand() * rows);
        let rb = Math.floor(rand() * rows);
        if (rb === ra) rb = (rb + 1) % rows;
        edges.push(edge(ra, Math.floor(rand() * tokens), rb, Math.floor(rand() * tokens)));
      }
      const hovered = { row: Math.floor(rand() * rows), token: Math.floor(rand() * tokens) };
      const simple = highlightFor(edges, hovered, "simple");
      const cluster = highlightFor(edges, hovered, "cluster");
      for (const key of simple) expect(cluster.has(key)).toBe(true);
      expect(simple.has(tokenKey(hovered.row, hovered.token))).toBe(true);
    }
  });

  it("is pure: repeated calls with the same inputs agree and do not mutate", () => {
    const edges = [...CHAIN];
    const first = highlightFor(edges, A, "cluster");
    const second = highlightFor(edges, A, "cluster");
    expect(first).toEqual(second);
    expect(edges).toEqual(CHAIN);
  });
});

describe("highlightedEdges", () => {
  it("keeps only edges with both endpoints highlighted", () => {
    const lit = highlightFor(CHAIN, A, "cluster"); // a, b, c
    const kept = highlightedEdges(CHAIN, lit);
    expect(kept).toEqual([CHAIN[0], CHAIN[1]]); // a-b and b-c, not c-d
  });
});
