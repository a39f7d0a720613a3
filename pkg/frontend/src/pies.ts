/**
 * Pie chart of a word's translation distribution in one target language.
 * Slice labels carry the target word and its link count; clicking a slice
 * drills through to the sentences supporting that word pair.
 */

import type { DistributionSlice, TranslationDistribution } from "./api.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const COLORS = ["#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"];
const RADIUS = 70;

function arcPath(cx: number, cy: number, startFrac: number, endFrac: number): string {
  const start = 2 * Math.PI * (startFrac - 0.25);
  const end = 2 * Math.PI * (endFrac - 0.25);
  const x1 = cx + RADIUS * Math.cos(start);
  const y1 = cy + RADIUS * Math.sin(start);
  const x2 = cx + RADIUS * Math.cos(end);
  const y2 = cy + RADIUS * Math.sin(end);
  const large = endFrac - startFrac > 0.5 ? 1 : 0;
  if (endFrac - startFrac >= 0.999999) {
    // full circle: two half arcs, a single arc of 360 degrees collapses
    const xm = cx + RADIUS * Math.cos(start + Math.PI);
    const ym = cy + RADIUS * Math.sin(start + Math.PI);
    return `M ${x1} ${y1} A ${RADIUS} ${RADIUS} 0 0 1 ${xm} ${ym} A ${RADIUS} ${RADIUS} 0 0 1 ${x1} ${y1} Z`;
  }
  return `M ${cx} ${cy} L ${x1} ${y1} A ${RADIUS} ${RADIUS} 0 ${large} 1 ${x2} ${y2} Z`;
}

export function renderPie(
  container: HTMLElement,
  distribution: TranslationDistribution,
  onSliceClick?: (slice: DistributionSlice) => void,
): HTMLElement {
  const doc = container.ownerDocument;
  const box = doc.createElement("figure");
  box.className = "pie";
  container.appendChild(box);

  const title = doc.createElement("figcaption");
  title.textContent =
    `${distribution.source_word} → ${distribution.target_language}` +
    (distribution.total ? ` (${distribution.total} links)` : "");
  box.appendChild(title);

  if (distribution.slices.length === 0) {
    const empty = doc.createElement("p");
    empty.className = "pie-empty";
    empty.textContent = "No translations found.";
    box.appendChild(empty);
    return box;
  }

  const size = 2 * RADIUS + 8;
  const svg = doc.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${size} ${size}`);
  svg.setAttribute("width", String(size));
  svg.setAttribute("height", String(size));
  box.appendChild(svg);

  const legend = doc.createElement("ul");
  legend.className = "pie-legend";
  box.appendChild(legend);

  const shareSum = distribution.slices.reduce((acc, s) => acc + s.share, 0);
  let at = 0;
  distribution.slices.forEach((slice, i) => {
    // normalize so filtered-out slices do not leave a visual gap
    const fraction = slice.share / shareSum;
    const path = doc.createElementNS(SVG_NS, "path") as SVGPathElement;
    path.setAttribute("d", arcPath(size / 2, size / 2, at, at + fraction));
    path.setAttribute("fill", COLORS[i % COLORS.length]);
    path.setAttribute("class", "pie-slice");
    at += fraction;

    const item = doc.createElement("li");
    const swatch = doc.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = COLORS[i % COLORS.length];
    item.appendChild(swatch);
    item.appendChild(
      doc.createTextNode(`${slice.display} (${slice.count}, ${(slice.share * 100).toFixed(1)}%)`),
    );

    if (onSliceClick) {
      path.classList.add("clickable");
      item.classList.add("clickable");
      const go = () => onSliceClick(slice);
      path.addEventListener("click", go);
      item.addEventListener("click", go);
    }
    svg.appendChild(path);
    legend.appendChild(item);
  });

  return box;
}
