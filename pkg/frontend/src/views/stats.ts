/** Corpus statistics table. */

import { el } from "../util.js";
import type { ViewContext } from "./sentences.js";

export function renderStatsView(container: HTMLElement, ctx: ViewContext): void {
  const doc = container.ownerDocument;
  const table = doc.createElement("table");
  table.className = "stats";
  container.appendChild(table);
  ctx.api.stats().then((stats) => {
    const entries: [string, string][] = [
      ["Editions", String(stats.n_editions)],
      ["Languages", String(stats.n_languages)],
      ["Verses (total)", String(stats.n_verses_total)],
      ["Verses per edition", stats.verses_per_edition.toFixed(1)],
      ["Tokens per verse", stats.tokens_per_verse.toFixed(2)],
    ];
    for (const [label, value] of entries) {
      const row = doc.createElement("tr");
      row.appendChild(el(doc, "th", "", label));
      row.appendChild(el(doc, "td", "", value));
      table.appendChild(row);
    }
  }).catch((err) => {
    container.appendChild(el(doc, "p", "error", err.message));
  });
}
