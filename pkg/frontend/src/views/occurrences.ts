/**
 * Sentences supporting one aligned word pair: the drill-down target of a
 * pie slice.  Each occurrence renders as an alignment graph with the
 * queried pair emphasized; clicking any token jumps back to the word view
 * for that token.
 */

import { tokenKey } from "../highlight.js";
import type { OccurrencesRoute } from "../router.js";
import { renderGraph } from "../graph.js";
import { el } from "../util.js";
import type { ViewContext } from "./sentences.js";

export function renderOccurrencesView(
  container: HTMLElement,
  route: OccurrencesRoute,
  ctx: ViewContext,
): void {
  const doc = container.ownerDocument;
  container.appendChild(el(
    doc, "h2", "view-title",
    `“${route.srcWord}” (${route.srcLang}) ↔ “${route.tgtWord}” (${route.tgtLang})`,
  ));
  const list = el(doc, "section", "graphs");
  container.appendChild(list);

  ctx.api.occurrences(route.srcLang, route.srcWord, route.tgtLang, route.tgtWord)
    .then(async (occurrences) => {
      if (occurrences.length === 0) {
        list.appendChild(el(doc, "p", "hint", "No aligned sentences for this word pair."));
        return;
      }
      for (const occ of occurrences.slice(0, 10)) {
        const [srcEdition, tgtEdition] = occ.editions;
        const graph = await ctx.api.alignments(`${occ.verse}@${srcEdition}`, [tgtEdition]);
        const emphasize = new Set<string>();
        for (const [s, t] of occ.links) {
          emphasize.add(tokenKey(0, s));
          emphasize.add(tokenKey(1, t));
        }
        list.appendChild(el(doc, "h3", "graph-title", `${occ.verse}  ${srcEdition} / ${tgtEdition}`));
        renderGraph(list, graph, {
          mode: route.mode,
          emphasize,
          onTokenClick: (row, _index, token) => {
            const lang = row.edition.split("-", 1)[0];
            ctx.navigate({
              view: "words",
              lang,
              word: token.toLowerCase(),
              targets: [lang === route.srcLang ? route.tgtLang : route.srcLang],
            });
          },
        });
      }
    })
    .catch((err) => {
      list.appendChild(el(doc, "p", "error", err.message));
    });
}
