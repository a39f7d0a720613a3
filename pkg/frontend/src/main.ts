/**
 * Application shell: hash router plus one render function per view.
 * Navigation always goes through the URL, so the back button and deep
 * links reproduce any view.
 */

import { ApiClient } from "./api.js";
import { formatRoute, parseRoute, Route } from "./router.js";
import { el } from "./util.js";
import { renderInteractiveView } from "./views/interactive.js";
import { renderOccurrencesView } from "./views/occurrences.js";
import { renderSentencesView, ViewContext } from "./views/sentences.js";
import { renderStatsView } from "./views/stats.js";
import { renderWordsView } from "./views/words.js";

const NAV: [string, Route][] = [
  ["Sentences", { view: "sentences", query: "", keys: [], targets: [], mode: "cluster" }],
  ["Words", { view: "words", lang: "", word: "", targets: [] }],
  ["Interactive", { view: "interactive" }],
  ["Stats", { view: "stats" }],
];

export function startApp(root: HTMLElement, api: ApiClient = new ApiClient()): void {
  const doc = root.ownerDocument;
  const ctx: ViewContext = {
    api,
    navigate: (route) => {
      doc.defaultView!.location.hash = formatRoute(route);
    },
  };

  const nav = el(doc, "nav", "topnav");
  for (const [label, route] of NAV) {
    const link = doc.createElement("a");
    link.textContent = label;
    link.href = formatRoute(route);
    nav.appendChild(link);
  }
  root.appendChild(nav);
  const outlet = el(doc, "main", "outlet");
  root.appendChild(outlet);

  function render(): void {
    outlet.textContent = "";
    const route = parseRoute(doc.defaultView!.location.hash);
    switch (route.view) {
      case "sentences":
        renderSentencesView(outlet, route, ctx);
        break;
      case "words":
        renderWordsView(outlet, route, ctx);
        break;
      case "occurrences":
        renderOccurrencesView(outlet, route, ctx);
        break;
      case "interactive":
        renderInteractiveView(outlet, ctx);
        break;
      case "stats":
        renderStatsView(outlet, ctx);
        break;
    }
  }

  doc.defaultView!.addEventListener("hashchange", render);
  render();
}
