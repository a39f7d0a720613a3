/**
 * Sentence-level browser: search the corpus, select sentences, choose
 * target languages, and study the alignment graphs.  The whole view state
 * lives in the route, so every configuration is deep-linkable.
 */

import type { ApiClient, SearchHit } from "../api.js";
import { renderGraph } from "../graph.js";
import type { Route, SentencesRoute } from "../router.js";
import { RequestSequencer } from "../seq.js";
import { debounce, el } from "../util.js";

export interface ViewContext {
  api: ApiClient;
  navigate: (route: Route) => void;
}

const suggestSeq = new RequestSequencer();

export function renderSentencesView(
  container: HTMLElement,
  route: SentencesRoute,
  ctx: ViewContext,
): void {
  const doc = container.ownerDocument;

  const panel = el(doc, "section", "panel");
  container.appendChild(panel);

  // -- search field with debounced search-as-you-type suggestions
  const searchBox = el(doc, "div", "search-box");
  panel.appendChild(searchBox);
  const input = doc.createElement("input");
  input.type = "search";
  input.placeholder = "Search sentences: terms, l:lang-edition, v:verseid";
  input.value = route.query;
  searchBox.appendChild(input);
  const suggestions = el(doc, "ul", "suggestions");
  searchBox.appendChild(suggestions);

  const showSuggestions = async (q: string) => {
    suggestions.textContent = "";
    if (q.trim().length < 2) return;
    const ticket = suggestSeq.next();
    let hits: SearchHit[];
    try {
      hits = await ctx.api.search(q, 8);
    } catch {
      return;
    }
    if (!suggestSeq.isCurrent(ticket)) return; // stale response
    for (const hit of hits) {
      const item = el(doc, "li", "suggestion");
      item.textContent = `${hit.key}  ${hit.text}`;
      item.addEventListener("click", () => {
        if (!route.keys.includes(hit.key)) {
          ctx.navigate({ ...route, query: q, keys: [...route.keys, hit.key] });
        }
      });
      suggestions.appendChild(item);
    }
  };
  input.addEventListener("input", debounce(() => void showSuggestions(input.value), 200));
  input.addEventListener("change", () => void showSuggestions(input.value));

  // -- target language picker and view-mode toggle
  const controls = el(doc, "div", "controls");
  panel.appendChild(controls);
  const targetsInput = doc.createElement("input");
  targetsInput.placeholder = "Target languages (comma-separated)";
  targetsInput.value = route.targets.join(",");
  targetsInput.addEventListener("change", () => {
    const targets = targetsInput.value.split(",").map((s) => s.trim()).filter(Boolean);
    ctx.navigate({ ...route, targets });
  });
  controls.appendChild(targetsInput);

  const modeButton = doc.createElement("button");
  modeButton.textContent = route.mode === "cluster" ? "Cluster view" : "Simple view";
  modeButton.title = "Toggle hover highlighting between direct edges and two-hop clusters";
  modeButton.addEventListener("click", () => {
    ctx.navigate({ ...route, mode: route.mode === "cluster" ? "simple" : "cluster" });
  });
  controls.appendChild(modeButton);

  // -- selected sentences
  const selected = el(doc, "ul", "selected-keys");
  panel.appendChild(selected);
  for (const key of route.keys) {
    const item = el(doc, "li");
    item.textContent = key;
    const remove = doc.createElement("button");
    remove.textContent = "×";
    remove.addEventListener("click", () => {
      ctx.navigate({ ...route, keys: route.keys.filter((k) => k !== key) });
    });
    item.appendChild(remove);
    selected.appendChild(item);
  }

  renderSavePanel(panel, route, ctx);

  // -- one alignment graph per selected sentence
  const graphs = el(doc, "section", "graphs");
  container.appendChild(graphs);
  if (route.keys.length === 0) {
    graphs.appendChild(el(doc, "p", "hint",
      "Search above and pick sentences to see their alignment graphs."));
    return;
  }
  for (const key of route.keys) {
    void ctx.api.alignments(key, route.targets).then((graph) => {
      renderGraph(graphs, graph, {
        mode: route.mode,
        onTokenClick: (row, _index, token) => {
          const lang = row.edition.split("-", 1)[0];
          ctx.navigate({
            view: "words",
            lang,
            word: token.toLowerCase(),
            targets: route.targets.length ? route.targets : [],
          });
        },
      });
    }).catch((err) => {
      graphs.appendChild(el(doc, "p", "error", `${key}: ${err.message}`));
    });
  }
}

function renderSavePanel(panel: HTMLElement, route: SentencesRoute, ctx: ViewContext): void {
  const doc = panel.ownerDocument;
  const box = el(doc, "div", "save-panel");
  panel.appendChild(box);

  const name = doc.createElement("input");
  name.placeholder = "Name this search";
  box.appendChild(name);
  const save = doc.createElement("button");
  save.textContent = "Save";
  box.appendChild(save);
  const error = el(doc, "span", "error");
  box.appendChild(error);
  const savedList = el(doc, "ul", "saved-list");
  box.appendChild(savedList);

  save.addEventListener("click", () => {
    error.textContent = "";
    if (!name.value.trim()) {
      error.textContent = "A name is required.";
      return;
    }
    ctx.api.saveSearch({
      name: name.value.trim(),
      query: route.query,
      target_languages: route.targets,
      view_state: { keys: route.keys, mode: route.mode },
    }).then(refresh)
      .catch((err) => { error.textContent = err.message; });
  });

  function refresh(): void {
    void ctx.api.listSearches().then((searches) => {
      savedList.textContent = "";
      for (const search of searches) {
        const item = el(doc, "li", "saved-item");
        const link = doc.createElement("a");
        link.textContent = search.name;
        link.href = "#";
        link.addEventListener("click", (event) => {
          event.preventDefault();
          const state = (search.view_state ?? {}) as { keys?: string[]; mode?: string };
          ctx.navigate({
            view: "sentences",
            query: search.query,
            keys: state.keys ?? [],
            targets: search.target_languages,
            mode: state.mode === "simple" ? "simple" : "cluster",
          });
        });
        item.appendChild(link);
        const remove = doc.createElement("button");
        remove.textContent = "×";
        remove.addEventListener("click", () => void ctx.api.deleteSearch(search.name).then(refresh));
        item.appendChild(remove);
        savedList.appendChild(item);
      }
    });
  }
  refresh();
}
