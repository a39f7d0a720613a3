/**
 * Word-level view: translation distributions of one source word, one pie
 * per target language.  Clicking a slice jumps to the sentences where
 * that word pair is actually aligned.
 */

import { renderPie } from "../pies.js";
import type { Route, WordsRoute } from "../router.js";
import { RequestSequencer } from "../seq.js";
import { el } from "../util.js";
import type { ViewContext } from "./sentences.js";

const lexiconSeq = new RequestSequencer();

export function renderWordsView(
  container: HTMLElement,
  route: WordsRoute,
  ctx: ViewContext,
): void {
  const doc = container.ownerDocument;
  const panel = el(doc, "section", "panel");
  container.appendChild(panel);

  const lang = doc.createElement("input");
  lang.placeholder = "Source language (e.g. eng)";
  lang.value = route.lang;
  const word = doc.createElement("input");
  word.placeholder = "Word";
  word.value = route.word;
  const targets = doc.createElement("input");
  targets.placeholder = "Target languages (comma-separated)";
  targets.value = route.targets.join(",");
  const go = doc.createElement("button");
  go.textContent = "Look up";
  for (const control of [lang, word, targets, go]) panel.appendChild(control);

  go.addEventListener("click", () => {
    ctx.navigate({
      view: "words",
      lang: lang.value.trim().toLowerCase(),
      word: word.value.trim().toLowerCase(),
      targets: targets.value.split(",").map((s) => s.trim()).filter(Boolean),
    });
  });

  const pies = el(doc, "section", "pies");
  container.appendChild(pies);

  if (!route.lang || !route.word || route.targets.length === 0) {
    pies.appendChild(el(doc, "p", "hint",
      "Pick a source language, a word, and at least one target language."));
    return;
  }

  const ticket = lexiconSeq.next();
  ctx.api.lexicon(route.lang, route.word, route.targets).then((distributions) => {
    if (!lexiconSeq.isCurrent(ticket)) return; // stale response
    for (const distribution of distributions) {
      renderPie(pies, distribution, (slice) => {
        ctx.navigate({
          view: "occurrences",
          srcLang: route.lang,
          srcWord: route.word,
          tgtLang: distribution.target_language,
          tgtWord: slice.word,
          mode: "cluster",
        } as Route);
      });
    }
  }).catch((err) => {
    pies.appendChild(el(doc, "p", "error", err.message));
  });
}
