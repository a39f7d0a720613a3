/**
 * Interactive aligner: paste parallel sentences (any languages), get a
 * pairwise alignment graph for every sentence pair.
 */

import type { InteractiveResponse } from "../api.js";
import { renderGraph } from "../graph.js";
import { el } from "../util.js";
import type { ViewContext } from "./sentences.js";

export function renderInteractiveView(container: HTMLElement, ctx: ViewContext): void {
  const doc = container.ownerDocument;
  const panel = el(doc, "section", "panel");
  container.appendChild(panel);

  const rows: { lang: HTMLInputElement; text: HTMLTextAreaElement }[] = [];
  const inputsBox = el(doc, "div", "interactive-inputs");
  panel.appendChild(inputsBox);

  const submit = doc.createElement("button");
  submit.textContent = "Align";
  const addRow = doc.createElement("button");
  addRow.textContent = "+ sentence";
  const buttons = el(doc, "div", "controls");
  buttons.appendChild(addRow);
  buttons.appendChild(submit);
  panel.appendChild(buttons);

  const output = el(doc, "section", "graphs");
  container.appendChild(output);

  function appendRow(lang = "", text = ""): void {
    const box = el(doc, "div", "interactive-row");
    const langInput = doc.createElement("input");
    langInput.placeholder = "lang";
    langInput.value = lang;
    langInput.maxLength = 3;
    const textInput = doc.createElement("textarea");
    textInput.placeholder = "Sentence";
    textInput.value = text;
    textInput.rows = 2;
    textInput.addEventListener("input", updateSubmitState);
    box.appendChild(langInput);
    box.appendChild(textInput);
    inputsBox.appendChild(box);
    rows.push({ lang: langInput, text: textInput });
    updateSubmitState();
  }

  function updateSubmitState(): void {
    // at least two sentences, none blank
    const filled = rows.filter((r) => r.text.value.trim().length > 0);
    submit.disabled = rows.length < 2 || filled.length !== rows.length;
  }

  addRow.addEventListener("click", () => appendRow());
  appendRow("eng");
  appendRow("deu");

  submit.addEventListener("click", () => {
    output.textContent = "";
    const sentences = rows.map((r) => ({
      lang: r.lang.value.trim().toLowerCase() || "und",
      text: r.text.value,
    }));
    ctx.api.interactive(sentences).then((response: InteractiveResponse) => {
      for (const pair of response.pairs) {
        const a = response.sentences[pair.i];
        const b = response.sentences[pair.j];
        const graph = {
          verse: "",
          rows: [
            { edition: `${a.lang} (sentence ${pair.i + 1})`, tokens: a.tokens },
            { edition: `${b.lang} (sentence ${pair.j + 1})`, tokens: b.tokens },
          ],
          edges: pair.links.map(([s, t]) => ({
            row_a: 0, token_a: s, row_b: 1, token_b: t,
          })),
          missing: [],
        };
        renderGraph(output, graph, { mode: "cluster" });
      }
    }).catch((err) => {
      output.appendChild(el(doc, "p", "error", err.message));
    });
  });
}
