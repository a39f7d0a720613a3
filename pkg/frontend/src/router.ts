/**
 * Hash-based routes.  Every view state is URL-addressable, so any view can
 * be reproduced from its deep link alone; parse and format are inverses.
 */

import type { HighlightMode } from "./highlight.js";

export interface SentencesRoute {
  view: "sentences";
  query: string;
  keys: string[]; // selected sentence keys
  targets: string[]; // target languages or editions
  mode: HighlightMode;
}

export interface WordsRoute {
  view: "words";
  lang: string;
  word: string;
  targets: string[];
}

export interface OccurrencesRoute {
  view: "occurrences";
  srcLang: string;
  srcWord: string;
  tgtLang: string;
  tgtWord: string;
  mode: HighlightMode;
}

export interface InteractiveRoute {
  view: "interactive";
}

export interface StatsRoute {
  view: "stats";
}

export type Route =
  | SentencesRoute
  | WordsRoute
  | OccurrencesRoute
  | InteractiveRoute
  | StatsRoute;

export const DEFAULT_ROUTE: SentencesRoute = {
  view: "sentences",
  query: "",
  keys: [],
  targets: [],
  mode: "cluster",
};

function listParam(params: URLSearchParams, name: string): string[] {
  const raw = params.get(name);
  return raw ? raw.split(",").filter((s) => s.length > 0) : [];
}

function modeParam(params: URLSearchParams): HighlightMode {
  return params.get("mode") === "simple" ? "simple" : "cluster";
}

export function formatRoute(route: Route): string {
  const params = new URLSearchParams();
  switch (route.view) {
    case "sentences":
      if (route.query) params.set("q", route.query);
      if (route.keys.length) params.set("keys", route.keys.join(","));
      if (route.targets.length) params.set("targets", route.targets.join(","));
      if (route.mode !== "cluster") params.set("mode", route.mode);
      break;
    case "words":
      params.set("lang", route.lang);
      params.set("word", route.word);
      if (route.targets.length) params.set("targets", route.targets.join(","));
      break;
    case "occurrences":
      params.set("src_lang", route.srcLang);
      params.set("src_word", route.srcWord);
      params.set("tgt_lang", route.tgtLang);
      params.set("tgt_word", route.tgtWord);
      if (route.mode !== "cluster") params.set("mode", route.mode);
      break;
    case "interactive":
    case "stats":
      break;
  }
  const qs = params.toString();
  return `#/${route.view}${qs ? "?" + qs : ""}`;
}

export function parseRoute(hash: string): Route {
  const stripped = hash.replace(/^#\/?/, "");
  const [path, qs = ""] = stripped.split("?", 2);
  const params = new URLSearchParams(qs);
  switch (path) {
    case "words":
      return {
        view: "words",
        lang: params.get("lang") ?? "",
        word: params.get("word") ?? "",
        targets: listParam(params, "targets"),
      };
    case "occurrences":
      return {
        view: "occurrences",
        srcLang: params.get("src_lang") ?? "",
        srcWord: params.get("src_word") ?? "",
        tgtLang: params.get("tgt_lang") ?? "",
        tgtWord: params.get("tgt_word") ?? "",
        mode: modeParam(params),
      };
    case "interactive":
      return { view: "interactive" };
    case "stats":
      return { view: "stats" };
    case "sentences":
      return {
        view: "sentences",
        query: params.get("q") ?? "",
        keys: listParam(params, "keys"),
        targets: listParam(params, "targets"),
        mode: modeParam(params),
      };
    default:
      return { ...DEFAULT_ROUTE };
  }
}
