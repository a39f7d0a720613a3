/** Typed client for the corpus explorer's JSON API. */

export interface SearchHit {
  key: string;
  verse: string;
  edition: string;
  text: string;
  score: number;
}

export interface GraphRow {
  edition: string;
  tokens: string[];
}

export interface GraphEdge {
  row_a: number;
  token_a: number;
  row_b: number;
  token_b: number;
}

export interface AlignmentGraph {
  verse: string;
  rows: GraphRow[];
  edges: GraphEdge[];
  missing: string[];
}

export interface DistributionSlice {
  word: string;
  display: string;
  count: number;
  share: number;
}

export interface TranslationDistribution {
  source_word: string;
  target_language: string;
  total: number;
  slices: DistributionSlice[];
}

export interface OccurrenceDto {
  verse: string;
  editions: [string, string];
  links: [number, number][];
}

export interface InteractiveResponse {
  sentences: { lang: string; tokens: string[] }[];
  pairs: { i: number; j: number; links: [number, number][] }[];
}

export interface CorpusStatsDto {
  n_editions: number;
  n_languages: number;
  n_verses_total: number;
  verses_per_edition: number;
  tokens_per_verse: number;
}

export interface SavedSearchDto {
  name: string;
  query: string;
  target_languages: string[];
  view_state: unknown;
  created_at: number;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  http_status: number;
}

export class ApiError extends Error {
  constructor(public body: ApiErrorBody) {
    super(body.message);
  }
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(body as ApiErrorBody);
    }
    return body as T;
  }

  search(q: string, limit = 25): Promise<SearchHit[]> {
    const params = new URLSearchParams({ q, limit: String(limit) });
    return this.request(`/api/search?${params}`);
  }

  alignments(key: string, targets: string[], crossEdges = true): Promise<AlignmentGraph> {
    const params = new URLSearchParams({ key, cross_edges: String(crossEdges) });
    if (targets.length) params.set("targets", targets.join(","));
    return this.request(`/api/alignments?${params}`);
  }

  lexicon(lang: string, word: string, targets: string[]): Promise<TranslationDistribution[]> {
    const params = new URLSearchParams({ lang, word, targets: targets.join(",") });
    return this.request(`/api/lexicon?${params}`);
  }

  occurrences(
    srcLang: string, srcWord: string, tgtLang: string, tgtWord: string, limit = 25,
  ): Promise<OccurrenceDto[]> {
    const params = new URLSearchParams({
      src_lang: srcLang, src_word: srcWord,
      tgt_lang: tgtLang, tgt_word: tgtWord, limit: String(limit),
    });
    return this.request(`/api/occurrences?${params}`);
  }

  interactive(sentences: { lang: string; text: string }[]): Promise<InteractiveResponse> {
    return this.request(`/api/interactive`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ sentences }),
    });
  }

  stats(): Promise<CorpusStatsDto> {
    return this.request(`/api/stats`);
  }

  listSearches(): Promise<SavedSearchDto[]> {
    return this.request(`/api/searches`);
  }

  saveSearch(body: Omit<SavedSearchDto, "created_at">): Promise<SavedSearchDto> {
    return this.request(`/api/searches`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  deleteSearch(name: string): Promise<{ deleted: boolean }> {
    return this.request(`/api/searches/${encodeURIComponent(name)}`, { method: "DELETE" });
  }
}
