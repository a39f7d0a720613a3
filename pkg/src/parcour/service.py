"""HTTP JSON API over a built data directory.

All state is immutable corpus/index data plus thread-safe caches, so
every endpoint is deterministic given the data directory contents.  Error
responses always carry {code, message, http_status}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from .aligner import NoMutualVerses, align_interactive, train_language_pair
from .alignments import AlignmentSet, alignment_file_name, read_alignment_file
from .config import Settings
from .corpus import (
    Corpus,
    CorpusError,
    EditionId,
    SentenceKey,
    corpus_stats,
    display_forms,
    load_corpus,
    tokenize,
)
from .lexicon import (
    LexiconConfig,
    MissingAlignments,
    alignment_sets_for_pair,
    get_or_build_lexicon,
    pair_occurrences,
    translation_distribution,
)
from .search import (
    MalformedScope,
    PrefixTooShort,
    build_indexes,
    load_indexes,
    parse_query,
    search,
    suggest,
)
from .store import DuplicateName, LruCache, NotFound, SavedSearch, SavedSearchStore


class ApiError(Exception):
    def __init__(self, code: str, message: str, http_status: int):
        super().__init__(message)
        self.code = code
        self.message = message
        self.http_status = http_status

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "http_status": self.http_status}


@dataclass
class AppState:
    settings: Settings
    corpus: Corpus
    six: Any
    eix: Any
    searches: SavedSearchStore
    alignment_cache: LruCache = field(init=False)
    lexicon_cache: LruCache = field(init=False)
    table_cache: LruCache = field(init=False)
    display_cache: LruCache = field(init=False)

    def __post_init__(self):
        capacity = self.settings.cache_capacity
        self.alignment_cache = LruCache(capacity)
        self.lexicon_cache = LruCache(capacity)
        self.table_cache = LruCache(max(4, capacity // 4))
        self.display_cache = LruCache(max(8, capacity))

    @property
    def data_dir(self) -> Path:
        return Path(self.settings.data_dir)


def _load_alignment_set(state: AppState, ed1: EditionId, ed2: EditionId) -> AlignmentSet | None:
    """Stored alignment set for an edition pair in (ed1, ed2) orientation,
    trying both on-disk orientations; None when no file exists."""

    def load(x: EditionId, y: EditionId):
        path = state.data_dir / "alignments" / alignment_file_name(x, y)

        def loader():
            return read_alignment_file(path) if path.exists() else None

        return state.alignment_cache.get_or_load(("aln", str(path)), loader)

    aset = load(ed1, ed2)
    if aset is not None:
        return aset
    flipped = load(ed2, ed1)
    return flipped.transposed() if flipped is not None else None


def _oriented_alignment_sets(state: AppState, src_lang: str, tgt_lang: str) -> list[AlignmentSet]:
    l1, l2 = sorted((src_lang, tgt_lang))

    def loader():
        return alignment_sets_for_pair(state.data_dir / "alignments", l1, l2)

    sets = state.lexicon_cache.get_or_load(("asets", l1, l2), loader)
    if src_lang == l1:
        return sets
    return [s.transposed() for s in sets]


def _display_map(state: AppState, language: str) -> dict[str, str]:
    return state.display_cache.get_or_load(
        ("display", language), lambda: display_forms(state.corpus, language)
    )


def _table_provider(state: AppState):
    def provide(lang_a: str, lang_b: str):
        l1, l2 = sorted((lang_a, lang_b))

        def train():
            try:
                return train_language_pair(
                    state.corpus, l1, l2, state.settings.em_iterations
                )
            except NoMutualVerses:
                return None

        tables = state.table_cache.get_or_load(("tables", l1, l2), train)
        if tables is None:
            return None
        fwd, rev = tables
        return (fwd, rev) if (lang_a, lang_b) == (l1, l2) else (rev, fwd)

    return provide


class SentenceIn(BaseModel):
    lang: str
    text: str


class InteractiveRequest(BaseModel):
    sentences: list[SentenceIn]


class SavedSearchIn(BaseModel):
    name: str
    query: str
    target_languages: list[str] = []
    view_state: Any = None


def create_app(settings: Settings, static_dir: str | Path | None = None) -> FastAPI:
    corpus = load_corpus(settings.corpus_dir)
    index_path = Path(settings.data_dir) / "indexes.json"
    if index_path.exists():
        six, eix = load_indexes(index_path)
    else:
        six, eix = build_indexes(corpus)
    Path(settings.data_dir).mkdir(parents=True, exist_ok=True)
    searches = SavedSearchStore(Path(settings.data_dir) / "saved_searches.json")
    state = AppState(settings=settings, corpus=corpus, six=six, eix=eix, searches=searches)

    app = FastAPI(title="parcour", docs_url=None, redoc_url=None)
    app.state.resources = state

    @app.exception_handler(ApiError)
    async def api_error_handler(_req: Request, exc: ApiError):
        return JSONResponse(status_code=exc.http_status, content=exc.to_json())

    @app.exception_handler(RequestValidationError)
    async def validation_handler(_req: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content=ApiError("InvalidRequest", str(exc.errors()[:1]), 400).to_json(),
        )

    @app.exception_handler(StarletteHTTPException)
    async def http_error_handler(_req: Request, exc: StarletteHTTPException):
        code = {404: "NotFound", 405: "MethodNotAllowed"}.get(exc.status_code, "HttpError")
        return JSONResponse(
            status_code=exc.status_code,
            content=ApiError(code, str(exc.detail), exc.status_code).to_json(),
        )

    def require(value, name: str):
        if value is None or value == "":
            raise ApiError("MissingParam", f"query parameter {name!r} is required", 400)
        return value

    @app.get("/api/search")
    def api_search(q: str | None = None, limit: int = 50):
        require(q, "q")
        if limit < 1:
            raise ApiError("InvalidRequest", "limit must be positive", 400)
        try:
            query = parse_query(q)
        except MalformedScope as e:
            raise ApiError("MalformedScope", str(e), 400) from e
        hits = search(state.six, query, limit)
        out = []
        for key, score in hits:
            edition = state.corpus.by_id[key.edition]
            out.append({
                "key": str(key),
                "verse": str(key.verse),
                "edition": str(key.edition),
                "text": edition.verses[key.verse],
                "score": score,
            })
        return out

    @app.get("/api/suggest")
    def api_suggest(prefix: str | None = None, limit: int = 10):
        require(prefix, "prefix")
        try:
            return suggest(state.eix, prefix, limit)
        except PrefixTooShort as e:
            raise ApiError("PrefixTooShort", str(e), 400) from e

    @app.get("/api/alignments")
    def api_alignments(key: str | None = None, targets: str = "", cross_edges: bool = True):
        require(key, "key")
        try:
            sentence_key = SentenceKey.parse(key)
        except CorpusError as e:
            raise ApiError("UnknownSentence", f"no such sentence {key!r}: {e}", 404) from e
        source = state.corpus.by_id.get(sentence_key.edition)
        if source is None or sentence_key.verse not in source.verses:
            raise ApiError("UnknownSentence", f"no such sentence {key!r}", 404)
        verse = sentence_key.verse

        target_editions: list[EditionId] = []
        missing: list[str] = []
        for token in [t for t in targets.split(",") if t]:
            if token in state.corpus.by_language:
                expanded = state.corpus.by_language[token]
            else:
                try:
                    eid = EditionId.parse(token)
                except CorpusError:
                    eid = None
                if eid is None or eid not in state.corpus.by_id:
                    raise ApiError("BadTarget", f"unknown language or edition {token!r}", 400)
                expanded = [eid]
            for eid in expanded:
                if eid == sentence_key.edition or eid in target_editions:
                    continue
                if verse not in state.corpus.by_id[eid].verses:
                    missing.append(str(eid))
                    continue
                target_editions.append(eid)

        row_editions = [sentence_key.edition] + target_editions
        rows = [
            {"edition": str(eid), "tokens": state.corpus.by_id[eid].tokens[verse]}
            for eid in row_editions
        ]
        edges = []
        for i in range(len(row_editions)):
            for j in range(i + 1, len(row_editions)):
                if i > 0 and not cross_edges:
                    continue
                aset = _load_alignment_set(state, row_editions[i], row_editions[j])
                if aset is None:
                    continue
                for s, t in sorted(aset.links_by_verse.get(verse, frozenset())):
                    edges.append({"row_a": i, "token_a": s, "row_b": j, "token_b": t})
        return {"verse": str(verse), "rows": rows, "edges": edges, "missing": missing}

    @app.get("/api/lexicon")
    def api_lexicon(lang: str | None = None, word: str | None = None,
                    targets: str | None = None, min_share: float | None = None):
        require(lang, "lang")
        require(word, "word")
        target_langs = [t for t in (targets or "").split(",") if t]
        if not target_langs:
            raise ApiError("MissingParam", "at least one target language is required", 400)
        cfg = LexiconConfig(state.settings.min_share if min_share is None else min_share)
        source_word = word.lower()
        out = []
        for target in target_langs:
            l1, l2 = sorted((lang, target))

            def loader(l1=l1, l2=l2):
                return get_or_build_lexicon(state.corpus, state.data_dir, l1, l2)

            try:
                lex = state.lexicon_cache.get_or_load(("lexicon", l1, l2), loader)
            except MissingAlignments as e:
                raise ApiError("MissingAlignments", str(e), 404) from e
            if lang != l1:
                lex = lex.transposed()
            dist = translation_distribution(lex, source_word, cfg, _display_map(state, target))
            out.append({
                "source_word": dist.source_word,
                "target_language": target,
                "total": dist.total,
                "slices": [
                    {"word": s.word, "display": s.display, "count": s.count, "share": s.share}
                    for s in dist.slices
                ],
            })
        return out

    @app.get("/api/occurrences")
    def api_occurrences(src_lang: str | None = None, src_word: str | None = None,
                        tgt_lang: str | None = None, tgt_word: str | None = None,
                        limit: int = 50):
        require(src_lang, "src_lang")
        require(src_word, "src_word")
        require(tgt_lang, "tgt_lang")
        require(tgt_word, "tgt_word")
        sets = _oriented_alignment_sets(state, src_lang, tgt_lang)
        occs = pair_occurrences(src_word.lower(), tgt_word.lower(), state.corpus, sets, limit)
        return [
            {
                "verse": str(o.verse),
                "editions": [str(o.editions[0]), str(o.editions[1])],
                "links": [[s, t] for s, t in o.links],
            }
            for o in occs
        ]

    @app.post("/api/interactive")
    def api_interactive(body: InteractiveRequest):
        if len(body.sentences) < 2:
            raise ApiError("TooFewSentences", "at least two sentences are required", 400)
        for i, sentence in enumerate(body.sentences):
            if not sentence.text.strip():
                raise ApiError("EmptySentence", f"sentence {i} is empty", 400)
        sentences = [(s.lang, s.text) for s in body.sentences]
        links = align_interactive(sentences, _table_provider(state))
        return {
            "sentences": [
                {"lang": lang, "tokens": tokenize(text)[0]} for lang, text in sentences
            ],
            "pairs": [
                {"i": i, "j": j, "links": [[s, t] for s, t in sorted(pair_links)]}
                for (i, j), pair_links in sorted(links.items())
            ],
        }

    @app.get("/api/stats")
    def api_stats():
        stats = corpus_stats(state.corpus)
        return {
            "n_editions": stats.n_editions,
            "n_languages": stats.n_languages,
            "n_verses_total": stats.n_verses_total,
            "verses_per_edition": float(stats.verses_per_edition),
            "tokens_per_verse": float(stats.tokens_per_verse),
        }

    @app.get("/api/searches")
    def list_searches():
        return [s.to_json() for s in state.searches.list()]

    @app.post("/api/searches", status_code=201)
    def create_search(body: SavedSearchIn):
        try:
            saved = state.searches.create(SavedSearch(
                name=body.name,
                query=body.query,
                target_languages=tuple(body.target_languages),
                view_state=body.view_state,
            ))
        except DuplicateName as e:
            raise ApiError("DuplicateName", str(e), 409) from e
        return saved.to_json()

    @app.get("/api/searches/{name}")
    def get_search(name: str):
        try:
            return state.searches.get(name).to_json()
        except NotFound as e:
            raise ApiError("NotFound", str(e), 404) from e

    @app.delete("/api/searches/{name}")
    def delete_search(name: str):
        return {"deleted": state.searches.delete(name)}

    if static_dir is not None and Path(static_dir, "index.html").exists():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
