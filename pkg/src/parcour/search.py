"""Full-text search over all sentences: inverted index plus edge n-grams.

The standard index answers conjunctive term queries scoped by language,
edition, or verse ID; the edge n-gram index answers prefix queries for
search-as-you-type.  Ranking is a deterministic term-frequency sum with
the canonical sentence key as tie-break, so results are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import Corpus, CorpusError, MalformedVerseId, SentenceKey, VerseId, parse_verse_id

MIN_GRAM = 2
MAX_GRAM = 20
INDEX_MAGIC = "parcour-index"
INDEX_VERSION = 1


class SearchError(Exception):
    pass


class MalformedScope(SearchError):
    pass


class PrefixTooShort(SearchError):
    pass


@dataclass
class Posting:
    key: SentenceKey
    positions: list[int]  # strictly increasing token indexes


@dataclass
class StandardIndex:
    postings: dict[str, list[Posting]] = field(default_factory=dict)
    by_verse: dict[VerseId, list[SentenceKey]] = field(default_factory=dict)

    def term_frequency(self, term: str, key_str: str) -> int:
        for p in self.postings.get(term, []):
            if str(p.key) == key_str:
                return len(p.positions)
        return 0


@dataclass
class EdgeNgramIndex:
    grams: dict[str, list[str]] = field(default_factory=dict)  # gram -> sorted terms
    term_freq: dict[str, int] = field(default_factory=dict)


@dataclass
class Query:
    scope_edition: tuple[str, str | None] | None = None  # (language, edition or None)
    scope_verse: VerseId | None = None
    terms: list[str] = field(default_factory=list)


def build_indexes(corpus: Corpus) -> tuple[StandardIndex, EdgeNgramIndex]:
    """Index every normalized token of every verse of every edition."""
    six = StandardIndex()
    eix = EdgeNgramIndex()
    for edition in corpus.editions:
        for verse, norm in edition.norm_tokens.items():
            key = SentenceKey(verse, edition.id)
            six.by_verse.setdefault(verse, []).append(key)
            positions: dict[str, list[int]] = {}
            for i, token in enumerate(norm):
                positions.setdefault(token, []).append(i)
                eix.term_freq[token] = eix.term_freq.get(token, 0) + 1
            for token, pos in positions.items():
                six.postings.setdefault(token, []).append(Posting(key, pos))
    for plist in six.postings.values():
        plist.sort(key=lambda p: str(p.key))
    for keys in six.by_verse.values():
        keys.sort(key=str)
    gram_sets: dict[str, set[str]] = {}
    for term in eix.term_freq:
        for n in range(MIN_GRAM, min(MAX_GRAM, len(term)) + 1):
            gram_sets.setdefault(term[:n], set()).add(term)
    eix.grams = {g: sorted(ts) for g, ts in gram_sets.items()}
    return six, eix


def parse_query(q: str) -> Query:
    """Whitespace-split grammar: "l:{lang}[-{edition}]" and "v:{8 digits}"
    set scopes (last occurrence wins, anywhere in the string); everything
    else is a normalized search term."""
    query = Query()
    for raw in q.split():
        token = raw.lower()
        if token.startswith("l:"):
            lang, _, edition = token[2:].partition("-")
            if not lang:
                raise MalformedScope(f"empty language in scope token {raw!r}")
            query.scope_edition = (lang, edition or None)
        elif token.startswith("v:"):
            try:
                query.scope_verse = parse_verse_id(token[2:])
            except MalformedVerseId as e:
                raise MalformedScope(str(e)) from e
        else:
            query.terms.append(token)
    return query


def _in_scope(key: SentenceKey, query: Query) -> bool:
    if query.scope_verse is not None and key.verse != query.scope_verse:
        return False
    if query.scope_edition is not None:
        lang, edition = query.scope_edition
        if key.edition.language_code != lang:
            return False
        if edition is not None and key.edition.edition_name.lower() != edition:
            return False
    return True


def search(six: StandardIndex, query: Query, limit: int) -> list[tuple[SentenceKey, int]]:
    """Sentences containing ALL query terms within scope, ranked by the sum
    of per-term frequencies, ties broken by ascending key string.

    With no terms, a verse scope returns every edition of that verse
    (score 0); without a verse scope the result is empty.
    """
    if limit < 1:
        raise SearchError(f"limit must be positive: {limit}")
    if not query.terms:
        if query.scope_verse is None:
            return []
        keys = six.by_verse.get(query.scope_verse, [])
        return [(k, 0) for k in keys if _in_scope(k, query)][:limit]

    distinct = list(dict.fromkeys(query.terms))
    keys: dict[str, SentenceKey] = {}
    tf_by_term: dict[str, dict[str, int]] = {}
    for term in distinct:
        m: dict[str, int] = {}
        for posting in six.postings.get(term, []):
            ks = str(posting.key)
            m[ks] = len(posting.positions)
            keys[ks] = posting.key
        tf_by_term[term] = m
    common = set(tf_by_term[distinct[0]])
    for term in distinct[1:]:
        common &= set(tf_by_term[term])
    hits = [
        (keys[ks], sum(tf_by_term[t][ks] for t in query.terms))
        for ks in common
        if _in_scope(keys[ks], query)
    ]
    hits.sort(key=lambda h: (-h[1], str(h[0])))
    return hits[:limit]


def suggest(eix: EdgeNgramIndex, prefix: str, limit: int) -> list[str]:
    """Indexed terms with the given prefix, by descending corpus frequency
    then ascending term."""
    normalized = prefix.strip().lower()
    if len(normalized) < MIN_GRAM:
        raise PrefixTooShort(f"prefix must have at least {MIN_GRAM} characters: {prefix!r}")
    if len(normalized) <= MAX_GRAM:
        candidates = eix.grams.get(normalized, [])
    else:
        candidates = [t for t in eix.grams.get(normalized[:MAX_GRAM], []) if t.startswith(normalized)]
    ranked = sorted(candidates, key=lambda t: (-eix.term_freq[t], t))
    return ranked[:limit]


def save_indexes(path: str | Path, six: StandardIndex, eix: EdgeNgramIndex) -> None:
    doc = {
        "magic": INDEX_MAGIC,
        "version": INDEX_VERSION,
        "keys": sorted(str(k) for keys in six.by_verse.values() for k in keys),
        "standard": {
            term: [[str(p.key), p.positions] for p in plist]
            for term, plist in six.postings.items()
        },
        "edge": {"grams": eix.grams, "term_freq": eix.term_freq},
    }
    with open(path, "w", encoding="utf-8") as f:
        json.dump(doc, f, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def load_indexes(path: str | Path) -> tuple[StandardIndex, EdgeNgramIndex]:
    with open(path, encoding="utf-8") as f:
        doc = json.load(f)
    if doc.get("magic") != INDEX_MAGIC:
        raise SearchError(f"not an index file: {path}")
    if doc.get("version") != INDEX_VERSION:
        raise SearchError(f"unsupported index version {doc.get('version')} in {path}")
    six = StandardIndex()
    for ks in doc["keys"]:
        key = SentenceKey.parse(ks)
        six.by_verse.setdefault(key.verse, []).append(key)
    for term, plist in doc["standard"].items():
        postings = [Posting(SentenceKey.parse(ks), list(pos)) for ks, pos in plist]
        postings.sort(key=lambda p: str(p.key))
        six.postings[term] = postings
    eix = EdgeNgramIndex(grams=doc["edge"]["grams"], term_freq=doc["edge"]["term_freq"])
    return six, eix
