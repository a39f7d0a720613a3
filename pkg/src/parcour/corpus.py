"""Verse-aligned multiparallel corpus: identifiers, editions, loading, stats.

A corpus is a set of editions (one translation in one language each).  All
editions share the same verse numbering, so a verse ID identifies the same
content across every edition that carries it.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path


class CorpusError(Exception):
    """Base class for corpus parsing and validation errors."""


class MalformedVerseId(CorpusError):
    pass


class MalformedLine(CorpusError):
    def __init__(self, path, line_no: int, reason: str):
        super().__init__(f"{path}:{line_no}: {reason}")
        self.path = path
        self.line_no = line_no
        self.reason = reason


class DuplicateVerse(CorpusError):
    def __init__(self, path, line_no: int, verse: "VerseId"):
        super().__init__(f"{path}:{line_no}: duplicate verse {verse}")
        self.path = path
        self.line_no = line_no
        self.verse = verse


class EmptyCorpus(CorpusError):
    pass


_DIGITS = set(string.digits)
_LOWER = set(string.ascii_lowercase)


@dataclass(frozen=True, order=True)
class VerseId:
    """Verse identifier: 2-digit book, 3-digit chapter, 3-digit verse.

    The canonical form is the zero-padded 8-digit concatenation, e.g.
    book 40, chapter 2, verse 17 -> "40002017".  Book 0 is invalid;
    chapter and verse 0 are allowed (used by some metadata verses).
    """

    book: int
    chapter: int
    verse: int

    def __post_init__(self):
        if not (1 <= self.book <= 99):
            raise MalformedVerseId(f"book out of range: {self.book}")
        if not (0 <= self.chapter <= 999):
            raise MalformedVerseId(f"chapter out of range: {self.chapter}")
        if not (0 <= self.verse <= 999):
            raise MalformedVerseId(f"verse out of range: {self.verse}")

    def __str__(self) -> str:
        return f"{self.book:02d}{self.chapter:03d}{self.verse:03d}"


def parse_verse_id(s: str) -> VerseId:
    """Parse the canonical 8-digit form; reject anything else."""
    if len(s) != 8 or not set(s) <= _DIGITS:
        raise MalformedVerseId(f"not an 8-digit verse ID: {s!r}")
    book, chapter, verse = int(s[0:2]), int(s[2:5]), int(s[5:8])
    if book == 0:
        raise MalformedVerseId(f"book 00 is invalid: {s!r}")
    return VerseId(book, chapter, verse)


@dataclass(frozen=True, order=True)
class EditionId:
    """One translation of the corpus: ISO 639-3 code plus an edition name."""

    language_code: str
    edition_name: str

    def __post_init__(self):
        if len(self.language_code) != 3 or not set(self.language_code) <= _LOWER:
            raise CorpusError(f"language code must be 3 lowercase letters: {self.language_code!r}")
        if not self.edition_name or "@" in self.edition_name or "\t" in self.edition_name:
            raise CorpusError(f"bad edition name: {self.edition_name!r}")

    def __str__(self) -> str:
        return f"{self.language_code}-{self.edition_name}"

    @classmethod
    def parse(cls, s: str) -> "EditionId":
        lang, sep, name = s.partition("-")
        if not sep:
            raise CorpusError(f"edition ID needs a '-': {s!r}")
        return cls(lang, name)


@dataclass(frozen=True, order=True)
class SentenceKey:
    """Globally unique sentence address: "{verse}@{language}-{edition}"."""

    verse: VerseId
    edition: EditionId

    def __str__(self) -> str:
        return f"{self.verse}@{self.edition}"

    @classmethod
    def parse(cls, s: str) -> "SentenceKey":
        vid, sep, ed = s.partition("@")
        if not sep:
            raise CorpusError(f"sentence key needs an '@': {s!r}")
        return cls(parse_verse_id(vid), EditionId.parse(ed))


def tokenize(text: str) -> tuple[list[str], list[str]]:
    """Split on whitespace; return (display tokens, lowercased tokens)."""
    display = text.split()
    return display, [t.lower() for t in display]


@dataclass
class Edition:
    """All verses of one edition, raw and tokenized.

    Immutable after load by convention; verse insertion order is file order.
    """

    id: EditionId
    verses: dict[VerseId, str] = field(default_factory=dict)
    tokens: dict[VerseId, list[str]] = field(default_factory=dict)
    norm_tokens: dict[VerseId, list[str]] = field(default_factory=dict)

    def add_verse(self, verse: VerseId, text: str) -> None:
        if verse in self.verses:
            raise CorpusError(f"duplicate verse {verse} in {self.id}")
        self.verses[verse] = text
        self.tokens[verse], self.norm_tokens[verse] = tokenize(text)

    def verse_ids(self) -> list[VerseId]:
        return list(self.verses)

    def __len__(self) -> int:
        return len(self.verses)


def load_edition(path: str | Path, id: EditionId | None = None) -> Edition:
    """Read one edition file: "{8-digit verse ID}<TAB>{text}" per line.

    '#'-prefixed lines and blank lines are skipped.  Fails on the first
    malformed or duplicate line; errors carry the line number.  When `id`
    is omitted it is derived from the file name ("{lang}-{edition}.txt").
    """
    path = Path(path)
    if id is None:
        id = EditionId.parse(path.stem)
    edition = Edition(id=id)
    raw = path.read_text(encoding="utf-8")
    for line_no, line in enumerate(raw.split("\n"), start=1):
        if not line or line.startswith("#"):
            continue
        vid_str, sep, text = line.partition("\t")
        if not sep:
            raise MalformedLine(path, line_no, "missing tab separator")
        try:
            verse = parse_verse_id(vid_str)
        except MalformedVerseId as e:
            raise MalformedLine(path, line_no, str(e)) from e
        if verse in edition.verses:
            raise DuplicateVerse(path, line_no, verse)
        edition.add_verse(verse, text)
    return edition


def write_edition(edition: Edition, path: str | Path) -> None:
    """Serialize in verse insertion order; inverse of load_edition."""
    with open(path, "w", encoding="utf-8") as f:
        for verse, text in edition.verses.items():
            f.write(f"{verse}\t{text}\n")


@dataclass
class Corpus:
    editions: list[Edition]
    by_id: dict[EditionId, Edition] = field(init=False)
    by_language: dict[str, list[EditionId]] = field(init=False)

    def __post_init__(self):
        self.by_id = {}
        self.by_language = {}
        for ed in self.editions:
            if ed.id in self.by_id:
                raise CorpusError(f"duplicate edition {ed.id}")
            self.by_id[ed.id] = ed
            self.by_language.setdefault(ed.id.language_code, []).append(ed.id)

    def languages(self) -> list[str]:
        return list(self.by_language)

    def editions_of(self, language_code: str) -> list[Edition]:
        return [self.by_id[eid] for eid in self.by_language.get(language_code, [])]


def load_corpus(corpus_dir: str | Path) -> Corpus:
    """Load every "*.txt" edition file in the directory, sorted by name."""
    corpus_dir = Path(corpus_dir)
    if not corpus_dir.is_dir():
        raise CorpusError(f"corpus directory not found: {corpus_dir}")
    paths = sorted(corpus_dir.glob("*.txt"))
    if not paths:
        raise EmptyCorpus(f"no edition files in {corpus_dir}")
    return Corpus([load_edition(p) for p in paths])


def mutual_verses(a: Edition, b: Edition) -> list[VerseId]:
    """Verse IDs present in both editions, ascending."""
    return sorted(set(a.verses) & set(b.verses))


@dataclass(frozen=True)
class CorpusStats:
    n_editions: int
    n_languages: int
    n_verses_total: int
    verses_per_edition: Fraction
    tokens_per_verse: Fraction


def corpus_stats(corpus: Corpus) -> CorpusStats:
    if not corpus.editions:
        raise EmptyCorpus("corpus has no editions")
    n_editions = len(corpus.editions)
    n_verses = sum(len(ed) for ed in corpus.editions)
    n_tokens = sum(len(toks) for ed in corpus.editions for toks in ed.tokens.values())
    return CorpusStats(
        n_editions=n_editions,
        n_languages=len(corpus.by_language),
        n_verses_total=n_verses,
        verses_per_edition=Fraction(n_verses, n_editions),
        tokens_per_verse=Fraction(n_tokens, n_verses) if n_verses else Fraction(0),
    )


def display_forms(corpus: Corpus, language_code: str) -> dict[str, str]:
    """Map each normalized token of a language to its most frequent surface
    form (ties broken lexicographically)."""
    counts: dict[str, dict[str, int]] = {}
    for edition in corpus.editions_of(language_code):
        for toks, norm in zip(edition.tokens.values(), edition.norm_tokens.values()):
            for surface, word in zip(toks, norm):
                row = counts.setdefault(word, {})
                row[surface] = row.get(surface, 0) + 1
    return {
        word: min(row, key=lambda s: (-row[s], s))
        for word, row in counts.items()
    }
