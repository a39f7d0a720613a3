"""Bilingual lexicons induced from alignment links.

Every link between two tokens counts as one vote that the (normalized)
word pair is a translation pair; counts aggregate over all edition pairs
of a language pair.  A word's translation distribution keeps only targets
whose share of the word's total outgoing links reaches min_share (default
5%), computed against the pre-filter total.

Lexicon files live in "lexicons/{lang1}__{lang2}.tsv" with the
lexicographically smaller language as the source side; the reverse
direction is served by transposition.  Files are computed and persisted
on first miss.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .alignments import AlignmentSet, parse_alignment_file_name, read_alignment_file
from .corpus import Corpus, VerseId
from .gdfa import Link


class MissingAlignments(Exception):
    pass


def _share_threshold(min_share: float) -> Fraction:
    # exact decimal semantics for thresholds like 0.05
    return Fraction(str(min_share))


@dataclass(frozen=True)
class LexiconConfig:
    min_share: float = 0.05

    def __post_init__(self):
        if not (0 <= self.min_share < 1):
            raise ValueError(f"min_share must be in [0, 1): {self.min_share}")


@dataclass
class Lexicon:
    source_language: str
    target_language: str
    # source word -> target word -> raw link count (pre-filter)
    entries: dict[str, dict[str, int]] = field(default_factory=dict)

    def add(self, source_word: str, target_word: str, count: int = 1) -> None:
        row = self.entries.setdefault(source_word, {})
        row[target_word] = row.get(target_word, 0) + count

    def count(self, source_word: str, target_word: str) -> int:
        return self.entries.get(source_word, {}).get(target_word, 0)

    def total_links(self) -> int:
        return sum(c for row in self.entries.values() for c in row.values())

    def transposed(self) -> "Lexicon":
        flipped = Lexicon(self.target_language, self.source_language)
        for src, row in self.entries.items():
            for tgt, n in row.items():
                flipped.add(tgt, src, n)
        return flipped


@dataclass(frozen=True)
class DistributionSlice:
    word: str
    display: str
    count: int
    share: float


@dataclass
class TranslationDistribution:
    source_word: str
    target_language: str
    total: int  # pre-filter denominator
    slices: list[DistributionSlice] = field(default_factory=list)


def induce_lexicon(asets: list[AlignmentSet], corpus: Corpus) -> Lexicon:
    """Count every link of every verse of every edition pair.  All sets
    must share one language-pair orientation."""
    if not asets:
        raise MissingAlignments("no alignment sets given")
    src_lang = asets[0].editions[0].language_code
    tgt_lang = asets[0].editions[1].language_code
    lex = Lexicon(src_lang, tgt_lang)
    for aset in asets:
        ed1, ed2 = aset.editions
        if (ed1.language_code, ed2.language_code) != (src_lang, tgt_lang):
            raise ValueError(f"alignment set {ed1}__{ed2} is not {src_lang}->{tgt_lang}")
        src_tokens = corpus.by_id[ed1].norm_tokens
        tgt_tokens = corpus.by_id[ed2].norm_tokens
        for verse, links in aset.links_by_verse.items():
            src = src_tokens[verse]
            tgt = tgt_tokens[verse]
            for s, t in links:
                lex.add(src[s], tgt[t])
    return lex


def translation_distribution(
    lex: Lexicon,
    source_word: str,
    cfg: LexiconConfig = LexiconConfig(),
    display_map: dict[str, str] | None = None,
) -> TranslationDistribution:
    """Filtered translation counts of one source word, ordered by
    descending count then ascending word.  Unknown words yield an empty
    distribution."""
    row = lex.entries.get(source_word, {})
    total = sum(row.values())
    threshold = _share_threshold(cfg.min_share)
    kept = [
        (word, count)
        for word, count in row.items()
        if Fraction(count, total) >= threshold
    ]
    kept.sort(key=lambda wc: (-wc[1], wc[0]))
    display_map = display_map or {}
    return TranslationDistribution(
        source_word=source_word,
        target_language=lex.target_language,
        total=total,
        slices=[
            DistributionSlice(word, display_map.get(word, word), count, count / total)
            for word, count in kept
        ],
    )


@dataclass(frozen=True)
class Occurrence:
    verse: VerseId
    editions: tuple  # (EditionId, EditionId)
    links: tuple[Link, ...]  # only the links joining the queried word pair


def pair_occurrences(
    source_word: str,
    target_word: str,
    corpus: Corpus,
    asets: list[AlignmentSet],
    limit: int = 50,
) -> list[Occurrence]:
    """Verses where some link joins tokens normalizing to the word pair,
    ascending by verse then by edition-pair order, truncated to limit."""
    found: list[tuple[VerseId, int, Occurrence]] = []
    for pair_index, aset in enumerate(asets):
        ed1, ed2 = aset.editions
        src_tokens = corpus.by_id[ed1].norm_tokens
        tgt_tokens = corpus.by_id[ed2].norm_tokens
        for verse, links in aset.links_by_verse.items():
            src = src_tokens[verse]
            tgt = tgt_tokens[verse]
            matching = tuple(sorted(
                (s, t) for s, t in links if src[s] == source_word and tgt[t] == target_word
            ))
            if matching:
                occ = Occurrence(verse, aset.editions, matching)
                found.append((verse, pair_index, occ))
    found.sort(key=lambda item: (item[0], item[1]))
    return [occ for _, _, occ in found[:limit]]


def lexicon_file_name(lang1: str, lang2: str) -> str:
    return f"{lang1}__{lang2}.tsv"


def write_lexicon(lex: Lexicon, directory: str | Path) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / lexicon_file_name(lex.source_language, lex.target_language)
    tmp = path.with_suffix(".tsv.tmp")
    with open(tmp, "w", encoding="utf-8") as f:
        for src in sorted(lex.entries):
            row = lex.entries[src]
            for tgt in sorted(row, key=lambda w: (-row[w], w)):
                f.write(f"{src}\t{tgt}\t{row[tgt]}\n")
    tmp.replace(path)
    return path


def read_lexicon(path: str | Path) -> Lexicon:
    path = Path(path)
    lang1, sep, lang2 = path.stem.partition("__")
    if not sep:
        raise ValueError(f"not a lexicon file name: {path.name!r}")
    lex = Lexicon(lang1, lang2)
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line:
            continue
        src, tgt, count = line.split("\t")
        lex.add(src, tgt, int(count))
    return lex


def alignment_sets_for_pair(
    alignments_dir: str | Path, lang1: str, lang2: str
) -> list[AlignmentSet]:
    """Load every stored alignment set whose orientation is lang1->lang2,
    in sorted file order."""
    alignments_dir = Path(alignments_dir)
    sets = []
    if alignments_dir.is_dir():
        for path in sorted(alignments_dir.glob("*.aln")):
            ed1, ed2 = parse_alignment_file_name(path.name)
            if ed1.language_code == lang1 and ed2.language_code == lang2:
                sets.append(read_alignment_file(path))
    return sets


def get_or_build_lexicon(
    corpus: Corpus,
    data_dir: str | Path,
    source_language: str,
    target_language: str,
) -> Lexicon:
    """Precompute-else-online: read the persisted lexicon for the pair, or
    induce it from stored alignments and persist it first.  The returned
    lexicon is oriented source_language -> target_language even though the
    file stores the canonical (lexicographically smaller first) direction.
    """
    data_dir = Path(data_dir)
    l1, l2 = sorted((source_language, target_language))
    path = data_dir / "lexicons" / lexicon_file_name(l1, l2)
    if path.exists():
        lex = read_lexicon(path)
    else:
        asets = alignment_sets_for_pair(data_dir / "alignments", l1, l2)
        if not asets:
            raise MissingAlignments(f"no alignment files for language pair {l1}-{l2}")
        lex = induce_lexicon(asets, corpus)
        write_lexicon(lex, data_dir / "lexicons")
    if source_language != l1:
        lex = lex.transposed()
    return lex
