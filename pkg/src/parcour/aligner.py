"""Align every edition pair of a language pair, plus ad-hoc sentence pairs.

Training data for a language pair is the full cross product of its
editions over their mutually available verses.  Decoding runs the lexical
model in both directions and symmetrizes with grow-diag-final-and.  The
lexicographically smaller language code is the source side for file
naming; both directional models are always trained.
"""

from __future__ import annotations

import warnings
from itertools import combinations
from typing import Callable

from .alignments import AlignmentSet
from .corpus import Corpus, Edition, EditionId, mutual_verses, tokenize
from .gdfa import Link, symmetrize_gdfa, transpose
from .model1 import SentencePair, TranslationTable, train_model1, viterbi_align


class NoMutualVerses(Exception):
    pass


class NoMutualVersesWarning(Warning):
    pass


def build_training_pairs(
    l1_editions: list[Edition], l2_editions: list[Edition]
) -> list[SentencePair]:
    """One SentencePair per edition pair (m x n cross product) and mutual
    verse, editions in input order, verses ascending.  Verses empty on
    either side are skipped; an edition pair contributing nothing raises a
    NoMutualVersesWarning."""
    pairs: list[SentencePair] = []
    for e1 in l1_editions:
        for e2 in l2_editions:
            shared = mutual_verses(e1, e2)
            if not shared:
                warnings.warn(
                    f"no mutual verses between {e1.id} and {e2.id}", NoMutualVersesWarning
                )
                continue
            for vid in shared:
                src = e1.norm_tokens[vid]
                tgt = e2.norm_tokens[vid]
                if src and tgt:
                    pairs.append(SentencePair(src, tgt, vid, (e1.id, e2.id)))
    return pairs


def align_tokens(
    fwd_table: TranslationTable,
    rev_table: TranslationTable,
    src_tokens: list[str],
    tgt_tokens: list[str],
) -> set[Link]:
    """Symmetrized alignment of one token pair from two directional tables."""
    fwd = viterbi_align(fwd_table, SentencePair(src_tokens, tgt_tokens))
    rev = viterbi_align(rev_table, SentencePair(tgt_tokens, src_tokens))
    return symmetrize_gdfa(fwd, transpose(rev), len(src_tokens), len(tgt_tokens))


def train_language_pair(
    corpus: Corpus, lang1: str, lang2: str, iterations: int = 5
) -> tuple[TranslationTable, TranslationTable]:
    """Train both directional tables for a language pair, canonically
    oriented (forward = lexicographically smaller language as source)."""
    l1, l2 = sorted((lang1, lang2))
    eds1 = corpus.editions_of(l1)
    eds2 = corpus.editions_of(l2)
    if not eds1 or not eds2:
        raise NoMutualVerses(f"language pair {l1}-{l2} not present in the corpus")
    fwd_pairs = build_training_pairs(eds1, eds2)
    if not fwd_pairs:
        raise NoMutualVerses(f"no mutual verses for language pair {l1}-{l2}")
    rev_pairs = build_training_pairs(eds2, eds1)
    fwd_table = train_model1(fwd_pairs, iterations, l1, l2)
    rev_table = train_model1(rev_pairs, iterations, l2, l1)
    return fwd_table, rev_table


def align_corpus_pair(
    corpus: Corpus, lang1: str, lang2: str, iterations: int = 5
) -> dict[tuple[EditionId, EditionId], AlignmentSet]:
    """Symmetrized alignments for every edition pair of the language pair,
    covering exactly the mutual verses of each edition pair."""
    l1, l2 = sorted((lang1, lang2))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NoMutualVersesWarning)
        fwd_table, rev_table = train_language_pair(corpus, l1, l2, iterations)
    result: dict[tuple[EditionId, EditionId], AlignmentSet] = {}
    for e1 in corpus.editions_of(l1):
        for e2 in corpus.editions_of(l2):
            links_by_verse = {}
            for vid in mutual_verses(e1, e2):
                links = align_tokens(
                    fwd_table, rev_table, e1.norm_tokens[vid], e2.norm_tokens[vid]
                )
                links_by_verse[vid] = frozenset(links)
            result[(e1.id, e2.id)] = AlignmentSet((e1.id, e2.id), links_by_verse)
    return result


def exact_match_links(src_tokens: list[str], tgt_tokens: list[str]) -> set[Link]:
    """Fallback pairing: link identical tokens, leftmost first."""
    positions: dict[str, list[int]] = {}
    for j, token in enumerate(tgt_tokens):
        positions.setdefault(token, []).append(j)
    cursor: dict[str, int] = {}
    links: set[Link] = set()
    for i, token in enumerate(src_tokens):
        available = positions.get(token, [])
        k = cursor.get(token, 0)
        if k < len(available):
            links.add((i, available[k]))
            cursor[token] = k + 1
    return links


TableProvider = Callable[[str, str], "tuple[TranslationTable, TranslationTable] | None"]


def align_interactive(
    sentences: list[tuple[str, str]],
    table_provider: TableProvider,
) -> dict[tuple[int, int], set[Link]]:
    """Align every unordered sentence pair (i < j).

    `table_provider(lang_a, lang_b)` returns (a->b table, b->a table) or
    None; without tables the exact-token fallback applies.  Link source
    indexes refer to sentence i, target indexes to sentence j.
    """
    tokenized = [tokenize(text)[1] for _, text in sentences]
    langs = [lang for lang, _ in sentences]
    result: dict[tuple[int, int], set[Link]] = {}
    for i, j in combinations(range(len(sentences)), 2):
        tables = table_provider(langs[i], langs[j])
        if tables is not None:
            fwd_table, rev_table = tables
            result[(i, j)] = align_tokens(fwd_table, rev_table, tokenized[i], tokenized[j])
        else:
            result[(i, j)] = exact_match_links(tokenized[i], tokenized[j])
    return result


def corpus_table_provider(corpus: Corpus, iterations: int = 5) -> TableProvider:
    """Provider that trains language-pair tables from the corpus on demand
    (same training data and iterations as the batch aligner), returning
    None when the pair has no trainable data."""

    def provide(lang_a: str, lang_b: str):
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", NoMutualVersesWarning)
                fwd, rev = train_language_pair(corpus, lang_a, lang_b, iterations)
        except NoMutualVerses:
            return None
        if (lang_a, lang_b) == (fwd.source_language, fwd.target_language):
            return fwd, rev
        return rev, fwd

    return provide
