"""Multiparallel-corpus explorer: word alignment, lexicon induction,
full-text search, and an HTTP browsing API for verse-aligned corpora."""

from .aligner import align_corpus_pair, align_interactive, build_training_pairs
from .alignments import AlignmentSet, read_alignment_file, write_alignment_set
from .corpus import (
    Corpus,
    CorpusStats,
    Edition,
    EditionId,
    SentenceKey,
    VerseId,
    corpus_stats,
    load_corpus,
    load_edition,
    mutual_verses,
    parse_verse_id,
    tokenize,
)
from .gdfa import symmetrize_gdfa
from .lexicon import (
    Lexicon,
    LexiconConfig,
    induce_lexicon,
    pair_occurrences,
    translation_distribution,
)
from .model1 import SentencePair, TranslationTable, train_model1, viterbi_align
from .search import build_indexes, parse_query, search, suggest
from .store import LruCache, SavedSearch, SavedSearchStore

__version__ = "0.1.0"

__all__ = [
    "AlignmentSet",
    "Corpus",
    "CorpusStats",
    "Edition",
    "EditionId",
    "Lexicon",
    "LexiconConfig",
    "LruCache",
    "SavedSearch",
    "SavedSearchStore",
    "SentenceKey",
    "SentencePair",
    "TranslationTable",
    "VerseId",
    "align_corpus_pair",
    "align_interactive",
    "build_indexes",
    "build_training_pairs",
    "corpus_stats",
    "induce_lexicon",
    "load_corpus",
    "load_edition",
    "mutual_verses",
    "pair_occurrences",
    "parse_query",
    "parse_verse_id",
    "read_alignment_file",
    "search",
    "suggest",
    "symmetrize_gdfa",
    "tokenize",
    "train_model1",
    "translation_distribution",
    "viterbi_align",
    "write_alignment_set",
]
