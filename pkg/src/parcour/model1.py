"""Lexical translation model (IBM Model 1) trained with EM.

The table holds t(target word | source word) rows, including a NULL source
row (key None) that absorbs target words without a real counterpart.
Training is fully deterministic: no randomness, iteration order fixed by
the input, uniform initialization restricted to co-occurring vocabulary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .corpus import EditionId, VerseId

PROB_FLOOR = 1e-12  # score for word combinations never seen in training


class EmptyTraining(Exception):
    pass


@dataclass
class SentencePair:
    """One parallel sentence in normalized-token form."""

    source_tokens: list[str]
    target_tokens: list[str]
    verse: VerseId | None = None
    editions: tuple[EditionId, EditionId] | None = None


@dataclass
class TranslationTable:
    source_language: str | None = None
    target_language: str | None = None
    # source word (None = NULL) -> target word -> probability
    probs: dict[str | None, dict[str, float]] = field(default_factory=dict)
    # corpus log-likelihood per EM iteration, plus one entry for the final table
    log_likelihoods: list[float] = field(default_factory=list)

    def prob(self, source_word: str | None, target_word: str) -> float:
        return self.probs.get(source_word, {}).get(target_word, PROB_FLOOR)


def train_model1(
    pairs: list[SentencePair],
    iterations: int = 5,
    source_language: str | None = None,
    target_language: str | None = None,
) -> TranslationTable:
    """Standard Model 1 EM with a NULL token prepended to every source side.

    Each EM iteration distributes every target token's unit count over the
    source tokens in proportion to the current probabilities, then
    renormalizes each source row.  The recorded log-likelihood sequence is
    non-decreasing up to float noise.
    """
    if iterations < 1:
        raise EmptyTraining(f"iterations must be >= 1, got {iterations}")
    if not pairs:
        raise EmptyTraining("no training pairs")
    for pair in pairs:
        if not pair.source_tokens or not pair.target_tokens:
            raise EmptyTraining(f"empty side in training pair {pair.verse}")

    # Uniform initialization over each source word's co-occurring targets.
    cooc: dict[str | None, dict[str, None]] = {None: {}}
    for pair in pairs:
        null_row = cooc[None]
        for f in pair.target_tokens:
            null_row[f] = None
        for e in pair.source_tokens:
            row = cooc.setdefault(e, {})
            for f in pair.target_tokens:
                row[f] = None
    t: dict[str | None, dict[str, float]] = {
        e: dict.fromkeys(row, 1.0 / len(row)) for e, row in cooc.items()
    }

    history: list[float] = []
    for _ in range(iterations):
        counts: dict[str | None, dict[str, float]] = {e: {} for e in t}
        ll_terms: list[float] = []
        for pair in pairs:
            src = pair.source_tokens
            rows = [t[None]] + [t[e] for e in src]
            crows = [counts[None]] + [counts[e] for e in src]
            len_norm = math.log(len(src) + 1)
            for f in pair.target_tokens:
                denom = 0.0
                for row in rows:
                    denom += row[f]
                ll_terms.append(math.log(denom) - len_norm)
                inv = 1.0 / denom
                for row, crow in zip(rows, crows):
                    crow[f] = crow.get(f, 0.0) + row[f] * inv
        history.append(math.fsum(ll_terms))
        for e, crow in counts.items():
            total = math.fsum(crow.values())
            t[e] = {f: c / total for f, c in crow.items()}

    table = TranslationTable(source_language, target_language, t)
    history.append(log_likelihood(table, pairs))
    table.log_likelihoods = history
    return table


def log_likelihood(table: TranslationTable, pairs: list[SentencePair]) -> float:
    """Model 1 corpus log-likelihood under the table (uniform alignment
    prior 1/(len+1), constant sentence-length factor omitted)."""
    terms = []
    for pair in pairs:
        rows = [table.probs.get(None, {})] + [table.probs.get(e, {}) for e in pair.source_tokens]
        len_norm = math.log(len(pair.source_tokens) + 1)
        for f in pair.target_tokens:
            denom = 0.0
            for row in rows:
                denom += row.get(f, PROB_FLOOR)
            terms.append(math.log(denom) - len_norm)
    return math.fsum(terms)


def viterbi_align(table: TranslationTable, pair: SentencePair) -> set[tuple[int, int]]:
    """Directional decoding: each target token aligns to its most probable
    source token.  NULL wins only with strictly higher probability than
    every real token; ties between real tokens go to the lowest index;
    unseen combinations score PROB_FLOOR.
    """
    links: set[tuple[int, int]] = set()
    null_row = table.probs.get(None, {})
    rows = [table.probs.get(e, {}) for e in pair.source_tokens]
    for j, f in enumerate(pair.target_tokens):
        best_p = null_row.get(f, PROB_FLOOR)
        best_i = None
        for i, row in enumerate(rows):
            p = row.get(f, PROB_FLOOR)
            if p > best_p or (p == best_p and best_i is None):
                best_p = p
                best_i = i
        if best_i is not None:
            links.add((best_i, j))
    return links
