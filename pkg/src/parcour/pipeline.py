"""Offline pipeline stages: build, align, lexicon.

Every stage is idempotent and deterministic, printing one runtime row per
stage in the fixed table format so runs are comparable:

    Method                                   Runtime (s)
    Conversion                                      0.21
    Indexing                                        0.35
    ...
    Overall                                         0.58

Alignment jobs for distinct language pairs are independent, so they may
run in a process pool; outputs are byte-identical for any worker count.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .aligner import align_corpus_pair
from .alignments import write_alignment_set
from .config import Settings
from .corpus import Corpus, corpus_stats, load_corpus
from .lexicon import get_or_build_lexicon
from .search import build_indexes, save_indexes

STATS_MAGIC = "parcour-stats"
TABLE_WIDTH = 40


@dataclass(frozen=True)
class StageTiming:
    name: str
    seconds: float


def format_table(timings: list[StageTiming], overall: bool = True) -> str:
    lines = [f"{'Method':<{TABLE_WIDTH}}Runtime (s)"]
    for t in timings:
        lines.append(f"{t.name:<{TABLE_WIDTH}}{t.seconds:>11.2f}")
    if overall:
        total = sum(t.seconds for t in timings)
        lines.append(f"{'Overall':<{TABLE_WIDTH}}{total:>11.2f}")
    return "\n".join(lines)


def language_pairs(corpus: Corpus, pair_specs: list[str] | None = None) -> list[tuple[str, str]]:
    """Canonically ordered language pairs: all unordered pairs including
    self-pairs by default, or the parsed "--pairs lang1,lang2" specs."""
    langs = sorted(corpus.by_language)
    if pair_specs is None:
        return [(a, b) for i, a in enumerate(langs) for b in langs[i:]]
    pairs = []
    for spec in pair_specs:
        parts = [p.strip() for p in spec.split(",")]
        if len(parts) != 2 or not all(parts):
            raise ValueError(f"bad pair spec {spec!r}, expected 'lang1,lang2'")
        for lang in parts:
            if lang not in corpus.by_language:
                raise ValueError(f"language {lang!r} not in corpus")
        pair = (min(parts), max(parts))
        if pair not in pairs:
            pairs.append(pair)
    return pairs


def stats_file(data_dir: Path) -> Path:
    return data_dir / "stats.json"


def write_stats(corpus: Corpus, data_dir: Path) -> dict:
    stats = corpus_stats(corpus)
    doc = {
        "magic": STATS_MAGIC,
        "version": 1,
        "n_editions": stats.n_editions,
        "n_languages": stats.n_languages,
        "n_verses_total": stats.n_verses_total,
        "verses_per_edition": float(stats.verses_per_edition),
        "tokens_per_verse": float(stats.tokens_per_verse),
    }
    data_dir.mkdir(parents=True, exist_ok=True)
    with open(stats_file(data_dir), "w", encoding="utf-8") as f:
        json.dump(doc, f, ensure_ascii=False, sort_keys=True, indent=1)
    return doc


def run_build(settings: Settings) -> list[StageTiming]:
    """Load the corpus, build and persist both indexes, compute stats."""
    data_dir = Path(settings.data_dir)
    data_dir.mkdir(parents=True, exist_ok=True)

    t0 = time.perf_counter()
    corpus = load_corpus(settings.corpus_dir)
    t1 = time.perf_counter()
    six, eix = build_indexes(corpus)
    save_indexes(data_dir / "indexes.json", six, eix)
    t2 = time.perf_counter()
    write_stats(corpus, data_dir)
    t3 = time.perf_counter()
    return [
        StageTiming("Conversion", t1 - t0),
        StageTiming("Indexing", t2 - t1),
        StageTiming("Stats", t3 - t2),
    ]


_worker_corpus: Corpus | None = None


def _init_align_worker(corpus_dir: str) -> None:
    global _worker_corpus
    _worker_corpus = load_corpus(corpus_dir)


def _align_pair_job(args: tuple[str, str, str, int]) -> int:
    """Align one language pair and write its files; returns file count."""
    lang1, lang2, data_dir, iterations = args
    assert _worker_corpus is not None
    asets = align_corpus_pair(_worker_corpus, lang1, lang2, iterations)
    out_dir = Path(data_dir) / "alignments"
    for aset in asets.values():
        write_alignment_set(aset, out_dir)
    return len(asets)


def run_align(settings: Settings, pair_specs: list[str] | None = None) -> list[StageTiming]:
    """Produce every alignment file for the requested language pairs."""
    t0 = time.perf_counter()
    corpus = load_corpus(settings.corpus_dir)
    pairs = language_pairs(corpus, pair_specs)
    jobs = [(l1, l2, str(settings.data_dir), settings.em_iterations) for l1, l2 in pairs]
    if settings.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(
            max_workers=settings.workers,
            initializer=_init_align_worker,
            initargs=(str(settings.corpus_dir),),
        ) as pool:
            list(pool.map(_align_pair_job, jobs))
    else:
        global _worker_corpus
        _worker_corpus = corpus
        try:
            for job in jobs:
                _align_pair_job(job)
        finally:
            _worker_corpus = None
    return [StageTiming("Alignment", time.perf_counter() - t0)]


def run_lexicon(settings: Settings, pair_specs: list[str] | None = None) -> list[StageTiming]:
    """Precompute the lexicon file of every requested language pair."""
    t0 = time.perf_counter()
    corpus = load_corpus(settings.corpus_dir)
    for l1, l2 in language_pairs(corpus, pair_specs):
        get_or_build_lexicon(corpus, settings.data_dir, l1, l2)
    return [StageTiming("Lexicon", time.perf_counter() - t0)]
