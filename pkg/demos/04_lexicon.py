"""Induce a bilingual lexicon from alignments and drill into a word.

Run from the repository root:  python3 demos/04_lexicon.py
"""

from parcour import load_corpus
from parcour.aligner import align_corpus_pair
from parcour.lexicon import (
    LexiconConfig,
    induce_lexicon,
    pair_occurrences,
    translation_distribution,
)

corpus = load_corpus("data/sample_corpus")

asets = list(align_corpus_pair(corpus, "eng", "deu", iterations=5).values())
lex = induce_lexicon(asets, corpus)
print(f"lexicon {lex.source_language}->{lex.target_language}: "
      f"{len(lex.entries)} source words, {lex.total_links()} links")

# The pie-chart data: share of each translation among the word's links,
# keeping only translations with at least 5% share.
eng_to_deu = lex.transposed()
for word in ("confusion", "king", "woman"):
    dist = translation_distribution(eng_to_deu, word, LexiconConfig(min_share=0.05))
    print(f"\n{word!r} -> deu  ({dist.total} links total, >= 5% share kept):")
    for s in dist.slices:
        print(f"  {s.word:<14} {s.count:>4}  {s.share:6.1%}")
    raw = eng_to_deu.entries.get(word, {})
    dropped = sorted(set(raw) - {s.word for s in dist.slices})
    if dropped:
        print(f"  (filtered out: {', '.join(dropped)})")

# Word-level view back to sentence level: verses where a specific word
# pair is actually linked.
occs = pair_occurrences("verwirrung", "confusion", corpus, asets, limit=3)
print(f"\nfirst {len(occs)} verses linking verwirrung <-> confusion:")
for occ in occs:
    ed1, ed2 = occ.editions
    print(f"  {occ.verse} [{ed1} | {ed2}] links {list(occ.links)}")
    print(f"    {corpus.by_id[ed1].verses[occ.verse]}")
    print(f"    {corpus.by_id[ed2].verses[occ.verse]}")
