"""Align arbitrary user-supplied sentences, not just corpus verses.

Pairs whose languages have trainable corpus data get model-based
alignments; anything else falls back to exact token matching.

Run from the repository root:  python3 demos/05_interactive.py
"""

from parcour import load_corpus, tokenize
from parcour.aligner import align_interactive, corpus_table_provider

corpus = load_corpus("data/sample_corpus")
provider = corpus_table_provider(corpus, iterations=5)

sentences = [
    ("eng", "The king sees the water ."),
    ("deu", "König sieht wasser der ."),   # scrambled on purpose
    ("qqq", "the king sees ."),            # unknown language: exact fallback
]

result = align_interactive(sentences, provider)

tokens = [tokenize(text)[0] for _, text in sentences]
for (i, j), links in sorted(result.items()):
    print(f"\npair ({i}, {j})  [{sentences[i][0]} vs {sentences[j][0]}]:")
    print(f"  {' '.join(tokens[i])}")
    print(f"  {' '.join(tokens[j])}")
    for s, t in sorted(links):
        print(f"    {tokens[i][s]:<10} <-> {tokens[j][t]}")
