"""Train the lexical model for one language pair and inspect alignments.

Shows the two directional decodings and the symmetrized result for a
verse, then the on-disk Pharaoh-style format.

Run from the repository root:  python3 demos/03_alignment.py
"""

from parcour import load_corpus, parse_verse_id, write_alignment_set
from parcour.aligner import align_corpus_pair, train_language_pair
from parcour.gdfa import symmetrize_gdfa, transpose
from parcour.model1 import SentencePair, viterbi_align

corpus = load_corpus("data/sample_corpus")

# Both directional tables; forward = lexicographically smaller language.
fwd_table, rev_table = train_language_pair(corpus, "deu", "eng", iterations=5)
print("EM log-likelihood trajectory (deu->eng):")
for i, ll in enumerate(fwd_table.log_likelihoods):
    print(f"  after {i} iteration(s): {ll:12.2f}")

vid = parse_verse_id("41001001")
deu = corpus.by_id[corpus.by_language["deu"][0]]
eng = corpus.by_id[corpus.by_language["eng"][0]]
src, tgt = deu.norm_tokens[vid], eng.norm_tokens[vid]
print(f"\ndeu: {' '.join(src)}\neng: {' '.join(tgt)}")

fwd = viterbi_align(fwd_table, SentencePair(src, tgt))
rev = viterbi_align(rev_table, SentencePair(tgt, src))
sym = symmetrize_gdfa(fwd, transpose(rev), len(src), len(tgt))
print(f"\nforward links    : {sorted(fwd)}")
print(f"reverse (flipped): {sorted(transpose(rev))}")
print(f"symmetrized      : {sorted(sym)}")
for s, t in sorted(sym):
    print(f"  {deu.tokens[vid][s]:<14} <-> {eng.tokens[vid][t]}")

# The batch driver covers every edition pair of the language pair and the
# files round-trip through the alignment directory format.
asets = align_corpus_pair(corpus, "deu", "eng", iterations=5)
for (ed1, ed2), aset in asets.items():
    path = write_alignment_set(aset, "var/demo_alignments")
    print(f"\nwrote {path} ({aset.total_links()} links)")
    with open(path, encoding="utf-8") as f:
        print("  " + f.readline().rstrip())
