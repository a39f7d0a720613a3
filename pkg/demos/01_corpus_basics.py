"""Load the bundled sample corpus and poke around the verse structure.

Run from the repository root:  python3 demos/01_corpus_basics.py
"""

from parcour import corpus_stats, load_corpus, mutual_verses, parse_verse_id

corpus = load_corpus("data/sample_corpus")

print("Editions:")
for edition in corpus.editions:
    print(f"  {edition.id}  ({len(edition)} verses)")

stats = corpus_stats(corpus)
print(f"\n{stats.n_languages} languages, {stats.n_editions} editions, "
      f"{stats.n_verses_total} verses total")
print(f"verses/edition = {float(stats.verses_per_edition):.1f}, "
      f"tokens/verse = {float(stats.tokens_per_verse):.2f}")

# The same verse ID addresses the same content in every edition that has it.
vid = parse_verse_id("40002017")
print(f"\nVerse {vid} across editions:")
for edition in corpus.editions:
    if vid in edition.verses:
        print(f"  {edition.id}: {edition.verses[vid]}")

# Language pairs only ever train and align on mutually available verses.
eng = corpus.editions_of("eng")[0]
fra = corpus.editions_of("fra")[0]
shared = mutual_verses(eng, fra)
print(f"\n{eng.id} and {fra.id} share {len(shared)} verses "
      f"(first: {shared[0]}, last: {shared[-1]})")
