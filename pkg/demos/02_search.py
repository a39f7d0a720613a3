"""Full-text search with query scoping and search-as-you-type suggestions.

Run from the repository root:  python3 demos/02_search.py
"""

from parcour import build_indexes, load_corpus, parse_query, search, suggest

corpus = load_corpus("data/sample_corpus")
standard, edge = build_indexes(corpus)


def show(q: str, limit: int = 5):
    query = parse_query(q)
    hits = search(standard, query, limit)
    print(f"\nquery: {q!r}  ->  {len(hits)} hit(s)")
    for key, score in hits:
        text = corpus.by_id[key.edition].verses[key.verse]
        print(f"  [{score}] {key}: {text}")


# Plain conjunctive term search across all editions.
show("king water")

# 'l:' narrows to a language (or 'l:lang-edition' to one edition).
show("l:deu könig")
show("l:spa-sample2 rey")

# 'v:' pins one verse ID and lists every edition carrying it.
show("v:40002017")

# Edge n-gram index: prefix suggestions ordered by corpus frequency.
for prefix in ("co", "ver", "wa"):
    print(f"\nsuggest({prefix!r}) -> {suggest(edge, prefix, 6)}")
