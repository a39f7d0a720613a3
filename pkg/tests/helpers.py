"""Small corpus constructors shared across test modules."""

from parcour.corpus import Corpus, Edition, EditionId, VerseId, parse_verse_id


def make_corpus(spec, language_factor=None):
    """spec: {"eng-a": {"40001001": "text", ...}, ...}"""
    editions = []
    for ed_str, verses in spec.items():
        ed = Edition(EditionId.parse(ed_str))
        for vid, text in verses.items():
            ed.add_verse(parse_verse_id(vid), text)
        editions.append(ed)
    return Corpus(editions)


def toy_corpus(n_verses=50, vocab=17, length=5, stride=5):
    """Two-language corpus with a one-to-one vocabulary mapping and enough
    cross-verse mixing that Model 1 recovers the identity alignment."""
    e1 = Edition(EditionId("aaa", "toy"))
    e2 = Edition(EditionId("bbb", "toy"))
    for i in range(n_verses):
        vid = VerseId(40, 1 + i // 100, i % 100)
        idx = [(stride * i + j) % vocab for j in range(length)]
        e1.add_verse(vid, " ".join(f"w{k}" for k in idx))
        e2.add_verse(vid, " ".join(f"u{k}" for k in idx))
    return Corpus([e1, e2])
