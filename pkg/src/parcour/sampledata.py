"""Deterministic synthetic sample corpus: 4 languages, 5 editions.

Each verse is a short sequence of concepts rendered per language from a
weighted vocabulary, with fixed word-order transforms (rotation for deu,
reversal for fra) and article-dropping in spa, so that alignments are
non-trivial but learnable.  Regenerating always reproduces the committed
files byte for byte: all randomness is drawn via Random.random(), the only
random-module primitive with a cross-version stability guarantee.

Usage: python -m parcour.sampledata [out_dir]
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

from .corpus import VerseId

SEED = 20260810
LANGS = ("eng", "deu", "fra", "spa", "spa2")  # spa2 = second Spanish edition
EDITION_FILES = {
    "eng": "eng-sample.txt",
    "deu": "deu-sample.txt",
    "fra": "fra-sample.txt",
    "spa": "spa-sample.txt",
    "spa2": "spa-sample2.txt",
}

# One entry per concept: language -> weighted surface variants.  An empty
# list drops the concept in that language (articles in Spanish).  "spa2"
# falls back to "spa" when absent.
V = dict
CONCEPTS: list[dict[str, list[tuple[str, float]]]] = [
    V(eng=[("the", 1)], deu=[("der", 0.6), ("die", 0.4)], fra=[("le", 0.6), ("la", 0.4)], spa=[]),
    V(eng=[("a", 1)], deu=[("ein", 0.6), ("eine", 0.4)], fra=[("un", 0.55), ("une", 0.45)], spa=[]),
    V(eng=[("and", 1)], deu=[("und", 1)], fra=[("et", 1)], spa=[("y", 1)]),
    V(eng=[("king", 1)], deu=[("könig", 1)], fra=[("roi", 1)], spa=[("rey", 1)]),
    V(eng=[("house", 1)], deu=[("haus", 1)], fra=[("maison", 1)], spa=[("casa", 1)]),
    V(eng=[("water", 1)], deu=[("wasser", 1)], fra=[("eau", 1)], spa=[("agua", 1)]),
    V(eng=[("bread", 1)], deu=[("brot", 1)], fra=[("pain", 1)], spa=[("pan", 1)]),
    V(eng=[("son", 1)], deu=[("sohn", 1)], fra=[("fils", 1)], spa=[("hijo", 1)]),
    V(eng=[("father", 1)], deu=[("vater", 1)], fra=[("père", 1)], spa=[("padre", 1)]),
    V(eng=[("mother", 1)], deu=[("mutter", 1)], fra=[("mère", 1)], spa=[("madre", 1)]),
    V(eng=[("brother", 1)], deu=[("bruder", 1)], fra=[("frère", 1)], spa=[("hermano", 1)]),
    V(eng=[("day", 1)], deu=[("tag", 1)], fra=[("jour", 1)], spa=[("día", 1)]),
    V(eng=[("night", 1)], deu=[("nacht", 1)], fra=[("nuit", 1)], spa=[("noche", 1)]),
    V(eng=[("light", 1)], deu=[("licht", 1)], fra=[("lumière", 1)], spa=[("luz", 1)]),
    V(eng=[("word", 1)], deu=[("wort", 1)], fra=[("parole", 0.7), ("mot", 0.3)], spa=[("palabra", 1)]),
    V(eng=[("voice", 1)], deu=[("stimme", 1)], fra=[("voix", 1)], spa=[("voz", 1)]),
    V(eng=[("earth", 0.7), ("land", 0.3)], deu=[("erde", 0.75), ("land", 0.25)], fra=[("terre", 1)], spa=[("tierra", 1)]),
    V(eng=[("heaven", 1)], deu=[("himmel", 1)], fra=[("ciel", 1)], spa=[("cielo", 1)]),
    V(eng=[("sea", 1)], deu=[("meer", 1)], fra=[("mer", 1)], spa=[("mar", 1)]),
    V(eng=[("fire", 1)], deu=[("feuer", 1)], fra=[("feu", 1)], spa=[("fuego", 1)]),
    V(eng=[("stone", 1)], deu=[("stein", 1)], fra=[("pierre", 1)], spa=[("piedra", 1)]),
    V(eng=[("mountain", 1)], deu=[("berg", 1)], fra=[("montagne", 1)], spa=[("montaña", 1)], spa2=[("monte", 1)]),
    V(eng=[("city", 1)], deu=[("stadt", 1)], fra=[("ville", 1)], spa=[("ciudad", 1)]),
    V(eng=[("road", 0.6), ("way", 0.4)], deu=[("weg", 1)], fra=[("chemin", 1)], spa=[("camino", 1)]),
    V(eng=[("people", 1)], deu=[("volk", 1)], fra=[("peuple", 1)], spa=[("pueblo", 1)]),
    V(eng=[("shepherd", 1)], deu=[("hirte", 1)], fra=[("berger", 1)], spa=[("pastor", 1)]),
    V(eng=[("sheep", 1)], deu=[("schaf", 1)], fra=[("brebis", 1)], spa=[("oveja", 1)]),
    V(eng=[("fish", 1)], deu=[("fisch", 1)], fra=[("poisson", 1)], spa=[("pez", 1)], spa2=[("pescado", 1)]),
    V(eng=[("bird", 1)], deu=[("vogel", 1)], fra=[("oiseau", 1)], spa=[("pájaro", 1)], spa2=[("ave", 1)]),
    V(eng=[("tree", 1)], deu=[("baum", 1)], fra=[("arbre", 1)], spa=[("árbol", 1)]),
    V(eng=[("fruit", 1)], deu=[("frucht", 1)], fra=[("fruit", 1)], spa=[("fruto", 1)], spa2=[("fruta", 1)]),
    V(eng=[("wine", 1)], deu=[("wein", 1)], fra=[("vin", 1)], spa=[("vino", 1)]),
    V(eng=[("oil", 1)], deu=[("öl", 1)], fra=[("huile", 1)], spa=[("aceite", 1)]),
    V(eng=[("peace", 1)], deu=[("friede", 0.6), ("frieden", 0.4)], fra=[("paix", 1)], spa=[("paz", 1)]),
    V(eng=[("joy", 1)], deu=[("freude", 1)], fra=[("joie", 1)], spa=[("alegría", 1)], spa2=[("gozo", 1)]),
    V(eng=[("truth", 1)], deu=[("wahrheit", 1)], fra=[("vérité", 1)], spa=[("verdad", 1)]),
    V(eng=[("law", 1)], deu=[("gesetz", 1)], fra=[("loi", 1)], spa=[("ley", 1)]),
    V(eng=[("confusion", 1)], deu=[("verwirrung", 0.72), ("unordnung", 0.22), ("chaos", 0.06)],
      fra=[("confusion", 1)], spa=[("confusión", 0.8), ("desorden", 0.2)]),
    V(eng=[("wisdom", 1)], deu=[("weisheit", 1)], fra=[("sagesse", 1)], spa=[("sabiduría", 1)]),
    V(eng=[("heart", 1)], deu=[("herz", 1)], fra=[("cœur", 1)], spa=[("corazón", 1)]),
    V(eng=[("hand", 1)], deu=[("hand", 1)], fra=[("main", 1)], spa=[("mano", 1)]),
    V(eng=[("eye", 1)], deu=[("auge", 1)], fra=[("œil", 1)], spa=[("ojo", 1)]),
    V(eng=[("gold", 1)], deu=[("gold", 1)], fra=[("or", 1)], spa=[("oro", 1)]),
    V(eng=[("silver", 1)], deu=[("silber", 1)], fra=[("argent", 1)], spa=[("plata", 1)]),
    V(eng=[("garden", 1)], deu=[("garten", 1)], fra=[("jardin", 1)], spa=[("jardín", 1)], spa2=[("huerto", 1)]),
    V(eng=[("door", 1)], deu=[("tür", 1)], fra=[("porte", 1)], spa=[("puerta", 1)]),
    V(eng=[("woman", 0.65), ("wife", 0.35)], deu=[("frau", 1)], fra=[("femme", 1)],
      spa=[("mujer", 0.7), ("esposa", 0.3)]),
    V(eng=[("child", 1)], deu=[("kind", 1)], fra=[("enfant", 1)], spa=[("niño", 1)]),
    V(eng=[("prophet", 1)], deu=[("prophet", 1)], fra=[("prophète", 1)], spa=[("profeta", 1)]),
    V(eng=[("servant", 1)], deu=[("knecht", 0.6), ("diener", 0.4)], fra=[("serviteur", 1)],
      spa=[("siervo", 1)], spa2=[("criado", 1)]),
    V(eng=[("great", 1)], deu=[("groß", 1)], fra=[("grand", 1)], spa=[("grande", 1)]),
    V(eng=[("small", 0.6), ("little", 0.4)], deu=[("klein", 1)], fra=[("petit", 1)], spa=[("pequeño", 1)]),
    V(eng=[("good", 1)], deu=[("gut", 1)], fra=[("bon", 1)], spa=[("bueno", 1)]),
    V(eng=[("holy", 1)], deu=[("heilig", 1)], fra=[("saint", 1)], spa=[("santo", 1)]),
    V(eng=[("new", 1)], deu=[("neu", 1)], fra=[("nouveau", 1)], spa=[("nuevo", 1)]),
    V(eng=[("old", 1)], deu=[("alt", 1)], fra=[("vieux", 1)], spa=[("viejo", 1)], spa2=[("antiguo", 1)]),
    V(eng=[("sees", 1)], deu=[("sieht", 1)], fra=[("voit", 1)], spa=[("ve", 1)]),
    V(eng=[("gives", 1)], deu=[("gibt", 1)], fra=[("donne", 1)], spa=[("da", 1)]),
    V(eng=[("speaks", 1)], deu=[("spricht", 1)], fra=[("parle", 1)], spa=[("habla", 1)]),
    V(eng=[("loves", 1)], deu=[("liebt", 1)], fra=[("aime", 1)], spa=[("ama", 1)]),
    V(eng=[("finds", 1)], deu=[("findet", 1)], fra=[("trouve", 1)], spa=[("encuentra", 1)], spa2=[("halla", 1)]),
]

# Verse 40002017 exists in exactly three editions.
EXTRA_VERSES = {
    VerseId(40, 2, 17): {
        "eng": "Out of Egypt I called my son .",
        "deu": "Aus Ägypten rief ich meinen Sohn .",
        "spa": "De Egipto llamé a mi hijo .",
    }
}


def _pick(rng: random.Random, weighted: list[tuple[str, float]]) -> str:
    total = sum(w for _, w in weighted)
    x = rng.random() * total
    for word, w in weighted:
        x -= w
        if x < 0:
            return word
    return weighted[-1][0]


def _sample_indices(rng: random.Random, n: int, k: int) -> list[int]:
    pool = list(range(n))
    out = []
    for _ in range(k):
        i = int(rng.random() * len(pool))
        out.append(pool.pop(i))
    return out


def _reorder(lang: str, tokens: list[str]) -> list[str]:
    if lang == "deu" and len(tokens) >= 4:
        return tokens[1:] + tokens[:1]
    if lang == "fra":
        return tokens[::-1]
    return tokens


def shared_verse_ids() -> list[VerseId]:
    return [
        VerseId(book, chapter, verse)
        for book in range(41, 45)
        for chapter in range(1, 11)
        for verse in range(1, 26)
    ]


def generate_sample_corpus() -> dict[str, dict[VerseId, str]]:
    """Render every edition; returns {lang key: {verse: text}}."""
    rng = random.Random(SEED)
    corpus: dict[str, dict[VerseId, str]] = {lang: {} for lang in LANGS}
    for vid in shared_verse_ids():
        n_concepts = 4 + int(rng.random() * 6)  # 4..9
        chosen = _sample_indices(rng, len(CONCEPTS), n_concepts)
        for lang in LANGS:
            tokens = []
            for ci in chosen:
                concept = CONCEPTS[ci]
                if lang == "spa2":
                    forms = concept.get("spa2", concept["spa"])
                else:
                    forms = concept[lang]
                if not forms:
                    continue
                tokens.append(_pick(rng, forms))
            tokens = _reorder(lang, tokens)
            tokens[0] = tokens[0][0].upper() + tokens[0][1:]
            corpus[lang][vid] = " ".join(tokens + ["."])
    for vid, texts in EXTRA_VERSES.items():
        for lang, text in texts.items():
            corpus[lang][vid] = text
    return corpus


def write_sample_corpus(out_dir: str | Path) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    corpus = generate_sample_corpus()
    written = []
    for lang in LANGS:
        path = out_dir / EDITION_FILES[lang]
        with open(path, "w", encoding="utf-8") as f:
            for vid in sorted(corpus[lang]):
                f.write(f"{vid}\t{corpus[lang][vid]}\n")
        written.append(path)
    return written


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "data/sample_corpus"
    for p in write_sample_corpus(target):
        print(p)
