"""Word-alignment containers and the on-disk alignment file format.

One file per edition pair, "{lang1}-{ed1}__{lang2}-{ed2}.aln", one line per
mutual verse: the 8-digit verse ID, a tab, then 0-based "s-t" links sorted
by (s, t).  A verse with no links keeps its line (verse ID plus the tab),
so the file always covers exactly the mutual verses.  Externally produced
files in the same format can be dropped in or imported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .corpus import Corpus, EditionId, MalformedLine, VerseId, mutual_verses, parse_verse_id
from .gdfa import Link, transpose


@dataclass(frozen=True)
class VerseAlignment:
    verse: VerseId
    editions: tuple[EditionId, EditionId]
    links: frozenset[Link]


@dataclass
class AlignmentSet:
    """All verse alignments of one edition pair, in (ed1, ed2) orientation."""

    editions: tuple[EditionId, EditionId]
    links_by_verse: dict[VerseId, frozenset[Link]] = field(default_factory=dict)

    def verse_alignment(self, verse: VerseId) -> VerseAlignment:
        return VerseAlignment(verse, self.editions, self.links_by_verse[verse])

    def transposed(self) -> "AlignmentSet":
        ed1, ed2 = self.editions
        return AlignmentSet(
            (ed2, ed1),
            {v: frozenset(transpose(set(links))) for v, links in self.links_by_verse.items()},
        )

    def total_links(self) -> int:
        return sum(len(links) for links in self.links_by_verse.values())


def alignment_file_name(ed1: EditionId, ed2: EditionId) -> str:
    return f"{ed1}__{ed2}.aln"


def parse_alignment_file_name(name: str) -> tuple[EditionId, EditionId]:
    stem = name[:-4] if name.endswith(".aln") else name
    left, sep, right = stem.partition("__")
    if not sep:
        raise ValueError(f"not an alignment file name: {name!r}")
    return EditionId.parse(left), EditionId.parse(right)


def format_links(links: frozenset[Link] | set[Link]) -> str:
    return " ".join(f"{s}-{t}" for s, t in sorted(links))


def write_alignment_set(aset: AlignmentSet, directory: str | Path) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / alignment_file_name(*aset.editions)
    with open(path, "w", encoding="utf-8") as f:
        for verse in sorted(aset.links_by_verse):
            f.write(f"{verse}\t{format_links(aset.links_by_verse[verse])}\n")
    return path


def read_alignment_file(path: str | Path) -> AlignmentSet:
    path = Path(path)
    editions = parse_alignment_file_name(path.name)
    links_by_verse: dict[VerseId, frozenset[Link]] = {}
    raw = path.read_text(encoding="utf-8")
    for line_no, line in enumerate(raw.split("\n"), start=1):
        if not line:
            continue
        vid_str, sep, rest = line.partition("\t")
        if not sep:
            raise MalformedLine(path, line_no, "missing tab separator")
        verse = parse_verse_id(vid_str)
        links = set()
        for token in rest.split():
            s_str, sep2, t_str = token.partition("-")
            if not sep2 or not s_str.isdigit() or not t_str.isdigit():
                raise MalformedLine(path, line_no, f"bad link token {token!r}")
            links.add((int(s_str), int(t_str)))
        links_by_verse[verse] = frozenset(links)
    return AlignmentSet(editions, links_by_verse)


def validate_alignment_set(aset: AlignmentSet, corpus: Corpus) -> None:
    """Check an (imported) alignment set against the corpus: editions must
    exist, verses must be exactly the mutual verses, links in bounds."""
    ed1, ed2 = aset.editions
    for eid in (ed1, ed2):
        if eid not in corpus.by_id:
            raise ValueError(f"unknown edition {eid}")
    e1, e2 = corpus.by_id[ed1], corpus.by_id[ed2]
    expected = mutual_verses(e1, e2)
    got = sorted(aset.links_by_verse)
    if got != expected:
        raise ValueError(
            f"alignment set for {ed1}__{ed2} covers {len(got)} verses, "
            f"expected the {len(expected)} mutual verses"
        )
    for verse, links in aset.links_by_verse.items():
        src_len = len(e1.norm_tokens[verse])
        tgt_len = len(e2.norm_tokens[verse])
        for s, t in links:
            if not (0 <= s < src_len and 0 <= t < tgt_len):
                raise ValueError(f"link ({s},{t}) out of bounds in verse {verse} of {ed1}__{ed2}")


def import_alignment_file(path: str | Path, corpus: Corpus, alignments_dir: str | Path) -> Path:
    """Validate an externally produced alignment file and install it."""
    aset = read_alignment_file(path)
    validate_alignment_set(aset, corpus)
    return write_alignment_set(aset, alignments_dir)
