"""Convert a CES-style aligned document pair into edition files.

Input: two XML documents whose sentence elements (<s id="...">) carry
identifiers, plus a link map pairing those identifiers.  Every linked pair
receives a synthetic shared verse ID (book 99, counting upward in link
order) so the output can be loaded like any other edition pair.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path

from .corpus import CorpusError, VerseId

XML_ID = "{http://www.w3.org/XML/1998/namespace}id"
SYNTHETIC_BOOK = 99
MAX_PAIRS = 100_000  # chapter field holds pair_index // 100, capped at 999


class UnresolvedLink(CorpusError):
    pass


@dataclass(frozen=True)
class ConversionReport:
    pairs_written: int
    dropped_source: int
    dropped_target: int


def _local_tag(elem) -> str:
    tag = elem.tag
    return tag.rsplit("}", 1)[-1] if isinstance(tag, str) else ""


def _read_sentences(path: Path) -> dict[str, str]:
    """All <s> elements with an id, as id -> whitespace-collapsed text."""
    sentences: dict[str, str] = {}
    root = ET.parse(path).getroot()
    for elem in root.iter():
        if _local_tag(elem) != "s":
            continue
        sid = elem.get("id") or elem.get(XML_ID)
        if sid is None:
            continue
        sentences[sid] = " ".join("".join(elem.itertext()).split())
    return sentences


def _read_links(path: Path) -> list[tuple[list[str], list[str]]]:
    """cesAlign links as (source ids, target ids) lists, in file order."""
    links = []
    root = ET.parse(path).getroot()
    for elem in root.iter():
        if _local_tag(elem) != "link":
            continue
        xtargets = elem.get("xtargets")
        if xtargets is None:
            continue
        sides = xtargets.split(";")
        if len(sides) != 2:
            raise UnresolvedLink(f"bad xtargets {xtargets!r} in {path}")
        links.append((sides[0].split(), sides[1].split()))
    return links


def synthetic_verse_id(pair_index: int) -> VerseId:
    if pair_index >= MAX_PAIRS:
        raise CorpusError(f"too many linked pairs for the synthetic verse scheme: {pair_index + 1}")
    return VerseId(SYNTHETIC_BOOK, pair_index // 100, pair_index % 100)


def convert_ces(
    source_doc: str | Path,
    target_doc: str | Path,
    link_map: str | Path,
    out_source: str | Path,
    out_target: str | Path,
) -> ConversionReport:
    """Emit one edition file per document, keeping only linked pairs.

    Multi-id link sides are concatenated in order.  A link side with no
    ids drops the pair; sentences never referenced by a kept link are
    dropped and counted in the report.  A link that references a missing
    sentence id raises UnresolvedLink.
    """
    src_sentences = _read_sentences(Path(source_doc))
    tgt_sentences = _read_sentences(Path(target_doc))
    used_src: set[str] = set()
    used_tgt: set[str] = set()

    def resolve(ids: list[str], sentences: dict[str, str], doc, used: set[str]) -> str:
        parts = []
        for sid in ids:
            if sid not in sentences:
                raise UnresolvedLink(f"link references missing sentence {sid!r} in {doc}")
            used.add(sid)
            parts.append(sentences[sid])
        return " ".join(p for p in parts if p)

    pair_index = 0
    with open(out_source, "w", encoding="utf-8") as src_out, \
         open(out_target, "w", encoding="utf-8") as tgt_out:
        for src_ids, tgt_ids in _read_links(Path(link_map)):
            if not src_ids or not tgt_ids:
                continue
            src_text = resolve(src_ids, src_sentences, source_doc, used_src)
            tgt_text = resolve(tgt_ids, tgt_sentences, target_doc, used_tgt)
            vid = synthetic_verse_id(pair_index)
            src_out.write(f"{vid}\t{src_text}\n")
            tgt_out.write(f"{vid}\t{tgt_text}\n")
            pair_index += 1

    return ConversionReport(
        pairs_written=pair_index,
        dropped_source=len(src_sentences) - len(used_src),
        dropped_target=len(tgt_sentences) - len(used_tgt),
    )
