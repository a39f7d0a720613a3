"""Convert a CES-style aligned document pair into edition files.

Linked sentence pairs receive synthetic shared verse IDs (book 99), so the
output plugs straight into the normal corpus loader.

Run from the repository root:  python3 demos/07_ces_import.py
"""

from pathlib import Path

from parcour import load_edition
from parcour.ces import convert_ces

work = Path("var/demo_ces")
work.mkdir(parents=True, exist_ok=True)

(work / "english.xml").write_text("""<cesDoc>
  <s id="e1">The king sees the water .</s>
  <s id="e2">A good day .</s>
  <s id="e3">This sentence stays unlinked .</s>
</cesDoc>""", encoding="utf-8")

(work / "german.xml").write_text("""<cesDoc>
  <s id="g1">Der König sieht das Wasser .</s>
  <s id="g2">Ein guter Tag .</s>
</cesDoc>""", encoding="utf-8")

(work / "links.xml").write_text("""<cesAlign>
  <linkGrp>
    <link xtargets="e1;g1"/>
    <link xtargets="e2;g2"/>
  </linkGrp>
</cesAlign>""", encoding="utf-8")

report = convert_ces(
    work / "english.xml", work / "german.xml", work / "links.xml",
    work / "eng-ces.txt", work / "deu-ces.txt",
)
print(f"pairs written: {report.pairs_written}")
print(f"dropped (source/target): {report.dropped_source}/{report.dropped_target}")

for name in ("eng-ces.txt", "deu-ces.txt"):
    print(f"\n{name}:")
    print((work / name).read_text(encoding="utf-8").rstrip())

edition = load_edition(work / "eng-ces.txt")
print(f"\nloaded back as edition {edition.id} with {len(edition)} verses")
