"""Drive the HTTP API in-process (no server needed).

Builds a data directory under var/demo_api the first time, then exercises
the main endpoints with a test client.  The same API is served over the
network by `parcour serve`.

Run from the repository root:  python3 demos/06_api.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from parcour.config import Settings
from parcour.pipeline import format_table, run_align, run_build, run_lexicon
from parcour.service import create_app

settings = Settings(corpus_dir=Path("data/sample_corpus"), data_dir=Path("var/demo_api"))

if not (settings.data_dir / "indexes.json").exists():
    timings = run_build(settings) + run_align(settings) + run_lexicon(settings)
    print(format_table(timings), "\n")

client = TestClient(create_app(settings))


def show(label, response):
    print(f"\n== {label}")
    print(json.dumps(response.json(), ensure_ascii=False, indent=1)[:600])


show("GET /api/stats", client.get("/api/stats"))
show("GET /api/search?q=l:eng confusion&limit=2",
     client.get("/api/search", params={"q": "l:eng confusion", "limit": 2}))
show("GET /api/suggest?prefix=conf", client.get("/api/suggest", params={"prefix": "conf"}))
show("GET /api/alignments (verse graph, eng source, deu+spa targets)",
     client.get("/api/alignments", params={"key": "41001001@eng-sample", "targets": "deu,spa"}))
show("GET /api/lexicon?lang=eng&word=confusion&targets=deu",
     client.get("/api/lexicon", params={"lang": "eng", "word": "confusion", "targets": "deu"}))
show("GET /api/occurrences (verwirrung <-> confusion)",
     client.get("/api/occurrences", params={
         "src_lang": "deu", "src_word": "verwirrung",
         "tgt_lang": "eng", "tgt_word": "confusion", "limit": 2}))
show("POST /api/interactive",
     client.post("/api/interactive", json={"sentences": [
         {"lang": "eng", "text": "the king sees the water ."},
         {"lang": "deu", "text": "könig sieht wasser der ."}]}))

client.post("/api/searches", json={"name": "demo", "query": "l:eng confusion",
                                   "target_languages": ["deu"]})
show("GET /api/searches", client.get("/api/searches"))
client.delete("/api/searches/demo")
