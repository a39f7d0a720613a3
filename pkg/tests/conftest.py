from pathlib import Path

import pytest

from parcour.corpus import load_corpus
from parcour.search import build_indexes

REPO_ROOT = Path(__file__).resolve().parents[1]
SAMPLE_CORPUS_DIR = REPO_ROOT / "data" / "sample_corpus"


@pytest.fixture(scope="session")
def sample_corpus_dir() -> Path:
    return SAMPLE_CORPUS_DIR


@pytest.fixture(scope="session")
def sample_corpus():
    return load_corpus(SAMPLE_CORPUS_DIR)


@pytest.fixture(scope="session")
def sample_indexes(sample_corpus):
    return build_indexes(sample_corpus)
