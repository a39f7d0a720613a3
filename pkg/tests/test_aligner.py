import pytest

from parcour.alignments import (
    AlignmentSet,
    alignment_file_name,
    import_alignment_file,
    parse_alignment_file_name,
    read_alignment_file,
    write_alignment_set,
)
from parcour.aligner import (
    NoMutualVerses,
    NoMutualVersesWarning,
    align_corpus_pair,
    align_interactive,
    build_training_pairs,
    corpus_table_provider,
    exact_match_links,
)
from parcour.corpus import Corpus, Edition, EditionId, MalformedLine, VerseId, parse_verse_id

from helpers import make_corpus, toy_corpus


def editions_with_verses(lang, names, verses):
    out = []
    for name in names:
        ed = Edition(EditionId(lang, name))
        for vid, text in verses.items():
            ed.add_verse(parse_verse_id(vid), text)
        out.append(ed)
    return out


class TestBuildTrainingPairs:
    def test_two_by_three_editions_give_six_edition_pairs(self):
        verses = {"40001001": "a b", "40001002": "c d"}
        l1 = editions_with_verses("aaa", ["e1", "e2"], verses)
        l2 = editions_with_verses("bbb", ["f1", "f2", "f3"], verses)
        pairs = build_training_pairs(l1, l2)
        assert len({p.editions for p in pairs}) == 6
        assert len(pairs) == 6 * 2

    def test_single_pair_ten_mutual_verses(self):
        verses = {f"400010{i:02d}": "a b" for i in range(1, 11)}
        l1 = editions_with_verses("aaa", ["x"], verses)
        l2 = editions_with_verses("bbb", ["y"], verses)
        pairs = build_training_pairs(l1, l2)
        assert len(pairs) == 10
        assert [p.verse for p in pairs] == sorted(p.verse for p in pairs)

    def test_disjoint_editions_warn_and_return_empty(self):
        l1 = editions_with_verses("aaa", ["x"], {"40001001": "a"})
        l2 = editions_with_verses("bbb", ["y"], {"40001002": "b"})
        with pytest.warns(NoMutualVersesWarning):
            assert build_training_pairs(l1, l2) == []

    def test_empty_sided_verses_skipped(self):
        l1 = editions_with_verses("aaa", ["x"], {"40001001": "a", "40001002": ""})
        l2 = editions_with_verses("bbb", ["y"], {"40001001": "b", "40001002": "c"})
        pairs = build_training_pairs(l1, l2)
        assert [str(p.verse) for p in pairs] == ["40001001"]


class TestAlignCorpusPair:
    def test_one_to_one_toy_corpus_aligns_identity(self):
        corpus = toy_corpus()
        asets = align_corpus_pair(corpus, "aaa", "bbb", iterations=5)
        (aset,) = asets.values()
        identity = frozenset((k, k) for k in range(5))
        assert all(links == identity for links in aset.links_by_verse.values())
        assert len(aset.links_by_verse) == 50

    def test_self_language_pair_identical_editions(self):
        verses = {f"400010{i:02d}": f"w{i} w{i + 1} w{i + 2}" for i in range(1, 21)}
        corpus = Corpus(editions_with_verses("aaa", ["one"], verses))
        asets = align_corpus_pair(corpus, "aaa", "aaa", iterations=3)
        (aset,) = asets.values()
        identity = frozenset((k, k) for k in range(3))
        assert all(links == identity for links in aset.links_by_verse.values())

    def test_covers_exactly_mutual_verses(self):
        e1 = editions_with_verses("aaa", ["x"], {"40001001": "w1 w2", "40001002": "w2 w3"})[0]
        e2 = editions_with_verses("bbb", ["y"], {"40001002": "u2 u3", "40001003": "u4"})[0]
        asets = align_corpus_pair(Corpus([e1, e2]), "bbb", "aaa", iterations=2)
        (aset,) = asets.values()
        assert sorted(str(v) for v in aset.links_by_verse) == ["40001002"]
        # canonical orientation: "aaa" < "bbb" so aaa edition comes first
        assert aset.editions == (e1.id, e2.id)

    def test_no_shared_verses_raises(self):
        e1 = editions_with_verses("aaa", ["x"], {"40001001": "a"})[0]
        e2 = editions_with_verses("bbb", ["y"], {"40001002": "b"})[0]
        with pytest.raises(NoMutualVerses):
            align_corpus_pair(Corpus([e1, e2]), "aaa", "bbb")

    def test_missing_language_raises(self):
        corpus = toy_corpus()
        with pytest.raises(NoMutualVerses):
            align_corpus_pair(corpus, "aaa", "zzz")

    def test_deterministic_across_runs(self):
        corpus = toy_corpus(n_verses=30)
        a = align_corpus_pair(corpus, "aaa", "bbb", iterations=4)
        b = align_corpus_pair(corpus, "aaa", "bbb", iterations=4)
        for key in a:
            assert a[key].links_by_verse == b[key].links_by_verse


class TestExactMatchFallback:
    def test_swapped_tokens(self):
        assert exact_match_links(["a", "b"], ["b", "a"]) == {(0, 1), (1, 0)}

    def test_leftmost_first_for_duplicates(self):
        assert exact_match_links(["a", "a"], ["a", "x", "a"]) == {(0, 0), (1, 2)}

    def test_unmatched_tokens_unlinked(self):
        assert exact_match_links(["a", "b"], ["c"]) == set()


class TestAlignInteractive:
    def test_pair_count_is_n_choose_2(self):
        sentences = [("xxx", "a b"), ("yyy", "b a"), ("zzz", "c")]
        result = align_interactive(sentences, lambda a, b: None)
        assert set(result) == {(0, 1), (0, 2), (1, 2)}

    def test_untrained_pair_uses_exact_fallback(self):
        result = align_interactive([("xxx", "a b"), ("yyy", "b a")], lambda a, b: None)
        assert result[(0, 1)] == {(0, 1), (1, 0)}

    def test_trained_pair_matches_corpus_alignment(self):
        corpus = toy_corpus()
        asets = align_corpus_pair(corpus, "aaa", "bbb", iterations=5)
        (aset,) = asets.values()
        vid = VerseId(40, 1, 0)
        e1 = corpus.by_id[EditionId("aaa", "toy")]
        e2 = corpus.by_id[EditionId("bbb", "toy")]
        provider = corpus_table_provider(corpus, iterations=5)
        result = align_interactive(
            [("aaa", e1.verses[vid]), ("bbb", e2.verses[vid])], provider
        )
        assert result[(0, 1)] == set(aset.links_by_verse[vid])

    def test_provider_orientation_respected(self):
        corpus = toy_corpus()
        provider = corpus_table_provider(corpus, iterations=5)
        vid = VerseId(40, 1, 0)
        e1 = corpus.by_id[EditionId("aaa", "toy")]
        e2 = corpus.by_id[EditionId("bbb", "toy")]
        # reversed sentence order: links must be transposed relative to aaa->bbb
        result = align_interactive(
            [("bbb", e2.verses[vid]), ("aaa", e1.verses[vid])], provider
        )
        assert result[(0, 1)] == {(k, k) for k in range(5)}


class TestAlignmentFiles:
    def _aset(self):
        return AlignmentSet(
            (EditionId("deu", "sample"), EditionId("eng", "sample")),
            {
                VerseId(40, 1, 1): frozenset({(1, 0), (0, 0), (2, 3)}),
                VerseId(40, 1, 2): frozenset(),
            },
        )

    def test_file_name(self):
        assert alignment_file_name(EditionId("deu", "x"), EditionId("eng", "y")) == "deu-x__eng-y.aln"
        assert parse_alignment_file_name("deu-x__eng-y.aln") == (EditionId("deu", "x"), EditionId("eng", "y"))

    def test_write_format_exact_bytes(self, tmp_path):
        path = write_alignment_set(self._aset(), tmp_path)
        assert path.name == "deu-sample__eng-sample.aln"
        assert path.read_text() == "40001001\t0-0 1-0 2-3\n40001002\t\n"

    def test_round_trip(self, tmp_path):
        aset = self._aset()
        path = write_alignment_set(aset, tmp_path)
        loaded = read_alignment_file(path)
        assert loaded.editions == aset.editions
        assert loaded.links_by_verse == aset.links_by_verse

    def test_read_rejects_bad_link_token(self, tmp_path):
        p = tmp_path / "deu-x__eng-y.aln"
        p.write_text("40001001\t0-0 nope\n")
        with pytest.raises(MalformedLine):
            read_alignment_file(p)

    def test_read_rejects_missing_tab(self, tmp_path):
        p = tmp_path / "deu-x__eng-y.aln"
        p.write_text("40001001 0-0\n")
        with pytest.raises(MalformedLine):
            read_alignment_file(p)

    def test_import_validates_against_corpus(self, tmp_path):
        corpus = make_corpus({
            "deu-x": {"40001001": "der sohn"},
            "eng-y": {"40001001": "the son"},
        })
        good = tmp_path / "deu-x__eng-y.aln"
        good.write_text("40001001\t0-0 1-1\n")
        installed = import_alignment_file(good, corpus, tmp_path / "out")
        assert installed.read_text() == good.read_text()

        bad_bounds = tmp_path / "b" / "deu-x__eng-y.aln"
        bad_bounds.parent.mkdir()
        bad_bounds.write_text("40001001\t5-0\n")
        with pytest.raises(ValueError, match="out of bounds"):
            import_alignment_file(bad_bounds, corpus, tmp_path / "out")

        bad_cover = tmp_path / "c" / "deu-x__eng-y.aln"
        bad_cover.parent.mkdir()
        bad_cover.write_text("")
        with pytest.raises(ValueError, match="mutual verses"):
            import_alignment_file(bad_cover, corpus, tmp_path / "out")

    def test_transposed(self):
        aset = self._aset()
        flipped = aset.transposed()
        assert flipped.editions == (EditionId("eng", "sample"), EditionId("deu", "sample"))
        assert flipped.links_by_verse[VerseId(40, 1, 1)] == frozenset({(0, 0), (0, 1), (3, 2)})
