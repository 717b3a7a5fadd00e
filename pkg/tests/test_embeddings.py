import numpy as np
import pytest

from textdecepter import EmbeddingStore, build_similarity_matrix, load_embeddings, parse, top_k_synonyms
from textdecepter.errors import FormatError, UnknownWord


def write(tmp_path, text, name="vec.txt"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


class TestLoad:
    def test_three_lines(self, tmp_path):
        store = load_embeddings(write(tmp_path, "good 1 0 0 0\nfilm 0 1 0 0\nbad -1 0 0.5 0\n"))
        assert len(store) == 3 and store.dim == 4
        assert list(store.vocabulary) == ["good", "film", "bad"]

    @pytest.mark.parametrize("bad_line", ["plot 1 2 3", "plot 1 2 x 4", "plot 1 2 nan 4", "plot 0 0 0 0"])
    def test_malformed_line_is_named(self, tmp_path, bad_line):
        path = write(tmp_path, f"good 1 0 0 0\n{bad_line}\nbad -1 0 0 0\n")
        with pytest.raises(FormatError) as info:
            load_embeddings(path)
        assert info.value.line == 2
        assert "line 2" in str(info.value)

    def test_duplicates_keep_first(self, tmp_path):
        store = load_embeddings(write(tmp_path, "good 1 0\ngood 0 1\nbad 0 -1\n"))
        assert len(store) == 2
        np.testing.assert_allclose(store.vector("good"), [1, 0])

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_embeddings(tmp_path / "absent.txt")

    def test_empty_file(self, tmp_path):
        with pytest.raises(FormatError):
            load_embeddings(write(tmp_path, ""))

    def test_fixture(self, store):
        assert store.dim == 50
        assert len(store) <= 500
        assert len(set(store.vocabulary)) == len(store)

    def test_store_rejects_zero_vector(self):
        with pytest.raises(ValueError):
            EmbeddingStore(["a", "b"], np.array([[1.0, 0.0], [0.0, 0.0]]))


class TestMatrix:
    def test_rows_per_distinct_word(self, store):
        m = build_similarity_matrix(parse("good film , good film"), store)
        assert sorted(m.rows) == ["film", "good"]
        assert m.shape == (2, len(store))

    def test_all_oov(self, store):
        m = build_similarity_matrix(parse("zorblax quuxly"), store)
        assert m.shape[0] == 0
        assert "zorblax" not in m

    def test_membership_and_ranges(self, store, corpus):
        for ex in corpus:
            doc = parse(ex.text)
            m = build_similarity_matrix(doc, store)
            expected = {t.normalized for t in doc.words} & set(store.vocabulary)
            assert set(m.rows) == expected
            assert m.values.size == m.shape[0] * len(store)
            assert np.all(m.values >= -1 - 1e-6) and np.all(m.values <= 1 + 1e-6)
            for w in m.rows:
                assert m.row(w)[store.index[w]] == pytest.approx(1.0, abs=1e-6)

    def test_unknown_row(self, store):
        m = build_similarity_matrix(parse("good film"), store)
        with pytest.raises(UnknownWord):
            m.row("bad")


def brute_force_neighbours(store, word, k, min_cosine):
    raw = np.asarray(store.vectors, dtype=float)
    v = raw[store.index[word]]
    scored = []
    for i, other in enumerate(store.vocabulary):
        if other == word:
            continue
        cos = float(raw[i] @ v / (np.linalg.norm(raw[i]) * np.linalg.norm(v)))
        if cos >= min_cosine:
            scored.append((-cos, i, other))
    scored.sort()
    return [(w, -c) for c, _, w in scored[:k]]


class TestTopK:
    def test_beautiful_has_resplendent(self, store):
        m = build_similarity_matrix(parse("strange and beautiful film"), store)
        words = [c.word for c in top_k_synonyms("beautiful", 50, 0.5, m)]
        assert "resplendent" in words and "beautiful" not in words

    def test_k_zero(self, store):
        m = build_similarity_matrix(parse("good"), store)
        assert top_k_synonyms("good", 0, 0.5, m) == []

    @pytest.mark.parametrize("word", ["good", "beautiful", "laughs", "undermining", "film", "the"])
    def test_matches_full_scan(self, store, word):
        m = build_similarity_matrix(parse(word), store)
        for k in (1, 5, 50):
            got = top_k_synonyms(word, k, 0.5, m)
            want = brute_force_neighbours(store, word, k, 0.5)
            assert [c.word for c in got] == [w for w, _ in want]
            for c, (_, cos) in zip(got, want):
                assert c.cosine == pytest.approx(cos, abs=1e-5)
                assert c.cosine >= 0.5

    def test_prefix_monotone(self, store, corpus):
        doc = parse(corpus[0].text)
        m = build_similarity_matrix(doc, store)
        for w in m.rows:
            lists = [top_k_synonyms(w, k, -1.0, m) for k in range(0, 12)]
            for shorter, longer in zip(lists, lists[1:]):
                assert longer[: len(shorter)] == shorter

    def test_ties_follow_vocabulary_order(self):
        store = EmbeddingStore(["x", "b", "a", "c"], np.array([[1.0, 0], [1, 1], [1, 1], [1, -1]]))
        m = build_similarity_matrix(parse("x"), store)
        assert [c.word for c in top_k_synonyms("x", 3, 0.0, m)] == ["b", "a", "c"]

    def test_unknown(self, store):
        m = build_similarity_matrix(parse("good"), store)
        with pytest.raises(UnknownWord):
            top_k_synonyms("bad", 5, 0.5, m)


def test_memory_proportional_to_text(store):
    words = list(store.vocabulary)
    text = " ".join(words[i % 120] for i in range(215)) + " ."
    doc = parse(text)
    assert doc.word_count == 215
    m = build_similarity_matrix(doc, store)
    assert m.shape[0] <= len({t.normalized for t in doc.words}) <= 215
