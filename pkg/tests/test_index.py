import json
import math
from collections import Counter

import pytest

from anvil import (
    analyze,
    build_index,
    extend_index,
    load_index,
    retrieve,
    save_index,
    simple_match,
)
from anvil.data import default_lexicon_text
from anvil.errors import (
    DuplicateId,
    EmptyCaption,
    EmptyQuery,
    FormatVersionMismatch,
    IndexEmpty,
)
from anvil.index import RetrievalParams, group_results

TOY_CORPUS = [
    {"id": "d01", "caption": "yellow car"},
    {"id": "d02", "caption": "camera with a zoom lens"},
    {"id": "d03", "caption": "old camera on a table"},
    {"id": "d04", "caption": "black dog"},
    {"id": "d05", "caption": "camera lens"},
    {"id": "d06", "caption": "a table with a camera"},
    {"id": "d07", "caption": "yellow boat on a lake"},
    {"id": "d08", "caption": "green bottle"},
    {"id": "d09", "caption": "dog on a yellow car"},
    {"id": "d10", "caption": "lens for an old camera"},
]


@pytest.fixture(scope="module")
def toy_index(lexicon):
    return build_index(TOY_CORPUS, lexicon)


@pytest.fixture(scope="module")
def figure_index(lexicon, figure_records):
    return build_index(figure_records, lexicon)


def cosine_oracle(index, query_terms):
    """Brute-force tf-idf cosine, written independently of the index path."""
    n = index.doc_count
    doc_tfs = {
        rid: Counter(rec.parse.content_lemmas()) for rid, rec in index.records.items()
    }
    df = Counter()
    for tf in doc_tfs.values():
        df.update(tf.keys())

    def idf(term):
        return math.log(1 + n / df[term]) if df[term] else 0.0

    q_tf = Counter(t for t in query_terms if df[t])
    scores = []
    q_vec = {t: c * idf(t) for t, c in q_tf.items()}
    q_norm = math.sqrt(sum(v * v for v in q_vec.values()))
    for rid, tf in doc_tfs.items():
        d_vec = {t: c * idf(t) for t, c in tf.items()}
        d_norm = math.sqrt(sum(v * v for v in d_vec.values()))
        dot = sum(q_vec.get(t, 0.0) * v for t, v in d_vec.items())
        if dot > 0 and q_norm > 0 and d_norm > 0:
            scores.append((rid, dot / (q_norm * d_norm)))
    scores.sort(key=lambda e: (-e[1], e[0]))
    return scores


class TestBuildIndex:
    def test_disjoint_captions_have_disjoint_postings(self, lexicon):
        index = build_index(
            [{"id": "a", "caption": "yellow car"}, {"id": "b", "caption": "black dog"}],
            lexicon,
        )
        for term, entries in index.postings.items():
            assert len(entries) == 1

    def test_figure_corpus_camera_in_every_caption(self, figure_index):
        assert len(figure_index.postings["camera"]) == 5

    def test_duplicate_id_rejected(self, lexicon):
        with pytest.raises(DuplicateId):
            build_index(
                [{"id": "a", "caption": "yellow car"}, {"id": "a", "caption": "dog"}],
                lexicon,
            )

    def test_empty_caption_rejected(self, lexicon):
        with pytest.raises(EmptyCaption):
            build_index([{"id": "a", "caption": "   "}], lexicon)

    def test_postings_consistent_with_records(self, toy_index):
        for term, entries in toy_index.postings.items():
            for doc_id, tf in entries:
                lemmas = toy_index.records[doc_id].parse.content_lemmas()
                assert lemmas.count(term) == tf


class TestSimpleMatch:
    def test_identical_multiset_scores_one(self, toy_index, lexicon):
        terms = analyze("yellow car", lexicon).content_lemmas()
        results = simple_match(toy_index, terms, k=5)
        assert results[0][0] == "d01"
        assert results[0][1] == pytest.approx(1.0)

    def test_matches_brute_force_oracle(self, toy_index, lexicon):
        for query in ["camera lens", "yellow car", "old camera table", "dog"]:
            terms = analyze(query, lexicon).content_lemmas()
            got = simple_match(toy_index, terms, k=len(TOY_CORPUS))
            expected = cosine_oracle(toy_index, terms)
            assert [g[0] for g in got] == [e[0] for e in expected]
            for (gid, gscore), (eid, escore) in zip(got, expected):
                assert gscore == pytest.approx(escore, abs=1e-12)

    def test_unknown_terms_empty(self, toy_index):
        assert simple_match(toy_index, ["xylophone-oddity"], k=3) == []

    def test_empty_query_rejected(self, toy_index):
        with pytest.raises(EmptyQuery):
            simple_match(toy_index, [], k=3)

    def test_cutoff_respected(self, toy_index):
        assert len(simple_match(toy_index, ["camera"], k=2)) == 2


class TestRetrieve:
    def test_identity_caption_ranks_first(self, toy_index, ruleset, context_rules):
        results = retrieve(toy_index, "camera with a zoom lens", ruleset,
                           context_rules, RetrievalParams(alpha=1.0))
        assert results[0].id == "d02"
        assert results[0].combined_score == pytest.approx(1.0)

    def test_unknown_word_empty(self, toy_index, ruleset, context_rules):
        assert retrieve(toy_index, "zzzunknownzzz", ruleset, context_rules) == []

    def test_empty_index_rejected(self, lexicon, ruleset, context_rules):
        from anvil.index import Index

        empty = Index(records={}, postings={}, doc_count=0, doc_norms={},
                      lexicon=lexicon)
        with pytest.raises(IndexEmpty):
            retrieve(empty, "camera", ruleset, context_rules)

    def test_alpha_zero_equals_simple_order(self, toy_index, ruleset, context_rules,
                                            lexicon):
        terms = analyze("old camera", lexicon).content_lemmas()
        simple_ids = [d for d, _ in simple_match(toy_index, terms, k=10)]
        results = retrieve(toy_index, "old camera", ruleset, context_rules,
                           RetrievalParams(alpha=0.0, limit=10))
        assert [r.id for r in results] == simple_ids

    def test_combined_is_convex(self, toy_index, ruleset, context_rules):
        params = RetrievalParams(alpha=0.8, limit=10)
        for r in retrieve(toy_index, "old camera", ruleset, context_rules, params):
            expected = 0.8 * r.phrase_score + 0.2 * r.simple_score
            assert r.combined_score == pytest.approx(expected)

    def test_raising_phrase_score_never_lowers_rank(self, toy_index, ruleset,
                                                    context_rules):
        # ordering by combined score is monotone in the phrase component
        params = RetrievalParams(alpha=0.8, limit=10)
        results = retrieve(toy_index, "camera lens", ruleset, context_rules, params)
        for earlier, later in zip(results, results[1:]):
            assert earlier.combined_score >= later.combined_score
            bumped = 0.8 * min(1.0, later.phrase_score + 0.2) + 0.2 * later.simple_score
            if bumped > earlier.combined_score:
                assert later.phrase_score < 1.0  # improvement was possible at all


class TestPersistence:
    def test_round_trip_equality(self, figure_index, tmp_path):
        save_index(figure_index, tmp_path / "idx", lexicon_text=default_lexicon_text())
        loaded = load_index(tmp_path / "idx")
        assert loaded == figure_index

    def test_round_trip_preserves_query_results(self, figure_index, ruleset,
                                                context_rules, tmp_path):
        save_index(figure_index, tmp_path / "idx", lexicon_text=default_lexicon_text())
        loaded = load_index(tmp_path / "idx")
        params = RetrievalParams(alpha=1.0)
        before = retrieve(figure_index, "camera with a lens.", ruleset, context_rules,
                          params)
        after = retrieve(loaded, "camera with a lens.", ruleset, context_rules, params)
        assert before == after

    def test_missing_manifest(self, tmp_path):
        with pytest.raises(FormatVersionMismatch):
            load_index(tmp_path)

    def test_version_mismatch(self, figure_index, tmp_path):
        save_index(figure_index, tmp_path / "idx", lexicon_text=default_lexicon_text())
        manifest = tmp_path / "idx" / "manifest.json"
        data = json.loads(manifest.read_text())
        data["format_version"] = 99
        manifest.write_text(json.dumps(data))
        with pytest.raises(FormatVersionMismatch):
            load_index(tmp_path / "idx")

    def test_extend_equals_rebuild(self, lexicon, tmp_path):
        base = build_index(TOY_CORPUS[:5], lexicon)
        extended = extend_index(base, TOY_CORPUS[5:])
        rebuilt = build_index(TOY_CORPUS, lexicon)
        assert extended == rebuilt


class TestGroupResults:
    def test_groups_cover_returned_results(self, figure_index, ruleset, context_rules):
        results = retrieve(figure_index, "camera with a lens.", ruleset, context_rules,
                           RetrievalParams(alpha=1.0))
        groups = group_results(results)
        ids = {r.id for r in results}
        for g in groups:
            assert set(g.caption_ids) <= ids
