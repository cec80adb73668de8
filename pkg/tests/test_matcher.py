import pytest
from hypothesis import given, settings, strategies as st

from anvil import analyze, match_phrases, render_trace
from anvil.matcher import MatchConfig, SimilarityProvider
from anvil.rules import parse_rules


def trace_tuples(result):
    return [
        (r.query_label, r.group, r.comparison, r.score, r.weight, r.note)
        for r in result.trace
    ]


class TestWorkedExamples:
    """The three classic traces for "yellow car" under the example rules."""

    def test_identical_phrases(self, lexicon, figure_rules):
        q = analyze("yellow car", lexicon)
        c = analyze("yellow car", lexicon)
        result = match_phrases(q, c, figure_rules)
        assert trace_tuples(result) == [
            ("car", "head_rule", "head = head", 1.0, 1.0, ""),
            ("yellow", "mod_rule", "mod[] = mod[]", 1.0, 0.7, ""),
        ]
        assert result.overall == pytest.approx(1.0, abs=1e-3)

    def test_relative_clause_paraphrase(self, lexicon, figure_rules):
        q = analyze("yellow car", lexicon)
        c = analyze("car which is yellow", lexicon)
        result = match_phrases(q, c, figure_rules)
        assert trace_tuples(result) == [
            ("car", "head_rule", "head = head", 1.0, 1.0, ""),
            ("yellow", "mod_rule", "mod[] = vhead:cop:rel[]", 1.0, 0.7, ""),
        ]
        assert result.overall == pytest.approx(1.0, abs=1e-3)

    def test_negated_caption(self, lexicon, figure_rules):
        q = analyze("yellow car", lexicon)
        c = analyze("car which is not yellow", lexicon)
        result = match_phrases(q, c, figure_rules)
        assert trace_tuples(result) == [
            ("car", "head_rule", "head = head", 1.0, 1.0, ""),
            ("yellow", "mod_rule", "mod[] = vhead:cop:rel[]", 1.0, 0.7, "initially"),
            ("(none)", "mod_rule", "'not' = amod[]", 0.0, 0.0, ""),
            ("yellow", "mod_rule", "mod[] = vhead:cop:rel[]", 0.0, 0.7, "on up-score"),
        ]
        assert result.overall == pytest.approx(0.588, abs=1e-3)

    def test_each_query_word_scored_once(self, lexicon, figure_rules):
        q = analyze("yellow car", lexicon)
        c = analyze("car which is not yellow", lexicon)
        result = match_phrases(q, c, figure_rules)
        query_rows = [r for r in result.rows if r.query_pos is not None]
        assert sorted(r.query_pos for r in query_rows) == [0, 1]

    def test_token_row_carries_zero_weight(self, lexicon, figure_rules):
        q = analyze("yellow car", lexicon)
        c = analyze("car which is not yellow", lexicon)
        result = match_phrases(q, c, figure_rules)
        token_rows = [r for r in result.rows if r.query_pos is None]
        assert len(token_rows) == 1
        assert token_rows[0].weight == 0.0
        assert token_rows[0].score == 0.0


class TestRenderTrace:
    def test_negated_trace_renders_not_row(self, lexicon, figure_rules):
        q = analyze("yellow car", lexicon)
        c = analyze("car which is not yellow", lexicon)
        text = render_trace(match_phrases(q, c, figure_rules))
        assert "'not' = amod[]" in text
        assert "0.0 (on up-score)" in text
        assert text.endswith("overall = 0.588")

    def test_identity_trace(self, lexicon, figure_rules):
        q = analyze("yellow car", lexicon)
        text = render_trace(match_phrases(q, q, figure_rules))
        assert text.splitlines()[0].split() == [
            "Query", "word", "Rule", "group", "Comparison", "Score", "Weight",
        ]
        assert text.endswith("overall = 1")

    def test_empty_result_renders_zero(self, lexicon, figure_rules):
        from anvil.matcher import MatchResult

        assert render_trace(MatchResult([], 0.0, [])).endswith("overall = 0")


class TestMatchingBehaviour:
    def test_identity_on_sample_corpus(self, lexicon, ruleset, sample_records):
        for rec in sample_records:
            p = analyze(rec["caption"], lexicon)
            result = match_phrases(p, p, ruleset)
            assert abs(result.overall - 1.0) < 1e-9, rec["caption"]

    def test_negation_strictly_decreases(self, lexicon, ruleset):
        pairs = [
            ("yellow", "car"), ("black", "dog"), ("white", "horse"),
            ("old", "camera"), ("large", "table"), ("small", "boat"),
            ("green", "bottle"), ("red", "box"), ("blue", "vase"),
            ("long", "lens"), ("short", "ladder"), ("bright", "lamp"),
            ("dark", "mirror"), ("new", "bicycle"), ("ancient", "bridge"),
            ("empty", "basket"), ("round", "clock"), ("narrow", "street"),
            ("golden", "ring"), ("silver", "spoon"),
        ]
        assert len(pairs) == 20
        for adj, noun in pairs:
            q = analyze(f"{adj} {noun}", lexicon)
            plain = match_phrases(q, analyze(f"{noun} which is {adj}", lexicon), ruleset)
            negated = match_phrases(
                q, analyze(f"{noun} which is not {adj}", lexicon), ruleset
            )
            assert negated.overall < plain.overall, (adj, noun)
            # single modifier: the cancelled word keeps its 0.7 weight
            assert negated.overall == pytest.approx(1.0 / 1.7)

    def test_leftover_modifier_mopped_before_penalty(self, lexicon, ruleset):
        q = analyze("yellow car", lexicon)
        c = analyze("car", lexicon)
        result = match_phrases(q, c, ruleset)
        assert result.overall == pytest.approx(1.3 / 2.0)  # mopped at 0.3, weight 1.0

    def test_unmatched_query_word_penalized(self, lexicon, ruleset):
        # "lens" sits in the phead extent, out of reach of the mopping rule
        q = analyze("camera with a lens", lexicon)
        c = analyze("camera", lexicon)
        result = match_phrases(q, c, ruleset)
        assert result.overall == pytest.approx(1.0 / 1.7)

    def test_unmatched_weight_configurable(self, lexicon, ruleset):
        q = analyze("camera with a lens", lexicon)
        c = analyze("camera", lexicon)
        result = match_phrases(q, c, ruleset, config=MatchConfig(unmatched_weight=1.0))
        assert result.overall == pytest.approx(0.5)

    def test_determinism(self, lexicon, ruleset, sample_records):
        q = analyze("camera with a lens", lexicon)
        for rec in sample_records[:10]:
            c = analyze(rec["caption"], lexicon)
            first = match_phrases(q, c, ruleset)
            second = match_phrases(q, c, ruleset)
            assert trace_tuples(first) == trace_tuples(second)
            assert first.overall == second.overall

    def test_rule_order_is_semantics(self, lexicon):
        # "box storage box": the head rule and the demoted-head rule consume
        # different caption words depending on their order.
        original = parse_rules(
            "g { head = head 1.0 => Done 1.0; head = mod[] 0.5 => Done 1.0; }"
        )
        permuted = parse_rules(
            "g { head = mod[] 0.5 => Done 1.0; head = head 1.0 => Done 1.0; }"
        )
        q = analyze("box", lexicon)
        c = analyze("box storage box", lexicon)
        row_a = match_phrases(q, c, original).rows[0]
        row_b = match_phrases(q, c, permuted).rows[0]
        assert row_a.caption_pos != row_b.caption_pos
        assert row_a.score != row_b.score

    def test_upscore_two_levels_deep_alters_one_row(self, lexicon):
        rules = parse_rules(
            "top { head = head 1.0 => mids 0.7; }\n"
            "mids { mod[] = mod[] 1.0 => leaves 0.5; }\n"
            "leaves { 'not' = amod[] 0.0 => Done 0.0; }"
        )
        q = analyze("large camera", lexicon)
        c = analyze("very large camera", lexicon)
        # amod[large] = very in the caption; rewrite literal to match it
        rules_very = parse_rules(rules.render().replace("'not'", "'very'"))
        result = match_phrases(q, c, rules_very)
        by_word = {r.query_pos: r for r in result.rows if r.query_pos is not None}
        assert by_word[1].score == 1.0  # head row untouched
        assert by_word[0].score == 0.0  # modifier row cancelled

    def test_synonym_similarity_scales_score(self, lexicon, ruleset):
        sim = SimilarityProvider({("car", "vehicle"): 0.5})
        q = analyze("car", lexicon)
        c = analyze("vehicle", lexicon)
        result = match_phrases(q, c, ruleset, sim=sim)
        assert result.overall == pytest.approx(0.5)

    def test_mopping_rule_consumes_leftover_modifier(self, lexicon, figure_rules):
        # query modifier with no caption counterpart is mopped at 0.3
        q = analyze("small yellow car", lexicon)
        c = analyze("yellow car", lexicon)
        result = match_phrases(q, c, figure_rules)
        mopped = [r for r in result.rows if r.comparison == "mod[] ?"]
        assert len(mopped) == 1
        assert mopped[0].score == pytest.approx(0.3)
        assert mopped[0].caption_pos is None

    def test_query_side_negation_cancels_too(self, lexicon, figure_rules):
        q = analyze("car which is not yellow", lexicon)
        c = analyze("yellow car", lexicon)
        result = match_phrases(q, c, figure_rules)
        yellow_rows = [
            r for r in result.rows
            if r.query_pos is not None and q.tokens[r.query_pos].surface == "yellow"
        ]
        assert yellow_rows and yellow_rows[0].score == 0.0


@settings(max_examples=40, deadline=None)
@given(
    t1=st.floats(0, 1), d1=st.floats(0, 1),
    t2=st.floats(0, 1), d2=st.floats(0, 1),
    t3=st.floats(0, 1),
    simval=st.floats(0.01, 1),
    unmatched=st.floats(0, 1),
)
def test_scores_and_overall_stay_in_unit_interval(t1, d1, t2, d2, t3, simval, unmatched):
    from anvil.data import default_lexicon

    lexicon = default_lexicon()
    rules = parse_rules(
        f"g {{ head = head {t1:.4f} => mods {d1:.4f}; }}\n"
        f"mods {{ mod[] = mod[] {t2:.4f} => Done {d2:.4f};"
        f" mod[] ? {t3:.4f} => Done 1.0; }}"
    )
    sim = SimilarityProvider({("yellow", "golden"): simval})
    q = analyze("small yellow car", lexicon)
    c = analyze("golden car", lexicon)
    result = match_phrases(q, c, rules, sim=sim,
                           config=MatchConfig(unmatched_weight=unmatched))
    for row in result.rows:
        assert -1e-12 <= row.score <= 1.0 + 1e-12
        assert -1e-12 <= row.weight <= 1.0 + 1e-12
    assert -1e-12 <= result.overall <= 1.0 + 1e-12
