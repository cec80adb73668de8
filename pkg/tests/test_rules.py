import pytest

from anvil.deps import PathExpr
from anvil.errors import (
    BadFieldCount,
    FactorOutOfRange,
    RuleSyntaxError,
    UnknownContinuation,
    UnsupportedRuleVariant,
)
from anvil.rules import parse_context_rules, parse_rules


class TestParseRules:
    def test_example_rule_file(self, figure_rules):
        assert figure_rules.start_group == "head_rule"
        assert list(figure_rules.groups) == ["head_rule", "mod_rule"]
        assert len(figure_rules.groups["head_rule"]) == 3
        assert len(figure_rules.groups["mod_rule"]) == 10

    def test_example_file_details(self, figure_rules):
        first = figure_rules.groups["head_rule"][0]
        assert first.comparison() == "head = head"
        assert (first.t_factor, first.d_factor) == (1.0, 0.7)
        assert first.continuation == "mod_rule"
        mop = figure_rules.groups["head_rule"][2]
        assert mop.is_mopping and mop.continuation is None
        token = figure_rules.groups["mod_rule"][8]
        assert token.is_token and token.lhs.literal == "not"
        assert (token.t_factor, token.d_factor) == (0.0, 0.0)

    def test_minimal_file(self):
        rs = parse_rules("g { head = head 1.0 => Done 1.0; }")
        assert rs.start_group == "g"
        assert len(rs.groups["g"]) == 1

    def test_unknown_continuation(self):
        with pytest.raises(UnknownContinuation):
            parse_rules("g { head = head 1.0 => missing 1.0; }")

    def test_factor_out_of_range(self):
        with pytest.raises(FactorOutOfRange):
            parse_rules("g { head = head 1.5 => Done 1.0; }")

    def test_multi_line_rule(self):
        rs = parse_rules(
            "g {\n vhead:cop:rel[]\n     = vhead:cop:rel[] 1.0 => Done 1.0;\n}"
        )
        rule = rs.groups["g"][0]
        assert rule.lhs.path == PathExpr.parse("vhead:cop:rel")

    def test_comments_ignored(self):
        rs = parse_rules("// intro\ng { // inner\n head = head 1.0 => Done 1.0;\n}")
        assert len(rs.groups["g"]) == 1

    def test_unknown_path_variable(self):
        with pytest.raises(RuleSyntaxError):
            parse_rules("g { foo[] = head 1.0 => Done 1.0; }")

    def test_missing_anchor_brackets(self):
        with pytest.raises(RuleSyntaxError):
            parse_rules("g { mod = head 1.0 => Done 1.0; }")

    def test_empty_group_rejected(self):
        with pytest.raises(RuleSyntaxError):
            parse_rules("g { }")

    def test_syntax_error_carries_location(self):
        with pytest.raises(RuleSyntaxError) as err:
            parse_rules("g {\n head == head 1.0 => Done 1.0;\n}")
        assert err.value.line == 2

    @pytest.mark.parametrize("text", [
        "g { !head = head 1.0 => Done 1.0; }",
        "g { head = head < 1.0 => Done 1.0; }",
    ])
    def test_reserved_variants_rejected_loudly(self, text):
        with pytest.raises(UnsupportedRuleVariant):
            parse_rules(text)

    def test_token_literal_lowercased(self):
        rs = parse_rules("g { 'NOT' = amod[] 0.0 => Done 0.0; }")
        assert rs.groups["g"][0].lhs.literal == "not"

    def test_round_trip(self, figure_rules):
        rendered = figure_rules.render()
        assert parse_rules(rendered) == figure_rules

    def test_round_trip_default_rules(self, ruleset):
        assert parse_rules(ruleset.render()) == ruleset


class TestParseContextRules:
    def test_modifier_rule(self):
        rules = parse_context_rules("noun * mod * *")
        assert len(rules) == 1
        rule = rules[0]
        assert (rule.word_pos, rule.var, rule.dep_pos, rule.category) == (
            "noun", "*", "*", "*",
        )
        assert rule.path == PathExpr.parse("mod")

    def test_pp_rule(self):
        rule = parse_context_rules("noun * phead:prep * PP")[0]
        assert rule.path == PathExpr.parse("phead:prep")
        assert rule.category == "PP"

    def test_bad_field_count(self):
        with pytest.raises(BadFieldCount):
            parse_context_rules("noun * mod")

    def test_comments_and_blanks_skipped(self, context_rules):
        assert len(context_rules) == 2

    def test_unknown_pos_rejected(self):
        with pytest.raises(RuleSyntaxError):
            parse_context_rules("gerund * mod * *")

    def test_wildcard_path_rejected(self):
        with pytest.raises(RuleSyntaxError):
            parse_context_rules("noun * * * *")
