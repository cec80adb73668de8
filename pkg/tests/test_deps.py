import pytest
from hypothesis import given, strategies as st

from anvil import analyze, path_extent, render_structure, resolve_path
from anvil.deps import DependencyStructure, PathExpr, Token
from anvil.errors import UnknownVariable

COMPOUND_LISTING = """\
head = copier
mod[copier]   = document
mod[document] = colour"""

PREP_LISTING = """\
head = copier
prep[copier]   = for
phead[for]     = documents
mod[documents] = colour"""

SIMPLE_LISTING = """\
head = car
mod[car] = yellow"""

RELATIVE_LISTING = """\
head = car
rel[car]   = which
cop[which] = is
vhead[is]  = yellow"""

NEGATED_LISTING = """\
head = car
rel[car]     = which
cop[which]   = is
vhead[is]    = yellow
amod[yellow] = not"""

GOLDEN_LISTINGS = [
    ("colour document copier", COMPOUND_LISTING),
    ("copier for colour documents", PREP_LISTING),
    ("yellow car", SIMPLE_LISTING),
    ("car which is yellow", RELATIVE_LISTING),
    ("car which is not yellow", NEGATED_LISTING),
]


def tokens(*words):
    return tuple(Token(w, w, "noun", i) for i, w in enumerate(words))


class TestResolvePath:
    def test_two_step_path(self, lexicon):
        p = analyze("copier for colour documents", lexicon)
        assert resolve_path(p.structure, PathExpr.parse("phead:prep"), 0) == {3}

    def test_single_link(self, lexicon):
        p = analyze("yellow car", lexicon)
        assert resolve_path(p.structure, PathExpr.parse("mod"), 1) == {0}

    def test_absent_variable_yields_empty_set(self, lexicon):
        p = analyze("yellow car", lexicon)
        assert resolve_path(p.structure, PathExpr.parse("prep"), 1) == set()

    def test_three_step_relative_path(self, lexicon):
        p = analyze("car which is yellow", lexicon)
        assert resolve_path(p.structure, PathExpr.parse("vhead:cop:rel"), 0) == {3}

    def test_unknown_variable_rejected(self):
        with pytest.raises(UnknownVariable):
            PathExpr.parse("nonsense")

    def test_single_name_path_equals_direct_lookup(self, lexicon, sample_records):
        for rec in sample_records[:20]:
            s = analyze(rec["caption"], lexicon).structure
            for name, entries in s.vars.items():
                for anchor in {a for a, _ in entries}:
                    assert resolve_path(s, PathExpr.parse(name), anchor) == set(
                        s.dependents(name, anchor)
                    )

    def test_path_does_not_take_transitive_closure(self):
        # mod chain a <- b <- c: one mod step from a must not reach c
        s = DependencyStructure(
            tokens=tokens("a", "b", "c"),
            heads=frozenset({0}),
            vars={"mod": ((0, 1), (1, 2))},
        )
        assert resolve_path(s, PathExpr.parse("mod"), 0) == {1}

    def test_extent_covers_all_anchors(self):
        s = DependencyStructure(
            tokens=tokens("a", "b", "c", "d"),
            heads=frozenset({0}),
            vars={"mod": ((0, 1), (2, 3))},
        )
        assert path_extent(s, PathExpr.parse("mod")) == {1, 3}


class TestRenderStructure:
    @pytest.mark.parametrize("text,expected", GOLDEN_LISTINGS)
    def test_golden_listings(self, lexicon, text, expected):
        assert render_structure(analyze(text, lexicon).structure) == expected

    def test_single_word(self, lexicon):
        assert render_structure(analyze("copier", lexicon).structure) == "head = copier"

    def test_multiple_heads_in_position_order(self, lexicon):
        rendering = render_structure(analyze("box and album", lexicon).structure)
        assert rendering.splitlines()[:2] == ["head = box", "head = album"]

    def test_nearest_dependent_renders_first(self, lexicon):
        rendering = render_structure(
            analyze("camera on a table with a long zoom lens", lexicon).structure
        )
        lines = [" ".join(line.split()) for line in rendering.splitlines()]
        assert lines.index("prep[camera] = on") < lines.index("prep[camera] = with")
        assert lines.index("mod[lens] = zoom") < lines.index("mod[lens] = long")


@st.composite
def small_structures(draw):
    n = draw(st.integers(min_value=2, max_value=6))
    words = [f"w{i}" for i in range(n)]  # distinct surfaces: rendering is injective
    toks = tuple(Token(w, w, "noun", i) for i, w in enumerate(words))
    heads = frozenset(draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=2)))
    names = draw(st.lists(st.sampled_from(["mod", "prep", "phead"]), max_size=3))
    vars_: dict[str, tuple] = {}
    for name in names:
        anchor = draw(st.integers(0, n - 1))
        dep = draw(st.integers(0, n - 1))
        if anchor == dep:
            continue
        entries = set(vars_.get(name, ())) | {(anchor, dep)}
        vars_[name] = tuple(sorted(entries))
    return DependencyStructure(tokens=toks, heads=heads, vars=vars_)


@given(small_structures(), small_structures())
def test_render_injective_for_distinct_word_structures(a, b):
    if a.tokens == b.tokens and a != b:
        assert render_structure(a) != render_structure(b)
