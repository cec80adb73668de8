"""Recursive phrase matching between a query parse and a caption parse.

Matching walks a RuleSet starting from its start group.  Rules in a group
apply in file order and each rule is exhausted before the next runs.  A
structural rule compares the words reached by its two sides (query side
left, caption side right); when both words are unconsumed and similar, they
are consumed, the query word is assigned

    score  = t_factor * similarity
    weight = the current weight (product of d-factors down the invocation
             chain, 1.0 at the start group)

and the rule's continuation group runs anchored at the matched pair with
weight * d_factor.  In the start group the sides are unanchored: `head`
ranges over the head set, a path side over the variable's whole unmatched
extent.  In a continuation group `[]` binds to the anchor pair.

Mopping-up rules (`mod[] ?`) consume a query word without touching the
caption.  Token rules (`'not' = amod[]`) test a structure word against a
literal; they consume that word only, add a zero-weight trace row, and their
Done d-factor becomes an up-score: when the continuation finishes, the
product of up-scores raised inside it multiplies the score of the query word
assigned by the invoking rule.  Up-scores stop at that score-bearing rule;
they do not propagate further.

Query content words no rule consumed are penalized with score 0 at a
configurable weight.  The overall score is sum(s_i * w_i) / sum(w_i) over
rows that carry a query word, or 0 when that denominator is 0.

All inputs are immutable; match_phrases is a pure function and safe to call
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import ParseOutput
from .deps import DependencyStructure, path_extent, resolve_path
from .errors import RuleSetInvalid
from .rules import HEAD, PATH, TOKEN, MatchRule, RuleSet, RuleSide


@dataclass(frozen=True)
class MatchConfig:
    """Knobs outside the rule file.

    unmatched_weight is the weight of the score-0 row given to a query
    content word that no rule consumed.  The shipped default 0.7 penalizes
    absence at modifier depth rather than head depth.
    """

    unmatched_weight: float = 0.7


@dataclass(frozen=True)
class SimilarityProvider:
    """Lemma similarity: 1.0 on equal lemmas, else an optional synonym table.

    Returns None (no match) for unrelated lemmas; table values must lie in
    (0, 1] and are symmetric.
    """

    synonyms: dict[tuple[str, str], float] = field(default_factory=dict)

    def __post_init__(self):
        normalized = {}
        for (a, b), value in self.synonyms.items():
            if not 0.0 < value <= 1.0:
                raise ValueError(f"similarity for {(a, b)} outside (0, 1]: {value}")
            normalized[(a, b) if a <= b else (b, a)] = value
        object.__setattr__(self, "synonyms", normalized)

    def similarity(self, a: str, b: str) -> float | None:
        if a == b:
            return 1.0
        return self.synonyms.get((a, b) if a <= b else (b, a))

    @classmethod
    def from_file(cls, path) -> "SimilarityProvider":
        table: dict[tuple[str, str], float] = {}
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                a, b, value = line.split("\t")
                table[(a, b)] = float(value)
        return cls(table)


@dataclass
class WordMatch:
    """One scored row: a query word, a caption word, or both."""

    query_pos: int | None
    caption_pos: int | None
    score: float
    weight: float
    rule_id: str
    group: str
    comparison: str


@dataclass
class TraceRow:
    query_label: str
    group: str
    comparison: str
    score: float
    weight: float
    note: str = ""


@dataclass
class MatchResult:
    rows: list[WordMatch]
    overall: float
    trace: list[TraceRow]


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0")
    return s + "0" if s.endswith(".") else s


def _fmt_overall(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return s or "0"


class _Matcher:
    def __init__(self, query: ParseOutput, caption: ParseOutput,
                 ruleset: RuleSet, sim: SimilarityProvider, config: MatchConfig):
        self.qs = query.structure
        self.cs = caption.structure
        self.ruleset = ruleset
        self.sim = sim
        self.config = config
        self.q_consumed: set[int] = set()
        self.c_consumed: set[int] = set()
        self.rows: list[WordMatch] = []
        self.trace: list[TraceRow] = []
        self._row_trace: dict[int, int] = {}  # id(row) -> index of its trace row

    def side_candidates(self, side: RuleSide, structure: DependencyStructure,
                        anchor: int | None, consumed: set[int]) -> list[int]:
        if side.kind == HEAD:
            cands = sorted(structure.heads)
        elif side.kind == PATH:
            if anchor is None:
                cands = sorted(path_extent(structure, side.path))
            else:
                cands = sorted(resolve_path(structure, side.path, anchor))
        else:
            return []
        return [p for p in cands if p not in consumed]

    def run(self) -> float:
        return self.apply_group(self.ruleset.start_group, None, None, 1.0)

    def apply_group(self, name: str, q_anchor: int | None,
                    c_anchor: int | None, weight: float) -> float:
        group = self.ruleset.groups.get(name)
        if group is None:
            raise RuleSetInvalid(f"group {name!r} missing at match time")
        up = 1.0
        for rule in group:
            if rule.is_mopping:
                self._apply_mopping(rule, q_anchor, weight)
            elif rule.is_token:
                up *= self._apply_token(rule, q_anchor, c_anchor, weight)
            else:
                self._apply_structural(rule, q_anchor, c_anchor, weight)
        return up

    def _add_row(self, wm: WordMatch, label: str) -> None:
        self.rows.append(wm)
        self.trace.append(TraceRow(label, wm.group, wm.comparison, wm.score, wm.weight))
        self._row_trace[id(wm)] = len(self.trace) - 1

    def _apply_upscore(self, wm: WordMatch, up: float, label: str) -> None:
        if up == 1.0:
            return
        initial = self._row_trace[id(wm)]
        self.trace[initial].note = "initially"
        wm.score *= up
        self.trace.append(
            TraceRow(label, wm.group, wm.comparison, wm.score, wm.weight, "on up-score")
        )

    def _apply_mopping(self, rule: MatchRule, q_anchor: int | None, weight: float) -> None:
        while True:
            cands = self.side_candidates(rule.lhs, self.qs, q_anchor, self.q_consumed)
            if not cands:
                return
            qpos = cands[0]
            self.q_consumed.add(qpos)
            wm = WordMatch(qpos, None, rule.t_factor, weight,
                           f"{rule.group}[{rule.index}]", rule.group, rule.comparison())
            label = self.qs.tokens[qpos].surface
            self._add_row(wm, label)
            if rule.continuation is not None:
                sub = self.apply_group(rule.continuation, qpos, None,
                                       weight * rule.d_factor)
                self._apply_upscore(wm, sub, label)

    def _apply_token(self, rule: MatchRule, q_anchor: int | None,
                     c_anchor: int | None, weight: float) -> float:
        token_on_left = rule.lhs.kind == TOKEN
        path_side = rule.rhs if token_on_left else rule.lhs
        literal = (rule.lhs if token_on_left else rule.rhs).literal
        if token_on_left:
            structure, anchor, consumed = self.cs, c_anchor, self.c_consumed
        else:
            structure, anchor, consumed = self.qs, q_anchor, self.q_consumed
        up = 1.0
        while True:
            cands = [
                p
                for p in self.side_candidates(path_side, structure, anchor, consumed)
                if structure.tokens[p].lemma == literal
            ]
            if not cands:
                return up
            pos = cands[0]
            consumed.add(pos)
            wm = WordMatch(
                query_pos=None if token_on_left else pos,
                caption_pos=pos if token_on_left else None,
                score=rule.t_factor,
                weight=0.0,
                rule_id=f"{rule.group}[{rule.index}]",
                group=rule.group,
                comparison=rule.comparison(),
            )
            label = "(none)" if token_on_left else structure.tokens[pos].surface
            self._add_row(wm, label)
            if rule.continuation is None:
                up *= rule.d_factor
            else:
                # token rules carry no query-word score, so up-scores raised
                # in their continuation pass through to the invoking rule
                up *= self.apply_group(
                    rule.continuation,
                    q_anchor if token_on_left else pos,
                    pos if token_on_left else c_anchor,
                    weight * rule.d_factor,
                )

    def _apply_structural(self, rule: MatchRule, q_anchor: int | None,
                          c_anchor: int | None, weight: float) -> None:
        while True:
            q_cands = self.side_candidates(rule.lhs, self.qs, q_anchor, self.q_consumed)
            c_cands = self.side_candidates(rule.rhs, self.cs, c_anchor, self.c_consumed)
            if not q_cands or not c_cands:
                return
            best: tuple[float, int, int] | None = None
            for qp in q_cands:
                q_lemma = self.qs.tokens[qp].lemma
                for cp in c_cands:
                    s = self.sim.similarity(q_lemma, self.cs.tokens[cp].lemma)
                    if s is not None and (best is None or s > best[0]):
                        best = (s, qp, cp)
            if best is None:
                return
            s_val, qp, cp = best
            self.q_consumed.add(qp)
            self.c_consumed.add(cp)
            wm = WordMatch(qp, cp, rule.t_factor * s_val, weight,
                           f"{rule.group}[{rule.index}]", rule.group, rule.comparison())
            label = self.qs.tokens[qp].surface
            self._add_row(wm, label)
            if rule.continuation is not None:
                sub = self.apply_group(rule.continuation, qp, cp, weight * rule.d_factor)
                self._apply_upscore(wm, sub, label)


def match_phrases(query: ParseOutput, caption: ParseOutput, ruleset: RuleSet,
                  sim: SimilarityProvider | None = None,
                  config: MatchConfig | None = None) -> MatchResult:
    """Score `query` against `caption` under `ruleset`.

    Deterministic: rules run in file order, each exhausted greedily; among
    candidate pairs the highest similarity wins, ties to the lowest
    positions.  Every query and caption word is consumed at most once.
    """
    sim = sim if sim is not None else SimilarityProvider()
    config = config if config is not None else MatchConfig()
    if ruleset.start_group not in ruleset.groups:
        raise RuleSetInvalid(f"start group {ruleset.start_group!r} missing")
    m = _Matcher(query, caption, ruleset, sim, config)
    m.run()

    for pos in query.content_positions():
        if pos not in m.q_consumed:
            wm = WordMatch(pos, None, 0.0, config.unmatched_weight,
                           "-", "-", "(unmatched)")
            m.rows.append(wm)
            m.trace.append(TraceRow(query.tokens[pos].surface, "-", "(unmatched)",
                                    0.0, config.unmatched_weight))

    query_rows = [r for r in m.rows if r.query_pos is not None]
    denominator = sum(r.weight for r in query_rows)
    if denominator == 0:
        overall = 0.0
    else:
        overall = sum(r.score * r.weight for r in query_rows) / denominator
    return MatchResult(rows=m.rows, overall=overall, trace=m.trace)


_TRACE_HEADER = ("Query word", "Rule group", "Comparison", "Score", "Weight")


def render_trace(result: MatchResult) -> str:
    """Tabular text for a match: one line per trace row plus the overall score."""
    table = [_TRACE_HEADER]
    for row in result.trace:
        score = _fmt(row.score) + (f" ({row.note})" if row.note else "")
        table.append((row.query_label, row.group, row.comparison, score, _fmt(row.weight)))
    widths = [max(len(r[i]) for r in table) for i in range(5)]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
        for r in table
    ]
    lines.append(f"overall = {_fmt_overall(result.overall)}")
    return "\n".join(lines)
