"""Context extraction: unmatched caption fragments attached to matched words.

Starting from the caption words that matched the query (T) and the words
that did not (U), each rule ⟨word POS, variable, path, reached POS,
category⟩ licenses a pair: a matched word t with the right POS stored in
the right variable, connected by the path to an unmatched word u with the
right POS.  The emitted context is the smallest bracketing phrase of the
rule's category around u (the bare word when the category is `*`); u is
then spent.  Iteration is deterministic: t and u by ascending position,
rules in file order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import ParseOutput, PhraseNode
from .matcher import MatchResult
from .deps import resolve_path
from .rules import ContextRule

NONE_CONTEXT = "{none}"


@dataclass(frozen=True)
class ContextPair:
    anchor_pos: int
    anchor_surface: str
    anchor_lemma: str
    start: int
    end: int
    text: str
    category: str  # phrase category, or "word" for a bare modifier
    rule: ContextRule


@dataclass(frozen=True)
class ContextGroup:
    anchor_lemma: str
    context_text: str
    caption_ids: tuple[str, ...]

    @property
    def count(self) -> int:
        return len(self.caption_ids)


def _in_var(structure, position: int, var: str) -> bool:
    if var == "*":
        return True
    if var == "head":
        return position in structure.heads
    return any(d == position for _, d in structure.entries(var))


def _has_pos(parse: ParseOutput, position: int, pos: str) -> bool:
    return pos == "*" or parse.tokens[position].pos == pos


def _smallest_phrase(parse: ParseOutput, category: str, position: int,
                     blocked: set[int]) -> PhraseNode | None:
    """Smallest bracketing node of `category` containing `position` whose
    span avoids every blocked (consumed) token."""
    best: PhraseNode | None = None
    for node in parse.all_phrases():
        if node.category != category or not node.covers(position):
            continue
        if any(b in blocked for b in range(node.start, node.end)):
            continue
        if best is None or len(node) < len(best) or (
            len(node) == len(best) and node.start < best.start
        ):
            best = node
    return best


def extract_contexts(match: MatchResult, caption: ParseOutput,
                     rules: list[ContextRule]) -> list[ContextPair]:
    """Extract ⟨matched word, context phrase⟩ pairs from one caption."""
    structure = caption.structure
    consumed = {r.caption_pos for r in match.rows if r.caption_pos is not None}
    matched = sorted(
        r.caption_pos
        for r in match.rows
        if r.caption_pos is not None and r.query_pos is not None
    )
    available = [t.position for t in caption.tokens if t.position not in consumed]

    pairs: list[ContextPair] = []
    for t in matched:
        for u in list(available):
            if u not in available:
                continue
            for rule in rules:
                if not _has_pos(caption, t, rule.word_pos):
                    continue
                if not _in_var(structure, t, rule.var):
                    continue
                if not _has_pos(caption, u, rule.dep_pos):
                    continue
                if u not in resolve_path(structure, rule.path, t):
                    continue
                if rule.category == "*":
                    start, end = u, u + 1
                    text = caption.tokens[u].surface
                    category = "word"
                else:
                    node = _smallest_phrase(caption, rule.category, u, consumed)
                    if node is None:
                        continue
                    start, end = node.start, node.end
                    text = " ".join(
                        caption.tokens[p].surface for p in range(start, end)
                    )
                    category = node.category
                pairs.append(ContextPair(
                    anchor_pos=t,
                    anchor_surface=caption.tokens[t].surface,
                    anchor_lemma=caption.tokens[t].lemma,
                    start=start,
                    end=end,
                    text=text,
                    category=category,
                    rule=rule,
                ))
                available.remove(u)
                break
    return pairs


def group_by_context(
    results: list[tuple[str, list[str], list[ContextPair]]],
) -> list[ContextGroup]:
    """Group captions by (anchor lemma, lowercased context text).

    `results` holds (caption id, matched anchor lemmas, extracted pairs) per
    caption.  A caption whose anchor produced no pairs joins that anchor's
    "{none}" group.  Groups sort by descending count, then anchor, then text.
    """
    members: dict[tuple[str, str], list[str]] = {}

    def add(anchor: str, text: str, caption_id: str) -> None:
        ids = members.setdefault((anchor, text), [])
        if caption_id not in ids:
            ids.append(caption_id)

    for caption_id, anchors, pairs in results:
        with_pairs = {p.anchor_lemma for p in pairs}
        for anchor in anchors:
            if anchor not in with_pairs:
                add(anchor, NONE_CONTEXT, caption_id)
        for pair in pairs:
            add(pair.anchor_lemma, pair.text.lower(), caption_id)

    groups = [
        ContextGroup(anchor, text, tuple(sorted(ids)))
        for (anchor, text), ids in members.items()
    ]
    groups.sort(key=lambda g: (-g.count, g.anchor_lemma, g.context_text))
    return groups
