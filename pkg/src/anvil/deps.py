"""Dependency structures as indexed variables, path evaluation and rendering.

A parsed phrase is a set of head words plus labelled word-to-word links.
Links are grouped by variable name and keyed on token position (not surface
form), so repeated words stay unambiguous; rendering maps positions back to
surfaces.  All types here are immutable value objects and safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownVariable

# Fixed inventory of dependency variables.  `head` is the unindexed variable
# and is stored separately on the structure.
VARIABLE_NAMES = ("mod", "prep", "phead", "rel", "cop", "vhead", "amod")

POS_TAGS = (
    "noun", "verb", "adj", "adv", "det", "prep", "relpron",
    "cop", "conj", "num", "punct", "other",
)

# POS categories that carry meaning for matching and indexing.
CONTENT_POS = frozenset({"noun", "adj", "num", "verb", "adv"})


@dataclass(frozen=True)
class Token:
    """One surface token; `position` is its 0-based index in the phrase."""

    surface: str
    lemma: str
    pos: str
    position: int

    @property
    def is_content(self) -> bool:
        return self.pos in CONTENT_POS


@dataclass(frozen=True)
class PathExpr:
    """A chain of variable names, written outermost-first (`phead:prep`).

    Evaluation applies the names right-to-left from the anchor: `phead:prep`
    follows `prep` from the anchor, then `phead` from each word reached.
    """

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise UnknownVariable("")
        for name in self.names:
            if name not in VARIABLE_NAMES:
                raise UnknownVariable(name)

    @classmethod
    def parse(cls, text: str) -> "PathExpr":
        return cls(tuple(text.split(":")))

    def __str__(self) -> str:
        return ":".join(self.names)


@dataclass(frozen=True)
class DependencyStructure:
    """Indexed-variable form of a parse.

    `heads` holds the positions of words that modify nothing else (usually
    one, more under coordination).  `vars` maps a variable name to its
    (anchor position, dependent position) entries; several entries may share
    an anchor.
    """

    tokens: tuple[Token, ...]
    heads: frozenset[int]
    vars: dict[str, tuple[tuple[int, int], ...]] = field(default_factory=dict)

    def entries(self, name: str) -> tuple[tuple[int, int], ...]:
        if name not in VARIABLE_NAMES:
            raise UnknownVariable(name)
        return self.vars.get(name, ())

    def dependents(self, name: str, anchor: int) -> list[int]:
        return sorted(d for a, d in self.entries(name) if a == anchor)

    def all_dependents(self, name: str) -> list[int]:
        return sorted({d for _, d in self.entries(name)})

    def dependent_positions(self) -> set[int]:
        return {d for entries in self.vars.values() for _, d in entries}

    def surface(self, position: int) -> str:
        return self.tokens[position].surface


def resolve_path(structure: DependencyStructure, path: PathExpr, anchor: int) -> set[int]:
    """Positions reached by following `path` from `anchor`.

    Component names apply right-to-left; a missing link simply yields the
    empty set.  Only the named variables are consulted (no transitive
    closure across other variables).
    """
    positions = {anchor}
    for name in reversed(path.names):
        entries = structure.entries(name)
        positions = {d for a, d in entries if a in positions}
        if not positions:
            break
    return positions


def path_extent(structure: DependencyStructure, path: PathExpr) -> set[int]:
    """Positions reached by `path` from any anchor (the unindexed extent).

    Used by start-group rules, where a path side carries no anchor and
    ranges over the whole variable.
    """
    positions: set[int] | None = None
    for name in reversed(path.names):
        entries = structure.entries(name)
        if positions is None:
            positions = {d for _, d in entries}
        else:
            positions = {d for a, d in entries if a in positions}
        if not positions:
            break
    return positions or set()


def render_structure(structure: DependencyStructure) -> str:
    """Canonical text form of a structure.

    One `head = <surface>` line per head in position order, then one line
    per entry, traversed depth-first outward from each head with the
    nearest dependent first; `=` signs of entry lines are column-aligned.
    Output uses LF line endings and no indent.
    """
    lines = [f"head = {structure.surface(h)}" for h in sorted(structure.heads)]

    all_entries = [
        (name, a, d)
        for name in VARIABLE_NAMES
        for a, d in structure.vars.get(name, ())
    ]
    emitted: set[tuple[str, int, int]] = set()
    ordered: list[tuple[str, int, int]] = []

    def visit(anchor: int) -> None:
        outgoing = sorted(
            (e for e in all_entries if e[1] == anchor and e not in emitted),
            key=lambda e: (abs(e[2] - e[1]), e[2], e[0]),
        )
        for entry in outgoing:
            if entry in emitted:
                continue
            emitted.add(entry)
            ordered.append(entry)
            visit(entry[2])

    for head in sorted(structure.heads):
        visit(head)
    # Entries unreachable from any head (defensive; the parser does not
    # produce them) are appended deterministically.
    for entry in sorted(set(all_entries) - emitted, key=lambda e: (e[1], e[2], e[0])):
        emitted.add(entry)
        ordered.append(entry)
        visit(entry[2])

    if ordered:
        lhs = [f"{name}[{structure.surface(a)}]" for name, a, _ in ordered]
        width = max(len(s) for s in lhs)
        for (name, a, d), left in zip(ordered, lhs):
            lines.append(f"{left:<{width}} = {structure.surface(d)}")
    return "\n".join(lines)
