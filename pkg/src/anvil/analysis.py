"""Tokenization, tagging, lemmatization text the caption parser.

Captions and queries are almost always noun phrases, so the parser is a
small deterministic cascade over POS sequences rather than a full grammar:

  pass 1  base noun groups     [det] (adj|noun|num|participle)* noun
  pass 2  preposition attachment (prep on the site, phead on the preposition)
  pass 3  relative clauses      "which/that is/are [not] X"
  pass 4  top-level coordination (each conjunct head joins the head set)

Everything is a pure function of its inputs; a Lexicon is read-only after
construction and may be shared freely between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .deps import CONTENT_POS, POS_TAGS, DependencyStructure, Token
from .errors import EmptyInput

MAX_TEXT_LENGTH = 10_000

# Words keep internal hyphens and apostrophes ("old-style", "o'clock");
# every other non-space character is a punctuation token.
_TOKEN_RE = re.compile(r"[^\W_]+(?:[-'][^\W_]+)*|[^\s\w]|_")

_DIGITS_RE = re.compile(r"^\d+([.,]\d+)*$")

PHRASE_CATEGORIES = ("NP", "PP", "AP", "RELC")


@dataclass(frozen=True)
class PhraseNode:
    """A bracketing node over the half-open token range [start, end)."""

    category: str
    start: int
    end: int
    children: tuple["PhraseNode", ...] = ()

    def covers(self, position: int) -> bool:
        return self.start <= position < self.end

    def __len__(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class ParseOutput:
    """Tokens, dependency structure and phrase bracketing for one phrase."""

    tokens: tuple[Token, ...]
    structure: DependencyStructure
    bracketing: tuple[PhraseNode, ...]
    unattached: tuple[int, ...] = ()
    notes: tuple[str, ...] = ()

    def content_positions(self) -> list[int]:
        return [t.position for t in self.tokens if t.is_content]

    def content_lemmas(self) -> list[str]:
        return [t.lemma for t in self.tokens if t.is_content]

    def all_phrases(self) -> list[PhraseNode]:
        out: list[PhraseNode] = []

        def walk(node: PhraseNode) -> None:
            out.append(node)
            for child in node.children:
                walk(child)

        for node in self.bracketing:
            walk(node)
        return out


class Lexicon:
    """surface -> (lemma, pos) table loaded from a TSV file.

    File format: three tab-separated columns (surface, lemma, pos), UTF-8,
    LF line endings, '#' starting a comment line.
    """

    def __init__(self, entries: dict[str, tuple[str, str]]):
        self._entries = dict(entries)

    @classmethod
    def from_text(cls, text: str) -> "Lexicon":
        entries: dict[str, tuple[str, str]] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ValueError(f"lexicon line {lineno}: expected 3 tab-separated columns")
            surface, lemma, pos = (p.strip() for p in parts)
            if pos not in POS_TAGS:
                raise ValueError(f"lexicon line {lineno}: unknown pos {pos!r}")
            entries.setdefault(surface.lower(), (lemma.lower(), pos))
        return cls(entries)

    @classmethod
    def from_file(cls, path) -> "Lexicon":
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    def lookup(self, surface: str) -> tuple[str, str] | None:
        return self._entries.get(surface.lower())

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, surface: str) -> bool:
        return surface.lower() in self._entries

    def __eq__(self, other) -> bool:
        return isinstance(other, Lexicon) and self._entries == other._entries


def tokenize(text: str) -> list[Token]:
    """Split raw text into position-numbered tokens (lemma/pos left empty)."""
    if len(text) > MAX_TEXT_LENGTH:
        raise ValueError(f"text longer than {MAX_TEXT_LENGTH} characters")
    pieces = _TOKEN_RE.findall(text)
    if not pieces:
        raise EmptyInput("empty or whitespace-only text")
    return [Token(surface=p, lemma="", pos="", position=i) for i, p in enumerate(pieces)]


def _strip_plural(word: str) -> str | None:
    if len(word) > 3 and word.endswith("ies"):
        return word[:-3] + "y"
    if len(word) > 3 and word.endswith(("ses", "xes", "zes", "ches", "shes")):
        return word[:-2]
    if len(word) > 2 and word.endswith("s") and not word.endswith("ss"):
        return word[:-1]
    return None


def _verb_stem(word: str, suffix: str, lexicon: Lexicon) -> str:
    stem = word[: -len(suffix)]
    candidates = [stem, stem + "e"]
    if len(stem) >= 3 and stem[-1] == stem[-2]:
        candidates.append(stem[:-1])
    for cand in candidates:
        entry = lexicon.lookup(cand)
        if entry is not None:
            return entry[0]
    return stem


def tag_and_lemmatize(tokens, lexicon: Lexicon) -> tuple[list[Token], list[str]]:
    """Assign exactly one POS and a lemma per token.

    Lexicon lookup first, then suffix heuristics (-s plurals, -ing/-ed
    participles, -ly adverbs, digit strings), then noun as the default.
    Returns the retagged tokens plus notes for words that fell through to
    the default.
    """
    out: list[Token] = []
    notes: list[str] = []
    for tok in tokens:
        surface = tok.surface
        if _TOKEN_RE.fullmatch(surface) and not surface[0].isalnum():
            out.append(Token(surface, surface, "punct", tok.position))
            continue
        low = surface.lower()
        entry = lexicon.lookup(low)
        if entry is not None:
            lemma, pos = entry
        elif _DIGITS_RE.match(low):
            lemma, pos = low, "num"
        elif (stripped := _strip_plural(low)) is not None and (
            base := lexicon.lookup(stripped)
        ) is not None:
            lemma, pos = base[0], "noun"
        elif len(low) > 4 and low.endswith("ing"):
            lemma, pos = _verb_stem(low, "ing", lexicon), "verb"
        elif len(low) > 3 and low.endswith("ed"):
            lemma, pos = _verb_stem(low, "ed", lexicon), "verb"
        elif len(low) > 3 and low.endswith("ly"):
            lemma, pos = low, "adv"
        elif (stripped := _strip_plural(low)) is not None:
            lemma, pos = stripped, "noun"
        else:
            lemma, pos = low, "noun"
            notes.append(f"{surface}: unknown word tagged noun")
        out.append(Token(surface, lemma, pos, tok.position))
    return out, notes


# --- the cascade -----------------------------------------------------------


@dataclass
class _Builder:
    tokens: list[Token]
    heads: list[int] = field(default_factory=list)
    vars: dict[str, list[tuple[int, int]]] = field(default_factory=dict)
    brackets: list[PhraseNode] = field(default_factory=list)

    def link(self, name: str, anchor: int, dependent: int) -> None:
        if anchor == dependent:
            return
        entries = self.vars.setdefault(name, [])
        if (anchor, dependent) not in entries:
            entries.append((anchor, dependent))

    def structure(self) -> DependencyStructure:
        return DependencyStructure(
            tokens=tuple(self.tokens),
            heads=frozenset(self.heads),
            vars={k: tuple(v) for k, v in self.vars.items() if v},
        )


def _np_starts_at(tokens, i) -> bool:
    """Could a base noun group start here?  Verbs qualify only while no
    noun has been read yet (participle premodifiers like "magnifying lens")."""
    n = len(tokens)
    if i >= n:
        return False
    pos = tokens[i].pos
    if pos in ("det", "noun", "num", "adj"):
        return True
    if pos == "adv":
        return i + 1 < n and tokens[i + 1].pos == "adj"
    if pos == "verb":
        # lookahead: a noun must follow before anything that ends the group
        j = i
        while j < n and tokens[j].pos in ("verb", "adj", "num", "adv"):
            j += 1
        return j < n and tokens[j].pos == "noun"
    return False


def _read_np(builder: _Builder, i: int) -> tuple[int, int, int]:
    """Read one base noun group starting at i.

    Returns (head position, start, next index).  Within the group, noun
    premodifiers chain onto the next noun ("colour document copier"), while
    adjective/number/participle premodifiers attach flat to the group head;
    adverbs attach to the following adjective (amod).
    """
    tokens = builder.tokens
    n = len(tokens)
    start = i
    if tokens[i].pos == "det":
        i += 1
    run: list[int] = []
    seen_noun = False
    while i < n:
        pos = tokens[i].pos
        if pos in ("adj", "num", "noun"):
            run.append(i)
            seen_noun = seen_noun or pos == "noun"
            i += 1
        elif pos == "adv" and i + 1 < n and tokens[i + 1].pos == "adj":
            run.append(i)
            i += 1
        elif pos == "verb" and not seen_noun:
            run.append(i)
            i += 1
        else:
            break
    if not run:
        return -1, start, start if i == start else i
    noun_positions = [p for p in run if tokens[p].pos == "noun"]
    if noun_positions:
        head = noun_positions[-1]
    else:
        head = run[-1]  # degraded: no noun in the group
    # push back anything collected after the head
    tail = [p for p in run if p > head]
    end = head + 1
    for p in run:
        if p >= head:
            continue
        pos = tokens[p].pos
        if pos == "noun":
            later_nouns = [q for q in noun_positions if q > p]
            builder.link("mod", later_nouns[0] if later_nouns else head, p)
        elif pos in ("adj", "num", "verb"):
            builder.link("mod", head, p)
        elif pos == "adv":
            nxt = p + 1
            if nxt <= head and tokens[nxt].pos == "adj":
                builder.link("amod", nxt, p)
    builder.brackets.append(PhraseNode("NP", start, end))
    next_i = end if tail else i
    return head, start, next_i


def _read_relative(builder: _Builder, i: int, site: int | None) -> int:
    """Read "which/that is/are [not] X" where X is adjectives or a noun group."""
    tokens = builder.tokens
    n = len(tokens)
    rel = i
    cop = i + 1
    if cop >= n or tokens[cop].pos != "cop":
        return i + 1  # bare relative pronoun: skip it
    j = cop + 1
    advs: list[int] = []
    while j < n and tokens[j].pos == "adv":
        advs.append(j)
        j += 1
    pred: int | None = None
    child: PhraseNode | None = None
    end = j
    if j < n and tokens[j].pos == "adj":
        adjs = []
        while j < n and tokens[j].pos == "adj":
            adjs.append(j)
            j += 1
        pred = adjs[-1]
        for a in adjs[:-1]:
            builder.link("mod", pred, a)
        end = j
        child = PhraseNode("AP", advs[0] if advs else adjs[0], end)
    elif _np_starts_at(tokens, j):
        pred, _, end = _read_np(builder, j)
        child = builder.brackets.pop()  # the object NP nests inside the RELC
    if pred is None:
        return cop + 1
    if site is not None:
        builder.link("rel", site, rel)
        builder.link("cop", rel, cop)
        builder.link("vhead", cop, pred)
        for a in advs:
            builder.link("amod", pred, a)
    children = (child,) if child is not None else ()
    builder.brackets.append(PhraseNode("RELC", rel, end, children))
    return end


def analyze(text: str, lexicon: Lexicon) -> ParseOutput:
    """Parse one caption or query phrase.

    Deterministic and total: input that fits no grammar pattern degrades to
    "last noun is the head, remaining content words unattached" rather than
    failing.
    """
    raw = tokenize(text)
    tokens, notes = tag_and_lemmatize(raw, lexicon)
    if all(t.pos == "punct" for t in tokens):
        raise EmptyInput("no word tokens in text")

    builder = _Builder(tokens=tokens)
    n = len(tokens)
    conjunct_heads: list[int] = []
    pp_anchor_override: list[int] | None = None
    last_np_head: int | None = None
    pending_coord = False
    i = 0

    while i < n:
        tok = tokens[i]
        pos = tok.pos
        if pos == "punct":
            if tok.surface in (",", ";"):
                pending_coord = True
            i += 1
        elif pos == "conj":
            pending_coord = True
            i += 1
        elif pos == "relpron":
            i = _read_relative(builder, i, last_np_head)
            pending_coord = False
        elif pos == "prep":
            prep_idx = i
            if _np_starts_at(tokens, i + 1):
                obj, obj_start, i2 = _read_np(builder, i + 1)
                anchors = pp_anchor_override or conjunct_heads
                if anchors:
                    for a in anchors:
                        builder.link("prep", a, prep_idx)
                    builder.link("phead", prep_idx, obj)
                    np_node = builder.brackets.pop()
                    builder.brackets.append(
                        PhraseNode("PP", prep_idx, np_node.end, (np_node,))
                    )
                    last_np_head = obj
                else:
                    # phrase opens with a preposition: keep the object as a
                    # top-level group and drop the unanchorable link
                    conjunct_heads.append(obj)
                    last_np_head = obj
                pp_anchor_override = None
                i = i2
            else:
                i += 1  # dangling preposition
            pending_coord = False
        elif pos == "verb":
            can_premod = pending_coord or last_np_head is None
            if can_premod and _np_starts_at(tokens, i):
                head, _, i = _read_np(builder, i)
                conjunct_heads.append(head)
                last_np_head = head
                pp_anchor_override = None
                pending_coord = False
            else:
                part = i
                site = last_np_head
                nxt = i + 1
                if site is None:
                    i += 1  # stray participle, left unattached
                    continue
                if nxt < n and tokens[nxt].pos == "prep":
                    builder.link("mod", site, part)
                    pp_anchor_override = [part]
                    i = nxt
                elif _np_starts_at(tokens, nxt):
                    # participle with an object: the participle modifies the
                    # site and also relays to the object like a preposition,
                    # keeping both words reachable for matching
                    obj, _, i = _read_np(builder, nxt)
                    builder.link("mod", site, part)
                    builder.link("prep", site, part)
                    builder.link("phead", part, obj)
                    last_np_head = obj
                    pp_anchor_override = [obj]
                else:
                    builder.link("mod", site, part)
                    i = nxt
                pending_coord = False
        elif _np_starts_at(tokens, i):
            head, _, i = _read_np(builder, i)
            conjunct_heads.append(head)
            last_np_head = head
            pp_anchor_override = None
            pending_coord = False
        else:
            i += 1  # cop without relative, stray adv, "other": skipped

    if not conjunct_heads:
        nouns = [t.position for t in tokens if t.pos == "noun"]
        content = [t.position for t in tokens if t.is_content]
        if nouns:
            conjunct_heads = [nouns[-1]]
        elif content:
            conjunct_heads = [content[-1]]
    builder.heads = conjunct_heads

    structure = builder.structure()
    attached = set(structure.heads) | structure.dependent_positions()
    unattached = tuple(
        t.position for t in tokens if t.is_content and t.position not in attached
    )
    builder.brackets.sort(key=lambda b: (b.start, -(b.end - b.start)))
    return ParseOutput(
        tokens=tuple(tokens),
        structure=structure,
        bracketing=tuple(builder.brackets),
        unattached=unattached,
        notes=tuple(notes),
    )
