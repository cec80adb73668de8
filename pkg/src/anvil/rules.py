"""Parsers for the two rule languages: match rules (.mr) and context rules (.cr).

Match-rule files look like:

    head_rule
    {
     head = head  1.0 => mod_rule 0.7;
     head = mod[] 0.5 => mod_rule 0.7;
     mod[]  ?     0.3 => Done 1.0;
    }

Groups are named; the first group in the file is the start group.  Each rule
compares a query-side expression (left) with a caption-side expression
(right), carries a term factor and a continuation with a down factor.  A `?`
right-hand side is a mopping-up rule; a quoted 'word' is a token literal.
Whitespace and newlines are insignificant between lexemes, so rules may wrap
across lines; `//` starts a line comment.

Context-rule files hold one rule per non-comment line, five whitespace
separated fields: word POS, variable, path, reached POS, phrase category,
with `*` as a wildcard.
"""

from __future__ import annotations

from dataclasses import dataclass

from .deps import POS_TAGS, VARIABLE_NAMES, PathExpr
from .errors import (
    BadFieldCount,
    FactorOutOfRange,
    RuleSyntaxError,
    UnknownContinuation,
    UnsupportedRuleVariant,
)

DONE = "Done"

HEAD = "head"
PATH = "path"
TOKEN = "token"
WILDCARD = "wildcard"


@dataclass(frozen=True)
class RuleSide:
    """One side of a comparison: the unindexed head, an anchored path,
    a quoted literal, or the mopping-up wildcard."""

    kind: str
    path: PathExpr | None = None
    literal: str | None = None

    def __str__(self) -> str:
        if self.kind == HEAD:
            return "head"
        if self.kind == PATH:
            return f"{self.path}[]"
        if self.kind == TOKEN:
            return f"'{self.literal}'"
        return "?"

    @property
    def is_structural(self) -> bool:
        return self.kind in (HEAD, PATH)


@dataclass(frozen=True)
class MatchRule:
    lhs: RuleSide
    rhs: RuleSide
    t_factor: float
    continuation: str | None  # None means Done
    d_factor: float
    group: str = ""
    index: int = 0

    @property
    def is_mopping(self) -> bool:
        return self.rhs.kind == WILDCARD

    @property
    def is_token(self) -> bool:
        return self.lhs.kind == TOKEN or self.rhs.kind == TOKEN

    def comparison(self) -> str:
        if self.is_mopping:
            return f"{self.lhs} ?"
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class RuleSet:
    groups: dict[str, tuple[MatchRule, ...]]
    start_group: str

    def render(self) -> str:
        chunks = []
        for name, rules in self.groups.items():
            lines = [name, "{"]
            for rule in rules:
                cont = rule.continuation if rule.continuation is not None else DONE
                lines.append(
                    f" {rule.comparison()} {_fmt_factor(rule.t_factor)}"
                    f" => {cont} {_fmt_factor(rule.d_factor)};"
                )
            lines.append("}")
            chunks.append("\n".join(lines))
        return "\n\n".join(chunks) + "\n"


@dataclass(frozen=True)
class ContextRule:
    """Five-field rule: ⟨word POS, variable, path, reached POS, category⟩."""

    word_pos: str
    var: str
    path: PathExpr
    dep_pos: str
    category: str

    def __str__(self) -> str:
        return f"{self.word_pos} {self.var} {self.path} {self.dep_pos} {self.category}"


def _fmt_factor(x: float) -> str:
    s = f"{x:.3f}".rstrip("0")
    return s + "0" if s.endswith(".") else s


# --- match-rule lexer/parser ------------------------------------------------

_SYMBOLS = ("=>", "[]", "{", "}", "=", "?", ";", ":")


@dataclass(frozen=True)
class _Lexeme:
    kind: str  # name | number | quoted | symbol
    text: str
    line: int
    column: int


def _lex(text: str) -> list[_Lexeme]:
    out: list[_Lexeme] = []
    i = 0
    line = 1
    col = 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if text.startswith("//", i):
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in "!<":
            raise UnsupportedRuleVariant(
                f"rule variant marker {ch!r} is reserved and not supported", line, col
            )
        matched = False
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                out.append(_Lexeme("symbol", sym, line, col))
                i += len(sym)
                col += len(sym)
                matched = True
                break
        if matched:
            continue
        if ch == "'":
            j = text.find("'", i + 1)
            if j < 0 or "\n" in text[i:j]:
                raise RuleSyntaxError("unterminated token literal", line, col)
            out.append(_Lexeme("quoted", text[i + 1 : j], line, col))
            col += j + 1 - i
            i = j + 1
            continue
        if ch.isdigit() or ch == ".":
            j = i
            while j < n and (text[j].isdigit() or text[j] == "."):
                j += 1
            out.append(_Lexeme("number", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(_Lexeme("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise RuleSyntaxError(f"unexpected character {ch!r}", line, col)
    return out


class _Parser:
    def __init__(self, lexemes: list[_Lexeme]):
        self.lexemes = lexemes
        self.pos = 0

    def peek(self) -> _Lexeme | None:
        return self.lexemes[self.pos] if self.pos < len(self.lexemes) else None

    def take(self, kind: str | None = None, text: str | None = None) -> _Lexeme:
        lx = self.peek()
        if lx is None:
            last = self.lexemes[-1] if self.lexemes else None
            raise RuleSyntaxError(
                "unexpected end of file",
                last.line if last else 1,
                last.column if last else 1,
            )
        if kind is not None and lx.kind != kind:
            raise RuleSyntaxError(f"expected {kind}, found {lx.text!r}", lx.line, lx.column)
        if text is not None and lx.text != text:
            raise RuleSyntaxError(f"expected {text!r}, found {lx.text!r}", lx.line, lx.column)
        self.pos += 1
        return lx

    def at_symbol(self, text: str) -> bool:
        lx = self.peek()
        return lx is not None and lx.kind == "symbol" and lx.text == text

    def parse_side(self) -> RuleSide:
        lx = self.peek()
        if lx is None:
            raise RuleSyntaxError("expected a rule side", 1, 1)
        if lx.kind == "quoted":
            self.take()
            word = lx.text.strip().lower()
            if not word:
                raise RuleSyntaxError("empty token literal", lx.line, lx.column)
            return RuleSide(TOKEN, literal=word)
        if lx.kind == "name":
            names = [self.take("name").text]
            while self.at_symbol(":"):
                self.take()
                names.append(self.take("name").text)
            if self.at_symbol("[]"):
                self.take()
                try:
                    return RuleSide(PATH, path=PathExpr(tuple(names)))
                except Exception as exc:
                    raise RuleSyntaxError(str(exc), lx.line, lx.column) from exc
            if names == ["head"]:
                return RuleSide(HEAD)
            raise RuleSyntaxError(
                f"path side {':'.join(names)!r} must end with []", lx.line, lx.column
            )
        raise RuleSyntaxError(f"expected a rule side, found {lx.text!r}", lx.line, lx.column)

    def parse_factor(self) -> float:
        lx = self.take("number")
        try:
            value = float(lx.text)
        except ValueError:
            raise RuleSyntaxError(f"bad number {lx.text!r}", lx.line, lx.column) from None
        if not 0.0 <= value <= 1.0:
            raise FactorOutOfRange(f"factor {lx.text} outside [0, 1] (line {lx.line})")
        return value

    def parse_rule(self, group: str, index: int) -> MatchRule:
        lhs = self.parse_side()
        if self.at_symbol("?"):
            self.take()
            rhs = RuleSide(WILDCARD)
        else:
            self.take("symbol", "=")
            rhs = self.parse_side()
        t_factor = self.parse_factor()
        self.take("symbol", "=>")
        cont_lx = self.take("name")
        continuation = None if cont_lx.text == DONE else cont_lx.text
        d_factor = self.parse_factor()
        self.take("symbol", ";")
        if lhs.kind == WILDCARD:
            raise RuleSyntaxError("wildcard may only be the right-hand side",
                                  cont_lx.line, cont_lx.column)
        if not lhs.is_structural and not rhs.is_structural and rhs.kind != WILDCARD:
            raise RuleSyntaxError("a rule needs a structural side (head or path)",
                                  cont_lx.line, cont_lx.column)
        if lhs.kind == TOKEN and rhs.kind == WILDCARD:
            raise RuleSyntaxError("a mopping-up rule needs a path or head side",
                                  cont_lx.line, cont_lx.column)
        return MatchRule(lhs, rhs, t_factor, continuation, d_factor, group, index)


def parse_rules(text: str) -> RuleSet:
    """Parse a match-rule file into a validated RuleSet.

    The first group is the start group; every continuation must name a
    declared group.
    """
    parser = _Parser(_lex(text))
    groups: dict[str, list[MatchRule]] = {}
    order: list[str] = []
    while parser.peek() is not None:
        name_lx = parser.take("name")
        name = name_lx.text
        if name in groups:
            raise RuleSyntaxError(f"duplicate group {name!r}", name_lx.line, name_lx.column)
        parser.take("symbol", "{")
        rules: list[MatchRule] = []
        while not parser.at_symbol("}"):
            rules.append(parser.parse_rule(name, len(rules)))
        close = parser.take("symbol", "}")
        if not rules:
            raise RuleSyntaxError(f"group {name!r} is empty", close.line, close.column)
        groups[name] = rules
        order.append(name)
    if not groups:
        raise RuleSyntaxError("no rule groups in file", 1, 1)
    for name in order:
        for rule in groups[name]:
            if rule.continuation is not None and rule.continuation not in groups:
                raise UnknownContinuation(rule.continuation)
    return RuleSet(
        groups={name: tuple(groups[name]) for name in order},
        start_group=order[0],
    )


def parse_rules_file(path) -> RuleSet:
    with open(path, encoding="utf-8") as fh:
        return parse_rules(fh.read())


# --- context rules ----------------------------------------------------------

_CATEGORIES = ("NP", "PP", "AP", "RELC", "*")


def parse_context_rules(text: str) -> list[ContextRule]:
    """Parse a context-rule file: five whitespace-separated fields per line."""
    rules: list[ContextRule] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("//") or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 5:
            raise BadFieldCount(
                f"line {lineno}: expected 5 fields, found {len(fields)}"
            )
        rt, rv, rp, ru, rc = fields
        if rt != "*" and rt not in POS_TAGS:
            raise RuleSyntaxError(f"unknown POS {rt!r}", lineno)
        if rv not in ("*", "head") and rv not in VARIABLE_NAMES:
            raise RuleSyntaxError(f"unknown variable {rv!r}", lineno)
        if rp == "*":
            raise RuleSyntaxError("the path field may not be a wildcard", lineno)
        try:
            path = PathExpr.parse(rp)
        except Exception as exc:
            raise RuleSyntaxError(str(exc), lineno) from exc
        if ru != "*" and ru not in POS_TAGS:
            raise RuleSyntaxError(f"unknown POS {ru!r}", lineno)
        if rc not in _CATEGORIES:
            raise RuleSyntaxError(f"unknown phrase category {rc!r}", lineno)
        rules.append(ContextRule(rt, rv, path, ru, rc))
    return rules


def parse_context_rules_file(path) -> list[ContextRule]:
    with open(path, encoding="utf-8") as fh:
        return parse_context_rules(fh.read())
