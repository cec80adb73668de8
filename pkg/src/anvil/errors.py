"""Exception types shared across the package."""


class AnvilError(Exception):
    """Base class for all anvil errors."""


class EmptyInput(AnvilError):
    """A phrase was empty or whitespace-only."""


class UnknownVariable(AnvilError):
    """A path named a dependency variable outside the fixed inventory."""

    def __init__(self, name: str):
        super().__init__(f"unknown dependency variable: {name!r}")
        self.name = name


class RuleSyntaxError(AnvilError):
    """A rule file failed to parse; carries the offending location."""

    def __init__(self, message: str, line: int, column: int | None = None):
        loc = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{message} ({loc})")
        self.line = line
        self.column = column


class UnsupportedRuleVariant(RuleSyntaxError):
    """Reserved rule syntax (negated tests, word-order tests) was used."""


class UnknownContinuation(AnvilError):
    def __init__(self, name: str):
        super().__init__(f"continuation names undeclared group: {name!r}")
        self.name = name


class FactorOutOfRange(AnvilError):
    """A rule factor was outside [0, 1]."""


class BadFieldCount(AnvilError):
    """A context rule line did not have exactly five fields."""


class RuleSetInvalid(AnvilError):
    """A rule set failed validation at match time (should be caught at parse time)."""


class DuplicateId(AnvilError):
    def __init__(self, record_id: str):
        super().__init__(f"duplicate caption id: {record_id!r}")
        self.record_id = record_id


class EmptyCaption(AnvilError):
    def __init__(self, record_id: str):
        super().__init__(f"caption is empty: id {record_id!r}")
        self.record_id = record_id


class EmptyQuery(AnvilError):
    """The query contained no usable terms."""


class IndexEmpty(AnvilError):
    """Retrieval was attempted against an index with no records."""


class FormatVersionMismatch(AnvilError):
    """An index directory is missing its manifest or has an unsupported version."""


class NoRelevant(AnvilError):
    """A query had no relevant documents in the judgements (skipped, not fatal)."""
