"""Accessors for the data files shipped inside the package."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .analysis import Lexicon
from .rules import ContextRule, RuleSet, parse_context_rules, parse_rules


def data_text(name: str) -> str:
    return resources.files("anvil").joinpath("data", name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def default_lexicon_text() -> str:
    return data_text("lexicon.tsv")


@lru_cache(maxsize=None)
def default_lexicon() -> Lexicon:
    return Lexicon.from_text(default_lexicon_text())


@lru_cache(maxsize=None)
def default_rules_text() -> str:
    return data_text("rules.mr")


@lru_cache(maxsize=None)
def default_ruleset() -> RuleSet:
    return parse_rules(default_rules_text())


@lru_cache(maxsize=None)
def default_context_rules_text() -> str:
    return data_text("contexts.cr")


def default_context_rules() -> list[ContextRule]:
    return parse_context_rules(default_context_rules_text())


def _load_jsonl(name: str) -> list[dict]:
    return [
        json.loads(line)
        for line in data_text(name).splitlines()
        if line.strip()
    ]


def figure_corpus() -> list[dict]:
    """The five-caption demo corpus used throughout the docs and tests."""
    return _load_jsonl("figure_corpus.jsonl")


def sample_corpus() -> list[dict]:
    """The bundled sample captions (used by the identity suite and eval demo)."""
    return _load_jsonl("samples.jsonl")
