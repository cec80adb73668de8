import os

import pytest

from anvil.data import (
    default_context_rules,
    default_lexicon,
    default_ruleset,
    figure_corpus,
    sample_corpus,
)
from anvil.rules import parse_rules_file

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def ruleset():
    return default_ruleset()


@pytest.fixture(scope="session")
def figure_rules():
    """The two-group example rule set (head_rule + mod_rule)."""
    return parse_rules_file(data_path("figure_rules.mr"))


@pytest.fixture(scope="session")
def context_rules():
    return default_context_rules()


@pytest.fixture(scope="session")
def figure_records():
    return figure_corpus()


@pytest.fixture(scope="session")
def sample_records():
    return sample_corpus()
