"""anvil: caption retrieval with dependency phrase matching and contexts."""

from .analysis import Lexicon, ParseOutput, PhraseNode, analyze, tag_and_lemmatize, tokenize
from .contexts import ContextGroup, ContextPair, extract_contexts, group_by_context
from .deps import (
    DependencyStructure,
    PathExpr,
    Token,
    path_extent,
    render_structure,
    resolve_path,
)
from .errors import AnvilError
from .evaluation import EvalReport, interpolated_pr, metrics, run_eval
from .index import (
    CaptionRecord,
    Index,
    QueryResult,
    RetrievalParams,
    build_index,
    extend_index,
    load_index,
    retrieve,
    save_index,
    simple_match,
)
from .matcher import (
    MatchConfig,
    MatchResult,
    SimilarityProvider,
    WordMatch,
    match_phrases,
    render_trace,
)
from .rules import ContextRule, MatchRule, RuleSet, parse_context_rules, parse_rules

__version__ = "0.1.0"

__all__ = [
    "AnvilError",
    "CaptionRecord",
    "ContextGroup",
    "ContextPair",
    "ContextRule",
    "DependencyStructure",
    "EvalReport",
    "Index",
    "Lexicon",
    "MatchConfig",
    "MatchResult",
    "MatchRule",
    "ParseOutput",
    "PathExpr",
    "PhraseNode",
    "QueryResult",
    "RetrievalParams",
    "RuleSet",
    "SimilarityProvider",
    "Token",
    "WordMatch",
    "analyze",
    "build_index",
    "extend_index",
    "extract_contexts",
    "group_by_context",
    "interpolated_pr",
    "load_index",
    "match_phrases",
    "metrics",
    "parse_context_rules",
    "parse_rules",
    "path_extent",
    "render_structure",
    "render_trace",
    "resolve_path",
    "retrieve",
    "run_eval",
    "save_index",
    "simple_match",
    "tag_and_lemmatize",
    "tokenize",
]
