"""Synthetic caption generator for scale and latency tests.

Captions are sampled from the same patterns the parser covers (noun groups,
prepositional attachment, relatives, coordination, participles) with word
lengths spanning 1-22 and a mean close to 9.
"""

from __future__ import annotations

import random

from .vocab import SIMPLE_ADJECTIVES, SIMPLE_NOUNS

_PREPOSITIONS = ("on", "in", "under", "beside", "near", "behind", "above", "with")
_PARTICIPLES = (
    "holding", "carrying", "showing", "standing", "sitting", "leaning",
    "floating", "resting", "hanging", "pointing", "playing", "riding",
    "watching", "facing", "wearing", "pulling", "pushing", "lifting",
)
_DETERMINERS = ("a", "the", "an")


def _det(rng: random.Random, noun_phrase: str) -> str:
    det = rng.choice(_DETERMINERS)
    if det in ("a", "an"):
        det = "an" if noun_phrase[0] in "aeiou" else "a"
    return det


def _np(rng: random.Random, *, with_det: bool) -> str:
    words = []
    for _ in range(rng.choice((0, 1, 1, 2, 2))):
        words.append(rng.choice(SIMPLE_ADJECTIVES))
    if rng.random() < 0.35:
        words.append(rng.choice(SIMPLE_NOUNS))
    words.append(rng.choice(SIMPLE_NOUNS))
    phrase = " ".join(words)
    if with_det and rng.random() < 0.7:
        return f"{_det(rng, phrase)} {phrase}"
    return phrase


def _pp(rng: random.Random) -> str:
    return f"{rng.choice(_PREPOSITIONS)} {_np(rng, with_det=True)}"


def _caption(rng: random.Random) -> str:
    roll = rng.random()
    if roll < 0.03:
        return rng.choice(SIMPLE_NOUNS)
    if roll < 0.10:
        return _np(rng, with_det=False)
    if roll < 0.17:
        return _np(rng, with_det=True)
    if roll < 0.45:
        pps = " ".join(_pp(rng) for _ in range(rng.choice((1, 2, 2, 3))))
        return f"{_np(rng, with_det=True)} {pps}"
    if roll < 0.55:
        neg = "not " if rng.random() < 0.3 else ""
        return (
            f"{_np(rng, with_det=True)} which is {neg}{rng.choice(SIMPLE_ADJECTIVES)}"
        )
    if roll < 0.72:
        conjuncts = [_np(rng, with_det=True) for _ in range(rng.choice((2, 3, 3)))]
        tail = f" {_pp(rng)}" if rng.random() < 0.6 else ""
        return ", ".join(conjuncts[:-1]) + f" and {conjuncts[-1]}{tail}"
    if roll < 0.88:
        tail = f" {_pp(rng)}" if rng.random() < 0.4 else ""
        return (
            f"{_np(rng, with_det=True)} {rng.choice(_PARTICIPLES)}"
            f" {_np(rng, with_det=True)}{tail}"
        )
    return (
        f"{_np(rng, with_det=True)} {rng.choice(_PARTICIPLES)} {_pp(rng)}"
        f" {_pp(rng)}"
    )


def generate_corpus(n: int, seed: int = 0) -> list[dict]:
    """n synthetic caption records with deterministic content for a seed."""
    rng = random.Random(seed)
    return [
        {"id": f"syn{i:05d}", "caption": _caption(rng) + "."}
        for i in range(n)
    ]
