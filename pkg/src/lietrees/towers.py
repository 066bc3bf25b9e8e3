"""Symbolic tabulation of embedding-tower layer data.

Nothing here evaluates a homotopy group outside the first nontrivial degree:
entries are either exact presentations (first slope) or symbolic descriptors
naming the suspension summand they come from.  Every record carries the word
length at which the (infinite) weak product was truncated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactla import QuotientPresentation
from .freelie import HallWord, lyndon_words, normalized_words
from .groups import GroupModel
from .relations import decorated_context


@dataclass(frozen=True)
class FactorDescriptor:
    """One factor Omega Sigma^{1+l(d-2)} (Omega M^{x l})_+ of a tower layer."""

    word: HallWord
    suspension_degree: int
    base_space: str
    loop_count: int


@dataclass(frozen=True)
class E1Entry:
    n: int  # column index (entry in column -(n+1))
    t: int  # degree
    status: str  # "zero" | "firstSlope" | "symbolic"
    summands: tuple = ()
    exact_group: QuotientPresentation | None = None


@dataclass(frozen=True)
class FirstLayerGroup:
    degree: int
    presentation: QuotientPresentation


@dataclass(frozen=True)
class ConfDecomposition:
    n: int
    d: int
    max_word_len: int
    base_copies: int  # copies of the symbolic (pi_* M) summand
    factors: tuple = ()  # (alphabet size, FactorDescriptor) pairs


def _descriptor(w: HallWord, d: int, loop_count: int) -> FactorDescriptor:
    l = w.length
    return FactorDescriptor(
        word=w,
        suspension_degree=1 + l * (d - 2),
        base_space=f"(Omega M^x{l})_+",
        loop_count=loop_count,
    )


def layer_factors(n: int, d: int, max_word_len: int):
    """One factor per normalized word over {1..n} of length <= max_word_len."""
    words = normalized_words(range(1, n + 1), max_word_len)
    return [_descriptor(w, d, n + 1) for w in words]


def layer_connectivity(n: int, d: int) -> int:
    return n * (d - 3) - 1


def first_layer_group(n: int, d: int, model: GroupModel, max_word_len=None) -> FirstLayerGroup:
    """The first nontrivial homotopy group of the layer, in degree n(d-3)."""
    ctx = decorated_context(n, model, max_word_len=max_word_len)
    return FirstLayerGroup(degree=n * (d - 3), presentation=ctx.presentation())


def e1_entry(n: int, t: int, d: int, model: GroupModel, max_word_len=None) -> E1Entry:
    if t <= n * (d - 2):
        return E1Entry(n, t, "zero")
    # words contributing in degree t satisfy 1 + l(d-2) <= t
    cap = (t - 1) // (d - 2)
    summands = tuple(
        _descriptor(w, d, n + 1) for w in normalized_words(range(1, n + 1), cap)
    )
    if t == 1 + n * (d - 2):
        group = first_layer_group(n, d, model, max_word_len).presentation
        return E1Entry(n, t, "firstSlope", summands, group)
    return E1Entry(n, t, "symbolic", summands)


def e1_page(n_max: int, t_max: int, d: int, model: GroupModel, max_word_len=None):
    return [
        e1_entry(n, t, d, model, max_word_len)
        for n in range(1, n_max + 1)
        for t in range(1, t_max + 1)
    ]


def conf_factors(n: int, d: int, max_word_len: int) -> ConfDecomposition:
    """Configuration-space decomposition: n copies of (pi_* M) plus one
    suspension summand per Hall word (all of them, not only normalized) over
    each alphabet {1..i}, i = 0..n-1."""
    factors = []
    for i in range(n):
        if i == 0:
            continue  # empty alphabet contributes nothing
        for w in lyndon_words(i, max_word_len):
            factors.append((i, _descriptor(w, d, 0)))
    return ConfDecomposition(
        n=n, d=d, max_word_len=max_word_len, base_copies=n, factors=tuple(factors)
    )


__all__ = [
    "ConfDecomposition",
    "E1Entry",
    "FactorDescriptor",
    "FirstLayerGroup",
    "conf_factors",
    "e1_entry",
    "e1_page",
    "first_layer_group",
    "layer_connectivity",
    "layer_factors",
]
