"""Combinatorial grope and forest encodings and their underlying-tree maps.

A grope encoding is purely the data the invariant factors through: a tree over
{1..n}, a sign for every leaf, and a group-element decoration for every leaf.
``ut`` collapses the signs into one global sign; ``forest_ut`` sums over a
forest, with cancellation.  ``realize_forest`` inverts forest_ut on any target
sum, witnessing surjectivity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ModelMismatch
from .expr import parse_expr
from .groups import GroupModel, model_from_json
from .relations import decorated_context, jacobi_context, lie_context
from .trees import (
    DecoratedTree,
    Node,
    SignedDecoratedTree,
    TreeSum,
    decorate,
    leaf_set,
)


@dataclass(frozen=True)
class GropeEncoding:
    tree: Node
    signs: tuple  # ((label, +-1), ...) sorted by label, total on the leaf set
    decorations: tuple  # ((label, element), ...) sorted by label, total
    model: GroupModel

    def __post_init__(self):
        labels = leaf_set(self.tree)
        if {lab for lab, _ in self.signs} != labels:
            raise ModelMismatch("signs must be total on the leaf set")
        if {lab for lab, _ in self.decorations} != labels:
            raise ModelMismatch("decorations must be total on the leaf set")
        if any(s not in (1, -1) for _, s in self.signs):
            raise ModelMismatch("leaf signs must be +1 or -1")

    @property
    def n(self):
        return len(self.signs)


def grope(tree: Node, signs, decorations, model: GroupModel) -> GropeEncoding:
    return GropeEncoding(
        tree, tuple(sorted(signs.items())), tuple(sorted(decorations.items())), model
    )


@dataclass(frozen=True)
class ForestEncoding:
    gropes: tuple  # nonempty, shared label set and model

    def __post_init__(self):
        if not self.gropes:
            raise ModelMismatch("a forest needs at least one grope")
        first = self.gropes[0]
        for g in self.gropes[1:]:
            if leaf_set(g.tree) != leaf_set(first.tree) or g.model != first.model:
                raise ModelMismatch("forest constituents disagree on labels or model")

    def __add__(self, other: "ForestEncoding") -> "ForestEncoding":
        return ForestEncoding(self.gropes + other.gropes)


def ut(g: GropeEncoding) -> SignedDecoratedTree:
    """The underlying signed decorated tree: sign = product of the leaf signs."""
    sign = 1
    for _, s in g.signs:
        sign *= s
    return SignedDecoratedTree(sign, decorate(g.tree, dict(g.decorations), g.model))


def forest_ut(f: ForestEncoding) -> TreeSum:
    acc = TreeSum()
    for g in f.gropes:
        sdt = ut(g)
        acc = acc + TreeSum({sdt.tree: sdt.sign})
    return acc


def realize_forest(target: TreeSum) -> ForestEncoding:
    """A forest whose forest_ut equals the given decorated sum (surjectivity
    witness: one grope per unit of each coefficient)."""
    if target.is_zero():
        raise ModelMismatch("cannot realize the zero sum as a nonempty forest witness")
    out = []
    for term, coeff in target.sorted_terms():
        if not isinstance(term, DecoratedTree):
            raise ModelMismatch("realize_forest expects a decorated sum")
        labels = sorted(leaf_set(term.tree))
        base_signs = {lab: 1 for lab in labels}
        # carry the coefficient's sign on the first leaf of each copy
        base_signs[labels[0]] = 1 if coeff > 0 else -1
        for _ in range(abs(coeff)):
            out.append(grope(term.tree, base_signs, term.decoration_map(), term.model))
    return ForestEncoding(tuple(out))


def class_in_lie(s: TreeSum, model: GroupModel | None = None, max_word_len=None):
    """Coordinates of a (decorated) sum in the antisymmetry/exchange quotient."""
    labels = s.label_set
    if labels is None:
        raise ModelMismatch("cannot size the quotient of an empty sum")
    n = len(labels)
    if s.model is not None:
        ctx = decorated_context(n, s.model, max_word_len=max_word_len)
    else:
        ctx = lie_context(n)
    return ctx.coordinates(s)


def project_at(s: TreeSum, n: int | None = None):
    """Coordinates of an undecorated sum in the loop-resolution quotient."""
    if s.model is not None:
        raise ModelMismatch("the loop-resolution quotient takes undecorated sums")
    if n is None:
        labels = s.label_set
        if labels is None:
            raise ModelMismatch("specify n to project the zero sum")
        n = len(labels)
    return jacobi_context(n).coordinates(s)


# ---------------------------------------------------------------------------
# JSON interchange

def forest_from_json(obj) -> ForestEncoding:
    """Format: {"n":…, "group":…, "gropes":[{"tree":"[1,2]","signs":[1,-1],
    "decorations":["","a"]}, …]}; lists are ordered by leaf label, empty
    decoration string = identity."""
    model = model_from_json(obj["group"]) if "group" in obj else None
    if model is None:
        from .groups import TRIVIAL_GROUP

        model = TRIVIAL_GROUP
    gropes = []
    for rec in obj["gropes"]:
        s = parse_expr(rec["tree"])
        (tree, coeff), = s.terms.items()
        if coeff != 1 or isinstance(tree, DecoratedTree):
            raise ModelMismatch("grope tree must be a single bare tree")
        labels = sorted(leaf_set(tree))
        signs = dict(zip(labels, rec["signs"]))
        decorations = {
            lab: model.parse_element(word) for lab, word in zip(labels, rec["decorations"])
        }
        if len(rec["signs"]) != len(labels) or len(rec["decorations"]) != len(labels):
            raise ModelMismatch("signs/decorations must list one entry per leaf")
        gropes.append(grope(tree, signs, decorations, model))
    return ForestEncoding(tuple(gropes))


def load_forest(path) -> ForestEncoding:
    with open(path) as fh:
        return forest_from_json(json.load(fh))


def forest_to_json(f: ForestEncoding):
    from .trees import tree_key

    model = f.gropes[0].model
    recs = []
    for g in f.gropes:
        recs.append(
            {
                "tree": tree_key(g.tree),
                "signs": [s for _, s in g.signs],
                "decorations": [
                    "" if e == model.identity() else model.format_element(e)
                    for _, e in g.decorations
                ],
            }
        )
    return {"n": f.gropes[0].n, "gropes": recs}


__all__ = [
    "ForestEncoding",
    "GropeEncoding",
    "class_in_lie",
    "forest_from_json",
    "forest_to_json",
    "forest_ut",
    "grope",
    "load_forest",
    "project_at",
    "realize_forest",
    "ut",
]
