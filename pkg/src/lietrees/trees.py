"""Rooted planar binary trees with labelled leaves, decorations and formal sums.

A tree node is either a ``Leaf`` carrying a positive integer label or a
``Graft`` of two subtrees.  The left/right order of children is genuine data:
it encodes the vertex orientation, and swapping children gives a *different*
tree (antisymmetry is a relation imposed later, not an identification).

The same node types double as bracketed Lie words (where letters may repeat);
label distinctness is enforced only by the tree-level constructors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DuplicateLeaf, EmptyLabelSet, LabelClash, ModelMismatch
from .groups import GroupModel


@dataclass(frozen=True)
class Leaf:
    label: int


@dataclass(frozen=True)
class Graft:
    left: "Node"
    right: "Node"


Node = Union[Leaf, Graft]


def leaves(t: Node):
    """Leaf labels in planar (left-to-right) order; repeats preserved."""
    if isinstance(t, Leaf):
        return (t.label,)
    return leaves(t.left) + leaves(t.right)


def leaf_set(t: Node):
    labs = leaves(t)
    s = frozenset(labs)
    if len(s) != len(labs):
        raise DuplicateLeaf(f"repeated leaf label in {tree_key(t)}")
    return s


def tree_key(t: Node) -> str:
    """Canonical text form; doubles as the total-order key for sums."""
    if isinstance(t, Leaf):
        return str(t.label)
    return f"[{tree_key(t.left)},{tree_key(t.right)}]"


def canonicalize_tree(t: Node) -> Node:
    """Validate leaf distinctness; nodes are already canonical values."""
    leaf_set(t)
    return t


def graft(t1: Node, t2: Node) -> Node:
    s1, s2 = leaf_set(t1), leaf_set(t2)
    if s1 & s2:
        raise LabelClash(f"leaf sets overlap on {sorted(s1 & s2)}")
    return Graft(t1, t2)


def internal_nodes(t: Node):
    """Paths (tuples of 0/1 child steps from the root) to each Graft node."""
    out = []

    def walk(node, path):
        if isinstance(node, Graft):
            out.append(path)
            walk(node.left, path + (0,))
            walk(node.right, path + (1,))

    walk(t, ())
    return out


def subtree_at(t: Node, path):
    for step in path:
        t = t.left if step == 0 else t.right
    return t


def replace_at(t: Node, path, new: Node) -> Node:
    if not path:
        return new
    if path[0] == 0:
        return Graft(replace_at(t.left, path[1:], new), t.right)
    return Graft(t.left, replace_at(t.right, path[1:], new))


def swap_at(t: Node, path) -> Node:
    sub = subtree_at(t, path)
    return replace_at(t, path, Graft(sub.right, sub.left))


def enumerate_trees(labels):
    """All planar rooted binary trees over the given label set.

    Deterministic: sorted lexicographically by the canonical text form.
    There are n! * Catalan(n-1) of them.
    """
    labels = sorted(set(labels))
    if not labels:
        raise EmptyLabelSet("need at least one leaf label")
    return sorted(_trees_over(frozenset(labels)), key=tree_key)


def _trees_over(labels: frozenset):
    if len(labels) == 1:
        return [Leaf(next(iter(labels)))]
    out = []
    items = sorted(labels)
    anchor = items[0]
    for mask in range(0, 1 << (len(items) - 1)):
        rest = [x for i, x in enumerate(items[1:]) if mask >> i & 1]
        s1 = frozenset([anchor] + rest)
        s2 = labels - s1
        if not s2:
            continue
        for a in _trees_over(s1):
            for b in _trees_over(s2):
                out.append(Graft(a, b))
                out.append(Graft(b, a))
    return out


def left_normed_tree(sigma, last) -> Node:
    """The basis tree [x_{sigma_1},[...,[x_{sigma_{n-1}}, x_last]...]]."""
    t: Node = Leaf(last)
    for lab in reversed(sigma):
        t = Graft(Leaf(lab), t)
    return t


def is_left_normed(t: Node) -> bool:
    labs = leaves(t)
    last = max(labs)
    while isinstance(t, Graft):
        if not isinstance(t.left, Leaf):
            return False
        t = t.right
    return t.label == last


# ---------------------------------------------------------------------------
# decorated trees


@dataclass(frozen=True)
class DecoratedTree:
    tree: Node
    decoration: tuple  # ((label, element), ...) sorted by label
    model: GroupModel

    def decoration_map(self):
        return dict(self.decoration)

    def key(self) -> str:
        dec = {lab: el for lab, el in self.decoration}
        ident = self.model.identity()

        def fmt(node):
            if isinstance(node, Leaf):
                el = dec[node.label]
                if el == ident:
                    return str(node.label)
                return f"{node.label}{{{self.model.format_element(el)}}}"
            return f"[{fmt(node.left)},{fmt(node.right)}]"

        return fmt(self.tree)


def decorate(tree: Node, mapping, model: GroupModel) -> DecoratedTree:
    labs = leaf_set(tree)
    if set(mapping) != set(labs):
        raise ModelMismatch("decoration must be total on the leaf set and nowhere else")
    dec = tuple(sorted(mapping.items()))
    return DecoratedTree(canonicalize_tree(tree), dec, model)


@dataclass(frozen=True)
class SignedDecoratedTree:
    sign: int
    tree: DecoratedTree

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ModelMismatch("sign must be +1 or -1")


def term_key(term) -> str:
    return term.key() if isinstance(term, DecoratedTree) else tree_key(term)


# ---------------------------------------------------------------------------
# formal sums


class TreeSum:
    """Canonical integer-linear combination of (decorated) trees.

    Zero coefficients are never stored; two sums are equal iff their term
    maps are identical.  All terms must share one label set, and decorated
    terms one group model.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for t, c in (terms or {}).items():
            if c:
                clean[t] = c
        self.terms = clean
        self._check_consistent()

    def _check_consistent(self):
        labels = None
        model = None
        for t in self.terms:
            if isinstance(t, DecoratedTree):
                labs = leaf_set(t.tree)
                if model is None:
                    model = t.model
                elif model != t.model:
                    raise ModelMismatch("terms use different group models")
            else:
                labs = leaf_set(t)
                if model is not None:
                    raise ModelMismatch("mix of decorated and plain trees")
            if labels is None:
                labels = labs
            elif labels != labs:
                raise ModelMismatch("terms use different label sets")

    @classmethod
    def single(cls, term, coeff=1):
        return cls({term: coeff})

    @property
    def label_set(self):
        for t in self.terms:
            return leaf_set(t.tree if isinstance(t, DecoratedTree) else t)
        return None

    @property
    def model(self):
        for t in self.terms:
            if isinstance(t, DecoratedTree):
                return t.model
        return None

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.terms and other.terms:
            if self.label_set != other.label_set or self.model != other.model:
                raise ModelMismatch("cannot add sums over different labels/models")
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return TreeSum(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        return TreeSum({t: k * c for t, c in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return isinstance(other, TreeSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda tc: term_key(tc[0]))

    def canonical_key(self):
        return tuple((term_key(t), c) for t, c in self.sorted_terms())

    def __repr__(self):
        from .expr import print_expr

        return f"TreeSum({print_expr(self)!r})"


def sum_add(a: TreeSum, b: TreeSum) -> TreeSum:
    return a + b


def sum_scale(a: TreeSum, k: int) -> TreeSum:
    return a.scale(k)


def sum_normalize(a: TreeSum) -> TreeSum:
    return TreeSum(a.terms)
