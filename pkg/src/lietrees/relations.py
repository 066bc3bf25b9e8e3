"""Relation families (antisymmetry, Jacobi-exchange, loop resolutions) and
quotient presentations of the groups they cut out.

Two interchangeable engines back the quotients:

  * ``matrix``: every planar tree is a column; relation vectors are saturated
    into a Hermite row lattice.  Exact but only viable for small leaf counts.
  * ``rewrite``: trees are rewritten into the left-normed span by moves that
    are themselves instances of the antisymmetry/exchange relations; the
    residual lattice lives in (n-1)! coordinates.  This scales to six leaves.

The two engines are cross-checked against each other (for n <= 4) in the
test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import ModelMismatch
from .exactla import QuotientPresentation, RowLattice, cokernel_of_rows
from .freelie import left_normed_basis
from .groups import GroupModel
from .oneloop import all_diagrams, canonical_diagrams, resolvable_vertices, stu_resolve
from .trees import (
    DecoratedTree,
    Graft,
    Leaf,
    Node,
    TreeSum,
    decorate,
    enumerate_trees,
    internal_nodes,
    is_left_normed,
    leaves,
    left_normed_tree,
    replace_at,
    subtree_at,
    swap_at,
    tree_key,
)


# ---------------------------------------------------------------------------
# relation families

@dataclass(frozen=True)
class RelationSet:
    """A generated family of relation vectors with its provenance tag."""

    labels: tuple
    family: str  # "AS" | "IHX" | "STU2" | "AS+IHX" | "AS+IHX+STU2"
    vectors: tuple

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __add__(self, other: "RelationSet") -> "RelationSet":
        if self.labels != other.labels:
            raise ModelMismatch("cannot merge relation sets over different labels")
        return RelationSet(
            self.labels, f"{self.family}+{other.family}", self.vectors + other.vectors
        )


def as_relations(labels) -> RelationSet:
    """Antisymmetry: T + (T with one vertex's children swapped) for every
    tree and vertex.  Each unordered pair is emitted once."""
    out = []
    for t in enumerate_trees(labels):
        for p in internal_nodes(t):
            s = swap_at(t, p)
            if tree_key(t) < tree_key(s):
                out.append(TreeSum({t: 1, s: 1}))
    return RelationSet(tuple(sorted(set(labels))), "AS", tuple(out))


def ihx_relations(labels) -> RelationSet:
    """Exchange relation at every vertex whose left child is internal:
    [[a,b],c] - [a,[b,c]] + [[c,a],b] summed into the ambient tree."""
    out = []
    for t in enumerate_trees(labels):
        for p in internal_nodes(t):
            sub = subtree_at(t, p)
            if not isinstance(sub.left, Graft):
                continue
            a, b, c = sub.left.left, sub.left.right, sub.right
            h = replace_at(t, p, Graft(a, Graft(b, c)))
            x = replace_at(t, p, Graft(Graft(c, a), b))
            out.append(TreeSum({t: 1}) - TreeSum({h: 1}) + TreeSum({x: 1}))
    return RelationSet(tuple(sorted(set(labels))), "IHX", tuple(out))


def decorated_relations(labels, model: GroupModel, max_word_len=None) -> RelationSet:
    """Antisymmetry/exchange with every decoration.

    Free models need ``max_word_len`` to cap the element enumeration;
    otherwise InfiniteEnumeration propagates from the model.
    """
    labels = sorted(set(labels))
    out = []
    plain = list(as_relations(labels)) + list(ihx_relations(labels))
    elements = model.elements(max_word_len) if model.kind == "free" else model.elements()
    for combo in product(elements, repeat=len(labels)):
        mapping = dict(zip(labels, combo))
        for rel in plain:
            out.append(
                TreeSum({decorate(t, mapping, model): c for t, c in rel.terms.items()})
            )
    return RelationSet(tuple(labels), "AS+IHX", tuple(out))


def stu2_relations(n: int, enumeration: str = "canonical") -> RelationSet:
    """Differences of loop resolutions at distinct vertices of each diagram.

    ``enumeration`` picks the diagram family: "canonical" pins the bare leg 0
    at cycle position 0; "all" ranges over every rotation and distribution
    (used to check the pinning loses nothing).
    """
    labels = tuple(range(1, n + 1))
    if n == 1:
        # the single-vertex cycle contributes its lone leg directly
        return RelationSet(labels, "STU2", (TreeSum({Leaf(1): 1}),))
    diagrams = canonical_diagrams(n) if enumeration == "canonical" else all_diagrams(n)
    out = []
    for d in diagrams:
        rv = resolvable_vertices(d)
        if len(rv) < 2:
            continue
        base = stu_resolve(d, rv[0])
        for i in rv[1:]:
            rel = stu_resolve(d, i) - base
            if not rel.is_zero():
                out.append(rel)
    return RelationSet(labels, "STU2", tuple(out))


# ---------------------------------------------------------------------------
# rewriting into the left-normed span

def _negate(items):
    return tuple((t, -c) for t, c in items)


@lru_cache(maxsize=None)
def _rw(t: Node):
    """Left-normed expansion of a tree, as ((basis_tree, coeff), ...).

    Moves used: child swap (antisymmetry instance) and the root exchange
    [[a,b],c] = [a,[b,c]] - [b,[a,c]] (one exchange plus two swaps), so the
    result differs from the input by relation-lattice elements only.
    """
    if isinstance(t, Leaf):
        return ((t, 1),)
    top = max(leaves(t))
    if top in leaves(t.left):
        return _negate(_rw(Graft(t.right, t.left)))
    if isinstance(t.left, Leaf):
        return tuple((Graft(t.left, u), c) for u, c in _rw(t.right))
    a1, a2, r = t.left.left, t.left.right, t.right
    acc = {}
    for u, c in _rw(Graft(a2, r)):
        for v, cv in _rw(Graft(a1, u)):
            acc[v] = acc.get(v, 0) + c * cv
    for u, c in _rw(Graft(a1, r)):
        for v, cv in _rw(Graft(a2, u)):
            acc[v] = acc.get(v, 0) - c * cv
    return tuple((v, c) for v, c in acc.items() if c)


def rewrite_sum(s: TreeSum) -> TreeSum:
    """Rewrite every term into the left-normed span (decorations ride along)."""
    acc = {}
    for term, coeff in s.terms.items():
        if isinstance(term, DecoratedTree):
            dec = term.decoration_map()
            for u, c in _rw(term.tree):
                key = decorate(u, dec, term.model)
                acc[key] = acc.get(key, 0) + coeff * c
        else:
            for u, c in _rw(term):
                acc[u] = acc.get(u, 0) + coeff * c
    return TreeSum(acc)


# ---------------------------------------------------------------------------
# quotient contexts

class QuotientContext:
    """A presentation of Z[trees]/relations with reduce/equality/cokernel.

    ``mode`` is "matrix" (columns are all trees) or "rewrite" (columns are
    left-normed basis trees; relations are rewritten before insertion).
    """

    def __init__(self, labels, relations, mode="matrix", model=None, max_word_len=None):
        self.labels = tuple(sorted(set(labels)))
        self.mode = mode
        self.model = model
        self.max_word_len = max_word_len
        if mode == "matrix":
            columns = self._matrix_columns()
        elif mode == "rewrite":
            columns = self._rewrite_columns()
        else:
            raise ModelMismatch(f"unknown quotient mode {mode!r}")
        self.columns = columns
        self.index = {t: i for i, t in enumerate(columns)}
        self.lattice = RowLattice(len(columns))
        for rel in relations:
            self.lattice.insert(self.vector(rel))

    # -- column bases ----------------------------------------------------
    def _plain_trees(self):
        trees = enumerate_trees(self.labels)
        # left-normed trees go last so Hermite pivots prefer the others and
        # residues land in the left-normed span whenever possible
        return sorted(trees, key=lambda t: (is_left_normed(t), tree_key(t)))

    def _left_normed_trees(self):
        last = max(self.labels)
        return [left_normed_tree(sigma, last) for sigma in left_normed_basis(self.labels)]

    def _decorations(self):
        if self.model.kind == "free":
            elements = self.model.elements(self.max_word_len)
        else:
            elements = self.model.elements()
        combos = product(elements, repeat=len(self.labels))
        return [dict(zip(self.labels, combo)) for combo in combos]

    def _matrix_columns(self):
        trees = self._plain_trees()
        if self.model is None:
            return trees
        return [decorate(t, m, self.model) for t in trees for m in self._decorations()]

    def _rewrite_columns(self):
        trees = self._left_normed_trees()
        if self.model is None:
            return trees
        return [decorate(t, m, self.model) for t in trees for m in self._decorations()]

    # -- vectors ---------------------------------------------------------
    def vector(self, s: TreeSum):
        if self.mode == "rewrite":
            s = rewrite_sum(s)
        try:
            return {self.index[t]: c for t, c in s.terms.items()}
        except KeyError as exc:
            raise ModelMismatch(f"term outside this context's basis: {exc}") from exc

    def unvector(self, row) -> TreeSum:
        return TreeSum({self.columns[j]: c for j, c in row.items()})

    # -- quotient operations ----------------------------------------------
    def reduce(self, s: TreeSum) -> TreeSum:
        return self.unvector(self.lattice.reduce(self.vector(s)))

    def equal(self, a: TreeSum, b: TreeSum) -> bool:
        return self.lattice.contains(self.vector(a - b))

    def is_zero(self, s: TreeSum) -> bool:
        return self.lattice.contains(self.vector(s))

    def quotient_columns(self):
        """Column indices surviving as a basis of the quotient (non-pivot)."""
        return [j for j in range(len(self.columns)) if j not in self.lattice.pivots]

    def coordinates(self, s: TreeSum):
        """Reduced integer vector on the quotient's surviving columns."""
        row = self.lattice.reduce(self.vector(s))
        return tuple(row.get(j, 0) for j in self.quotient_columns())

    def presentation(self) -> QuotientPresentation:
        return self.lattice.cokernel()

    @property
    def basis_size(self):
        return len(self.columns)


def _default_mode(n: int) -> str:
    return "matrix" if n <= 4 else "rewrite"


@lru_cache(maxsize=None)
def lie_context(n: int, mode: str | None = None) -> QuotientContext:
    """Z[trees on n leaves] / (antisymmetry + exchange)."""
    labels = range(1, n + 1)
    mode = mode or _default_mode(n)
    return QuotientContext(labels, as_relations(labels) + ihx_relations(labels), mode)


_DECORATED_CACHE = {}


def decorated_context(
    n: int, model: GroupModel, mode: str | None = None, max_word_len=None
) -> QuotientContext:
    """The decorated analogue; free models need a word-length cap."""
    key = (n, model, mode, max_word_len)
    if key not in _DECORATED_CACHE:
        labels = range(1, n + 1)
        # decorated column counts grow like |model|^n, so the matrix engine is
        # kept to n <= 3 by default
        mode = mode or ("matrix" if n <= 3 else "rewrite")
        _DECORATED_CACHE[key] = QuotientContext(
            labels,
            decorated_relations(labels, model, max_word_len),
            mode,
            model=model,
            max_word_len=max_word_len,
        )
    return _DECORATED_CACHE[key]


def reduce_in_quotient(ctx: QuotientContext, s: TreeSum):
    return ctx.coordinates(s)


def equal_in_quotient(ctx: QuotientContext, a: TreeSum, b: TreeSum) -> bool:
    return ctx.equal(a, b)


@lru_cache(maxsize=None)
def jacobi_context(n: int, mode: str | None = None, enumeration: str = "canonical") -> QuotientContext:
    """Z[trees on n leaves] / (antisymmetry + exchange + loop resolutions)."""
    labels = range(1, n + 1)
    mode = mode or _default_mode(n)
    rels = as_relations(labels) + ihx_relations(labels) + stu2_relations(n, enumeration)
    return QuotientContext(labels, rels, mode)


__all__ = [
    "QuotientContext",
    "RelationSet",
    "as_relations",
    "decorated_context",
    "decorated_relations",
    "equal_in_quotient",
    "ihx_relations",
    "jacobi_context",
    "lie_context",
    "reduce_in_quotient",
    "rewrite_sum",
    "stu2_relations",
]
