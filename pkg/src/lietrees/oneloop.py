"""One-loop Jacobi diagrams and their STU resolutions into trees.

A diagram is a directed cycle of trivalent vertices v_0..v_{k-1}; each carries
a stem to a planar binary branch whose leaves ("legs") are labelled by a set
{0..n-1}.  Vertex rotations (counter-clockwise half-edge order) are:

  * cycle vertex:   (stem, next-cycle-edge, prev-cycle-edge)
  * branch vertex:  (parent, left, right)

Resolving the cycle at a vertex whose branch is a single leg ``l`` deletes
the vertex; the two freed cycle-edge ends become new legs at positions ``l``
and ``l+1`` (legs above ``l`` shift up by one).  The *parallel* resolution
labels the prev-edge ``l`` and the next-edge ``l+1``; the *crossed* one (with
coefficient -1) swaps them.  The result, rooted at leg 0 and read off via the
rotations (entering a vertex through half-edge ``i`` makes its children
rotation[i+1], rotation[i+2]), is a planar tree on leaves 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import NotResolvable
from .trees import Graft, Leaf, Node, TreeSum, enumerate_trees, leaves, tree_key


@dataclass(frozen=True)
class OneLoopDiagram:
    branches: tuple  # one branch tree per cycle vertex, in cycle order

    @property
    def cycle_length(self):
        return len(self.branches)

    def legs(self):
        out = []
        for b in self.branches:
            out.extend(leaves(b))
        return sorted(out)

    def key(self):
        return "(" + ";".join(tree_key(b) for b in self.branches) + ")"


def resolvable_vertices(d: OneLoopDiagram):
    """Cycle positions where an STU resolution applies (single-leg branch)."""
    if d.cycle_length < 2:
        return []
    return [i for i, b in enumerate(d.branches) if isinstance(b, Leaf)]


def _relabel(node: Node, l: int) -> Node:
    if isinstance(node, Leaf):
        return Leaf(node.label if node.label < l else node.label + 1)
    return Graft(_relabel(node.left, l), _relabel(node.right, l))


def resolve(d: OneLoopDiagram, i: int, crossed: bool = False) -> Node:
    """One term of the STU resolution at cycle vertex i, as a rooted tree."""
    branch = d.branches[i]
    if not isinstance(branch, Leaf):
        raise NotResolvable(f"branch at cycle position {i} carries more than one leg")
    k = d.cycle_length
    if k < 2:
        raise NotResolvable("cannot resolve a single-vertex cycle")
    l = branch.label
    # remaining cycle vertices w_0..w_{m-1} = v_{i+1}, ..., v_{i+k-1}
    chain = [_relabel(d.branches[(i + 1 + j) % k], l) for j in range(k - 1)]
    m = k - 1
    # the deleted vertex's prev-edge dangles at w_{m-1}'s next slot, its
    # next-edge at w_0's prev slot
    leg_at_next_end = l + 1 if crossed else l
    leg_at_prev_end = l if crossed else l + 1

    def from_next(j: int) -> Node:
        # entered via the next slot: children are (prev, stem)
        prev_sub = from_next(j - 1) if j > 0 else Leaf(leg_at_prev_end)
        return Graft(prev_sub, chain[j])

    def from_prev(j: int) -> Node:
        # entered via the prev slot: children are (stem, next)
        next_sub = from_prev(j + 1) if j < m - 1 else Leaf(leg_at_next_end)
        return Graft(chain[j], next_sub)

    if l == 0:
        # the root is one of the two freshly created legs
        return from_next(m - 1) if leg_at_next_end == 0 else from_prev(0)
    j = next(jj for jj in range(m) if 0 in leaves(chain[jj]))
    next_sub = from_prev(j + 1) if j < m - 1 else Leaf(leg_at_next_end)
    prev_sub = from_next(j - 1) if j > 0 else Leaf(leg_at_prev_end)
    # entered via the stem: children are (next, prev)
    return _reroot(chain[j], Graft(next_sub, prev_sub))


def _reroot(node: Node, up: Node) -> Node:
    """Re-root a branch at its leg 0; ``up`` is the subtree past the parent edge."""
    if isinstance(node, Leaf):
        return up
    if 0 in leaves(node.left):
        # entered from the left child: children are (right, parent)
        return _reroot(node.left, Graft(node.right, up))
    # entered from the right child: children are (parent, left)
    return _reroot(node.right, Graft(up, node.left))


def stu_resolve(d: OneLoopDiagram, i: int) -> TreeSum:
    """parallel - crossed resolution at cycle vertex i."""
    return TreeSum({resolve(d, i, crossed=False): 1}) - TreeSum(
        {resolve(d, i, crossed=True): 1}
    )


# ---------------------------------------------------------------------------
# enumeration

def _ordered_partitions(items, blocks):
    """All ordered set partitions of ``items`` into ``blocks`` nonempty parts."""
    items = list(items)
    out = []
    for assign in product(range(blocks), repeat=len(items)):
        if set(assign) != set(range(blocks)):
            continue
        parts = [tuple(x for x, a in zip(items, assign) if a == b) for b in range(blocks)]
        out.append(parts)
    return out


def _branch_choices(parts):
    return product(*(enumerate_trees(p) for p in parts))


def canonical_diagrams(n: int):
    """Diagrams with legs 0..n-1 and the bare leg 0 pinned at cycle position 0.

    Pinning leg 0 breaks the cyclic symmetry; the generalized enumeration
    below exists to check that this loses no relations.
    """
    if n == 1:
        return [OneLoopDiagram((Leaf(0),))]
    rest = list(range(1, n))
    out = []
    for blocks in range(1, n):
        for parts in _ordered_partitions(rest, blocks):
            for branches in _branch_choices(parts):
                out.append(OneLoopDiagram((Leaf(0),) + tuple(branches)))
    return out


def all_diagrams(n: int):
    """Every cycle-vertex count, rotation and leg distribution (n >= 2 only
    yields resolvable diagrams for cycle length >= 2)."""
    if n == 1:
        return [OneLoopDiagram((Leaf(0),))]
    legs = list(range(n))
    out = []
    for k in range(2, n + 1):
        for parts in _ordered_partitions(legs, k):
            for branches in _branch_choices(parts):
                out.append(OneLoopDiagram(tuple(branches)))
    return out


__all__ = [
    "OneLoopDiagram",
    "all_diagrams",
    "canonical_diagrams",
    "resolvable_vertices",
    "resolve",
    "stu_resolve",
]
