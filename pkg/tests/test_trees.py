import math

import pytest
from hypothesis import given, strategies as st

from lietrees.errors import DuplicateLeaf, EmptyLabelSet, LabelClash
from lietrees.trees import (
    Graft,
    Leaf,
    TreeSum,
    enumerate_trees,
    graft,
    internal_nodes,
    is_left_normed,
    leaf_set,
    leaves,
    left_normed_tree,
    replace_at,
    subtree_at,
    swap_at,
    tree_key,
)


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_leaves_planar_order():
    t = Graft(Graft(Leaf(2), Leaf(3)), Leaf(1))
    assert leaves(t) == (2, 3, 1)
    assert leaf_set(t) == frozenset({1, 2, 3})


def test_duplicate_leaf_detected():
    with pytest.raises(DuplicateLeaf):
        leaf_set(Graft(Leaf(1), Leaf(1)))


def test_graft_rejects_overlap():
    with pytest.raises(LabelClash):
        graft(Graft(Leaf(1), Leaf(2)), Leaf(2))


def test_tree_key_round_structure():
    t = Graft(Leaf(1), Graft(Leaf(3), Leaf(2)))
    assert tree_key(t) == "[1,[3,2]]"


def test_enumeration_counts():
    # n! * Catalan(n-1) planar trees on n distinct labels
    for n in range(1, 5):
        trees = enumerate_trees(range(1, n + 1))
        assert len(trees) == math.factorial(n) * catalan(n - 1)
        assert len(set(trees)) == len(trees)
        assert [tree_key(t) for t in trees] == sorted(tree_key(t) for t in trees)


def test_enumeration_rejects_empty():
    with pytest.raises(EmptyLabelSet):
        enumerate_trees([])


def test_swap_and_replace():
    t = Graft(Graft(Leaf(1), Leaf(2)), Leaf(3))
    assert swap_at(t, ()) == Graft(Leaf(3), Graft(Leaf(1), Leaf(2)))
    assert swap_at(t, (0,)) == Graft(Graft(Leaf(2), Leaf(1)), Leaf(3))
    assert subtree_at(t, (0, 1)) == Leaf(2)
    assert replace_at(t, (1,), Leaf(9)) == Graft(Graft(Leaf(1), Leaf(2)), Leaf(9))
    assert internal_nodes(t) == [(), (0,)]


def test_left_normed():
    t = left_normed_tree((2, 1), 3)
    assert tree_key(t) == "[2,[1,3]]"
    assert is_left_normed(t)
    assert not is_left_normed(Graft(Graft(Leaf(1), Leaf(2)), Leaf(3)))
    assert not is_left_normed(Graft(Leaf(3), Graft(Leaf(1), Leaf(2))))


def test_tree_sum_arithmetic():
    a, b = Graft(Leaf(1), Leaf(2)), Graft(Leaf(2), Leaf(1))
    s = TreeSum({a: 2}) + TreeSum({b: 1}) - TreeSum({a: 2})
    assert s == TreeSum({b: 1})
    assert (s - s).is_zero()
    assert s.scale(0).is_zero()
    assert (-s).terms == {b: -1}


@given(st.permutations(list(range(1, 6))))
def test_enumeration_label_order_independent(perm):
    assert enumerate_trees(perm[:4]) == enumerate_trees(sorted(perm[:4]))
