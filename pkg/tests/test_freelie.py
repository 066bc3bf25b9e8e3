import math
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from lietrees.errors import LTooSmall, NotMultilinear
from lietrees.freelie import (
    expand_assoc,
    left_normed_basis,
    lyndon_words,
    multilinear_normal_form,
    nf_vector,
    normalized_words,
    omega_d,
    omega_d_inverse,
    split_inversions,
    standard_factorization,
)
from lietrees.relations import as_relations, ihx_relations, lie_context
from lietrees.trees import Graft, Leaf, TreeSum, enumerate_trees, left_normed_tree, tree_key


def B(*parts):
    out = None
    for p in parts:
        node = Leaf(p) if isinstance(p, int) else p
        out = node if out is None else Graft(out, node)
    return out


def test_expand_examples():
    assert expand_assoc(Graft(Leaf(1), Leaf(2))) == {(1, 2): 1, (2, 1): -1}
    got = expand_assoc(Graft(Leaf(1), Graft(Leaf(2), Leaf(3))))
    assert got == {(1, 2, 3): 1, (1, 3, 2): -1, (2, 3, 1): -1, (3, 2, 1): 1}
    assert expand_assoc(Graft(Leaf(1), Leaf(1))) == {}


def test_normal_form_examples():
    assert multilinear_normal_form(Graft(Leaf(1), Leaf(2))) == {(1,): 1}
    assert multilinear_normal_form(Graft(Leaf(2), Leaf(1))) == {(1,): -1}
    nf = multilinear_normal_form(Graft(Graft(Leaf(1), Leaf(2)), Leaf(3)))
    assert nf == {(1, 2): 1, (2, 1): -1}
    assert nf_vector(Graft(Graft(Leaf(1), Leaf(2)), Leaf(3)), [1, 2, 3]) == (1, -1)


def test_normal_form_rejects_repeats():
    with pytest.raises(NotMultilinear):
        multilinear_normal_form(Graft(Leaf(1), Graft(Leaf(1), Leaf(2))))


def test_left_normed_triangularity_against_membership_oracle():
    # the extraction is validated against the independent relation-lattice
    # oracle on every tree with up to 4 leaves before anything relies on it
    for n in range(2, 5):
        ctx = lie_context(n, "matrix")
        basis = [left_normed_tree(s, n) for s in left_normed_basis(range(1, n + 1))]
        for t in enumerate_trees(range(1, n + 1)):
            nf = multilinear_normal_form(t)
            recon = TreeSum({t: 1})
            for sigma, coeff in nf.items():
                recon = recon - TreeSum({left_normed_tree(sigma, n): coeff})
            assert ctx.is_zero(recon), tree_key(t)
        # basis trees map to unit vectors
        for i, bt in enumerate(basis):
            vec = nf_vector(bt, range(1, n + 1))
            assert vec == tuple(1 if j == i else 0 for j in range(len(basis)))


def test_relation_vectors_have_zero_normal_form():
    for n in (2, 3, 4):
        for rel in as_relations(range(1, n + 1)):
            assert multilinear_normal_form(rel) == {}
        for rel in ihx_relations(range(1, n + 1)):
            assert multilinear_normal_form(rel) == {}


# ---------------------------------------------------------------------------
# Lyndon words


def brute_lyndon(k, max_len):
    """Independent oracle: exhaustive rotation-minimality check."""
    from itertools import product

    out = []
    for length in range(1, max_len + 1):
        for w in product(range(1, k + 1), repeat=length):
            if all(w < w[i:] + w[:i] for i in range(1, length)):
                out.append(w)
    out.sort(key=lambda w: (len(w), w))
    return out


def witt(k, length):
    def mobius(n):
        if n == 1:
            return 1
        result, m, p = 1, n, 2
        while p * p <= m:
            if m % p == 0:
                m //= p
                if m % p == 0:
                    return 0
                result = -result
            p += 1
        if m > 1:
            result = -result
        return result

    return sum(mobius(d) * k ** (length // d) for d in range(1, length + 1) if length % d == 0) // length


def test_lyndon_examples():
    assert [w.letters for w in lyndon_words(2, 2)] == [(1,), (2,), (1, 2)]
    assert [w.letters for w in lyndon_words(1, 3)] == [(1,)]


def test_lyndon_against_brute_force_and_witt():
    for k in (1, 2, 3):
        words = lyndon_words(k, 8)
        assert [w.letters for w in words] == brute_lyndon(k, 8)
        per_len = {}
        for w in words:
            per_len[w.length] = per_len.get(w.length, 0) + 1
        for length in range(1, 9):
            assert per_len.get(length, 0) == witt(k, length)


def test_standard_factorization_bracketing():
    w = lyndon_words(2, 3)
    by_text = {x.text(): x for x in w}
    assert tree_key(by_text["1.2"].bracketing) == "[1,2]"
    assert tree_key(by_text["1.1.2"].bracketing) == "[1,[1,2]]"
    assert tree_key(by_text["1.2.2"].bracketing) == "[[1,2],2]"
    assert standard_factorization((1,)) == Leaf(1)


def test_normalized_words():
    assert [w.text() for w in normalized_words([1, 2], 2)] == ["1.2"]
    assert [w.text() for w in normalized_words([1, 2], 3)] == ["1.2", "1.1.2", "1.2.2"]
    assert len(normalized_words([1, 2, 3], 3)) == 2
    with pytest.raises(LTooSmall):
        normalized_words([1, 2, 3], 2)


def test_normalized_multilinear_count():
    for n in range(1, 8):
        words = [w for w in normalized_words(range(1, n + 1), n)]
        assert len(words) == math.factorial(n - 1)


# ---------------------------------------------------------------------------
# the sign of the tree <-> word map


def test_sign_identity_exhaustive():
    for size in range(2, 9):
        labels = list(range(1, size + 1))
        for r in range(1, size):
            for s1 in combinations(labels, r):
                s2 = [x for x in labels if x not in s1]
                for d in (2, 3, 4, 5):
                    lhs = (d - 2) * split_inversions(s1, s2) + (d - 2) * split_inversions(s2, s1)
                    assert lhs % 2 == (len(s1) * len(s2) * (d - 2)) % 2


def test_omega_figure_values():
    # leaf: +x^i in every dimension
    for d in (2, 3, 4):
        assert omega_d(Leaf(7), d).sign == 1
    # the degree-2 tree: no inversion, sign +1 for all d
    for d in (2, 3, 4, 5):
        sw = omega_d(Graft(Leaf(1), Leaf(2)), d)
        assert sw.sign == 1 and tree_key(sw.word) == "[1,2]"
    # grafting {2} onto graft({3},{1}): each of the two vertices contributes
    # one inversion, total sign exponent 2(d-2)
    t = Graft(Leaf(2), Graft(Leaf(3), Leaf(1)))
    assert split_inversions([2], [3, 1]) == 1
    assert split_inversions([3], [1]) == 1
    for d in (2, 3, 4):
        sw = omega_d(t, d)
        assert sw.sign == (-1) ** (2 * (d - 2)) == 1
        assert tree_key(sw.word) == "[2,[3,1]]"


def test_omega_inverse_round_trip():
    for n in (2, 3, 4):
        for t in enumerate_trees(range(1, n + 1)):
            for d in (2, 3, 4):
                sw = omega_d(t, d)
                sign, tree = omega_d_inverse(sw.word, d)
                assert sign * sw.sign == 1 and tree == t


@settings(max_examples=50)
@given(st.integers(2, 5), st.data())
def test_sign_identity_property(d, data):
    labels = data.draw(st.lists(st.integers(1, 99), min_size=2, max_size=8, unique=True))
    cut = data.draw(st.integers(1, len(labels) - 1))
    s1, s2 = labels[:cut], labels[cut:]
    lhs = (d - 2) * (split_inversions(s1, s2) + split_inversions(s2, s1))
    assert lhs % 2 == (len(s1) * len(s2) * (d - 2)) % 2
