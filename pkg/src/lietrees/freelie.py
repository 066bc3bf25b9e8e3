"""Free Lie algebra machinery.

Bracketed words reuse the tree node types (letters may repeat).  The
associative expansion into the tensor algebra is the equality oracle for
everything downstream; the multilinear normal form reads coordinates on the
left-normed basis straight off that expansion.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import LTooSmall, NotMultilinear
from .trees import Graft, Leaf, Node, TreeSum, leaves, left_normed_tree, tree_key


# ---------------------------------------------------------------------------
# associative expansion

def expand_assoc(w: Node):
    """Expand a bracketed word into the tensor algebra.

    Returns a dict mapping letter tuples to integer coefficients, via the
    recursive rule [a,b] -> ab - ba.
    """
    return dict(_expand(w))


@lru_cache(maxsize=None)
def _expand(w: Node):
    if isinstance(w, Leaf):
        return (((w.label,), 1),)
    out = {}
    left = _expand(w.left)
    right = _expand(w.right)
    for ma, ca in left:
        for mb, cb in right:
            k = ma + mb
            out[k] = out.get(k, 0) + ca * cb
            k = mb + ma
            out[k] = out.get(k, 0) - ca * cb
    return tuple((m, c) for m, c in out.items() if c)


def expand_sum(terms):
    """Associative expansion of a linear combination {word: coeff}."""
    out = {}
    for w, c in terms.items():
        for m, cm in _expand(w):
            out[m] = out.get(m, 0) + c * cm
            if not out[m]:
                del out[m]
    return out


# ---------------------------------------------------------------------------
# multilinear normal form

def _as_word_dict(x):
    if isinstance(x, TreeSum):
        return dict(x.terms)
    if isinstance(x, (Leaf, Graft)):
        return {x: 1}
    return dict(x)


def multilinear_normal_form(x):
    """Coordinates on the left-normed basis of the multilinear component.

    Input: a TreeSum, a single node, or a {word: coeff} dict, every term
    using each letter of the common label set exactly once.  Returns a dict
    mapping permutations sigma (tuples of the non-maximal letters) to the
    coefficient of [x_{sigma_1},[...,[x_{sigma_{n-1}}, x_max]...]].

    The coordinate on sigma is the coefficient of the associative monomial
    x_{sigma_1}...x_{sigma_{n-1}} x_max in the expansion: the left-normed
    basis is triangular with unit diagonal for this extraction (validated in
    the tests against the exact lattice-membership oracle).
    """
    terms = _as_word_dict(x)
    labels = None
    for w in terms:
        labs = leaves(w)
        if len(set(labs)) != len(labs):
            raise NotMultilinear(f"letter repeats in {tree_key(w)}")
        if labels is None:
            labels = frozenset(labs)
        elif frozenset(labs) != labels:
            raise NotMultilinear("terms use different letter sets")
    if labels is None:
        return {}
    last = max(labels)
    out = {}
    for m, c in expand_sum(terms).items():
        if m[-1] != last:
            continue
        sigma = m[:-1]
        out[sigma] = out.get(sigma, 0) + c
        if not out[sigma]:
            del out[sigma]
    return out


def left_normed_basis(labels):
    """Deterministic order of the (n-1)! basis permutations."""
    labels = sorted(labels)
    rest = labels[:-1]
    return sorted(itertools.permutations(rest))


def nf_vector(x, labels):
    nf = multilinear_normal_form(x)
    return tuple(nf.get(sigma, 0) for sigma in left_normed_basis(labels))


# ---------------------------------------------------------------------------
# Lyndon words / Hall basis

@dataclass(frozen=True)
class HallWord:
    letters: tuple
    bracketing: Node

    @property
    def length(self):
        return len(self.letters)

    def text(self):
        return ".".join(str(x) for x in self.letters)


def _is_lyndon(word):
    return all(word < word[i:] + word[:i] for i in range(1, len(word)))


def standard_factorization(word):
    """Split a Lyndon word w = uv with v its longest proper Lyndon suffix."""
    if len(word) == 1:
        return Leaf(word[0])
    for i in range(1, len(word)):
        if _is_lyndon(word[i:]):
            return Graft(standard_factorization(word[:i]), standard_factorization(word[i:]))
    raise AssertionError("unreachable: every Lyndon word has a proper Lyndon suffix")


def lyndon_words(alphabet, max_length):
    """All Lyndon words of length <= max_length, in length-then-lex order.

    ``alphabet`` is either a letter count k (meaning letters 1..k) or an
    iterable of letters.  Uses Duval's generation.
    """
    if isinstance(alphabet, int):
        letters = list(range(1, alphabet + 1))
    else:
        letters = sorted(set(alphabet))
    if not letters or max_length < 1:
        return []
    k = len(letters)
    words = []
    w = [0]
    while w:
        word = tuple(letters[i] for i in w)
        words.append(word)
        m = len(w)
        while len(w) < max_length:
            w.append(w[-m])
        while w and w[-1] == k - 1:
            w.pop()
        if w:
            w[-1] += 1
    words.sort(key=lambda word: (len(word), word))
    return [HallWord(word, standard_factorization(word)) for word in words]


def normalized_words(labels, max_length):
    """Hall-basis words over the label set in which every label appears.

    These index the Hilton-Milnor factors; flagged (not silently empty) when
    the cap cannot fit all letters.
    """
    labels = sorted(set(labels))
    if max_length < len(labels):
        raise LTooSmall(f"max length {max_length} < alphabet size {len(labels)}")
    need = set(labels)
    return [w for w in lyndon_words(labels, max_length) if need <= set(w.letters)]


# ---------------------------------------------------------------------------
# the tree <-> graded-word isomorphism and its sign

def split_inversions(left_labels, right_labels):
    """Count pairs (i, j) in S1 x S2 with i > j."""
    right_sorted = sorted(right_labels)
    return sum(bisect.bisect_left(right_sorted, i) for i in left_labels)


def _sign_exponent(t: Node, d: int):
    """Total exponent of (-1) accumulated over all internal nodes."""
    if isinstance(t, Leaf):
        return 0
    e = (d - 2) * split_inversions(leaves(t.left), leaves(t.right))
    return e + _sign_exponent(t.left, d) + _sign_exponent(t.right, d)


@dataclass(frozen=True)
class SignedWord:
    sign: int
    word: Node
    d: int


def omega_d(t: Node, d: int) -> SignedWord:
    """The sign-twisted word of a tree: same bracketing, explicit sign."""
    sign = -1 if _sign_exponent(t, d) % 2 else 1
    return SignedWord(sign, t, d)


def omega_d_inverse(w: Node, d: int):
    """Inverse on multilinear words: (sign, tree) with omega_d(tree) = sign*w."""
    labs = leaves(w)
    if len(set(labs)) != len(labs):
        raise NotMultilinear(f"letter repeats in {tree_key(w)}")
    sign = -1 if _sign_exponent(w, d) % 2 else 1
    return sign, w


__all__ = [
    "HallWord",
    "SignedWord",
    "expand_assoc",
    "expand_sum",
    "left_normed_basis",
    "left_normed_tree",
    "lyndon_words",
    "multilinear_normal_form",
    "nf_vector",
    "normalized_words",
    "omega_d",
    "omega_d_inverse",
    "split_inversions",
    "standard_factorization",
]
