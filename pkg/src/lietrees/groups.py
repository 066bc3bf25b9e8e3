"""Coefficient group models: trivial, finite (multiplication table), free.

Elements are plain hashable values:
  * trivial / finite: an integer id (identity is 0),
  * free: a tuple of nonzero ints, +k for generator k, -k for its inverse,
    always stored in reduced form (no adjacent cancelling pair).
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass, field

from .errors import InfiniteEnumeration, ModelMismatch, UnknownGroupElement


@dataclass(frozen=True)
class GroupModel:
    kind: str  # "trivial" | "finite" | "free"
    table: tuple = ()       # finite: tuple of tuples, row a, col b -> a*b
    inverse: tuple = ()     # finite: inverse[a]
    generators: int = 0     # free: number of generators

    def __post_init__(self):
        if self.kind == "finite":
            self._check_finite()
        elif self.kind not in ("trivial", "free"):
            raise ModelMismatch(f"unknown group kind {self.kind!r}")

    def _check_finite(self):
        m = len(self.table)
        if m == 0:
            raise ModelMismatch("finite group needs a nonempty table")
        for row in self.table:
            if len(row) != m or any(not (0 <= x < m) for x in row):
                raise ModelMismatch("malformed multiplication table")
        for a in range(m):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise ModelMismatch("element 0 is not an identity")
            b = self.inverse[a]
            if self.table[a][b] != 0 or self.table[b][a] != 0:
                raise ModelMismatch("inverse table inconsistent")
        for a in range(m):
            for b in range(m):
                for c in range(m):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise ModelMismatch("multiplication table is not associative")

    # -- group operations ----------------------------------------------
    def identity(self):
        return 0 if self.kind != "free" else ()

    def multiply(self, a, b):
        if self.kind == "trivial":
            return 0
        if self.kind == "finite":
            return self.table[a][b]
        word = list(a)
        for x in b:
            if word and word[-1] == -x:
                word.pop()
            else:
                word.append(x)
        return tuple(word)

    def invert(self, a):
        if self.kind == "trivial":
            return 0
        if self.kind == "finite":
            return self.inverse[a]
        return tuple(-x for x in reversed(a))

    def order(self):
        if self.kind == "trivial":
            return 1
        if self.kind == "finite":
            return len(self.table)
        raise InfiniteEnumeration("free group has infinitely many elements")

    def elements(self, max_word_len=None):
        """All elements, as a deterministic list.

        Free models are infinite, so they require an explicit word-length cap.
        """
        if self.kind == "trivial":
            return [0]
        if self.kind == "finite":
            return list(range(len(self.table)))
        if max_word_len is None:
            raise InfiniteEnumeration("free group enumeration needs a word-length cap")
        out = [()]
        frontier = [()]
        for _ in range(max_word_len):
            nxt = []
            for w in frontier:
                for g in range(1, self.generators + 1):
                    for s in (g, -g):
                        if w and w[-1] == -s:
                            continue
                        nxt.append(w + (s,))
            out.extend(nxt)
            frontier = nxt
        return out

    # -- element text form ---------------------------------------------
    def parse_element(self, text):
        if self.kind == "free":
            word = self.identity()
            for ch in text:
                if ch in string.ascii_lowercase:
                    s = ord(ch) - ord("a") + 1
                elif ch in string.ascii_uppercase:
                    s = -(ord(ch) - ord("A") + 1)
                else:
                    raise UnknownGroupElement(f"bad generator letter {ch!r}")
                if abs(s) > self.generators:
                    raise UnknownGroupElement(f"generator {ch!r} out of range")
                word = self.multiply(word, (s,))
            return word
        if text == "":
            return 0
        if not text.isdigit():
            raise UnknownGroupElement(f"expected a decimal element id, got {text!r}")
        e = int(text)
        if self.kind == "trivial":
            if e != 0:
                raise UnknownGroupElement("trivial group has only element 0")
            return 0
        if e >= len(self.table):
            raise UnknownGroupElement(f"element id {e} out of range")
        return e

    def format_element(self, e):
        if self.kind == "free":
            return "".join(
                string.ascii_lowercase[x - 1] if x > 0 else string.ascii_uppercase[-x - 1]
                for x in e
            )
        return str(e)


TRIVIAL_GROUP = GroupModel("trivial")


def cyclic_group(m):
    """Z/m with elements 0..m-1 under addition."""
    table = tuple(tuple((a + b) % m for b in range(m)) for a in range(m))
    inverse = tuple((-a) % m for a in range(m))
    return GroupModel("finite", table=table, inverse=inverse)


def free_group(generators):
    return GroupModel("free", generators=generators)


def model_from_json(obj):
    kind = obj.get("kind")
    if kind == "trivial":
        return TRIVIAL_GROUP
    if kind == "finite":
        table = tuple(tuple(row) for row in obj["table"])
        inverse = tuple(obj.get("inverse") or _inverse_from_table(table))
        return GroupModel("finite", table=table, inverse=inverse)
    if kind == "free":
        return free_group(int(obj["generators"]))
    raise ModelMismatch(f"unknown group kind {kind!r}")


def _inverse_from_table(table):
    inv = []
    for a, row in enumerate(table):
        try:
            inv.append(row.index(0))
        except ValueError:
            raise ModelMismatch(f"element {a} has no inverse")
    return inv


def load_model(path):
    with open(path) as fh:
        return model_from_json(json.load(fh))
