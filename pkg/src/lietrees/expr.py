"""Text grammar for formal sums of (decorated) trees.

    sum    := ['-'] term (('+'|'-') term)*
    term   := [integer '*'] tree
    tree   := leaf | '[' tree ',' tree ']'
    leaf   := integer ['{' word '}']

Whitespace is insignificant between tokens.  Decoration words use generator
letters a..z (inverses A..Z) for free models and decimal ids for finite
models; an omitted brace group means the identity.  The bare text "0" denotes
the empty sum.
"""

from __future__ import annotations

from .errors import ExprSyntaxError
from .groups import GroupModel
from .trees import DecoratedTree, Graft, Leaf, Node, TreeSum, canonicalize_tree, decorate, leaves, term_key


class _Parser:
    def __init__(self, text, model):
        self.text = text
        self.pos = 0
        self.model = model

    def error(self, msg):
        raise ExprSyntaxError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def tree(self):
        """Returns (node, decoration dict or None)."""
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            left, dl = self.tree()
            self.expect(",")
            right, dr = self.tree()
            self.expect("]")
            dec = None
            if dl is not None or dr is not None:
                dec = dict(dl or {})
                dec.update(dr or {})
            return Graft(left, right), dec
        label = self.integer()
        dec = None
        if self.peek() == "{":
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] != "}":
                self.pos += 1
            if self.pos >= len(self.text):
                self.error("unterminated decoration")
            word = self.text[start:self.pos]
            self.pos += 1
            if self.model is None:
                self.error("decorated leaf but no group model supplied")
            dec = {label: self.model.parse_element(word)}
        return Leaf(label), dec

    def term(self):
        coeff = 1
        self.skip_ws()
        mark = self.pos
        if self.peek().isdigit():
            value = self.integer()
            if self.peek() == "*":
                self.pos += 1
                coeff = value
                node, dec = self.tree()
            else:
                # it was a bare leaf after all
                self.pos = mark
                node, dec = self.tree()
        else:
            node, dec = self.tree()
        return coeff, node, dec

    def parse_sum(self):
        self.skip_ws()
        if self.text[self.pos:].strip() == "0":
            self.pos = len(self.text)
            return TreeSum()
        acc = TreeSum()
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        while True:
            coeff, node, dec = self.term()
            acc = acc + TreeSum.single(self._finish(node, dec), sign * coeff)
            ch = self.peek()
            if ch == "+":
                sign = 1
            elif ch == "-":
                sign = -1
            elif ch == "":
                return acc
            else:
                self.error("expected '+', '-' or end of input")
            self.pos += 1

    def _finish(self, node: Node, dec):
        canonicalize_tree(node)
        if self.model is None and dec is None:
            return node
        if self.model is None:
            self.error("decorated leaf but no group model supplied")
        full = {lab: self.model.identity() for lab in leaves(node)}
        full.update(dec or {})
        return decorate(node, full, self.model)


def parse_expr(text: str, model: GroupModel | None = None) -> TreeSum:
    p = _Parser(text, model)
    result = p.parse_sum()
    p.skip_ws()
    if p.pos != len(text):
        p.error("trailing input")
    return result


def print_term(term) -> str:
    return term_key(term)


def print_expr(s: TreeSum) -> str:
    if s.is_zero():
        return "0"
    parts = []
    for i, (t, c) in enumerate(s.sorted_terms()):
        mag = f"{abs(c)}*" if abs(c) != 1 else ""
        body = mag + term_key(t)
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)
