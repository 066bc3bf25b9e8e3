"""Exact symbolic computation with labelled planar trees: free-Lie-algebra
quotients, loop-resolution quotients, Hall bases, embedding-tower tables, and
grope encodings, all over arbitrary-precision integers."""

from .errors import DomainError
from .expr import parse_expr, print_expr
from .exactla import QuotientPresentation
from .groups import TRIVIAL_GROUP, GroupModel, cyclic_group, free_group
from .relations import decorated_context, jacobi_context, lie_context
from .trees import Graft, Leaf, TreeSum

__all__ = [
    "DomainError",
    "Graft",
    "GroupModel",
    "Leaf",
    "QuotientPresentation",
    "TRIVIAL_GROUP",
    "TreeSum",
    "cyclic_group",
    "decorated_context",
    "free_group",
    "jacobi_context",
    "lie_context",
    "parse_expr",
    "print_expr",
]

__version__ = "1.0.0"
