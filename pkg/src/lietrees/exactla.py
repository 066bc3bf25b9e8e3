"""Exact integer linear algebra over sparse matrices.

Everything is arbitrary-precision: rows are dicts {column: int}, matrices are
lists of such rows.  The two workhorses are a row-style Hermite normal form
(used incrementally to saturate relation lattices) and the Smith normal form
(used to present cokernels).  No floating point, no modular shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DimensionMismatch, NotInLattice


# ---------------------------------------------------------------------------
# sparse rows

def row_add(r, s, k=1):
    """r + k*s as a fresh sparse row."""
    out = dict(r)
    for j, v in s.items():
        w = out.get(j, 0) + k * v
        if w:
            out[j] = w
        else:
            out.pop(j, None)
    return out


def row_scale(r, k):
    return {j: k * v for j, v in r.items()} if k else {}


def _xgcd(a, b):
    """Extended gcd: returns (g, x, y) with x*a + y*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# incremental Hermite form (row lattice saturation)

class RowLattice:
    """Integer row lattice kept in Hermite normal form.

    Rows live over columns 0..ncols-1.  ``insert`` adds one generator and
    re-normalizes; the result is independent of insertion order, which the
    tests exercise directly.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}  # pivot column -> row (dict), row[col] > 0

    def _validate(self, row):
        for j in row:
            if not (0 <= j < self.ncols):
                raise DimensionMismatch(f"column {j} out of range 0..{self.ncols - 1}")

    def reduce(self, row):
        """Reduce a row modulo the lattice; zero residue iff the row belongs.

        Pivot rows only have entries at columns >= their pivot column, so a
        single left-to-right pass fully reduces.
        """
        self._validate(row)
        row = dict(row)
        for j in sorted(self.pivots):
            v = row.get(j)
            if v:
                q = v // self.pivots[j][j]
                if q:
                    row = row_add(row, self.pivots[j], -q)
        return row

    def insert(self, row):
        """Add a generator row; returns True if the lattice grew."""
        self._validate(row)
        row = dict(row)
        grew = False
        while row:
            j = min(row)
            piv = self.pivots.get(j)
            if piv is None:
                if row[j] < 0:
                    row = row_scale(row, -1)
                self.pivots[j] = row
                return True
            if row[j] % piv[j] == 0:
                row = row_add(row, piv, -(row[j] // piv[j]))
                continue
            g, x, y = _xgcd(piv[j], row[j])
            new_piv = row_add(row_scale(piv, x), row, y)
            new_row = row_add(row_scale(piv, row[j] // g), row, -(piv[j] // g))
            self.pivots[j] = new_piv
            grew = True
            row = new_row
        return grew

    def contains(self, row):
        return not self.reduce(row)

    def rank(self):
        return len(self.pivots)

    def basis_rows(self):
        """The unique Hermite basis: pivot positive, entries above in [0, pivot)."""
        cols = sorted(self.pivots)
        for idx, j in enumerate(cols):
            piv = self.pivots[j]
            for i in cols[:idx]:
                r = self.pivots[i]
                q = r.get(j, 0) // piv[j]
                if q:
                    self.pivots[i] = row_add(r, piv, -q)
        return [dict(self.pivots[j]) for j in cols]

    def cokernel(self):
        """Presentation of Z^ncols / lattice."""
        return cokernel_of_rows(self.basis_rows(), self.ncols)


# ---------------------------------------------------------------------------
# dense normal forms (on the small matrices that survive saturation)

def hermite_normal_form(rows, ncols):
    """Row-style HNF of the lattice spanned by the given sparse rows.

    Returns (hnf_rows, transform) with transform a list of dense rows U such
    that U * input = hnf (padded with zero rows), det(U) = +-1.
    """
    m = len(rows)
    work = [dict(r) for r in rows]
    trans = [{i: 1} for i in range(m)]
    pivots = {}  # col -> index into work
    for i in range(m):
        row, tr = work[i], trans[i]
        while row:
            j = min(row)
            p = pivots.get(j)
            if p is None:
                if row[j] < 0:
                    row, tr = row_scale(row, -1), row_scale(tr, -1)
                pivots[j] = i
                break
            prow, ptr = work[p], trans[p]
            if row[j] % prow[j] == 0:
                q = row[j] // prow[j]
                row, tr = row_add(row, prow, -q), row_add(tr, ptr, -q)
                continue
            g, x, y = _xgcd(prow[j], row[j])
            new_p = row_add(row_scale(prow, x), row, y)
            new_pt = row_add(row_scale(ptr, x), tr, y)
            row, tr = (
                row_add(row_scale(prow, row[j] // g), row, -(prow[j] // g)),
                row_add(row_scale(ptr, row[j] // g), tr, -(prow[j] // g)),
            )
            work[p], trans[p] = new_p, new_pt
        work[i], trans[i] = row, tr
    # off-pivot reduction
    order = sorted(pivots)
    for a, j in enumerate(order):
        p = pivots[j]
        for jj in order[a + 1:]:
            q = pivots[jj]
            v = work[p].get(jj, 0)
            if v:
                k = v // work[q][jj]
                if k:
                    work[p] = row_add(work[p], work[q], -k)
                    trans[p] = row_add(trans[p], trans[q], -k)
    ordering = [pivots[j] for j in order] + [i for i in range(m) if i not in pivots.values()]
    hnf_rows = [work[i] for i in ordering if work[i]]
    transform = [trans[i] for i in ordering]
    return hnf_rows, transform


def smith_normal_form(rows, nrows, ncols):
    """Invariant factors d1 | d2 | ... of the integer matrix."""
    # dense working copy keyed sparsely; small inputs only
    a = {}
    for i, r in enumerate(rows):
        for j, v in r.items():
            if v:
                a[i, j] = v

    def col_entries(j):
        return [(i, v) for (i, jj), v in a.items() if jj == j]

    def row_entries(i):
        return [(j, v) for (ii, j), v in a.items() if ii == i]

    invariants = []
    top = 0
    cols_done = 0
    while any(a.values()):
        # nonzero entry of least magnitude (ties: lowest row, then column),
        # moved to (top, cols_done)
        (pi, pj), pv = min(a.items(), key=lambda kv: (abs(kv[1]), kv[0]))
        _swap_rows(a, pi, top, ncols)
        _swap_cols(a, pj, cols_done, nrows)
        while True:
            # clear column
            dirty = False
            for i, v in col_entries(cols_done):
                if i == top:
                    continue
                q = v // a[top, cols_done]
                _add_row(a, i, top, -q, ncols)
                if a.get((i, cols_done)):
                    _swap_rows(a, i, top, ncols)
                    dirty = True
            if dirty:
                continue
            # clear row
            for j, v in row_entries(top):
                if j == cols_done:
                    continue
                q = v // a[top, cols_done]
                _add_col(a, j, cols_done, -q, nrows)
                if a.get((top, j)):
                    _swap_cols(a, j, cols_done, nrows)
                    dirty = True
            if not dirty:
                break
        d = abs(a.pop((top, cols_done)))
        invariants.append(d)
        top += 1
        cols_done += 1
    # enforce the divisibility chain
    for i in range(len(invariants)):
        for j in range(i + 1, len(invariants)):
            a_, b_ = invariants[i], invariants[j]
            g = gcd(a_, b_)
            invariants[i], invariants[j] = g, a_ // g * b_
    return invariants


def _swap_rows(a, i1, i2, ncols):
    if i1 == i2:
        return
    for j in range(ncols):
        v1, v2 = a.pop((i1, j), None), a.pop((i2, j), None)
        if v2 is not None:
            a[i1, j] = v2
        if v1 is not None:
            a[i2, j] = v1


def _swap_cols(a, j1, j2, nrows):
    if j1 == j2:
        return
    for i in range(nrows):
        v1, v2 = a.pop((i, j1), None), a.pop((i, j2), None)
        if v2 is not None:
            a[i, j1] = v2
        if v1 is not None:
            a[i, j2] = v1


def _add_row(a, dst, src, k, ncols):
    for j in range(ncols):
        v = a.get((src, j))
        if v:
            w = a.get((dst, j), 0) + k * v
            if w:
                a[dst, j] = w
            else:
                a.pop((dst, j), None)


def _add_col(a, dst, src, k, nrows):
    for i in range(nrows):
        v = a.get((i, src))
        if v:
            w = a.get((i, dst), 0) + k * v
            if w:
                a[i, dst] = w
            else:
                a.pop((i, dst), None)


# ---------------------------------------------------------------------------
# quotient presentations

@dataclass(frozen=True)
class QuotientPresentation:
    free_rank: int
    torsion: tuple  # invariant factors > 1, in divisibility order

    def text(self):
        return f"rank={self.free_rank} torsion=[{','.join(str(d) for d in self.torsion)}]"


def cokernel_of_rows(rows, ncols):
    """Present Z^ncols modulo the row span."""
    lat = RowLattice(ncols)
    for r in rows:
        lat.insert(r)
    basis = lat.basis_rows()
    rank = len(basis)
    # all pivots 1: each relation eliminates one coordinate outright, so the
    # quotient is free and Smith reduction is unnecessary
    if all(r[min(r)] == 1 for r in basis):
        return QuotientPresentation(ncols - rank, ())
    inv = smith_normal_form(basis, rank, ncols)
    torsion = tuple(d for d in inv if d > 1)
    return QuotientPresentation(ncols - len(inv), torsion)


def solve_membership(rows, ncols, target):
    """Express target as an integer combination of the rows, or raise.

    Returns coefficients c (dict row-index -> int) with sum c_i * rows_i ==
    target; raises NotInLattice when impossible.
    """
    for j in target:
        if not (0 <= j < ncols):
            raise DimensionMismatch(f"target column {j} out of range 0..{ncols - 1}")
    hnf_rows, transform = hermite_normal_form(rows, ncols)
    residual = dict(target)
    combo = {}
    for r, tr in zip(hnf_rows, transform):
        j = min(r)
        v = residual.get(j, 0)
        if v % r[j]:
            raise NotInLattice(f"coordinate {j} not divisible by pivot {r[j]}")
        q = v // r[j]
        if q:
            residual = row_add(residual, r, -q)
            combo = row_add(combo, tr, q)
    if residual:
        raise NotInLattice("nonzero residue after reduction")
    return combo


# ---------------------------------------------------------------------------
# Matrix Market I/O (coordinate integer format)

def write_matrix_market(path, rows, nrows, ncols, comment=""):
    entries = [(i + 1, j + 1, v) for i, r in enumerate(rows) for j, v in sorted(r.items()) if v]
    with open(path, "w") as fh:
        fh.write("%%MatrixMarket matrix coordinate integer general\n")
        if comment:
            fh.write(f"% {comment}\n")
        fh.write(f"{nrows} {ncols} {len(entries)}\n")
        for i, j, v in entries:
            fh.write(f"{i} {j} {v}\n")


def read_matrix_market(path):
    """Returns (rows, nrows, ncols)."""
    with open(path) as fh:
        header = fh.readline()
        if "coordinate" not in header or "integer" not in header:
            raise DimensionMismatch("expected coordinate integer Matrix Market data")
        line = fh.readline()
        while line.startswith("%"):
            line = fh.readline()
        nrows, ncols, nnz = map(int, line.split())
        rows = [dict() for _ in range(nrows)]
        for _ in range(nnz):
            i, j, v = fh.readline().split()
            rows[int(i) - 1][int(j) - 1] = int(v)
    return rows, nrows, ncols


__all__ = [
    "QuotientPresentation",
    "RowLattice",
    "cokernel_of_rows",
    "hermite_normal_form",
    "read_matrix_market",
    "row_add",
    "row_scale",
    "smith_normal_form",
    "solve_membership",
    "write_matrix_market",
]
