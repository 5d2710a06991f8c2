"""Exact linear algebra over the rationals.

Two kernels live here.  :func:`rref` is a plain dense Gauss-Jordan reduction
on Fraction rows, used for the many tiny systems (9- and 27-dimensional
tensor spaces, invariant interpolation).  :class:`SparseEchelon` is an
incremental, fraction-free echelon form over the integers for the large sparse
spanning sets that show up in graded pieces of tensor algebras.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(basis, pivots)``: the nonzero reduced rows (as lists of
    Fractions) and their pivot columns.
    """
    m = [[Fraction(v) for v in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : rows @ v == 0}``."""
    basis, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(basis, pivots):
            v[pc] = -row[fc]
        out.append(v)
    return out


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int):
    """One solution of ``rows @ v == rhs`` or None when inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    basis, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    v = [Fraction(0)] * ncols
    for row, pc in zip(basis, pivots):
        v[pc] = row[ncols]
    return v


def _integral(row: Mapping[int, object]) -> dict[int, int]:
    """Scale a sparse rational row to a primitive integer row."""
    items = {c: Fraction(v) for c, v in row.items() if v}
    if not items:
        return {}
    den = lcm(*(v.denominator for v in items.values()))
    ints = {c: int(v * den) for c, v in items.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {c: v // g for c, v in ints.items()}


class SparseEchelon:
    """Incrementally maintained echelon basis of a subspace of Q^n.

    Rows are dicts ``column -> int``.  Each stored row is primitive and is
    keyed by its smallest column (its pivot).  Reduction uses cross
    multiplication followed by content stripping, so no fractions are
    created and coefficient growth stays bounded by the content gcd.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, object]) -> dict[int, int]:
        """Reduce ``row`` until its leading column is not a pivot."""
        r = _integral(row)
        pivots = self.pivots
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                return r
            a, b = r[lead], p[lead]
            # r <- b*r - a*p, then strip content
            g = gcd(a, b)
            a //= g
            b //= g
            out = {c: b * v for c, v in r.items()} if b != 1 else dict(r)
            for c, v in p.items():
                nv = out.get(c, 0) - a * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
            if out:
                cont = 0
                for v in out.values():
                    cont = gcd(cont, v)
                    if cont == 1:
                        break
                if cont > 1:
                    out = {c: v // cont for c, v in out.items()}
            r = out
        return r

    def add(self, row: Mapping[int, object]) -> bool:
        """Insert a row; return True when it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def extend(self, rows: Iterable[Mapping[int, object]]) -> int:
        return sum(self.add(r) for r in rows)

    def contains(self, row: Mapping[int, object]) -> bool:
        return not self.reduce(row)


def sparse_rank(rows: Iterable[Mapping[int, object]]) -> int:
    ech = SparseEchelon()
    ech.extend(rows)
    return ech.rank
