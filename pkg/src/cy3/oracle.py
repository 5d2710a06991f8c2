"""Brute-force graded pieces of quadratic algebras k<x,y,z>/(R).

``graded_dim`` spans the degree-n piece of the two-sided ideal by all
``u (x) r (x) v`` with ``r`` a relation and ``u``, ``v`` words, and takes the
exact rank.  Rows are generated prefix-major so that most of them meet the
current echelon basis already reduced.  ``monomial_dims`` is an independent
transfer-matrix count used to cross-check monomial presentations.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

from .linalg import SparseEchelon
from .tensor3 import LETTERS, RelationSpace, TensorN, word_index, words

DEFAULT_DEGREE_CAP = 10


class DegreeCapExceeded(ValueError):
    """The requested degree is above the configured resource cap."""


def degree_cap() -> int:
    return int(os.environ.get("CY3_DEGREE_CAP", DEFAULT_DEGREE_CAP))


@dataclass(frozen=True)
class QuadraticPresentation:
    relations: RelationSpace

    @classmethod
    def of(cls, rels: Iterable[TensorN] | RelationSpace) -> "QuadraticPresentation":
        if isinstance(rels, RelationSpace):
            return cls(rels)
        return cls(RelationSpace.span(rels))


@dataclass(frozen=True)
class HilbertReport:
    dims: tuple[int, ...]
    target: tuple[int, ...]
    first_mismatch: int | None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def _as_presentation(P) -> QuadraticPresentation:
    return P if isinstance(P, QuadraticPresentation) else QuadraticPresentation.of(P)


def ideal_rows(P: QuadraticPresentation, n: int):
    """Sparse rows u (x) r (x) v spanning the degree-n piece of the ideal."""
    rels = [r.sparse() for r in P.relations]
    for i in range(n - 1):  # prefix length
        j = n - 2 - i
        for u in words(i):
            base = word_index(u) * 9
            for v in words(j):
                vi = word_index(v)
                shift = 3**j
                for r in rels:
                    yield {(base + c) * shift + vi: a for c, a in r.items()}


def graded_dim(P, n: int, cap: int | None = None) -> int:
    """dim of the degree-``n`` piece of TV/(R)."""
    P = _as_presentation(P)
    cap = degree_cap() if cap is None else cap
    if n > cap:
        raise DegreeCapExceeded(f"degree cap exceeded: {n} > {cap}")
    if n < 0:
        raise ValueError("negative degree")
    if n < 2 or not P.relations.dim:
        return 3**n
    ech = SparseEchelon()
    total = 3**n
    for row in ideal_rows(P, n):
        ech.add(row)
        if ech.rank == total:
            break
    return total - ech.rank


def hilbert_target(n: int) -> int:
    return comb(n + 2, 2)


def hilbert_check(P, N: int, cap: int | None = None) -> HilbertReport:
    """Graded dimensions for degrees 0..N against those of a polynomial ring in 3 variables."""
    P = _as_presentation(P)
    cap = degree_cap() if cap is None else cap
    if N > cap:
        raise DegreeCapExceeded(f"degree cap exceeded: {N} > {cap}")
    dims, first = [], None
    for n in range(N + 1):
        d = graded_dim(P, n, cap)
        dims.append(d)
        if first is None and d != hilbert_target(n):
            first = n
    return HilbertReport(tuple(dims), tuple(hilbert_target(n) for n in range(N + 1)), first)


def _degree3_ideal(P: QuadraticPresentation) -> SparseEchelon:
    ech = SparseEchelon()
    ech.extend(ideal_rows(P, 3))
    return ech


def central_check(P, g: TensorN) -> bool:
    """True iff the degree-2 element ``g`` commutes with x, y, z modulo the relations."""
    P = _as_presentation(P)
    if g.m != 2:
        raise ValueError("central_check expects a degree-2 tensor")
    ech = _degree3_ideal(P)
    for i in range(3):
        v = TensorN.letter(i)
        comm = g.otimes(v) - v.otimes(g)
        if not ech.contains(comm.sparse()):
            return False
    return True


def _factor_pairs(avoided: Iterable) -> set[tuple[int, int]]:
    out = set()
    for f in avoided:
        if isinstance(f, str):
            f = tuple(LETTERS.index(ch) for ch in f)
        if len(f) != 2:
            raise ValueError("avoided factors must be length-2 words")
        out.add(tuple(f))
    return out


def monomial_dims(avoided: Iterable, n: int) -> int:
    """Number of length-``n`` words avoiding the given length-2 factors."""
    bad = _factor_pairs(avoided)
    if n == 0:
        return 1
    T = np.array([[0 if (a, b) in bad else 1 for b in range(3)] for a in range(3)], dtype=object)
    v = np.ones(3, dtype=object)
    for _ in range(n - 1):
        v = T @ v
    return int(v.sum())


def monomial_presentation(avoided: Iterable) -> QuadraticPresentation:
    return QuadraticPresentation.of(TensorN({f if isinstance(f, str) else tuple(f): 1}) for f in avoided)
