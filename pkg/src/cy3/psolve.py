"""Emptiness of projective zero loci by graded linear algebra.

A homogeneous system has no common zero in projective space over the
algebraic closure exactly when its ideal contains every form of some degree.
By Lazard's bound that degree can be taken to be ``t* = d_1 + ... + d_n - (n-1)``
where ``d_1 >= d_2 >= ...`` are the generator degrees, so a single exact rank
computation decides the question.  The verdict is re-checked one degree
higher; a mismatch means a bug, not a borderline case.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .exactpoly import Poly, monomials
from .linalg import SparseEchelon


class InconsistencyError(RuntimeError):
    """Two exact computations that must agree did not."""


@dataclass(frozen=True)
class FormSystem:
    """Homogeneous generators in ``n`` variables; zero generators are dropped."""

    n: int
    gens: tuple[Poly, ...] = field(default_factory=tuple)

    def __post_init__(self):
        kept = []
        for g in self.gens:
            if g.nvars != self.n:
                raise ValueError("generator lives in the wrong ring")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            if g:
                kept.append(g)
        object.__setattr__(self, "gens", tuple(kept))

    @classmethod
    def of(cls, gens: Sequence[Poly], n: int | None = None) -> "FormSystem":
        gens = list(gens)
        if n is None:
            if not gens:
                raise ValueError("cannot infer the number of variables")
            n = gens[0].nvars
        return cls(n, tuple(gens))

    @property
    def degrees(self) -> list[int]:
        return [g.degree for g in self.gens]


def full_dim(n: int, d: int) -> int:
    """Dimension of the space of degree-``d`` forms in ``n`` variables."""
    return comb(d + n - 1, n - 1) if d >= 0 else 0


def ideal_graded_dim(sys: FormSystem, d: int) -> int:
    """Dimension of the degree-``d`` piece of the ideal generated by ``sys``."""
    cols = {e: i for i, e in enumerate(monomials(d, sys.n))}
    ech = SparseEchelon()
    for g in sys.gens:
        k = d - g.degree
        if k < 0:
            continue
        for m in monomials(k, sys.n):
            row = {}
            for e, c in g.terms.items():
                row[cols[tuple(a + b for a, b in zip(e, m))]] = c
            ech.add(row)
            if ech.rank == len(cols):
                return ech.rank
    return ech.rank


def saturation_degree(sys: FormSystem) -> int:
    top = sorted(sys.degrees, reverse=True)[: sys.n]
    return sum(top) - (sys.n - 1)


def has_no_projective_zero(sys: FormSystem) -> bool:
    """True iff the generators have no common zero in P^{n-1} over Q-bar."""
    if not sys.gens:
        raise ValueError("empty generator list")
    if len(sys.gens) < sys.n:
        return False
    t = saturation_degree(sys)
    full_t = ideal_graded_dim(sys, t) == full_dim(sys.n, t)
    full_next = ideal_graded_dim(sys, t + 1) == full_dim(sys.n, t + 1)
    if full_t != full_next:
        raise InconsistencyError(
            f"ideal fullness differs between degrees {t} and {t + 1}; the rank kernel is broken"
        )
    return full_t


def has_common_zero(gens: Sequence[Poly], n: int | None = None) -> bool:
    return not has_no_projective_zero(FormSystem.of(gens, n))
