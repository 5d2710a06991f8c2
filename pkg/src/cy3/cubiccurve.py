"""Plane cubic divisors: classification and the j-invariant.

The degree-4 and degree-6 invariants S and T of a ternary cubic are not
transcribed from the classical literature.  They are recovered as the unique
(up to scale) polynomials in the ten coefficients that have weight zero for
the diagonal torus and are killed by the six root derivations of sl3.  The
j-invariant is then fixed by matching the Hesse pencil
``x^3 + y^3 + z^3 + 3*lam*x*y*z`` against its known j-invariant
``(3*lam*(8 - lam^3)/(1 + lam^3))^3``.
"""
from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactpoly import (
    Poly,
    UndefinedError,
    det,
    form_gcd,
    hessian_det,
    is_scalar_multiple,
    monomials,
    partial,
    substitute,
)
from .linalg import nullspace
from .psolve import FormSystem, InconsistencyError, has_no_projective_zero

CUBIC_MONOMIALS = monomials(3, 3)


class CubicClass(enum.Enum):
    WHOLE_PLANE = "P2"
    TRIPLE_LINE = "triple line"
    DOUBLE_LINE_PLUS_LINE = "double line + line"
    THREE_CONCURRENT_LINES = "three concurrent lines"
    CONIC_PLUS_TANGENT = "conic + tangent line"
    CUSP = "cuspidal cubic"
    TRIANGLE = "triangle"
    CONIC_PLUS_CHORD = "conic + chord"
    NODAL = "nodal cubic"
    SMOOTH = "smooth cubic"

    @property
    def hessian_degenerate(self) -> bool:
        """True for the classes with H^2(f) == 0."""
        return self in H2_ZERO_CLASSES


H2_ZERO_CLASSES = frozenset(
    {
        CubicClass.WHOLE_PLANE,
        CubicClass.TRIPLE_LINE,
        CubicClass.DOUBLE_LINE_PLUS_LINE,
        CubicClass.THREE_CONCURRENT_LINES,
        CubicClass.CONIC_PLUS_TANGENT,
        CubicClass.CUSP,
    }
)
DEGENERATE_FIVE = H2_ZERO_CLASSES - {CubicClass.WHOLE_PLANE}
TRIANGLE_LIKE = frozenset({CubicClass.TRIANGLE, CubicClass.CONIC_PLUS_CHORD, CubicClass.NODAL})


@dataclass(frozen=True)
class CubicType:
    """A divisor class; ``j`` is set only for smooth cubics."""

    kind: CubicClass
    j: Fraction | None = None

    def __str__(self):
        if self.kind is CubicClass.SMOOTH:
            return f"smooth cubic (j = {self.j})"
        return self.kind.value


@dataclass(frozen=True)
class InvariantPair:
    S: Fraction
    T: Fraction
    discriminant: Fraction


# --------------------------------------------------------------------------
# invariants by interpolation

def _weight_zero_monomials(d: int) -> list[tuple[int, ...]]:
    """Exponent vectors (over the 10 cubic coefficients) of torus weight (d, d, d)."""
    out = []
    for combo in itertools.combinations_with_replacement(range(10), d):
        wt = [0, 0, 0]
        for k in combo:
            for v in range(3):
                wt[v] += CUBIC_MONOMIALS[k][v]
        if wt == [d, d, d]:
            e = [0] * 10
            for k in combo:
                e[k] += 1
            out.append(tuple(e))
    return out


def _root_derivation(i: int, j: int):
    """Action of x_i -> x_i + t*x_j on coefficients: a_m -> (m_i + 1) a_{m + e_i - e_j}."""
    index = {m: k for k, m in enumerate(CUBIC_MONOMIALS)}
    images = {}
    for k, m in enumerate(CUBIC_MONOMIALS):
        if m[j] >= 1:
            src = list(m)
            src[i] += 1
            src[j] -= 1
            images[k] = (m[i] + 1, index[tuple(src)])
    return images


@lru_cache(maxsize=None)
def invariant_polynomial(d: int) -> Poly:
    """The SL3-invariant of degree ``d`` (4 or 6) in the cubic's coefficients.

    Coefficients are ordered as :data:`CUBIC_MONOMIALS`; the result is scaled
    to a primitive integer polynomial with positive leading coefficient.
    """
    basis = _weight_zero_monomials(d)
    eqs: dict[tuple, dict[int, Fraction]] = {}
    for i, j in itertools.permutations(range(3), 2):
        images = _root_derivation(i, j)
        for k, e in enumerate(basis):
            for var, mult in enumerate(e):
                if not mult or var not in images:
                    continue
                factor, target = images[var]
                new = list(e)
                new[var] -= 1
                new[target] += 1
                key = (i, j, tuple(new))
                row = eqs.setdefault(key, {})
                row[k] = row.get(k, 0) + mult * factor
    rows = [[r.get(k, 0) for k in range(len(basis))] for r in eqs.values()]
    kernel = nullspace(rows, len(basis))
    if len(kernel) != 1:
        raise InconsistencyError(f"expected a 1-dimensional space of degree-{d} invariants, got {len(kernel)}")
    v = kernel[0]
    from math import gcd, lcm

    den = lcm(*(c.denominator for c in v if c))
    ints = [int(c * den) for c in v]
    g = 0
    for c in ints:
        g = gcd(g, c)
    p = Poly({e: Fraction(c, g) for e, c in zip(basis, ints) if c}, 10)
    if p.leading_coeff() < 0:
        p = -p
    return p


def coefficient_vector(f: Poly) -> list[Fraction]:
    return [f.coeff(m) for m in CUBIC_MONOMIALS]


def hesse_form(lam) -> Poly:
    """x^3 + y^3 + z^3 + 3*lam*x*y*z."""
    lam = Fraction(lam)
    return Poly({(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): 3 * lam}, 3)


def hesse_j(lam) -> Fraction:
    lam = Fraction(lam)
    return (3 * lam * (8 - lam**3) / (1 + lam**3)) ** 3


def _hesse_poly(lam_poly: Poly) -> list[Poly]:
    """Coefficients of the Hesse cubic as polynomials in a parameter."""
    one = Poly.constant(1, lam_poly.nvars)
    zero = Poly.zero(lam_poly.nvars)
    out = []
    for m in CUBIC_MONOMIALS:
        if m in ((3, 0, 0), (0, 3, 0), (0, 0, 3)):
            out.append(one)
        elif m == (1, 1, 1):
            out.append(lam_poly * 3)
        else:
            out.append(zero)
    return out


@dataclass(frozen=True)
class JCalibration:
    """j = c1*S^3 / (c2*S^3 + c3*T^2); the denominator is the discriminant."""

    c1: Fraction
    c2: Fraction
    c3: Fraction


HESSE_SAMPLES = (Fraction(1), Fraction(3), Fraction(1, 2))


@lru_cache(maxsize=None)
def j_calibration(samples: tuple = HESSE_SAMPLES) -> JCalibration:
    """Fit (c1, c2, c3) on the Hesse pencil at ``samples`` and verify the identity in lam exactly."""
    S, T = invariant_polynomial(4), invariant_polynomial(6)
    rows = []
    for lam in samples:
        coeffs = coefficient_vector(hesse_form(lam))
        s, t = S(coeffs), T(coeffs)
        j = hesse_j(lam)
        rows.append([s**3, -j * s**3, -j * t**2])
    kernel = nullspace(rows, 3)
    if len(kernel) != 1:
        raise InconsistencyError("j calibration is not determined by the Hesse samples")
    c1, c2, c3 = kernel[0]
    c1, c2, c3 = Fraction(1), c2 / c1, c3 / c1
    cal = JCalibration(c1, c2, c3)
    if not verify_hesse_identity(cal):
        raise InconsistencyError("calibrated j does not match the Hesse pencil identically")
    return cal


def verify_hesse_identity(cal: JCalibration) -> bool:
    """Check c1*S^3*(1+lam^3)^3 == (3*lam*(8-lam^3))^3 * (c2*S^3 + c3*T^2) in Q[lam]."""
    lam = Poly.variable(0, 1)
    coeffs = _hesse_poly(lam)
    S = invariant_polynomial(4)(coeffs)
    T = invariant_polynomial(6)(coeffs)
    lhs = S**3 * cal.c1 * (lam**3 + 1) ** 3
    rhs = (lam * 3 * (8 - lam**3)) ** 3 * (S**3 * cal.c2 + T**2 * cal.c3)
    return lhs == rhs


def aronhold_invariants(f: Poly) -> InvariantPair:
    if f.nvars != 3 or (f and (f.degree != 3 or not f.is_homogeneous())):
        raise ValueError("aronhold_invariants needs a ternary cubic form")
    v = coefficient_vector(f)
    s = invariant_polynomial(4)(v)
    t = invariant_polynomial(6)(v)
    cal = j_calibration()
    return InvariantPair(Fraction(s), Fraction(t), cal.c2 * s**3 + cal.c3 * t**2)


def discriminant(f: Poly) -> Fraction:
    return aronhold_invariants(f).discriminant


def j_invariant(f: Poly) -> Fraction:
    inv = aronhold_invariants(f)
    if not inv.discriminant:
        raise UndefinedError("j undefined: the cubic is singular")
    return j_calibration().c1 * inv.S**3 / inv.discriminant


# --------------------------------------------------------------------------
# smoothness and linear factors

def is_smooth(f: Poly) -> bool:
    """No common projective zero of the three partial derivatives."""
    if not f:
        return False
    return has_no_projective_zero(FormSystem.of([partial(f, i) for i in range(3)], 3))


def random_gl3(rng: random.Random, lo: int = -3, hi: int = 3):
    while True:
        m = tuple(tuple(Fraction(rng.randint(lo, hi)) for _ in range(3)) for _ in range(3))
        if det(m):
            return m


def _linear_factor_system(g: Poly) -> list[Poly]:
    """Forms in (A, B, C) vanishing exactly where A*x + B*y + C*z divides ``g``.

    Requires g(1, 0, 0) != 0, which keeps every solution off the line A = 0.
    Substituting x = -(B*y + C*z)/A and clearing A^3 gives a binary cubic in
    (y, z) whose four coefficients are cubic forms in (A, B, C).
    """
    # ring: A, B, C, y, z
    A, B, C, y, z = Poly.variables(5)
    xsub = -(B * y + C * z)
    total = Poly.zero(5)
    for (i, j, k), c in g.terms.items():
        total = total + xsub**i * A ** (3 - i) * y**j * z**k * c
    coeffs: dict[tuple[int, int], dict] = {}
    for e, c in total.terms.items():
        key = (e[3], e[4])
        coeffs.setdefault(key, {})[e[:3]] = c
    return [Poly(t, 3) for t in coeffs.values()]


def _has_linear_factor_once(f: Poly, rng: random.Random) -> bool:
    while True:
        theta = random_gl3(rng)
        g = substitute(f, theta)
        if g.coeff((3, 0, 0)):
            break
    system = _linear_factor_system(g)
    at_infinity = [Poly({e[1:]: c for e, c in p.terms.items() if e[0] == 0}, 2) for p in system]
    at_infinity = [p for p in at_infinity if p]
    if not at_infinity or not has_no_projective_zero(FormSystem.of(at_infinity, 2)):
        raise InconsistencyError("linear-factor system has solutions at infinity despite g(1,0,0) != 0")
    return not has_no_projective_zero(FormSystem.of(system, 3))


def has_linear_factor(f: Poly, seed: int = 0) -> bool:
    """True iff ``f`` has a linear factor over the algebraic closure."""
    if not f:
        raise ValueError("has_linear_factor of the zero form")
    rng = random.Random(seed)
    first = _has_linear_factor_once(f, rng)
    second = _has_linear_factor_once(f, rng)
    if first != second:
        raise InconsistencyError("linear-factor tests under two coordinate changes disagree")
    return first


# --------------------------------------------------------------------------
# classification

def is_triangle(f: Poly) -> bool:
    """Zero locus is three non-concurrent lines iff H(f) is a nonzero multiple of f."""
    if not f:
        return False
    c = is_scalar_multiple(hessian_det(f), f)
    return c is not None and c != 0


def cone_class(f: Poly) -> CubicClass:
    """Class of a cubic with vanishing Hessian, read off the gcd of its partials."""
    g = form_gcd(*(partial(f, i) for i in range(3)))
    return {
        2: CubicClass.TRIPLE_LINE,
        1: CubicClass.DOUBLE_LINE_PLUS_LINE,
        0: CubicClass.THREE_CONCURRENT_LINES,
    }[g.degree]


def classify_cubic(f: Poly) -> CubicType:
    """Divisor class of {f = 0} in P^2 (f a ternary cubic, or zero)."""
    if not f:
        return CubicType(CubicClass.WHOLE_PLANE)
    if f.nvars != 3 or f.degree != 3 or not f.is_homogeneous():
        raise ValueError("classify_cubic needs a ternary cubic form")
    h = hessian_det(f)
    if not h:
        return CubicType(cone_class(f))
    if is_smooth(f):
        return CubicType(CubicClass.SMOOTH, j_invariant(f))
    if not hessian_det(h):
        if has_linear_factor(f):
            return CubicType(CubicClass.CONIC_PLUS_TANGENT)
        return CubicType(CubicClass.CUSP)
    if is_triangle(f):
        return CubicType(CubicClass.TRIANGLE)
    if has_linear_factor(f):
        return CubicType(CubicClass.CONIC_PLUS_CHORD)
    return CubicType(CubicClass.NODAL)
