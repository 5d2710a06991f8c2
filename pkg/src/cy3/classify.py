"""Deciding whether J(w) is 3-Calabi-Yau.

Three independent procedures are implemented and are expected to agree:

* ``table1_verdict`` reads the answer off (mu(w), class of {wbar = 0});
* ``rank_one_verdict`` asks whether R_w contains a nonzero tensor u (x) v;
* ``atv_verdict`` checks standardness and that the 2x2 minors of the
  presentation matrix have no common zero in P^2.

``crosscheck`` runs all three plus the Hilbert-series oracle, which can only
refute.  Everything is computed on cyc(w).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cubiccurve import (
    DEGENERATE_FIVE,
    CubicClass,
    CubicType,
    classify_cubic,
)
from .exactpoly import Poly, as_linmap, as_rat, det, hessian_det, hessian_matrix, minors2
from .linalg import solve
from .oracle import HilbertReport, QuadraticPresentation, central_check, hilbert_check
from .psolve import FormSystem, InconsistencyError, has_no_projective_zero
from .tensor3 import (
    RelationSpace,
    TensorN,
    bar,
    cyc,
    is_standard,
    m_matrix,
    matrix_in_sv,
    mu,
    relation_space,
)


class NotCalabiYauInput(ValueError):
    """Raised for w = 0, whose Jacobian algebra is the free algebra."""


class CliffordShapeError(ValueError):
    pass


def _canonical(w: TensorN) -> TensorN:
    if w.m != 3:
        raise ValueError("a superpotential has degree 3")
    if not w:
        raise NotCalabiYauInput("J(0) = TV, not 3-CY")
    return cyc(w)


# --------------------------------------------------------------------------
# classification table

@dataclass(frozen=True)
class Verdict:
    value: bool
    reasons: tuple[str, ...] = ()

    def __bool__(self):
        return self.value


def table1_verdict(w: TensorN) -> Verdict:
    """Verdict from mu(w) and the divisor class of wbar."""
    w = _canonical(w)
    m = mu(w)
    f = bar(w)
    ct = classify_cubic(f)
    kind = ct.kind
    head = f"mu = {m}, E = {{wbar = 0}} is {ct}"
    if m == 0:
        if kind is CubicClass.WHOLE_PLANE or kind in DEGENERATE_FIVE:
            return Verdict(False, (head, f"symmetric case: {kind.value} is never 3-CY"))
        if kind is CubicClass.SMOOTH:
            if ct.j == 0:
                return Verdict(False, (head, "symmetric case: smooth with j = 0 is not 3-CY"))
            return Verdict(True, (head, "symmetric case: smooth with j != 0 is 3-CY"))
        return Verdict(True, (head, f"symmetric case: {kind.value} is 3-CY"))
    if kind is CubicClass.WHOLE_PLANE or kind in DEGENERATE_FIVE:
        return Verdict(True, (head, f"mu != 0: {kind.value} is always 3-CY"))
    if kind is CubicClass.SMOOTH:
        return Verdict(True, (head, "mu != 0: smooth E is always 3-CY"))
    h = hessian_det(f)
    if kind is CubicClass.TRIANGLE:
        if h == f.scale(8 * m * m):
            return Verdict(False, (head, "triangle with H(wbar) = 8*mu^2*wbar: not 3-CY"))
        return Verdict(True, (head, "triangle with H(wbar) != 8*mu^2*wbar: 3-CY"))
    e_prime = h + f.scale(24 * m * m)
    pk = classify_cubic(e_prime).kind
    if pk is CubicClass.TRIANGLE:
        return Verdict(False, (head, f"{kind.value}: H(wbar) + 24*mu^2*wbar is a triangle, not 3-CY"))
    return Verdict(True, (head, f"{kind.value}: H(wbar) + 24*mu^2*wbar is {pk.value}, 3-CY"))


# --------------------------------------------------------------------------
# rank-one criterion

def _dimension_reason(r: int) -> str:
    return (
        f"dim R_w = {r} < 3: the degree-2 piece has dimension {9 - r} > 6, "
        "so the Hilbert series is not (1-t)^-3"
    )


def pencil_minors(R: RelationSpace) -> list[Poly]:
    """The nine 2x2 minors of a1*N1 + a2*N2 + a3*N3 as quadrics in (a1, a2, a3)."""
    mats = R.matrices()
    a = Poly.variables(len(mats))
    comb = [[sum((a[k].scale(mats[k][i][j]) for k in range(len(mats))), Poly.zero(len(mats)))
             for j in range(3)] for i in range(3)]
    return minors2(comb)


def rank_one_verdict(w: TensorN) -> Verdict:
    """True iff R_w has dimension 3 and contains no nonzero rank-one tensor."""
    R = relation_space(_canonical(w))
    if R.dim < 3:
        return Verdict(False, (_dimension_reason(R.dim),))
    gens = [p for p in pencil_minors(R) if p]
    if not gens or not has_no_projective_zero(FormSystem.of(gens, 3)):
        return Verdict(False, ("R_w contains a nonzero product u (x) v of degree-one elements",))
    return Verdict(True, ("R_w contains no rank-one tensor",))


# --------------------------------------------------------------------------
# ATV criterion

def atv_verdict(w: TensorN) -> Verdict:
    """Standard and the minors of the presentation matrix have no common zero."""
    w = _canonical(w)
    R = relation_space(w)
    if R.dim < 3:
        return Verdict(False, (_dimension_reason(R.dim),))
    if not is_standard(w):
        return Verdict(False, ("not standard: x^T M does not span R_w",))
    gens = [p for p in minors2(matrix_in_sv(m_matrix(w))) if p]
    if not gens or not has_no_projective_zero(FormSystem.of(gens, 3)):
        return Verdict(False, ("the 2x2 minors of M have a common zero in P^2",))
    return Verdict(True, ("standard, and M has rank >= 2 at every point of P^2",))


# --------------------------------------------------------------------------
# point scheme

def point_scheme(w: TensorN) -> Poly:
    """H(wbar) + 24*mu^2*wbar."""
    w = _canonical(w)
    m = mu(w)
    f = bar(w)
    return hessian_det(f) + f.scale(24 * m * m)


def skew_matrix() -> list[list[Poly]]:
    x, y, z = Poly.variables(3)
    o = Poly.zero(3)
    return [[o, z, -y], [-z, o, x], [y, -x, o]]


def afl_matrix(f: Poly, lam) -> list[list[Poly]]:
    """lam/2 * Hessian matrix of f + the skew matrix; its rows times x give the relations of A_{f,lam}."""
    lam = as_rat(lam)
    hm = hessian_matrix(f) if f else [[Poly.zero(3)] * 3 for _ in range(3)]
    B = skew_matrix()
    return [[hm[i][j].scale(lam / 2) + B[i][j] for j in range(3)] for i in range(3)]


def point_scheme_matrix(w: TensorN) -> list[list[Poly]]:
    """M-bar used for the point scheme.

    In the symmetric case this is ``m_matrix(w)`` (a sixth of the Hessian
    matrix).  Otherwise it is a third of the presentation matrix of
    A_{wbar, -1/mu}.
    """
    w = _canonical(w)
    m = mu(w)
    if m == 0:
        return matrix_in_sv(m_matrix(w))
    P = afl_matrix(bar(w), -1 / m)
    return [[e.scale(Fraction(1, 3)) for e in row] for row in P]


def point_scheme_kappa(w: TensorN) -> Fraction:
    m = mu(_canonical(w))
    return Fraction(1, 216) if m == 0 else -1 / (216 * m**3)


def sym_skew_coefficient(A, B):
    """The coefficient c with det(lam*A + B) = det(A)*lam^3 + c*lam.

    ``A`` symmetric, ``B`` skew; c = b^T A b with b = (B23, B31, B12).
    """
    b = [B[1][2], B[2][0], B[0][1]]
    return sum((b[i] * A[i][j] * b[j] for i in range(3) for j in range(3)), 0 * b[0])


# --------------------------------------------------------------------------
# Clifford structure

@dataclass(frozen=True)
class CliffordData:
    a: Fraction
    b: Fraction
    c: Fraction
    relations: tuple[TensorN, ...]


def _clifford_target(i: int, coeff) -> TensorN:
    j, k = (i + 1) % 3, (i + 2) % 3
    return TensorN({(j, k): 1, (k, j): 1, (i, i): -coeff})


def verify_clifford(w: TensorN, theta=None) -> CliffordData:
    """Read (a, b, c) off theta(R_w) = span{yz+zy-a x^2, zx+xz-b y^2, xy+yx-c z^2}."""
    w = _canonical(w)
    if mu(w) != 0:
        raise ValueError("Clifford form needs mu(w) = 0")
    theta = as_linmap(theta) if theta is not None else None
    R = relation_space(w)
    if theta is not None:
        if det(theta) == 0:
            raise ValueError("theta is not invertible")
        R = R.transform(theta)
    if R.dim != 3:
        raise CliffordShapeError("not in Clifford form under theta")
    coeffs = []
    for i in range(3):
        cand = _pattern_element(R, i)
        if cand is None or _clifford_target(i, -cand.coeff((i, i))) != cand:
            raise CliffordShapeError("not in Clifford form under theta")
        coeffs.append(-cand.coeff((i, i)))
    a, b, c = coeffs
    if a * b * c == -1:
        raise InconsistencyError("abc = -1 contradicts a 3-CY input")
    rels = tuple(_clifford_target(i, coeffs[i]) for i in range(3))
    P = QuadraticPresentation.of(R)
    for i in range(3):
        sq = TensorN({(i, i): 1})
        if not central_check(P, sq):
            raise InconsistencyError(f"{'xyz'[i]}^2 is not central")
    return CliffordData(a, b, c, rels)


def _pattern_element(R: RelationSpace, i: int) -> TensorN | None:
    """The element of R whose (y,z), (z,x), (x,y) coordinates are the i-th unit vector."""
    rows = [[b.coeff(p) for b in R.basis] for p in ((1, 2), (2, 0), (0, 1))]
    sol = solve(rows, [int(n == i) for n in range(3)], R.dim)
    if sol is None:
        return None
    return sum((b.scale(s) for b, s in zip(R.basis, sol)), TensorN.zero(2))


# --------------------------------------------------------------------------
# the harness

@dataclass
class ClassificationReport:
    w: TensorN
    mu: Fraction
    wbar: Poly
    curve_class: CubicType
    table1_verdict: bool
    rank_one_verdict: bool
    atv_verdict: bool
    hilbert: HilbertReport | None
    point_scheme: Poly | None
    agreement: bool
    reasons: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.table1_verdict

    @property
    def hilbert_ok(self) -> bool | None:
        return None if self.hilbert is None else self.hilbert.ok


def classify(w: TensorN) -> ClassificationReport:
    """Classification-table verdict only (the other fields mirror it)."""
    return crosscheck(w, None, only_table1=True)


def crosscheck(w: TensorN, N: int | None = 6, only_table1: bool = False) -> ClassificationReport:
    c = _canonical(w)
    t1 = table1_verdict(c)
    reasons = list(t1.reasons)
    if only_table1:
        r1 = atv = t1
    else:
        r1 = rank_one_verdict(c)
        atv = atv_verdict(c)
        reasons += [f"rank-one: {s}" for s in r1.reasons]
        reasons += [f"ATV: {s}" for s in atv.reasons]
    hil = None
    if N is not None and not only_table1:
        hil = hilbert_check(relation_space(c), N)
        if hil.ok:
            reasons.append(f"Hilbert series matches (1-t)^-3 up to degree {N}")
        else:
            reasons.append(f"Hilbert series differs from (1-t)^-3 in degree {hil.first_mismatch}")
    agree = bool(t1) == bool(r1) == bool(atv)
    if agree and bool(t1) and hil is not None and not hil.ok:
        agree = False
    if not agree:
        reasons.append("DISAGREEMENT between procedures that must be equivalent")
    f = bar(c)
    return ClassificationReport(
        w=c,
        mu=mu(c),
        wbar=f,
        curve_class=classify_cubic(f),
        table1_verdict=bool(t1),
        rank_one_verdict=bool(r1),
        atv_verdict=bool(atv),
        hilbert=hil,
        point_scheme=point_scheme(c) if t1 else None,
        agreement=agree,
        reasons=reasons,
    )
