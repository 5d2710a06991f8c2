"""Reference superpotentials: normal forms, the nine non-CY algebras, the classification-table grid."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cubiccurve import CubicClass
from .exactpoly import Poly, parse_form
from .tensor3 import TensorN, hat, tensor, w0


@dataclass(frozen=True)
class NormalForm:
    label: str
    kind: CubicClass
    form: str
    starred: bool  # not 3-CY in the symmetric case

    @property
    def f(self) -> Poly:
        return parse_form(self.form)


# the symmetric-case normal forms, one per divisor class
NORMAL_FORMS = (
    NormalForm("|||", CubicClass.TRIPLE_LINE, "x^3", True),
    NormalForm("=|", CubicClass.DOUBLE_LINE_PLUS_LINE, "x^2*y", True),
    NormalForm("*", CubicClass.THREE_CONCURRENT_LINES, "x^3 + y^3", True),
    NormalForm("|o", CubicClass.CONIC_PLUS_TANGENT, "x^2*z + x*y^2", True),
    NormalForm("cusp", CubicClass.CUSP, "x^2*z + y^3/3", True),
    NormalForm("triangle", CubicClass.TRIANGLE, "x*y*z", False),
    NormalForm("conic+chord", CubicClass.CONIC_PLUS_CHORD, "x*y*z + x^3/3", False),
    NormalForm("nodal", CubicClass.NODAL, "x*y*z + (x^3 + y^3)/3", False),
    NormalForm("j=0", CubicClass.SMOOTH, "x^3 + y^3 + z^3", True),
)

NORMAL_FORM = {nf.kind: nf for nf in NORMAL_FORMS}


def beta_form(beta) -> Poly:
    """2xyz + beta/3 (x^3 + y^3 + z^3)."""
    beta = Fraction(beta)
    return parse_form("2*x*y*z") + parse_form("x^3 + y^3 + z^3").scale(beta / 3)


def beta_superpotential(beta) -> TensorN:
    """xyz + zyx + beta/3 (x^3 + y^3 + z^3), whose relations are yz + zy + beta x^2 and cyclic."""
    return hat(beta_form(beta))


def beta_relations(beta) -> list[TensorN]:
    beta = Fraction(beta)
    out = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        out.append(TensorN({(j, k): 1, (k, j): 1, (i, i): beta}))
    return out


def symmetric(f: Poly | str) -> TensorN:
    """The symmetric superpotential hat(f); mu = 0 and wbar = f."""
    return hat(parse_form(f) if isinstance(f, str) else f)


def mixed(mu, f: Poly | str) -> TensorN:
    """mu*w0 + hat(f); it has mu(w) = mu and wbar = f."""
    f = parse_form(f) if isinstance(f, str) else f
    return w0().scale(Fraction(mu)) + (hat(f) if f else TensorN.zero(3))


def afl(f: Poly | str, lam) -> TensorN:
    """w0 - lam*hat(f), whose Jacobian algebra is A_{f,lam}."""
    return mixed(1, (parse_form(f) if isinstance(f, str) else f).scale(-Fraction(lam)))


# the three A_{f,lam} that are not 3-CY: lam = -2 and f = xyz + g
NON_CY_AFL_FORMS = ("x*y*z", "x*y*z + x^3/3", "x*y*z + (x^3 + y^3)/3")


def non_cy_nine() -> list[tuple[str, TensorN]]:
    """One superpotential for each of the nine non-3-CY Jacobian algebras."""
    out = [(f"A({f}, -2)", afl(f, -2)) for f in NON_CY_AFL_FORMS]
    out += [(f"J(hat({nf.form}))", symmetric(nf.form)) for nf in NORMAL_FORMS if nf.starred]
    return out


# Clifford-type superpotentials xyz + zyx + g, g in the boundary normal forms
CLIFFORD_EXAMPLES = {
    CubicClass.TRIANGLE: (tensor("xyz + zyx"), (0, 0, 0)),
    CubicClass.CONIC_PLUS_CHORD: (tensor("xyz + zyx") + symmetric("x^3/3"), (-1, 0, 0)),
    CubicClass.NODAL: (tensor("xyz + zyx") + symmetric("(x^3 + y^3)/3"), (-1, -1, 0)),
}


@dataclass(frozen=True)
class GridCell:
    name: str
    w: TensorN
    expected: bool


def table1_grid() -> list[GridCell]:
    """One or more representatives for every nonempty cell of the classification table."""
    cells = []
    # symmetric column
    for nf in NORMAL_FORMS:
        if nf.kind is CubicClass.SMOOTH:
            continue
        cells.append(GridCell(f"mu=0, {nf.kind.value}", symmetric(nf.form), not nf.starred))
    cells.append(GridCell("mu=0, smooth j!=0", beta_superpotential(2), True))
    cells.append(GridCell("mu=0, smooth j=0", symmetric("x^3 + y^3 + z^3"), False))
    # mu != 0 column
    cells.append(GridCell("mu!=0, P2", w0(), True))
    for nf in NORMAL_FORMS[:5]:
        cells.append(GridCell(f"mu!=0, {nf.kind.value}", mixed(1, nf.form), True))
    # triangle: not CY iff H(f) = 8 mu^2 f, i.e. mu = +-1/2 for f = xyz
    cells.append(GridCell("mu!=0, triangle, H != 8mu^2 f", mixed(1, "x*y*z"), True))
    cells.append(GridCell("mu!=0, triangle, H = 8mu^2 f", mixed(Fraction(1, 2), "x*y*z"), False))
    # conic+chord and nodal: A_{f,lam} with lam^2 = 4 is the bad pair
    for nf in (NORMAL_FORM[CubicClass.CONIC_PLUS_CHORD], NORMAL_FORM[CubicClass.NODAL]):
        cells.append(GridCell(f"mu!=0, {nf.kind.value}, E' not triangle", afl(nf.form, 1), True))
        cells.append(GridCell(f"mu!=0, {nf.kind.value}, E' triangle", afl(nf.form, 2), False))
    cells.append(GridCell("mu!=0, smooth", mixed(1, "x^3 + y^3 + z^3"), True))
    cells.append(GridCell("mu!=0, smooth j!=0", afl(beta_form(2), 1), True))
    return cells
