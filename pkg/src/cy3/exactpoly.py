"""Sparse exact polynomials over the rationals.

The workhorse is :class:`Poly`, a sparse map from exponent tuples to
:class:`fractions.Fraction`.  Ternary forms (three variables, homogeneous)
are the common case, but the class is generic in the number of variables so
that the same code serves the projective-emptiness solver and a handful of
auxiliary computations in four or five variables.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

Rat = Fraction

VARS3 = ("x", "y", "z")


class UndefinedError(ValueError):
    """Raised when an operation has no meaningful value (gcd(0, 0), j of a singular cubic)."""


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(q: Fraction) -> str:
    """Canonical ``p/q`` string (``p`` alone when the denominator is 1)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def monomials(degree: int, nvars: int = 3) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, in descending grlex order."""
    if degree < 0:
        return []
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def _grlex_key(e: tuple[int, ...]):
    return (sum(e), e)


class Poly:
    """Immutable sparse polynomial with rational coefficients.

    >>> x, y, z = Poly.variables()
    >>> str((x + y) ** 2)
    'x^2 + 2*x*y + y^2'
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], object] | None = None, nvars: int = 3):
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(k) for k in e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                if min(e, default=0) < 0:
                    raise ValueError(f"negative exponent in {e}")
                c = as_rat(c)
                if c:
                    clean[e] = clean.get(e, Fraction(0)) + c
                    if not clean[e]:
                        del clean[e]
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "Poly":
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int = 3) -> "Poly":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int = 3) -> "Poly":
        c = as_rat(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int = 3) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): Fraction(1)}, nvars)

    @classmethod
    def variables(cls, nvars: int = 3) -> tuple["Poly", ...]:
        return tuple(cls.variable(i, nvars) for i in range(nvars))

    @classmethod
    def linear(cls, coeffs: Sequence, nvars: int | None = None) -> "Poly":
        n = len(coeffs) if nvars is None else nvars
        return cls({tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)}, n)

    # basic properties -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coeff(self, e: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_coeff(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.terms[max(self.terms, key=_grlex_key)]

    def monic(self) -> "Poly":
        lc = self.leading_coeff()
        return self if not lc else self.scale(1 / lc)

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        return Poly.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        c = as_rat(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw({e: v * c for e, v in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw({e: c for e, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.scale(1 / as_rat(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.constant(other, self.nvars).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __call__(self, *point):
        """Evaluate at a point; entries may be any ring elements supporting + and *."""
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = tuple(point[0])
        if len(point) != self.nvars:
            raise ValueError("wrong number of coordinates")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(point, e):
                if k:
                    term = term * v**k
            total = total + term
        return total

    # printing ---------------------------------------------------------------
    def to_string(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = VARS3 if self.nvars == 3 else tuple(f"t{i}" for i in range(self.nvars))
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = rat_str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{rat_str(a)}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Poly({self.to_string()!r}, nvars={self.nvars})"


TernaryForm = Poly


# --------------------------------------------------------------------------
# calculus

def partial(f: Poly, i: int) -> Poly:
    out = {}
    for e, c in f.terms.items():
        if e[i]:
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c * e[i]
    return Poly._raw(out, f.nvars)


def hessian_matrix(f: Poly) -> list[list[Poly]]:
    first = [partial(f, i) for i in range(f.nvars)]
    return [[partial(first[i], j) for j in range(f.nvars)] for i in range(f.nvars)]


def det(matrix: Sequence[Sequence]):
    """Determinant by cofactor expansion; entries may be Polys or scalars.

    Only used on matrices of size at most 4, where expansion beats elimination
    over a polynomial ring.
    """
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = matrix
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def hessian_det(f: Poly) -> Poly:
    """H(f), the determinant of the matrix of second partials."""
    d = det(hessian_matrix(f))
    return d if isinstance(d, Poly) else Poly.constant(d, f.nvars)


def minors2(matrix: Sequence[Sequence]) -> list:
    """The nine 2x2 minors of a 3x3 matrix."""
    out = []
    for r1, r2 in itertools.combinations(range(3), 2):
        for c1, c2 in itertools.combinations(range(3), 2):
            out.append(matrix[r1][c1] * matrix[r2][c2] - matrix[r1][c2] * matrix[r2][c1])
    return out


# --------------------------------------------------------------------------
# linear changes of variables

def identity3() -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3))


def as_linmap(theta) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(as_rat(v) for v in row) for row in theta)


def matmul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(m)), Fraction(0)) for j in range(p)) for i in range(n))


def substitute(f: Poly, theta) -> Poly:
    """Apply the algebra automorphism determined by ``theta`` on the variables.

    Column ``j`` of ``theta`` holds the image of variable ``j``:
    ``x_j -> sum_i theta[i][j] * x_i``.  This is the left action, so
    ``substitute(substitute(f, b), a) == substitute(f, a @ b)``.
    """
    n = f.nvars
    theta = as_linmap(theta)
    images = [Poly({tuple(int(i == k) for k in range(n)): theta[i][j] for i in range(n)}, n) for j in range(n)]
    powers: dict[tuple[int, int], Poly] = {}

    def pw(j, k):
        if (j, k) not in powers:
            powers[(j, k)] = images[j] ** k
        return powers[(j, k)]

    out = Poly.zero(n)
    for e, c in f.terms.items():
        term = Poly.constant(c, n)
        for j, k in enumerate(e):
            if k:
                term = term * pw(j, k)
        out = out + term
    return out


# --------------------------------------------------------------------------
# gcd, resultants, proportionality (sympy does the heavy lifting)

def _symbols(nvars):
    import sympy

    return sympy.symbols(" ".join(f"v{i}" for i in range(nvars)), seq=True)


def to_sympy(f: Poly):
    import sympy

    gens = _symbols(f.nvars)
    return sympy.Poly.from_dict(
        {e: sympy.Rational(c.numerator, c.denominator) for e, c in f.terms.items()} or {(0,) * f.nvars: 0},
        gens,
        domain=sympy.QQ,
    )


def from_sympy(p, nvars: int) -> Poly:
    terms = {}
    for e, c in p.as_dict().items():
        c = c if not hasattr(c, "p") else Fraction(int(c.p), int(c.q))
        terms[tuple(e)] = Fraction(c)
    return Poly(terms, nvars)


def form_gcd(*forms: Poly) -> Poly:
    """Greatest common divisor, normalized to leading coefficient 1 in grlex order.

    Several arguments are folded with a binary gcd.  Zero arguments are
    ignored; if every argument is zero the gcd is undefined.
    """
    nonzero = [f for f in forms if f]
    if not nonzero:
        raise UndefinedError("gcd undefined")
    nvars = nonzero[0].nvars
    g = reduce(lambda a, b: a.gcd(b), (to_sympy(f) for f in nonzero))
    return from_sympy(g, nvars).monic()


def eliminate(p: Poly, q: Poly, axis: int) -> Poly:
    """Sylvester resultant of ``p`` and ``q`` with respect to variable ``axis``."""
    import sympy

    if not p or not q:
        raise ValueError("eliminate needs nonzero inputs")
    gens = _symbols(p.nvars)
    r = sympy.resultant(to_sympy(p).as_expr(), to_sympy(q).as_expr(), gens[axis])
    r = sympy.Poly(sympy.expand(r), *gens, domain=sympy.QQ)
    return from_sympy(r, p.nvars)


def is_scalar_multiple(f: Poly, g: Poly) -> Fraction | None:
    """Return ``c`` with ``f == c*g``, or None when no such scalar exists."""
    if not g:
        return None
    if not f:
        return Fraction(0)
    if f.terms.keys() != g.terms.keys():
        return None
    e0 = next(iter(g.terms))
    c = f.terms[e0] / g.terms[e0]
    if all(f.terms[e] == c * v for e, v in g.terms.items()):
        return c
    return None


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\*\*|[-+*/^()]))")


def parse_form(text: str, names: Sequence[str] = VARS3) -> Poly:
    """Parse a polynomial such as ``"x*y*z + x^3/3"``.

    Supports ``+ - * / ^ **``, integer literals and parentheses; division is
    only allowed by constants.
    """
    nvars = len(names)
    index = {n: i for i, n in enumerate(names)}
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        num, name, op = m.groups()
        tokens.append(("num", int(num)) if num else ("name", name) if name else ("op", "^" if op == "**" else op))
        pos = m.end()
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        t = tokens[i]
        i += 1
        return t

    def expr():
        out = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term():
        out = unary()
        while True:
            t = peek()
            if t == ("op", "*"):
                take()
                out = out * unary()
            elif t == ("op", "/"):
                take()
                d = unary()
                if d.degree > 0 or not d:
                    raise ValueError("division by a non-constant or zero")
                out = out / d.coeff((0,) * nvars)
            elif t[0] in ("name", "num") or t == ("op", "("):
                out = out * unary()
            else:
                return out

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            return base ** val
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return Poly.constant(val, nvars)
        if kind == "name":
            if val not in index:
                raise ValueError(f"unknown variable {val!r}")
            return Poly.variable(index[val], nvars)
        if (kind, val) == ("op", "("):
            out = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return out
        raise ValueError(f"unexpected token {val!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return result
