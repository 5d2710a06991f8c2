"""Tensors on a 3-dimensional space V with basis x, y, z.

Elements of V^{(x)m} are stored sparsely as maps from words (tuples over
{0, 1, 2}) to Fractions.  This module carries the S3 action, the idempotents
``cyc`` and ``sym``, the alternating element ``w0`` and the scalar ``mu``,
cyclic partial derivatives, the symmetrization/projection pair ``hat``/``bar``
and the relation space of a superpotential.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

from .exactpoly import Poly, as_linmap, as_rat, partial, rat_str
from .linalg import rref

LETTERS = "xyz"


def _word(w) -> tuple[int, ...]:
    if isinstance(w, str):
        try:
            return tuple(LETTERS.index(ch) for ch in w)
        except ValueError:
            raise ValueError(f"word {w!r} is not over the alphabet 'xyz'") from None
    return tuple(int(i) for i in w)


def word_str(w: Sequence[int]) -> str:
    return "".join(LETTERS[i] for i in w)


def word_index(w: Sequence[int]) -> int:
    """Position of ``w`` in the lexicographic order of words of its length."""
    k = 0
    for i in w:
        k = 3 * k + i
    return k


def words(m: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(3), repeat=m))


class TensorN:
    """An element of V^{(x)m}.

    >>> str(TensorN({"xy": 1, "yx": -1}))
    'xy - yx'
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, coeffs: Mapping | None = None, m: int | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        for w, c in (coeffs or {}).items():
            w = _word(w)
            if m is None:
                m = len(w)
            if len(w) != m:
                raise ValueError(f"word {word_str(w)} does not have length {m}")
            c = as_rat(c)
            if c:
                v = clean.get(w, 0) + c
                if v:
                    clean[w] = v
                else:
                    clean.pop(w, None)
        if m is None:
            raise ValueError("degree of the zero tensor must be given")
        self.m = m
        self.coeffs = clean

    @classmethod
    def _raw(cls, coeffs, m):
        t = object.__new__(cls)
        t.m = m
        t.coeffs = coeffs
        return t

    @classmethod
    def zero(cls, m: int) -> "TensorN":
        return cls._raw({}, m)

    @classmethod
    def letter(cls, i: int) -> "TensorN":
        return cls._raw({(i,): Fraction(1)}, 1)

    @classmethod
    def from_vector(cls, vec: Sequence, m: int) -> "TensorN":
        return cls._raw({w: Fraction(c) for w, c in zip(words(m), vec) if c}, m)

    def vector(self) -> list[Fraction]:
        v = [Fraction(0)] * 3**self.m
        for w, c in self.coeffs.items():
            v[word_index(w)] = c
        return v

    def sparse(self) -> dict[int, Fraction]:
        return {word_index(w): c for w, c in self.coeffs.items()}

    def coeff(self, w) -> Fraction:
        return self.coeffs.get(_word(w), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if not isinstance(other, TensorN):
            raise TypeError("expected a tensor")
        if other.m != self.m:
            raise ValueError("tensor degrees differ")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return TensorN._raw(out, self.m)

    def __neg__(self):
        return TensorN._raw({w: -c for w, c in self.coeffs.items()}, self.m)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorN":
        c = as_rat(c)
        if not c:
            return TensorN.zero(self.m)
        return TensorN._raw({w: v * c for w, v in self.coeffs.items()}, self.m)

    def __mul__(self, c):
        if isinstance(c, TensorN):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(1 / as_rat(c))

    def otimes(self, other: "TensorN") -> "TensorN":
        out = {}
        for w1, c1 in self.coeffs.items():
            for w2, c2 in other.coeffs.items():
                out[w1 + w2] = c1 * c2
        return TensorN._raw(out, self.m + other.m)

    __matmul__ = otimes

    def __eq__(self, other):
        if not isinstance(other, TensorN):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, frozenset(self.coeffs.items())))

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = ""
        for w, c in sorted(self.coeffs.items()):
            a = abs(c)
            body = word_str(w) if a == 1 else f"{rat_str(a)}*{word_str(w)}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"TensorN({str(self)!r})"


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?([xyz]+)\s*")


def parse_tensor(text: str) -> TensorN:
    """Parse a linear combination of words such as ``"xyz - 1/2*zyx"``."""
    pos, coeffs, m = 0, {}, None
    text = text.strip()
    if not text:
        raise ValueError("empty tensor expression")
    while pos < len(text):
        mt = _TERM.match(text, pos)
        if not mt or mt.end() == pos or (pos and not mt.group(1)):
            raise ValueError(f"cannot parse tensor expression at {text[pos:]!r}")
        sign = -1 if mt.group(1) == "-" else 1
        c = Fraction(mt.group(2) or 1) * sign
        wd = _word(mt.group(3))
        if m is not None and len(wd) != m:
            raise ValueError("words of different lengths")
        m = len(wd)
        coeffs[wd] = coeffs.get(wd, 0) + c
        pos = mt.end()
    return TensorN(coeffs, m)


def tensor(spec: Mapping | str) -> TensorN:
    """Build a tensor from ``{"xyz": 1, ...}`` or an expression like ``"xyz + zyx"``."""
    if isinstance(spec, str):
        return parse_tensor(spec)
    return TensorN(spec)


X, Y, Z = (TensorN.letter(i) for i in range(3))


# --------------------------------------------------------------------------
# group actions

def apply_gl(w: TensorN, theta) -> TensorN:
    """theta^{(x)m}(w), with column ``j`` of ``theta`` the image of letter ``j``."""
    theta = as_linmap(theta)
    images = [{i: theta[i][j] for i in range(3) if theta[i][j]} for j in range(3)]
    out: dict[tuple[int, ...], Fraction] = {}
    for wd, c in w.coeffs.items():
        partial_words = {(): c}
        for letter in wd:
            nxt = {}
            for pre, v in partial_words.items():
                for i, a in images[letter].items():
                    key = pre + (i,)
                    nxt[key] = nxt.get(key, 0) + v * a
            partial_words = nxt
        for key, v in partial_words.items():
            out[key] = out.get(key, 0) + v
    return TensorN._raw({k: v for k, v in out.items() if v}, w.m)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """The permutation ``sigma o tau``."""
    return tuple(sigma[tau[i]] for i in range(len(tau)))


def s3_act(sigma: Sequence[int], w: TensorN) -> TensorN:
    """Permute tensor slots: the letter in slot ``i`` moves to slot ``sigma[i]``.

    With this (left) convention ``s3_act(s, s3_act(t, w)) == s3_act(compose(s, t), w)``.
    """
    if w.m != 3:
        raise ValueError("the S3 action is defined on V^(x)3 only")
    return _permute(sigma, w)


def _permute(sigma, w):
    out = {}
    for wd, c in w.coeffs.items():
        new = [0] * len(wd)
        for i, letter in enumerate(wd):
            new[sigma[i]] = letter
        new = tuple(new)
        out[new] = out.get(new, 0) + c
    return TensorN._raw({k: v for k, v in out.items() if v}, w.m)


def sign(sigma: Sequence[int]) -> int:
    s = 1
    for i, j in itertools.combinations(range(len(sigma)), 2):
        if sigma[i] > sigma[j]:
            s = -s
    return s


S3 = tuple(itertools.permutations(range(3)))


def rotate(w: TensorN) -> TensorN:
    """phi: move the last letter of every word to the front."""
    return TensorN._raw({wd[-1:] + wd[:-1]: c for wd, c in w.coeffs.items()}, w.m)


def cyc(w: TensorN) -> TensorN:
    """The cyclic average (1/m) sum_j phi^j(w)."""
    total = TensorN.zero(w.m)
    cur = w
    for _ in range(w.m):
        total = total + cur
        cur = rotate(cur)
    return total / w.m if w.m else w


def sym(w: TensorN) -> TensorN:
    """Full symmetrization (1/m!) sum over all slot permutations."""
    total = TensorN.zero(w.m)
    for sigma in itertools.permutations(range(w.m)):
        total = total + _permute(sigma, w)
    return total / factorial(w.m)


def w0() -> TensorN:
    """The alternating tensor 2(c - s)(xyz)."""
    third = Fraction(1, 3)
    pos = {"xyz": third, "yzx": third, "zxy": third}
    neg = {"zyx": -third, "xzy": -third, "yxz": -third}
    return TensorN({**pos, **neg})


def mu(w: TensorN) -> Fraction:
    """The scalar with cyc(w) - sym(w) == mu(w) * w0()."""
    if w.m != 3:
        raise ValueError("mu is defined on V^(x)3 only")
    diff = cyc(w) - sym(w)
    return diff.coeff((0, 1, 2)) * 3


# --------------------------------------------------------------------------
# symmetric algebra

def bar(w: TensorN) -> Poly:
    """Image in the symmetric algebra."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for wd, c in w.coeffs.items():
        e = (wd.count(0), wd.count(1), wd.count(2))
        terms[e] = terms.get(e, 0) + c
    return Poly(terms, 3)


def hat(f: Poly, m: int | None = None) -> TensorN:
    """The unique symmetric tensor whose image in SV is ``f`` (homogeneous)."""
    if f.nvars != 3:
        raise ValueError("hat needs a form in x, y, z")
    if not f.is_homogeneous():
        raise ValueError("hat needs a homogeneous form")
    if m is None:
        if not f:
            raise ValueError("degree of hat(0) must be given")
        m = f.degree
    if f and f.degree != m:
        raise ValueError("form degree does not match m")
    out = {}
    for e, c in f.terms.items():
        letters = [0] * e[0] + [1] * e[1] + [2] * e[2]
        arrangements = set(itertools.permutations(letters))
        share = c / len(arrangements)
        for wd in arrangements:
            out[wd] = share
    return TensorN._raw(out, m)


# --------------------------------------------------------------------------
# derivatives

def epsilon(w: TensorN, i: int) -> TensorN:
    """Strip a leading letter ``i`` (words starting otherwise are dropped)."""
    return TensorN._raw({wd[1:]: c for wd, c in w.coeffs.items() if wd and wd[0] == i}, w.m - 1)


def cyclic_partial(w: TensorN, i: int) -> TensorN:
    """Sum of ``v u`` over all factorizations ``word = u x_i v``."""
    if w.m < 1:
        raise ValueError("cyclic derivative of a degree-0 tensor")
    out: dict[tuple[int, ...], Fraction] = {}
    for wd, c in w.coeffs.items():
        for k, letter in enumerate(wd):
            if letter == i:
                key = wd[k + 1:] + wd[:k]
                out[key] = out.get(key, 0) + c
    return TensorN._raw({k: v for k, v in out.items() if v}, w.m - 1)


def cyclic_gradient(w: TensorN) -> list[TensorN]:
    return [cyclic_partial(w, i) for i in range(3)]


# --------------------------------------------------------------------------
# relation spaces

class RelationSpace:
    """A subspace of V (x) V in canonical reduced echelon form.

    Coordinates are the nine words in lexicographic order, so two spaces are
    equal exactly when their stored bases are equal.
    """

    __slots__ = ("basis",)

    def __init__(self, basis: tuple[TensorN, ...]):
        self.basis = basis

    @classmethod
    def span(cls, tensors: Iterable[TensorN]) -> "RelationSpace":
        rows = []
        for t in tensors:
            if t.m != 2:
                raise ValueError("relations must have degree 2")
            rows.append(t.vector())
        ech, _ = rref(rows, 9) if rows else ([], [])
        return cls(tuple(TensorN.from_vector(r, 2) for r in ech))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __eq__(self, other):
        if not isinstance(other, RelationSpace):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __contains__(self, t: TensorN) -> bool:
        return RelationSpace.span(self.basis + (t,)).dim == self.dim

    def transform(self, theta) -> "RelationSpace":
        return RelationSpace.span(apply_gl(b, theta) for b in self.basis)

    def matrices(self) -> list[list[list[Fraction]]]:
        """Each basis relation sum r_ij x_i x_j as the 3x3 matrix (r_ij)."""
        out = []
        for b in self.basis:
            out.append([[b.coeff((i, j)) for j in range(3)] for i in range(3)])
        return out

    def is_symmetric(self) -> bool:
        """True when every relation is a symmetric tensor."""
        return all(b.coeff((i, j)) == b.coeff((j, i)) for b in self.basis for i in range(3) for j in range(3))

    def symmetric_part_dim(self) -> int:
        """dim (R intersect Sym^2 V)."""
        # R cap Sym^2 = kernel of the antisymmetrization restricted to R
        rows = []
        for i in range(3):
            for j in range(i + 1, 3):
                rows.append([b.coeff((i, j)) - b.coeff((j, i)) for b in self.basis])
        if not self.basis:
            return 0
        from .linalg import rank

        return self.dim - rank(rows, self.dim)

    def __str__(self):
        return "span{" + ", ".join(str(b) for b in self.basis) + "}"

    def __repr__(self):
        return f"RelationSpace({str(self)})"


def relation_space(w: TensorN) -> RelationSpace:
    """R_w, the span of the three cyclic partial derivatives of ``w``."""
    if w.m != 3:
        raise ValueError("relation_space needs a degree-3 tensor")
    return RelationSpace.span(cyclic_gradient(w))


def relations_afl(f: Poly, lam) -> RelationSpace:
    """Relations xy - yx = lam*hat(f_z) and cyclic, for a cubic ``f``."""
    lam = as_rat(lam)
    grad = [partial(f, i) for i in range(3)]
    rels = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        comm = TensorN._raw({(j, k): Fraction(1), (k, j): Fraction(-1)}, 2)
        rels.append(comm - hat(grad[i], 2).scale(lam))
    return RelationSpace.span(rels)


# --------------------------------------------------------------------------
# presentation matrices

def m_matrix(w: TensorN) -> list[list[TensorN]]:
    """The 3x3 matrix of linear forms with cyc(w) == x^T M x."""
    if w.m != 3:
        raise ValueError("m_matrix needs a degree-3 tensor")
    c = cyc(w)
    out = [[TensorN.zero(1) for _ in range(3)] for _ in range(3)]
    for (i, k, j), v in c.coeffs.items():
        out[i][j] = out[i][j] + TensorN.letter(k).scale(v)
    return out


def m_times_x(M) -> list[TensorN]:
    """Entries of M x: sum_j M_ij (x) x_j."""
    return [sum((M[i][j].otimes(TensorN.letter(j)) for j in range(3)), TensorN.zero(2)) for i in range(3)]


def x_times_m(M) -> list[TensorN]:
    """Entries of x^T M: sum_i x_i (x) M_ij."""
    return [sum((TensorN.letter(i).otimes(M[i][j]) for i in range(3)), TensorN.zero(2)) for j in range(3)]


def xmx(M) -> TensorN:
    """x^T M x as a degree-3 tensor."""
    return sum((TensorN.letter(i).otimes(r) for i, r in enumerate(m_times_x(M))), TensorN.zero(3))


def linear_form(t: TensorN) -> Poly:
    """A degree-1 tensor read as a linear form in SV."""
    return bar(t) if t else Poly.zero(3)


def matrix_in_sv(M) -> list[list[Poly]]:
    return [[linear_form(e) for e in row] for row in M]


def is_standard(w: TensorN) -> bool:
    """dim R_w == 3 and the entries of x^T M also span R_w."""
    R = relation_space(w)
    if R.dim != 3:
        return False
    return RelationSpace.span(x_times_m(m_matrix(w))) == R
