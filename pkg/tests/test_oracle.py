import itertools
import random

import pytest

from cy3.corpus import beta_relations, symmetric
from cy3.exactpoly import parse_form
from cy3.oracle import (
    DegreeCapExceeded,
    QuadraticPresentation,
    central_check,
    graded_dim,
    hilbert_check,
    monomial_dims,
    monomial_presentation,
)
from cy3.tensor3 import LETTERS, hat, relation_space, tensor, w0
from gen import rand_theta

ALL_PAIRS = ["".join(p) for p in itertools.product(LETTERS, repeat=2)]


def test_graded_dim_examples():
    assert graded_dim(relation_space(w0()), 3) == 10
    assert graded_dim(monomial_presentation(["xy", "yz", "zx"]), 3) == 12
    assert graded_dim(monomial_presentation(["xx", "yy", "zz"]), 3) == 12
    assert graded_dim(relation_space(w0()), 0) == 1
    assert graded_dim(relation_space(w0()), 1) == 3


def test_hilbert_examples():
    h = hilbert_check(relation_space(w0()), 7)
    assert h.ok and h.dims == (1, 3, 6, 10, 15, 21, 28, 36)
    assert hilbert_check(monomial_presentation(["xy", "yz", "zx"]), 4).first_mismatch == 3
    h = hilbert_check(relation_space(hat(parse_form("x^3"))), 3)
    assert h.first_mismatch == 2 and h.dims[2] == 8


def test_cap():
    with pytest.raises(DegreeCapExceeded, match="degree cap exceeded"):
        graded_dim(relation_space(w0()), 11)
    with pytest.raises(DegreeCapExceeded):
        hilbert_check(relation_space(w0()), 5, cap=4)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("CY3_DEGREE_CAP", "3")
    with pytest.raises(DegreeCapExceeded):
        graded_dim(relation_space(w0()), 4)


def test_monomial_dims_examples():
    assert monomial_dims(["xy", "yz", "zx"], 4) == 24
    assert monomial_dims([], 3) == 27
    assert monomial_dims(ALL_PAIRS, 2) == 0


def test_oracles_agree_on_random_monomial_sets():
    rng = random.Random(0)
    for _ in range(12):
        avoid = rng.sample(ALL_PAIRS, rng.randint(0, 6))
        P = monomial_presentation(avoid)
        for n in range(0, 6):
            assert graded_dim(P, n) == monomial_dims(avoid, n)


def test_gl_invariance():
    rng = random.Random(1)
    R = relation_space(w0() - hat(parse_form("x*y*z + x^3/3")).scale(2))
    t = rand_theta(rng)
    for n in range(5):
        assert graded_dim(R, n) == graded_dim(R.transform(t), n)


def test_central_examples():
    xx = tensor("xx")
    assert central_check(relation_space(symmetric("x*y*z")), xx)
    assert central_check(relation_space(w0()), tensor("xy"))
    assert not central_check(monomial_presentation(["xy", "yz", "zx"]), xx)
    P = QuadraticPresentation.of(beta_relations(2))
    for sq in ("xx", "yy", "zz"):
        assert central_check(P, tensor(sq))
    with pytest.raises(ValueError):
        central_check(P, tensor("x"))
