import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cy3.exactpoly import Poly, det, parse_form, partial, substitute
from cy3.tensor3 import (
    S3,
    RelationSpace,
    TensorN,
    apply_gl,
    bar,
    compose,
    cyc,
    cyclic_partial,
    hat,
    is_standard,
    m_matrix,
    m_times_x,
    matrix_in_sv,
    mu,
    relation_space,
    relations_afl,
    rotate,
    s3_act,
    sign,
    sym,
    tensor,
    w0,
    x_times_m,
    xmx,
)
from gen import rand_form, rand_rat, rand_tensor, rand_theta

P = parse_form
x, y, z = Poly.variables(3)


def test_tensor_parsing_and_printing():
    t = tensor("xyz - 1/2*zyx")
    assert t.coeff("zyx") == Fraction(-1, 2)
    assert str(t) == "xyz - 1/2*zyx"
    assert tensor(str(t)) == t
    with pytest.raises(ValueError):
        tensor("xy + xyz")


def test_s3_action():
    w = tensor("xyz")
    assert s3_act((0, 1, 2), w) == w
    assert s3_act((1, 2, 0), w) == tensor("zxy")
    with pytest.raises(ValueError):
        s3_act((0, 1, 2), tensor("xy"))


def test_s3_group_law():
    rng = random.Random(0)
    w = rand_tensor(rng)
    for s, t in itertools.product(S3, S3):
        assert s3_act(s, s3_act(t, w)) == s3_act(compose(s, t), w)


def test_idempotents_on_w0():
    assert cyc(w0()) == w0()
    assert not sym(w0())
    assert w0().coeff("xyz") == Fraction(1, 3) and w0().coeff("zyx") == Fraction(-1, 3)
    for s in S3:
        assert s3_act(s, w0()) == w0().scale(sign(s))


def test_sym_of_xyz():
    s = sym(tensor("xyz"))
    assert all(s.coeff(w) == Fraction(1, 6) for w in ("xyz", "xzy", "yxz", "yzx", "zxy", "zyx"))


def test_operator_identities():
    rng = random.Random(1)
    for _ in range(20):
        w = rand_tensor(rng)
        assert cyc(cyc(w)) == cyc(w)
        assert sym(sym(w)) == sym(w)
        assert sym(cyc(w)) == sym(w) == cyc(sym(w))
        assert cyc(w) - sym(w) == w0().scale(mu(w))
        assert rotate(rotate(rotate(w))) == w


def test_mu_values():
    assert mu(tensor("xyz")) == Fraction(1, 2)
    assert mu(tensor("zyx")) == Fraction(-1, 2)
    assert mu(hat(P("x*y*z + x^3/3"))) == 0


def test_mu_covariance():
    rng = random.Random(2)
    for _ in range(10):
        w, t = rand_tensor(rng), rand_theta(rng)
        assert mu(apply_gl(w, t)) == det(t) * mu(w)
        assert bar(apply_gl(w, t)) == substitute(bar(w), t)


def test_hat_bar():
    assert hat(P("x^2*y")) == tensor("1/3*xxy + 1/3*xyx + 1/3*yxx")
    assert hat(P("x*y")) == tensor("1/2*xy + 1/2*yx")
    rng = random.Random(3)
    for _ in range(20):
        f = rand_form(rng)
        assert bar(hat(f)) == f
        w = rand_tensor(rng)
        assert hat(bar(w)) == sym(w)


def test_hat_of_quadrics():
    # hat(g) = 1/2 sum x_i (x) hat(g_i)
    rng = random.Random(4)
    for _ in range(5):
        g = rand_form(rng, 2)
        lhs = hat(g, 2)
        rhs = sum((TensorN.letter(i).otimes(hat(partial(g, i), 1)) for i in range(3)), TensorN.zero(2)).scale(Fraction(1, 2))
        assert lhs == rhs


def test_cyclic_partials():
    assert cyclic_partial(w0(), 0) == tensor("yz - zy")
    assert cyclic_partial(tensor("xxx"), 0) == tensor("3*xx")
    rng = random.Random(5)
    for _ in range(10):
        f = rand_form(rng)
        for i in range(3):
            assert cyclic_partial(hat(f, 3), i) == hat(partial(f, i), 2)
        w = rand_tensor(rng)
        for i in range(3):
            assert cyclic_partial(w, i) == cyclic_partial(cyc(w), i)


def test_relation_space_examples():
    R = relation_space(w0())
    assert R == RelationSpace.span([tensor("yz - zy"), tensor("zx - xz"), tensor("xy - yx")])
    assert R.dim == 3
    assert relation_space(hat(x**3)) == RelationSpace.span([tensor("xx")])


def test_relation_space_equivariance():
    rng = random.Random(6)
    for _ in range(10):
        w, t = rand_tensor(rng), rand_theta(rng)
        assert relation_space(apply_gl(w, t)) == relation_space(w).transform(t)


def test_relations_afl():
    assert relations_afl(Poly.zero(), 3) == relation_space(w0())
    rng = random.Random(7)
    for _ in range(10):
        f, lam = rand_form(rng), rand_rat(rng)
        assert relations_afl(f, lam) == relation_space(w0() - hat(f).scale(lam))


def test_relations_afl_equivariance():
    rng = random.Random(8)
    for _ in range(5):
        f, lam, t = rand_form(rng), rand_rat(rng), rand_theta(rng)
        assert relations_afl(f, lam * det(t)).transform(t) == relations_afl(substitute(f, t), lam)


def test_relations_afl_injectivity():
    f = P("x*y*z + x^3/3")
    assert relations_afl(f, 2) == relations_afl(f.scale(2), 1)
    assert relations_afl(f, 2) != relations_afl(f, 1)


def test_dictionary():
    rng = random.Random(9)
    for _ in range(20):
        w = rand_tensor(rng)
        m = mu(w)
        if m:
            assert relation_space(w) == relations_afl(bar(w), -1 / m)


def test_symmetric_case():
    rng = random.Random(10)
    for _ in range(20):
        w = rand_tensor(rng) if rng.random() < 0.5 else hat(rand_form(rng))
        sym_case = mu(w) == 0
        assert sym_case == (cyc(w) == sym(w))
        assert sym_case == relation_space(w).is_symmetric()


def test_prop_relations():
    rng = random.Random(11)
    for _ in range(10):
        w = rand_tensor(rng)
        f, m = bar(w), mu(w)
        gens = []
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            comm = TensorN({(j, k): 1, (k, j): -1})
            gens.append(comm.scale(m) + hat(partial(f, i), 2))
        assert relation_space(w) == RelationSpace.span(gens)


def test_m_matrix_identities():
    M = m_matrix(w0())
    assert M[0][1] == TensorN.letter(2).scale(Fraction(-1, 3))
    assert M[0][0].is_zero()
    assert matrix_in_sv(m_matrix(hat(P("x*y*z")))) == [[e.scale(Fraction(1, 6)) for e in row]
                                                       for row in __import__("cy3.exactpoly").exactpoly.hessian_matrix(P("x*y*z"))]
    rng = random.Random(12)
    for _ in range(20):
        w = rand_tensor(rng)
        M = m_matrix(w)
        assert xmx(M) == cyc(w)
        grads = [cyclic_partial(w, i).scale(Fraction(1, 3)) for i in range(3)]
        assert m_times_x(M) == grads == x_times_m(M)


def test_standardness():
    assert is_standard(w0())
    assert not is_standard(hat(x**3))
    rng = random.Random(13)
    for _ in range(10):
        assert is_standard(w0() - hat(rand_form(rng)).scale(rand_rat(rng)))


@given(st.lists(st.integers(-3, 3), min_size=27, max_size=27))
def test_mu_linear_and_cyc_invariant(coeffs):
    w = TensorN.from_vector(coeffs, 3)
    assert mu(w) == mu(cyc(w))
    assert mu(w.scale(3) + w0()) == 3 * mu(w) + 1
