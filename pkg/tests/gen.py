"""Random exact objects shared by the tests."""
from __future__ import annotations

import random
from fractions import Fraction

from cy3.corpus import NORMAL_FORMS, mixed
from cy3.exactpoly import Poly, det, monomials, substitute
from cy3.tensor3 import TensorN, cyc, relation_space, words


def rand_rat(rng: random.Random, lo=-3, hi=3, dens=(1, 1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def rand_form(rng: random.Random, degree: int = 3, density: float = 0.6) -> Poly:
    return Poly({m: rand_rat(rng) for m in monomials(degree) if rng.random() < density})


def rand_theta(rng: random.Random, lo: int = -2, hi: int = 2):
    while True:
        t = [[Fraction(rng.randint(lo, hi)) for _ in range(3)] for _ in range(3)]
        if det(t):
            return t


def rand_tensor(rng: random.Random, m: int = 3, density: float = 0.4) -> TensorN:
    return TensorN({w: rand_rat(rng) for w in words(m) if rng.random() < density}, m)


def noise(rng: random.Random) -> TensorN:
    """A random element of the kernel of cyc."""
    t = rand_tensor(rng)
    return t - cyc(t)


def structured_w(rng: random.Random) -> TensorN:
    """mu*w0 + hat(theta(f)) + noise, with mu often on the classification boundary."""
    nf = rng.choice(NORMAL_FORMS)
    theta = rand_theta(rng)
    f = substitute(nf.f, theta)
    d = det(theta)
    mu = rng.choice([Fraction(0), d / 2, -d / 2, rand_rat(rng), Fraction(1)])
    return mixed(mu, f) + noise(rng)


def rand_w_dim3(rng: random.Random) -> TensorN:
    while True:
        w = structured_w(rng)
        if w and relation_space(w).dim == 3:
            return w
