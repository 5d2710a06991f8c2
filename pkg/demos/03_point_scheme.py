"""The point scheme E' = H(wbar) + 24 mu^2 wbar and the matrix whose determinant cuts it out.

For A(xyz, lam) the point scheme is again a triangle exactly when lam^2 = 4,
which is where the algebra stops being 3-Calabi-Yau.
"""
from fractions import Fraction

from cy3 import classify as cl
from cy3.corpus import afl
from cy3.cubiccurve import classify_cubic
from cy3.exactpoly import det


def main():
    for lam in (Fraction(0), Fraction(1), Fraction(2), Fraction(-2), Fraction(3)):
        w = afl("x*y*z", lam)
        E = cl.point_scheme(w)
        M = cl.point_scheme_matrix(w)
        kappa = cl.point_scheme_kappa(w)
        assert det(M) == E.scale(kappa)
        kind = classify_cubic(E).kind.value
        print(f"lam = {lam!s:3s}  E' = {E}")
        print(f"          class {kind}, det(M) = {kappa} * E', 3-CY = {bool(cl.table1_verdict(w))}")


if __name__ == "__main__":
    main()
