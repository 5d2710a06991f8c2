"""Clifford-type presentations: relations yz + zy = a x^2 and cyclic.

For superpotentials xyz + zyx + g the relations take this shape; the squares
x^2, y^2, z^2 are then central, and the algebra is 3-Calabi-Yau when abc != -1.
"""
from cy3 import classify as cl
from cy3.corpus import CLIFFORD_EXAMPLES, beta_superpotential
from cy3.psolve import InconsistencyError


def main():
    for kind, (w, _) in CLIFFORD_EXAMPLES.items():
        d = cl.verify_clifford(w)
        print(f"{kind.value:14s} (a, b, c) = ({d.a}, {d.b}, {d.c})   squares central")
    for beta in (2, 1):
        try:
            d = cl.verify_clifford(beta_superpotential(beta))
            print(f"beta = {beta}: (a, b, c) = ({d.a}, {d.b}, {d.c})")
        except InconsistencyError as e:
            print(f"beta = {beta}: rejected ({e})")


if __name__ == "__main__":
    main()
