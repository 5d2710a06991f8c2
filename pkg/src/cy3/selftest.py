"""The built-in self-test: the reference corpus plus a small randomized sweep."""
from __future__ import annotations

import json
import random
from fractions import Fraction

from . import classify as cl
from .corpus import CLIFFORD_EXAMPLES, NORMAL_FORMS, non_cy_nine, table1_grid
from .cubiccurve import classify_cubic, hesse_form, hesse_j, j_invariant, random_gl3
from .exactpoly import det, hessian_det, substitute
from .tensor3 import apply_gl, mu

EXIT_OK, EXIT_DISAGREE = 0, 3


def _random_theta(rng):
    while True:
        t = random_gl3(rng)
        if det(t):
            return t


def _verdicts(w):
    return bool(cl.table1_verdict(w)), bool(cl.rank_one_verdict(w)), bool(cl.atv_verdict(w))


def checks(seed: int = 0):
    """Yield (name, passed, detail) for every self-test item."""
    for name, w in non_cy_nine():
        r = cl.crosscheck(w, 4)
        ok = not (r.table1_verdict or r.rank_one_verdict or r.atv_verdict) and not r.hilbert.ok
        yield f"non-CY {name}", ok, f"first Hilbert mismatch {r.hilbert.first_mismatch}"
    for cell in table1_grid():
        r = cl.crosscheck(cell.w, 4)
        ok = r.agreement and r.table1_verdict == cell.expected
        yield f"grid {cell.name}", ok, f"verdict {r.table1_verdict}"
    for nf in NORMAL_FORMS:
        got = classify_cubic(nf.f).kind
        yield f"cubic {nf.label}", got is nf.kind, got.value
    for lam in (1, 2, Fraction(5, 7)):
        j = j_invariant(hesse_form(lam))
        yield f"Hesse j at lambda={lam}", j == hesse_j(lam), str(j)
    for kind, (w, abc) in CLIFFORD_EXAMPLES.items():
        d = cl.verify_clifford(w)
        yield f"Clifford {kind.value}", (d.a, d.b, d.c) == tuple(map(Fraction, abc)), f"{d.a}, {d.b}, {d.c}"
    rng = random.Random(seed)
    grid = table1_grid()
    for k in range(3):
        theta = _random_theta(rng)
        cell = grid[k * 7 % len(grid)]
        v = apply_gl(cell.w, theta)
        same = _verdicts(cell.w) == _verdicts(v)
        cov = mu(v) == det(theta) * mu(cell.w)
        yield f"GL invariance on {cell.name}", same and cov, ""
        f = NORMAL_FORMS[k + 5].f
        yield f"Hessian covariance sample {k}", hessian_det(substitute(f, theta)) == substitute(hessian_det(f), theta).scale(det(theta) ** 2), ""


def run_selftest(out, json_mode: bool = False) -> int:
    failed = 0
    for name, ok, detail in checks():
        failed += not ok
        if json_mode:
            out.write(json.dumps({"check": name, "pass": ok, "detail": detail}) + "\n")
        else:
            out.write(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "") + "\n")
    if not json_mode:
        out.write(f"{'all checks passed' if not failed else f'{failed} check(s) failed'}\n")
    return EXIT_OK if not failed else EXIT_DISAGREE
