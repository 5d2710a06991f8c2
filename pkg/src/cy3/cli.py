"""Command-line front end.

Input documents are JSON objects of one of three shapes::

    {"superpotential": [{"word": "xyz", "coeff": "1"}, ...]}
    {"potential": {"terms": [{"mono": [1, 1, 1], "coeff": "1"}]}, "lambda": "1"}
    {"relations": [[{"word": "xy", "coeff": "1"}, ...], ...]}

The second means w = w0 - lambda*hat(f).  Rationals travel as strings.
Exit codes: 0 success, 2 bad input, 3 disagreement between procedures that
must agree, 4 degree cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import classify as cl
from .cubiccurve import CubicType, aronhold_invariants, classify_cubic
from .exactpoly import Poly, UndefinedError, as_linmap, as_rat, parse_form, rat_str
from .oracle import DegreeCapExceeded, hilbert_check
from .psolve import InconsistencyError
from .tensor3 import RelationSpace, TensorN, _word, hat, parse_tensor, relation_space, w0, word_str

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE, EXIT_CAP = 0, 2, 3, 4
DEFAULT_MAX_DEGREE = 6


class InputError(ValueError):
    pass


# --------------------------------------------------------------------------
# JSON encoding of exact objects

def rat_json(q) -> str:
    return rat_str(Fraction(q))


def _rat_in(v) -> Fraction:
    if isinstance(v, float):
        raise InputError("rationals must be strings or integers, not floats")
    try:
        return as_rat(v)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad rational {v!r}") from e


def tensor_json(t: TensorN) -> list[dict]:
    return [{"word": word_str(w), "coeff": rat_json(c)} for w, c in sorted(t.coeffs.items())]


def tensor_from_json(items, m: int) -> TensorN:
    if not isinstance(items, list):
        raise InputError("a tensor is a list of {word, coeff} records")
    coeffs: dict = {}
    for it in items:
        if not isinstance(it, dict) or set(it) != {"word", "coeff"}:
            raise InputError(f"bad tensor term {it!r}")
        word = it["word"]
        if not isinstance(word, str) or len(word) != m:
            raise InputError(f"word {word!r} must have length {m}")
        try:
            key = _word(word)
        except ValueError as e:
            raise InputError(str(e)) from e
        coeffs[key] = coeffs.get(key, 0) + _rat_in(it["coeff"])
    return TensorN(coeffs, m)


def form_json(f: Poly) -> dict:
    return {"terms": [{"mono": list(e), "coeff": rat_json(c)} for e, c in f.sorted_terms()]}


def form_from_json(obj, degree: int | None = 3) -> Poly:
    if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
        raise InputError('a form is {"terms": [{"mono": [i, j, k], "coeff": "p/q"}, ...]}')
    terms: dict = {}
    for it in obj["terms"]:
        if not isinstance(it, dict) or set(it) != {"mono", "coeff"}:
            raise InputError(f"bad form term {it!r}")
        mono = it["mono"]
        if (not isinstance(mono, list) or len(mono) != 3
                or not all(isinstance(a, int) and not isinstance(a, bool) and a >= 0 for a in mono)):
            raise InputError(f"bad monomial {mono!r}")
        if degree is not None and sum(mono) != degree:
            raise InputError(f"monomial {mono} does not have degree {degree}")
        terms[tuple(mono)] = terms.get(tuple(mono), 0) + _rat_in(it["coeff"])
    return Poly(terms, 3)


def cubic_type_json(ct: CubicType) -> dict:
    return {"kind": ct.kind.name, "label": ct.kind.value, "j": None if ct.j is None else rat_json(ct.j)}


# --------------------------------------------------------------------------
# input documents

@dataclass(frozen=True)
class InputDocument:
    """One parsed input: a superpotential, an (f, lambda) pair or a relation list."""

    kind: str
    superpotential: TensorN | None = None
    potential: Poly | None = None
    lam: Fraction | None = None
    relations: tuple[TensorN, ...] | None = None

    @classmethod
    def parse(cls, obj) -> "InputDocument":
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as e:
                raise InputError(f"invalid JSON: {e}") from e
        if not isinstance(obj, dict):
            raise InputError("an input document is a JSON object")
        keys = set(obj) - {"id"}
        if keys == {"superpotential"}:
            return cls("superpotential", superpotential=tensor_from_json(obj["superpotential"], 3))
        if keys == {"potential", "lambda"}:
            return cls("potential", potential=form_from_json(obj["potential"]), lam=_rat_in(obj["lambda"]))
        if keys == {"relations"}:
            rels = obj["relations"]
            if not isinstance(rels, list):
                raise InputError("relations must be a list of tensors")
            return cls("relations", relations=tuple(tensor_from_json(r, 2) for r in rels))
        raise InputError(f"unrecognised input document with keys {sorted(obj)}")

    def to_json(self) -> dict:
        if self.kind == "superpotential":
            return {"superpotential": tensor_json(self.superpotential)}
        if self.kind == "potential":
            return {"potential": form_json(self.potential), "lambda": rat_json(self.lam)}
        return {"relations": [tensor_json(r) for r in self.relations]}

    def superpotential_value(self) -> TensorN:
        if self.kind == "superpotential":
            return self.superpotential
        if self.kind == "potential":
            f = self.potential
            return w0() - (hat(f).scale(self.lam) if f else TensorN.zero(3))
        raise InputError("this command needs a superpotential, not a bare relation list")

    def relation_space(self) -> RelationSpace:
        if self.kind == "relations":
            return RelationSpace.span(self.relations)
        return relation_space(self.superpotential_value())


# --------------------------------------------------------------------------
# reports

def report_json(r: cl.ClassificationReport, full: bool = True) -> dict:
    out = {
        "input": {"superpotential": tensor_json(r.w)},
        "mu": rat_json(r.mu),
        "wbar": form_json(r.wbar),
        "curve_class": cubic_type_json(r.curve_class),
        "table1_verdict": r.table1_verdict,
    }
    if full:
        out["rank_one_verdict"] = r.rank_one_verdict
        out["atv_verdict"] = r.atv_verdict
        out["hilbert"] = None if r.hilbert is None else hilbert_json(r.hilbert)
    out["point_scheme"] = None if r.point_scheme is None else form_json(r.point_scheme)
    if full:
        out["agreement"] = r.agreement
    out["reasons"] = list(r.reasons)
    return out


def hilbert_json(h) -> dict:
    return {"dims": list(h.dims), "target": list(h.target), "first_mismatch": h.first_mismatch, "ok": h.ok}


def _yes(b: bool) -> str:
    return "3-CY" if b else "not 3-CY"


def report_text(r: cl.ClassificationReport, full: bool = True) -> str:
    lines = [
        f"w (cyclic part): {r.w}",
        f"mu(w)          : {r.mu}",
        f"wbar           : {r.wbar}",
        f"E = {{wbar = 0}} : {r.curve_class}",
        f"table verdict  : {_yes(r.table1_verdict)}",
    ]
    if full:
        lines.append(f"rank-one       : {_yes(r.rank_one_verdict)}")
        lines.append(f"ATV            : {_yes(r.atv_verdict)}")
        if r.hilbert is not None:
            h = r.hilbert
            status = "ok" if h.ok else f"first mismatch in degree {h.first_mismatch}"
            lines.append(f"Hilbert dims   : {', '.join(map(str, h.dims))} ({status})")
    if r.point_scheme is not None:
        lines.append(f"point scheme   : {r.point_scheme} = 0")
    if full:
        lines.append(f"agreement      : {'yes' if r.agreement else 'NO'}")
    lines += [f"  - {s}" for s in r.reasons]
    return "\n".join(lines)


# --------------------------------------------------------------------------
# commands; each returns (exit code, json payload, text)

def _default_max_degree() -> int:
    env = os.environ.get("CY3_MAX_DEGREE")
    return int(env) if env else DEFAULT_MAX_DEGREE


def cmd_classify(doc: InputDocument, args):
    r = cl.classify(doc.superpotential_value())
    return EXIT_OK, report_json(r, full=False), report_text(r, full=False)


def cmd_crosscheck(doc: InputDocument, args):
    N = args.max_degree if getattr(args, "max_degree", None) is not None else _default_max_degree()
    r = cl.crosscheck(doc.superpotential_value(), N)
    code = EXIT_OK if r.agreement else EXIT_DISAGREE
    return code, report_json(r), report_text(r)


def cmd_point_scheme(doc: InputDocument, args):
    w = doc.superpotential_value()
    e = cl.point_scheme(w)
    kappa = cl.point_scheme_kappa(w)
    ct = classify_cubic(e)
    payload = {"point_scheme": form_json(e), "class": cubic_type_json(ct), "kappa": rat_json(kappa)}
    return EXIT_OK, payload, f"E' : {e} = 0\nclass: {ct}\ndet(M) = {kappa} * E'"


def _form_of(doc_obj) -> Poly:
    if isinstance(doc_obj, dict) and set(doc_obj) == {"terms"}:
        return form_from_json(doc_obj)
    doc = InputDocument.parse(doc_obj)
    if doc.kind == "potential":
        return doc.potential
    from .tensor3 import bar, cyc

    return bar(cyc(doc.superpotential_value()))


def cmd_cubic(obj, args):
    f = _form_of(obj)
    if args.action == "classify":
        ct = classify_cubic(f)
        return EXIT_OK, {"form": form_json(f), "class": cubic_type_json(ct)}, f"{f}: {ct}"
    inv = aronhold_invariants(f)
    payload = {
        "form": form_json(f),
        "S": rat_json(inv.S),
        "T": rat_json(inv.T),
        "discriminant": rat_json(inv.discriminant),
        "j": None,
    }
    text = f"S = {inv.S}\nT = {inv.T}\ndiscriminant = {inv.discriminant}"
    if inv.discriminant:
        from .cubiccurve import j_invariant

        j = j_invariant(f)
        payload["j"] = rat_json(j)
        text += f"\nj = {j}"
    return EXIT_OK, payload, text


def cmd_hilbert(doc: InputDocument, args):
    N = args.max_degree if args.max_degree is not None else _default_max_degree()
    R = doc.relation_space()
    h = hilbert_check(R, N)
    status = "matches (1-t)^-3" if h.ok else f"first mismatch in degree {h.first_mismatch}"
    text = f"relations: {R}\ndims: {', '.join(map(str, h.dims))}\n{status}"
    return EXIT_OK, hilbert_json(h), text


def _parse_theta(text: str | None):
    if text is None:
        return None
    try:
        rows = json.loads(text)
        theta = as_linmap([[_rat_in(v) for v in row] for row in rows])
    except (json.JSONDecodeError, TypeError, ValueError) as e:
        raise InputError(f"bad --theta matrix: {e}") from e
    if len(theta) != 3 or any(len(r) != 3 for r in theta):
        raise InputError("--theta must be a 3x3 matrix")
    return theta


def cmd_clifford(doc: InputDocument, args):
    theta = _parse_theta(args.theta)
    try:
        d = cl.verify_clifford(doc.superpotential_value(), theta)
    except cl.CliffordShapeError as e:
        raise InputError(str(e)) from e
    payload = {"a": rat_json(d.a), "b": rat_json(d.b), "c": rat_json(d.c),
               "relations": [tensor_json(r) for r in d.relations], "squares_central": True}
    text = (f"(a, b, c) = ({d.a}, {d.b}, {d.c}), abc = {d.a * d.b * d.c}\n"
            + "\n".join(f"  {r} = 0" for r in d.relations)
            + "\nx^2, y^2, z^2 are central")
    return EXIT_OK, payload, text


DOC_COMMANDS = {
    "classify": cmd_classify,
    "crosscheck": cmd_crosscheck,
    "point-scheme": cmd_point_scheme,
    "hilbert": cmd_hilbert,
    "clifford": cmd_clifford,
}


def run_document(command: str, obj, args):
    """Run one command on one raw document; map failures to exit codes."""
    try:
        if command == "cubic":
            return cmd_cubic(obj, args)
        doc = InputDocument.parse(obj)
        return DOC_COMMANDS[command](doc, args)
    except (InputError, UndefinedError, cl.NotCalabiYauInput) as e:
        return EXIT_INPUT, {"error": str(e)}, f"error: {e}"
    except DegreeCapExceeded as e:
        return EXIT_CAP, {"error": str(e)}, f"error: {e}"
    except InconsistencyError as e:
        return EXIT_DISAGREE, {"error": str(e)}, f"internal inconsistency: {e}"
    except ValueError as e:
        return EXIT_INPUT, {"error": str(e)}, f"error: {e}"


def cmd_batch(args, out) -> int:
    try:
        with open(args.file) as fh:
            lines = fh.read().splitlines()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    work = [(i, ln) for i, ln in enumerate(lines, 1) if ln.strip()]

    def one(item):
        i, ln = item
        try:
            obj = json.loads(ln)
        except json.JSONDecodeError as e:
            return EXIT_INPUT, {"line": i, "error": f"invalid JSON: {e}", "exit_code": EXIT_INPUT}
        code, payload, _ = run_document(args.command, obj, args)
        rec = {"line": i, "exit_code": code}
        if isinstance(obj, dict) and "id" in obj:
            rec["id"] = obj["id"]
        rec.update(payload)
        return code, rec

    worst = EXIT_OK
    with ThreadPoolExecutor(max_workers=args.workers) as pool:
        for code, rec in pool.map(one, work):  # map keeps input order
            worst = max(worst, code)
            out.write(json.dumps(rec) + "\n")
    return worst


def cmd_selftest(args, out) -> int:
    from .selftest import run_selftest

    return run_selftest(out, json_mode=args.json)


# --------------------------------------------------------------------------
# argument parsing

def _read_input(args):
    """Build the raw document from --w/--f/--lam, an inline JSON string, a file or stdin."""
    if getattr(args, "w", None):
        return {"superpotential": tensor_json(parse_tensor(args.w))}
    if getattr(args, "f", None):
        if args.cmd == "cubic":
            return form_json(parse_form(args.f))
        return {"potential": form_json(parse_form(args.f)), "lambda": getattr(args, "lam", None) or "1"}
    if getattr(args, "relations", None):
        src = args.relations
    else:
        src = args.input
    if src is None or src == "-":
        text = sys.stdin.read()
    elif src.lstrip().startswith("{"):
        text = src
    else:
        with open(src) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e}") from e


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("input", nargs="?", help="JSON document, file path or - for stdin")
    src.add_argument("--w", help='superpotential expression, e.g. "xyz + zyx"')
    src.add_argument("--f", help='cubic form, e.g. "x*y*z + x^3/3" (with --lam gives w0 - lam*hat(f))')
    src.add_argument("--lam", help="lambda for --f (default 1)")

    p = argparse.ArgumentParser(prog="cy3", description="Exact 3-Calabi-Yau tests for Jacobian algebras J(w).")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="cmd", required=True)
    sub.add_parser("classify", parents=[common, src], help="classification-table verdict")
    c = sub.add_parser("crosscheck", parents=[common, src], help="all procedures plus Hilbert series")
    c.add_argument("--max-degree", type=int, default=None, help="Hilbert bound (default 6 or $CY3_MAX_DEGREE)")
    sub.add_parser("point-scheme", parents=[common, src], help="H(wbar) + 24 mu^2 wbar")
    cu = sub.add_parser("cubic", parents=[common], help="plane cubic tools")
    cu.add_argument("action", choices=["classify", "invariants"])
    cu.add_argument("input", nargs="?", help="form or input document, file path or - for stdin")
    cu.add_argument("--w", help="use wbar of this superpotential")
    cu.add_argument("--f", help='cubic form, e.g. "x^3 + y^3 + z^3"')
    h = sub.add_parser("hilbert", parents=[common, src], help="graded dimensions of TV/(R)")
    h.add_argument("--relations", help="file with a relations document")
    h.add_argument("--max-degree", type=int, default=None)
    k = sub.add_parser("clifford", parents=[common, src], help="verify Clifford form under theta")
    k.add_argument("--theta", help='3x3 matrix as JSON, e.g. "[[1,0,0],[0,1,0],[0,0,1]]"')
    b = sub.add_parser("batch", parents=[common], help="one JSON document per line")
    b.add_argument("file")
    b.add_argument("--command", default="crosscheck", choices=sorted(DOC_COMMANDS) + ["cubic"])
    b.add_argument("--action", default="classify", choices=["classify", "invariants"], help="for --command cubic")
    b.add_argument("--max-degree", type=int, default=None)
    b.add_argument("--theta", default=None)
    b.add_argument("--workers", type=int, default=min(8, os.cpu_count() or 1))
    sub.add_parser("selftest", parents=[common], help="run the built-in corpus checks")
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if args.cmd == "batch":
        return cmd_batch(args, out)
    if args.cmd == "selftest":
        return cmd_selftest(args, out)
    try:
        obj = _read_input(args)
    except (InputError, ValueError, OSError) as e:
        msg = str(e)
        out.write(json.dumps({"error": msg}) + "\n" if args.json else f"error: {msg}\n")
        return EXIT_INPUT
    code, payload, text = run_document(args.cmd, obj, args)
    out.write(json.dumps(payload, indent=2) + "\n" if args.json else text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
