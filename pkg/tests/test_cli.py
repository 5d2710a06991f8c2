import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from cy3.cli import InputDocument, InputError, form_json, run, tensor_json
from cy3.exactpoly import parse_form
from cy3.tensor3 import tensor

XYZ = {"superpotential": [{"word": "xyz", "coeff": "1"}]}
POT_XYZ = {"potential": {"terms": [{"mono": [1, 1, 1], "coeff": "1"}]}, "lambda": "1"}


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def call_json(*argv):
    code, text = call("--json", *argv)
    return code, json.loads(text)


def test_classify_xyz():
    code, rep = call_json("classify", json.dumps(XYZ))
    assert code == 0
    assert rep["table1_verdict"] is False
    assert rep["mu"] == "1/2"
    assert rep["curve_class"]["kind"] == "TRIANGLE"
    assert any("H(wbar) = 8*mu^2*wbar" in r for r in rep["reasons"])


def test_json_flag_after_subcommand():
    code, text = call("classify", "--json", json.dumps(XYZ))
    assert json.loads(text)["mu"] == "1/2"


def test_crosscheck_potential():
    code, rep = call_json("crosscheck", json.dumps(POT_XYZ), "--max-degree", "5")
    assert code == 0
    assert rep["table1_verdict"] and rep["rank_one_verdict"] and rep["atv_verdict"]
    assert rep["hilbert"]["dims"] == [1, 3, 6, 10, 15, 21]
    assert rep["agreement"]


def test_crosscheck_default_degree_from_env(monkeypatch):
    monkeypatch.setenv("CY3_MAX_DEGREE", "3")
    code, rep = call_json("crosscheck", "--w", "xyz + zyx")
    assert rep["hilbert"]["dims"] == [1, 3, 6, 10]
    monkeypatch.delenv("CY3_MAX_DEGREE")
    code, rep = call_json("crosscheck", "--w", "xyz + zyx")
    assert len(rep["hilbert"]["dims"]) == 7


def test_json_is_stable():
    a = call("--json", "crosscheck", "--f", "x*y*z + x^3/3", "--lam", "2", "--max-degree", "4")
    b = call("--json", "crosscheck", "--f", "x*y*z + x^3/3", "--lam", "2", "--max-degree", "4")
    assert a == b


def test_exit_codes():
    assert call("classify", '{"nope": 1}')[0] == 2
    assert call("classify", "{not json")[0] == 2
    assert call("classify", '{"superpotential": [{"word": "xy", "coeff": "1"}]}')[0] == 2
    assert call("classify", '{"superpotential": [{"word": "xyz", "coeff": 0.5}]}')[0] == 2
    assert call("classify", "--w", "xyz - xyz")[0] == 2
    assert call("hilbert", "--w", "xyz", "--max-degree", "11")[0] == 4
    assert call("clifford", "--w", "xyz + zyx", "--theta", "[[1,1,0],[0,1,0],[0,0,1]]")[0] == 2
    assert call("clifford", "--w", "xyz + zyx", "--theta", "[[1,0],[0,1]]")[0] == 2
    assert call("bogus")[0] == 2


def test_disagreement_exit_code(monkeypatch):
    from cy3 import classify as cl

    monkeypatch.setattr(cl, "atv_verdict", lambda w: cl.Verdict(False, ("forced",)))
    code, rep = call_json("crosscheck", "--w", "xyz + zyx", "--max-degree", "3")
    assert code == 3 and rep["agreement"] is False


def test_point_scheme_cmd():
    code, rep = call_json("point-scheme", "--w", "xyz + zyx")
    assert code == 0 and rep["class"]["kind"] == "TRIANGLE" and rep["kappa"] == "1/216"


def test_cubic_cmds():
    code, rep = call_json("cubic", "classify", "--f", "x^3 + y^3 + z^3 + 3*x*y*z")
    assert rep["class"] == {"kind": "SMOOTH", "label": "smooth cubic", "j": "9261/8"}
    code, rep = call_json("cubic", "invariants", json.dumps(form_json(parse_form("x*y*z"))))
    assert rep["discriminant"] == "0" and rep["j"] is None
    code, rep = call_json("cubic", "classify", json.dumps(POT_XYZ))
    assert rep["class"]["kind"] == "TRIANGLE"


def test_hilbert_cmd(tmp_path):
    doc = {"relations": [tensor_json(tensor(w)) for w in ("xy", "yz", "zx")]}
    p = tmp_path / "rels.json"
    p.write_text(json.dumps(doc))
    code, rep = call_json("hilbert", "--relations", str(p), "--max-degree", "4")
    assert code == 0 and rep["dims"] == [1, 3, 6, 12, 24] and rep["first_mismatch"] == 3


def test_clifford_cmd():
    code, rep = call_json("clifford", "--w", "xyz + zyx + 1/3*xxx")
    assert code == 0 and (rep["a"], rep["b"], rep["c"]) == ("-1", "0", "0")


def test_batch(tmp_path):
    lines = [json.dumps(XYZ), "{broken", json.dumps(POT_XYZ), "", json.dumps({"id": "z", **XYZ})]
    p = tmp_path / "in.jsonl"
    p.write_text("\n".join(lines))
    code, text = call("batch", str(p), "--max-degree", "3", "--workers", "3")
    recs = [json.loads(ln) for ln in text.splitlines()]
    assert [r["line"] for r in recs] == [1, 2, 3, 5]
    assert recs[1]["exit_code"] == 2 and "error" in recs[1]
    assert recs[0]["table1_verdict"] is False and recs[2]["table1_verdict"] is True
    assert recs[3]["id"] == "z"
    assert code == 2


def test_selftest():
    code, text = call("selftest")
    assert code == 0, text
    assert "FAIL" not in text


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "cy3", "--json", "classify", "--w", "xyz"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["mu"] == "1/2"


def test_round_trip_examples():
    docs = [XYZ, POT_XYZ, {"relations": [[{"word": "xy", "coeff": "1"}, {"word": "yx", "coeff": "-2/3"}]]}]
    for d in docs:
        doc = InputDocument.parse(d)
        assert InputDocument.parse(doc.to_json()) == doc
        assert InputDocument.parse(json.dumps(doc.to_json())) == doc


def test_parse_rejects_bad_monomials():
    bad = {"potential": {"terms": [{"mono": [1, 1], "coeff": "1"}]}, "lambda": "1"}
    with pytest.raises(InputError):
        InputDocument.parse(bad)
    bad = {"potential": {"terms": [{"mono": [2, 1, 1], "coeff": "1"}]}, "lambda": "1"}
    with pytest.raises(InputError):
        InputDocument.parse(bad)


rat = st.fractions(min_value=-5, max_value=5, max_denominator=7).map(str)
word = st.text(alphabet="xyz", min_size=3, max_size=3)


@given(st.lists(st.fixed_dictionaries({"word": word, "coeff": rat}), max_size=8))
def test_round_trip_superpotentials(terms):
    doc = InputDocument.parse({"superpotential": terms})
    again = InputDocument.parse(json.loads(json.dumps(doc.to_json())))
    assert again == doc
    assert again.to_json() == doc.to_json()


mono = st.sampled_from([[3, 0, 0], [2, 1, 0], [1, 1, 1], [0, 0, 3], [1, 0, 2]])


@given(st.lists(st.fixed_dictionaries({"mono": mono, "coeff": rat}), max_size=5), rat)
def test_round_trip_potentials(terms, lam):
    doc = InputDocument.parse({"potential": {"terms": terms}, "lambda": lam})
    assert InputDocument.parse(doc.to_json()) == doc
