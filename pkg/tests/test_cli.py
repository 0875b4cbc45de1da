import json
import subprocess
import sys

import pytest

from biquad import Rationals
from biquad import serialize as ser
from biquad.cli import main, oracle_census

Q = Rationals()


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def doc(out):
    return json.loads(out)


def test_analyze(capsys):
    code, out = run(capsys, "analyze", "--field", "Q", '{"u":"-10","w":"1"}')
    assert code == 0
    assert doc(out) == {"irreducible": True, "aut": "V4", "galois": True, "subfields": ["2", "3", "6"]}


def test_analyze_non_galois_reports_closure_group(capsys):
    code, out = run(capsys, "analyze", '{"u":"0","w":"-2"}')
    d = doc(out)
    assert code == 0 and d["aut"] == "C2" and d["galois"] is False
    assert d["closure_group"] == "D8"


def test_zero_constant(capsys):
    code, out = run(capsys, "analyze", "--field", "Q", '{"u":"0","w":"0"}')
    assert code == 2
    assert doc(out)["error"] == "ZeroConstantTerm"


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "not json"],
        ["analyze", '{"u":"1"}'],
        ["analyze", "--field", "Fp:4", '{"u":"1","w":"1"}'],
        ["analyze", '{"u":0.5,"w":"1"}'],
        ["frobnicate"],
        [],
    ],
)
def test_malformed(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 1
    assert "error" in doc(out)


def test_iso_files(capsys, tmp_path):
    p, q = tmp_path / "P.json", tmp_path / "Q.json"
    p.write_text('{"u":"0","w":"-2"}')
    q.write_text('{"u":"0","w":"-8"}')
    code, out = run(capsys, "iso", "--field", "Q", str(p), str(q))
    assert code == 0
    d = doc(out)
    assert d["isomorphic"] is True
    assert d["witness"] == {"a": "2", "branch": "OmegaZero_ra_over_w", "c": "2", "omega": "0", "r": 1, "s": -1}
    code, out = run(capsys, "iso", "@" + str(p), '{"u":"0","w":"-3"}')
    assert doc(out) == {"isomorphic": False}


def test_iso_single_payload(capsys):
    code, out = run(capsys, "iso", '{"P":{"u":"-10","w":"1"},"Q":{"u":"-40","w":"16"}}')
    assert code == 0 and doc(out) == {"isomorphic": True, "matched_condition": 3}
    code, out = run(capsys, "iso", "--noncyclic", '{"P":{"u":"-10","w":"1"},"Q":{"u":"0","w":"-2"}}')
    assert doc(out) == {"isomorphic": False, "reason": "MixedAutKinds"}


def test_iso_cyclic(capsys):
    code, out = run(capsys, "iso", '{"u":"-4","w":"2"}', '{"u":"0","w":"-2"}')
    assert code == 2 and doc(out)["error"] == "CyclicInput"


def test_normalize(capsys):
    code, out = run(capsys, "normalize", '{"u":"4","v":"6","w":"4","z":"2"}')
    d = doc(out)
    assert code == 0 and d["form"] == "BiquadForm" and d["substitution"] == "y = x + 1"
    assert ser.normal_form_from_json(Q, d).b == 1


def test_closure(capsys):
    code, out = run(capsys, "closure", '{"u":"0","w":"-2"}')
    d = doc(out)
    assert d["kind"] == "Closure" and d["w_class"] == "-2"
    assert ser.closure_from_json(Q, d).closure_field.d == -2


def test_radical(capsys):
    code, out = run(capsys, "radical", '{"a":"3","b":"-3"}')
    d = doc(out)
    assert d["kind"] == "TrivialClosure" and d["radical_min_poly"] == {"u": "0", "w": "36"}
    code, out = run(capsys, "radical", '{"a":"3","b":"2"}')
    assert doc(out) == {"kind": "ThreeClosures", "closure_classes": ["-2", "-3", "-6"]}
    code, out = run(capsys, "radical", "--field", '{"kind":"QuadExt","base":{"kind":"Q"},"d":"-1"}', '{"a":"3","b":"2"}')
    assert doc(out) == {"kind": "NoClosure"}
    code, out = run(capsys, "radical", '{"a":"4","b":"3"}')
    assert code == 2 and doc(out)["error"] == "DegenerateParameters"


def test_classify(capsys):
    code, out = run(capsys, "classify", "--gens=-1,2,3")
    assert code == 0 and len(doc(out)) == 7
    code, out = run(capsys, "classify", '{"gens":["2","3"]}')
    d = doc(out)
    assert len(d) == 1 and d[0]["polynomial"] == {"u": "-10", "w": "1"}
    code, out = run(capsys, "classify", "--field", "Fp:5")
    assert doc(out) == []
    code, out = run(capsys, "classify", "--gens=2,4")
    assert code == 2 and doc(out)["error"] == "GeneratorIsSquare"


def test_moduli_check(capsys):
    code, out = run(capsys, "moduli-check", "--checks", "200")
    assert code == 0 and doc(out)["ok"] is True


def test_oracle_check(capsys, tmp_path):
    path = tmp_path / "census.csv"
    code, out = run(capsys, "oracle-check", "--p-max", "7", "--csv", str(path))
    d = doc(out)
    assert code == 0 and d["disagreements"] == 0 and d["cases"] == 3 * 2 + 5 * 4 + 7 * 6
    lines = path.read_text().splitlines()
    assert lines[0] == "p,u,w,criterion,oracle,library,agree"
    assert all(line.endswith("True") for line in lines[1:])


def test_census_rows():
    rows = oracle_census(5)
    assert {r[3] for r in rows} == {"irreducible", "galois_group", "subfields"}
    assert all(r[-1] for r in rows)


def test_deterministic_output(capsys):
    outs = {run(capsys, "classify", "--gens=-1,2,3")[1] for _ in range(3)}
    assert len(outs) == 1


def test_round_trips(capsys):
    code, out = run(capsys, "analyze", '{"u":"-10","w":"1"}')
    irr, kind, galois, subs = ser.analysis_from_json(Q, doc(out))
    assert irr and kind.tag == "V4" and galois and len(subs) == 3
    code, out = run(capsys, "iso", '{"u":"0","w":"-2"}', '{"u":"0","w":"-8"}')
    v = ser.verdict_from_json(Q, doc(out))
    assert ser.dumps(ser.verdict_to_json(Q, v)) == out.strip()


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "biquad", "analyze", '{"u":"-10","w":"1"}'],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["aut"] == "V4"
