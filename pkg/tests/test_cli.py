import json
from fractions import Fraction
import subprocess
import sys

import pytest

from thetainv import cli, repro
from thetainv.field import Scalar
from thetainv.serialize import parse, scalar_from_json, from_json


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_field(capsys):
    code, out, _ = run(capsys, "field", "mul", "s5", "s5")
    assert code == 0 and out.strip() == "5"
    code, out, _ = run(capsys, "--json", "field", "add", "(1+s5)/4", "(-1+s5)/4")
    doc = json.loads(out)
    assert scalar_from_json(doc["result"]) == Scalar(0, 0, Fraction(1, 2))
    assert doc["table"] == "√5/2"
    assert run(capsys, "field", "conj", "2+3i")[1].strip() == "2-3i"


def test_field_usage_errors(capsys):
    assert run(capsys, "field", "div", "1", "0")[0] == 2
    assert run(capsys, "field", "add", "1")[0] == 2
    assert run(capsys, "field", "add", "1", "q")[0] == 2
    assert run(capsys, "field", "frob", "1")[0] == 2
    assert run(capsys)[0] == 2


def test_theta(capsys):
    code, out, _ = run(capsys, "theta", "fpoly", "5")
    assert code == 0 and "extremal      14, -14" in out
    code, out, _ = run(capsys, "--json", "theta", "w", "0", "1", "5")
    doc = json.loads(out)
    assert from_json(doc["class"]).eps == 0
    assert run(capsys, "theta", "w", "0", "1")[0] == 2


def test_rep(capsys):
    for v in ("v1", "v2"):
        code, out, _ = run(capsys, "rep", "--rep", v)
        assert code == 0 and "image size: 120" in out
    code, out, _ = run(capsys, "--json", "rep")
    assert json.loads(out)["relators_hold"] == [True] * 7


def test_cohomology(capsys, tmp_path):
    code, out, _ = run(capsys, "--json", "cohomology", "--coeff", "adjoint", "--matrices")
    doc = json.loads(out)
    assert code == 0 and (doc["h0"], doc["h1"]) == (0, 0)
    assert doc["coefficient-system"] == "adjoint(v1)"
    assert len(doc["presentation-hash"]) == 64
    assert len(doc["d0"]["value"]) == 12 and len(doc["d1"]["value"]) == 21
    pres = tmp_path / "p.json"
    pres.write_text(json.dumps({"gens": ["x1", "x2", "x3", "h"], "rels": ["x1 x2 x3", "h x1 h^ x1^"]}))
    code, out, _ = run(capsys, "--json", "cohomology", "--coeff", "trivial", "--presentation", str(pres))
    assert code == 0 and json.loads(out)["h0"] == 1
    pres.write_text("{bad")
    assert run(capsys, "cohomology", "--presentation", str(pres))[0] == 2


def test_ztheta_eval_spec_example(capsys):
    code, out, _ = run(capsys, "ztheta", "eval", "--eps", "0", "--dec", "1:0", "--dec", "x3:1",
                       "--dec", "x3 x3:5", "--rep", "v1", "--json")
    doc = json.loads(out)
    assert code == 0
    assert "-6+2√5" in doc["table"] and "O(X,A) = 0" in doc["table"]
    assert doc["hypotheses"] == ["O(X,A) = 0 (assumed, not computed)"]
    img = from_json(doc["image"])
    from thetainv.theta import f_poly
    assert img.image == f_poly(5).scale(Scalar(-6, 0, 2))


def test_ztheta_lift(capsys):
    code, out, _ = run(capsys, "--json", "ztheta", "lift", "--r", "3", "--dec", "1:0", "--dec", "x3:1",
                       "--dec", "x3 x3:5")
    from thetainv.theta import f_poly
    assert code == 0 and from_json(json.loads(out)["image"]).image == f_poly(5).scale(Scalar(-18, 0, 6))
    assert run(capsys, "ztheta", "lift", "--r", "0", "--dec", "1:0", "--dec", "1:1", "--dec", "1:3")[0] == 2
    assert run(capsys, "ztheta", "lift", "--r", "2", "--dec", "x1:0", "--dec", "1:1", "--dec", "1:3")[0] == 2


def test_ztheta_cert(capsys, tmp_path):
    specs = [{"eps": 1, "decorations": [{"word": "1", "exp": 0}, {"word": "1", "exp": 1},
                                        {"word": "1", "exp": p}]} for p in range(1, 11)]
    f = tmp_path / "specs.json"
    f.write_text(json.dumps(specs))
    code, out, _ = run(capsys, "--json", "ztheta", "cert", "--file", str(f))
    cert = from_json(json.loads(out)["certificate"])
    assert code == 0 and cert.rank_coker == 10
    f.write_text(json.dumps([{"eps": 5}]))
    assert run(capsys, "ztheta", "cert", "--file", str(f))[0] == 2
    assert run(capsys, "ztheta", "cert")[0] == 2
    assert run(capsys, "ztheta", "eval", "--dec", "1:0")[0] == 2


def test_repro_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "repro", "example-235", "cyclic-lift")
    assert code == 0 and "MISMATCH" not in out
    assert run(capsys, "repro", "unknown")[0] == 2
    monkeypatch.setitem(repro.CASES, "example-235", lambda: ({"x": 1}, {"x": 2}, "PUBLISHED"))
    code, out, _ = run(capsys, "repro", "example-235")
    assert code == 1 and "MISMATCH" in out


def test_repro_json_has_no_runtime(capsys):
    code, out, _ = run(capsys, "--json", "repro", "example-235")
    doc = json.loads(out)
    assert "runtime" not in doc["reports"][0] and doc["reports"][0]["match"] is True


@pytest.mark.parametrize("argv", [
    ["repro"],
    ["--json", "rep", "--rep", "v2"],
    ["--json", "ztheta", "eval", "--eps", "1", "--dec", "1:0", "--dec", "x2:1", "--dec", "x3 t:4"],
    ["--json", "cohomology", "--coeff", "sym4", "--matrices"],
])
def test_console_script_deterministic(argv):
    cmd = [sys.executable, "-m", "thetainv.cli"] + argv
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == 0, a.stderr
    assert a.stdout == b.stdout and a.stdout


def test_ztheta_alias(capsys):
    code = cli.ztheta_main(["eval", "--dec", "1:0", "--dec", "1:1", "--dec", "1:4"])
    out = capsys.readouterr().out
    assert code == 0 and "coefficient  24" in out
