import io as stdio
import json
import os
import subprocess
import sys

import pytest

from conftest import FIXTURES
from semicat import io
from semicat.cli import main
from semicat.props import verify_P


def fx(name):
    return os.path.join(FIXTURES, name + ".semicat.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_check_separable(capsys):
    code, out = run_json(capsys, "check", "separable", "-F", fx("monoid_fe"))
    assert code == 0 and out["holds"] is True
    # the witness is a full P table that re-verifies
    fun = io.load(fx("monoid_fe"))
    cells = {(x, y, d): v for x, y, d, v in out["witness"]["assignment"]}
    assert verify_P(fun, cells, "separable") == []


def test_check_semifull_counterexample(capsys):
    code, out = run_json(capsys, "check", "semifull", "-F", fx("monoid_fe"))
    assert code == 1 and out["holds"] is False
    assert out["counterexample"] is not None


def test_empty_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", stdio.TextIOWrapper(stdio.BytesIO(b"")))
    code, _, err = run(capsys, "validate", "-")
    assert code == 2 and err


@pytest.mark.parametrize("prop,expected", [
    ("functor", 1), ("faithful", 0), ("full", 1), ("sff", 1), ("separable", 0),
    ("naturally-semifull", 1), ("nat-semifull", 1), ("semiseparable", 0), ("semisep", 0),
])
def test_check_profile(capsys, prop, expected):
    assert run(capsys, "check", prop, "-F", fx("monoid_fe"))[0] == expected


def test_check_other_fixtures(capsys):
    assert run(capsys, "check", "sff", "-F", fx("matrix_e11"))[0] == 0
    assert run(capsys, "check", "naturally-semifull", "-F", fx("product_ring_z"))[0] == 0
    assert run(capsys, "check", "faithful", "-F", fx("product_ring_z"))[0] == 1


def test_validate_every_fixture(capsys):
    for name in sorted(os.listdir(FIXTURES)):
        assert run(capsys, "validate", os.path.join(FIXTURES, name))[0] == 0, name


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "check")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "check", "separable", "-F", fx("m3"))[0] == 2  # wrong kind
    assert run(capsys, "check", "morphism", "-F", fx("eu_on_w"))[0] == 2
    bad = tmp_path / "bad.semicat.json"
    bad.write_text("{not json")
    assert run(capsys, "validate", str(bad))[0] == 2


def test_check_morphism(capsys):
    base = ["check", "morphism", "-F", fx("eu_on_w"), "--object", "*"]
    code, out = run_json(capsys, *base, "--pred", "semi-iso", "--morphism", "u")
    assert code == 0 and out["witness"] == "u"
    assert run(capsys, *base, "--pred", "semi-iso", "--morphism", "id")[0] == 1
    assert run(capsys, *base, "--pred", "semi-mono", "--morphism", "u")[0] == 0
    assert run(capsys, *base, "--pred", "semisplit-epi", "--morphism", "u", "--object2", "*")[0] == 0


def test_check_semi_iso(capsys):
    code, out = run_json(capsys, "check", "semi-iso", "-F", fx("fixpoint_alpha"))
    assert code == 0 and out["witness"] is not None
    assert out["semisplit_mono_witness"] is not None and out["semisplit_epi_witness"] is not None


def test_solve_p(capsys, tmp_path):
    out = tmp_path / "p.semicat.json"
    assert run(capsys, "solve-p", "-F", fx("monoid_fe"), "--mode", "sep", "-o", str(out))[0] == 0
    sol = io.load(str(out))
    assert verify_P(sol.functor, sol, "separable") == []
    assert run(capsys, "solve-p", "-F", fx("monoid_fe"), "--mode", "naturally-semifull")[0] == 1
    assert run(capsys, "solve-p", "-F", fx("monoid_fe"), "--mode", "bogus")[0] == 2


def test_complete(capsys, tmp_path):
    out = tmp_path / "c.semicat.json"
    assert run(capsys, "complete", "-C", fx("m3"), "-o", str(out))[0] == 0
    cat = io.load(str(out))
    assert (len(cat.objects), len(cat.morphisms)) == (2, 9)
    assert run(capsys, "complete", "-C", fx("mat2"), "--completion-cap", "10")[0] == 2
    assert run(capsys, "complete", "-F", fx("monoid_fe"), "-o", str(tmp_path / "f.semicat.json"))[0] == 0


def test_coident(capsys, tmp_path):
    code, out = run_json(capsys, "coident", "-C", fx("m3"), "-E", fx("idem_m3_e"), "-o", str(tmp_path))
    assert code == 0 and out["morphisms"] == 2
    for name in out["files"]:
        assert run(capsys, "validate", str(tmp_path / name))[0] == 0
    assert run(capsys, "adj", "validate", "-A", str(tmp_path / "L_adj_H.semicat.json"))[0] == 0
    assert run(capsys, "coident", "-C", fx("w"), "-E", fx("idem_m3_e"), "-o", str(tmp_path))[0] == 2


def test_adj(capsys, tmp_path):
    assert run(capsys, "adj", "validate", "-A", fx("eu_self_adj"))[0] == 0
    out = tmp_path / "comp.semicat.json"
    assert run(capsys, "adj", "compose", "-A", fx("eu_self_adj"), "-A", fx("eu_self_adj"), "-o", str(out))[0] == 0
    assert run(capsys, "adj", "validate", "-A", str(out))[0] == 0
    assert run(capsys, "adj", "promote", "-A", fx("upsilon_iota_w"), "--side", "left")[0] == 0
    assert run(capsys, "adj", "compose", "-A", fx("eu_self_adj"))[0] == 2


def test_rafael(capsys):
    code, out = run_json(capsys, "rafael", "-A", fx("eu_self_adj"), "--side", "left", "--mode", "nat-semifull")
    assert code == 0 and out["witness"]["transformation"] is not None
    assert run(capsys, "rafael", "-A", fx("eu_self_adj"), "--side", "left", "--mode", "separable")[0] == 1
    assert run(capsys, "rafael", "-A", fx("upsilon_iota_w"), "--side", "right", "--mode", "sep",
               "--threads", "2")[0] == 0


def test_gallery(capsys):
    code, out, _ = run(capsys, "gallery", "list")
    assert code == 0 and "monoid-fe" in out
    code, out = run_json(capsys, "gallery", "run", "monoid-fe", "coidentifier-LH")
    assert code == 0 and set(out) == {"monoid-fe", "coidentifier-LH"}
    assert all(r["ok"] for rows in out.values() for r in rows)
    assert run(capsys, "gallery", "run", "nope")[0] == 2


def test_enumerate(capsys):
    code, out = run_json(capsys, "enumerate", "idem-nat", "-C", fx("m3"))
    assert code == 0 and out["count"] == 2
    code, out = run_json(capsys, "enumerate", "semifunctors", "-C", fx("w"), "-C", fx("w"))
    assert code == 0 and out["count"] == 3
    code, out = run_json(capsys, "enumerate", "seminatural", "-F", fx("eu_on_w"), "-F", fx("eu_on_w"))
    assert code == 0 and out["count"] >= 1


def test_console_script_and_module():
    r = subprocess.run([sys.executable, "-m", "semicat", "check", "separable", "-F", fx("monoid_fe")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "separable: true" in r.stdout
    r = subprocess.run(["semicat", "validate", "-"], input="", capture_output=True, text=True)
    assert r.returncode == 2
