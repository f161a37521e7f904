import json
import shutil
import subprocess

from fractions import Fraction

import pytest

from coring_lab import catalog
from coring_lab.cli import main
from coring_lab.cosep import check_cointegral
from coring_lab.exactlin import Matrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--in", "catalog:comatrix-2")
    assert code == 0 and out["report"]["valid"] and out["dim"] == 4


def test_cosep_emits_witnesses(capsys):
    code, out, _ = run(capsys, "cosep", "--in", "catalog:comatrix-2")
    assert code == 0 and out["coseparable"]
    w = out["witness"]
    assert len(w["gamma"]) == 1 and len(w["gamma"][0]) == 16
    assert len(w["pi"]) == 4 and w["report"]["valid"]
    c = catalog.entry("comatrix-2").build()
    gamma = Matrix.from_rows([[Fraction(x) for x in r] for r in w["gamma"]])
    assert check_cointegral(c, gamma).ok


def test_expect_flag(capsys):
    assert run(capsys, "cosep", "--in", "catalog:dual-dual-numbers", "--expect", "false")[0] == 0
    assert run(capsys, "cosep", "--in", "catalog:dual-dual-numbers", "--expect", "true")[0] == 1
    code, out, _ = run(capsys, "semisimple", "--in", "catalog:trivial-dual-numbers")
    assert code == 0 and out["semisimple"] is False


def test_dual(capsys):
    code, out, _ = run(capsys, "dual", "--in", "catalog:comatrix-2", "--side", "left")
    assert code == 0 and out["radical_dim"] == 0 and out["separability_idempotent"] is not None


def test_constructions(capsys, tmp_path):
    code, out, _ = run(capsys, "tensor", "--in", "catalog:grouplike-2", "--with", "catalog:comatrix-2")
    assert code == 0 and out["coring"]["carrier"]["dim"] == 8
    code, out, _ = run(capsys, "opposite", "--in", "catalog:trivial-T2")
    assert code == 0 and out["report"]["valid"]
    code, out, _ = run(capsys, "basechange", "--in", "catalog:comatrix-2", "--ext", "1,0,-2")
    assert code == 0 and out["psi"]["report"]["valid"]
    code, out, _ = run(capsys, "sweedler", "--in", "catalog:M2", "--sub", "[[1,0,0,1],[0,1,0,0]]")
    assert code == 0 and out["coring"]["carrier"]["dim"] == 8


def test_file_input_and_output(capsys, tmp_path):
    src = tmp_path / "c.json"
    assert run(capsys, "export", "sweedler-dual-numbers", "--out", str(src))[0] == 0
    dst = tmp_path / "r.json"
    code, out, _ = run(capsys, "check", "--in", str(src), "--out", str(dst))
    assert code == 0 and out is None
    assert json.loads(dst.read_text())["report"]["valid"]


def test_theorem(capsys):
    code, out, _ = run(capsys, "theorem", "--in", "catalog:comatrix-2")
    assert code == 0 and out["consistent"] and out["i_coseparable"]
    assert "timings" not in out and out["witnesses"]["cointegral"] is not None
    code, out, _ = run(capsys, "theorem", "--in", "catalog:trivial-dual-numbers")
    assert code == 0 and out["status"].startswith("not applicable")
    assert out["i_coseparable"] and not out["iv_tensor_opposite_semisimple"]


def test_theorem_custom_sets(capsys):
    code, out, _ = run(capsys, "theorem", "--in", "catalog:grouplike-2", "--ext", "1,0,-3",
                       "--with", "catalog:trivial-QQ", "--timings")
    assert code == 0 and list(out["ii_base_change_semisimple"]) == ["QQ[x]/(x^2 + (-3))"]
    assert list(out["iii_tensor_semisimple"]) == ["trivial-QQ"] and "timings" in out


def test_comodule_verbs(capsys):
    code, out, _ = run(capsys, "check-bicomodule", "--in", "catalog:bicomod-square-comatrix-2")
    assert code == 0 and out["report"]["valid"]
    code, out, _ = run(capsys, "bicomod-equiv", "--in", "catalog:bicomod-regular-trivial-M2")
    assert code == 0 and out["report"]["valid"]


def test_check_comodule_from_file(capsys, tmp_path):
    from coring_lab.comodule import regular_comodule
    from coring_lab.serialize import dumps
    p = tmp_path / "m.json"
    p.write_text(dumps(regular_comodule(catalog.entry("grouplike-3").build(), "right")))
    code, out, _ = run(capsys, "check-comodule", "--in", str(p))
    assert code == 0 and out["side"] == "right"


def test_entwine_verbs(capsys):
    assert run(capsys, "entwine", "check", "--in", "catalog:group-2")[0] == 0
    code, out, _ = run(capsys, "entwine", "coring", "--in", "catalog:flip-M2-grouplike-2")
    assert code == 0 and out["coring"]["carrier"]["dim"] == 8
    code, out, _ = run(capsys, "entwine", "tensor", "--in", "catalog:group-2",
                       "--with", "catalog:flip-QQ-grouplike-2")
    assert code == 0 and out["report"]["valid"]
    assert run(capsys, "entwine", "tensor", "--in", "catalog:group-2")[0] == 2


def test_invalid_objects_exit_1(capsys, tmp_path):
    data = catalog.entry("comatrix-2").build().to_json()
    data["counit"] = [[1, 1, 1, 1]]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(data))
    code, out, _ = run(capsys, "check", "--in", str(p))
    assert code == 1 and not out["report"]["valid"]
    e = catalog.entry("flip-dual-numbers-comatrix-2").build().to_json()
    e["psi"] = [[2 if x != "0" else 0 for x in row] for row in e["psi"]]
    p.write_text(json.dumps(e))
    assert run(capsys, "entwine", "check", "--in", str(p))[0] == 1
    assert run(capsys, "entwine", "coring", "--in", str(p))[0] == 1


@pytest.mark.parametrize("argv,needle", [
    (["check", "--in", "catalog:nope"], "unknown catalog entry"),
    (["check", "--in", "catalog:group-2"], "expected coring"),
    (["basechange", "--in", "catalog:comatrix-2", "--ext", "1,0,-1"], "reducible"),
    (["basechange", "--in", "catalog:comatrix-2", "--ext", "1,x"], "cannot parse"),
    (["sweedler", "--in", "catalog:M2", "--sub", "[[0,1,0,0]]"], "--sub"),
    (["export", "nope"], "unknown catalog entry"),
])
def test_input_errors_exit_2(capsys, argv, needle):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out is None and needle in err


def test_syntax_error_position(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"name": "x",\n "base": }')
    code, _, err = run(capsys, "check", "--in", str(p))
    assert code == 2 and "broken.json:2:10" in err


def test_catalog_verb(capsys, monkeypatch):
    code, out, _ = run(capsys, "catalog", "--filter", "trivial-*")
    assert code == 0 and len(out["entries"]) == 5
    code, out, _ = run(capsys, "catalog", "--filter", "zzz*")
    assert code == 0 and out == {"entries": [], "ok": True}
    code, out, _ = run(capsys, "catalog", "--list", "--filter", "group-*")
    assert code == 0 and [e["id"] for e in out["entries"]] == ["group-2", "group-3"]
    real = catalog.evaluate
    monkeypatch.setattr(catalog, "evaluate", lambda e: {**real(e), "valid": False})
    assert run(capsys, "catalog", "--filter", "grouplike-2")[0] == 1


def test_byte_identical_reports(capsys):
    main(["theorem", "--in", "catalog:grouplike-2"])
    first = capsys.readouterr().out
    main(["theorem", "--in", "catalog:grouplike-2"])
    assert capsys.readouterr().out == first


@pytest.mark.skipif(shutil.which("coring-lab") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["coring-lab", "cosep", "--in", "catalog:grouplike-2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["coseparable"]
