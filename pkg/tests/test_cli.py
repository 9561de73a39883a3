from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from gnclab.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_classify_z6():
    code, out, _ = run("classify", "Zn(6)", "--props", "gnc,clean")
    assert code == 0
    v = json.loads(out)["verdicts"]
    assert v["clean"]["holds"] is True and v["gnc"]["holds"] is False
    assert v["gnc"]["witness"]["elements"] == [{"index": 2, "value": "2"}]


def test_classify_assert_exit_code():
    assert run("classify", "Zn(6)", "--props", "gnc", "--assert")[0] == 1
    assert run("classify", "Zn(4)", "--props", "gnc,uu", "--assert")[0] == 0


def test_suite_only_c12_markdown():
    code, out, _ = run("suite", "--only", "C12", "--format", "md")
    assert code == 0
    assert "| C12 |" in out and "| pass | 64 |" in out


def test_decompose_refutation():
    code, out, _ = run("decompose", "RG(Zn(3),C(2))", "--element", "4", "--kind", "nil_clean")
    assert code == 0
    payload = json.loads(out)
    assert payload["found"] is False
    assert payload["result"]["elements"] == [{"index": 4, "value": "1+g"}]
    assert [r["idempotent"]["value"] for r in payload["result"]["rows"]] == ["0", "1", "2+g", "2+2g"]
    assert run("decompose", "RG(Zn(3),C(2))", "--element", "4", "--kind", "nil_clean", "--assert")[0] == 1


def test_decompose_found():
    code, out, _ = run("decompose", "Zn(6)", "--element", "3", "--kind", "nil_clean")
    assert code == 0
    r = json.loads(out)["result"]
    assert r["idempotent_part"]["index"] == 3 and r["other_part"]["index"] == 0


def test_build_save_then_classify_load_round_trip(tmp_path):
    path = tmp_path / "ring.json"
    code, out, _ = run("build", "T(2,Zn(3))", "--save", str(path))
    assert code == 0 and json.loads(out)["validation"]["valid"]
    _, direct, _ = run("classify", "T(2,Zn(3))")
    _, loaded, _ = run("classify", "--load", str(path))
    assert json.loads(direct) == json.loads(loaded)


def test_load_validates(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"size": 2, "zero": 0, "one": 1, "add": [[0, 1], [1, 0]],
                                "mul": [[0, 0], [0, 0]]}))
    code, _, err = run("classify", "--load", str(path))
    assert code == 2 and err.count("\n") == 1 and "multiplicative identity" in err


@pytest.mark.parametrize("argv, code", [
    (["build", "M(2,Zn(2)"], 2),
    (["build", "Ks(Zn(4),9)"], 2),
    (["classify", "Zn(4)", "--props", "tall"], 2),
    (["decompose", "Zn(4)", "--element", "7", "--kind", "clean"], 2),
    (["suite", "--only", "C99"], 2),
    (["suite", "--catalog", "/nonexistent/catalog.txt"], 2),
    (["frobnicate"], 2),
    (["classify"], 2),
    (["--cap", "100", "build", "M(2,Zn(4))"], 3),
    (["build", "M(2,Zn(4))", "--cap", "100"], 3),
    (["scan-zn", "--max", "0"], 2),
])
def test_error_exit_codes_and_single_line_diagnostics(argv, code):
    got, out, err = run(*argv)
    assert got == code
    assert out == "" and err.count("\n") == 1 and err.startswith("gnclab:")


def test_suite_with_catalog_file(tmp_path):
    cat = tmp_path / "cat.txt"
    cat.write_text("Zn(6)\n# comment\nM(2,Zn(2))\n")
    code, out, _ = run("suite", "--catalog", str(cat), "--no-timing")
    assert code == 0
    payload = json.loads(out)
    by = {r["id"]: r for r in payload["results"]}
    assert by["C1"]["rings_examined"] == 2 and by["C12"]["status"] == "skipped"
    assert all(r["runtime_ms"] == 0 for r in payload["results"])


def test_reports_are_byte_stable():
    a = run("suite", "--only", "C1,C7,C23", "--no-timing")[1]
    b = run("suite", "--only", "C1,C7,C23", "--no-timing")[1]
    assert a == b
    assert run("scan-zn", "--max", "20")[1] == run("scan-zn", "--max", "20")[1]


def test_scan_zn_output():
    code, out, _ = run("scan-zn", "--max", "12")
    payload = json.loads(out)
    assert code == 0 and payload["consistent"]
    assert [r["n"] for r in payload["rows"] if r["gnc"]] == [1, 2, 3, 4, 5, 7, 8, 9, 11]


def test_build_reports_sampled_validation_above_bound():
    code, out, _ = run("--validate-bound", "10", "--seed", "4", "build", "M(2,Zn(2))")
    rep = json.loads(out)["validation"]
    assert code == 0 and rep["mode"] == "sampled" and rep["valid"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gnclab", "classify", "Zn(3)", "--props", "gnc"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdicts"]["gnc"]["holds"] is True
