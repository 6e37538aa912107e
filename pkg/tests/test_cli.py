import io
import json
import subprocess
import sys

import pytest

from biquandles.catalog import loads
from biquandles.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_invariant_examples():
    assert call("invariant", "--braid", "", "--strands", "2", "--pair", "P3")[1] == "16\n"
    assert call("invariant", "--builtin", "b1", "--pair", "bigelow-pair")[1] == "736\n"
    code, out, _ = call("invariant", "--braid", "s1 s1 s1", "--switch", "BQ^3_3", "--twist")
    assert (code, out) == (0, "9\n")


def test_invariant_workers_deterministic():
    a = call("invariant", "--builtin", "b2", "--pair", "bigelow-pair")
    b = call("invariant", "--builtin", "b2", "--pair", "bigelow-pair", "--workers", "3")
    assert a == b and a[1] == "1648\n"


def test_usage_errors_exit_2():
    assert call("invariant", "--braid", "s1")[0] == 2
    assert call("invariant", "--builtin", "nonesuch", "--pair", "P1")[0] == 2
    assert call("invariant", "--braid", "s1 x", "--pair", "P1")[0] == 2
    assert call("enumerate")[0] == 2
    assert call("bogus")[0] == 2
    assert call("enumerate", "--size", "6")[0] == 2


def test_enumerate_text_and_json(tmp_path):
    code, out, _ = call("enumerate", "--size", "3")
    assert code == 0
    assert out.splitlines()[0] == "# n=3 quandles 3 racks 3 biquandles 7 biracks 3"
    assert len(loads(out)) == 16
    path = tmp_path / "n3.json"
    code, out, _ = call("enumerate", "--size", "3", "--format", "json", "--out", str(path))
    assert code == 0 and "16 entries" in out
    data = json.loads(path.read_text())
    assert len(data["entries"]) == 16
    assert call("enumerate", "--size", "3", "--class", "Q")[1].count("\n") == 4


def test_enumerate_workers_deterministic():
    assert call("enumerate", "--size", "3")[1] == call("enumerate", "--size", "3", "--workers", "2")[1]


def test_classify_and_pairs(tmp_path):
    code, out, _ = call("classify", "--builtin", "BQ^3_3")
    assert code == 0 and out.startswith("BQ^3_3  U=")
    path = tmp_path / "n3.json"
    call("enumerate", "--size", "3", "--format", "json", "--out", str(path))
    code, out, _ = call("pairs", "--catalog", str(path), "--essential")
    assert code == 0
    assert sorted(out.splitlines()) == ["BQ^3_3  Q^3_1  essential", "Q^3_3  BQ^3_5  essential"]
    code, out, _ = call("pairs", "--catalog", str(path))
    assert "BQ^3_3  Q^3_1  essential" in out.splitlines()


def test_series_command():
    code, out, _ = call("series", "--braid", "s1", "--switch", "Q^3_1", "--half-width", "2")
    assert (code, out) == (0, "3 3 3 (period 1)\n")
    code, out, _ = call("series", "--braid", "s1", "--switch", "Q^3_1", "--half-width", "1", "--csv",
                        "--dump-program", "--orientation-check")
    assert out.startswith("strands 4\n") and "writhe,phi" in out and "orientation seed" in out


@pytest.mark.parametrize("suite,code", [("appendix2", 0), ("bigelow", 0), ("theorem53", 0),
                                        ("essential34", 0), ("welded", 1)])
def test_verify_exit_codes(suite, code):
    got, out, _ = call("verify", "--suite", suite)
    assert got == code
    assert out.splitlines()[-1].startswith(f"{suite}: ")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "biquandles", "invariant", "--braid", "", "--strands",
                        "1", "--pair", "P1"], capture_output=True, text=True)
    assert (r.returncode, r.stdout) == (0, "3\n")
