import io
import json
import subprocess
import sys

import pytest

from nichols.cli import format_tensor, run
from nichols.errors import InputError
from nichols.specfile import load_spec, parse_spec, read_relations, resolve_path


def _run(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, json.loads(buf.getvalue())


def _strip_timing(report):
    report = dict(report)
    report.pop("timing", None)
    return report


def test_dims_report():
    code, rep = _run("dims", "s3_transpositions")
    assert code == 0 and rep["status"] == "ok"
    assert rep["result"]["dims"] == [1, 3, 4, 3, 1, 0]
    assert rep["result"]["total"] == 12 and rep["result"]["palindromic"]
    assert rep["result"]["verdict"] == "finite(12)"
    assert len(rep["input"]["sha256"]) == 64
    assert "tensor_order" in rep["conventions"]


def test_output_is_deterministic():
    a = _run("relations", "d3_sigma", "--deg", "3")[1]
    b = _run("relations", "d3_sigma", "--deg", "3")[1]
    assert _strip_timing(a) == _strip_timing(b)


def test_relations_counts():
    code, rep = _run("relations", "d5_sigma", "--deg", "2")
    assert code == 0
    assert rep["result"]["degrees"][0]["kernel_dim"] == 9


def test_check_and_pair():
    code, rep = _run("check", "d5_sigma")
    assert code == 0 and rep["result"]["group_order"] == 10 and rep["result"]["dim"] == 5
    code, rep = _run("pair", "s3_transpositions", "--max-deg", "3")
    assert code == 0 and rep["result"]["dims"] == [1, 3, 4, 3]


def test_quotient_with_file():
    code, rep = _run("quotient", "s3_cyclic_basis", "--relations", "s3_relations.txt")
    assert code == 0 and rep["result"]["dims"] == [1, 3, 4, 3, 1, 0]


def test_gs_and_bosonize():
    code, rep = _run("gs", "d3_sigma", "--cutoff", "6")
    assert rep["result"]["g"][:4] == ["1", "3", "4", "-3"]
    code, rep = _run("bosonize", "taft_3")
    assert code == 0 and rep["result"]["dim"] == 9
    assert rep["result"]["presentation"]["all_hold"]


def test_exit_codes(tmp_path):
    code, rep = _run("dims", "s3_transpositions", "--budget", "5")
    assert code == 2 and rep["status"] == "resource_error"
    code, rep = _run("dims", str(tmp_path / "missing.toml"))
    assert code == 2 and rep["status"] == "input_error"
    bad = tmp_path / "bad.toml"
    bad.write_text('[group]\ntype = "symmetric"\nn = 3\n[module]\n'
                   'explicit = { degrees = ["(0 1)", "(0 2)"], action = { "(0 1)" = [[1, 0], [0, 1]], "(1 2)" = [[1, 0], [0, 1]] } }\n')
    code, rep = _run("check", str(bad))
    assert code == 1 and rep["status"] == "failed"
    code, rep = _run("bosonize", "d5_sigma", "--max-deg", "3")
    assert code == 1


def test_json_output_file(tmp_path):
    out = tmp_path / "r.json"
    run(["dims", "taft_2", "--json", str(out)], stdout=io.StringIO())
    assert json.loads(out.read_text())["result"]["dims"] == [1, 1, 0]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nichols.cli", "dims", "taft_2"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["result"]["total"] == 2


def test_spec_round_trip():
    spec = load_spec("d3_sigma")
    again = parse_spec(spec.to_toml())
    assert again.raw == spec.raw
    assert again.module.degrees == spec.module.degrees


@pytest.mark.parametrize("text,match", [
    ('[group]\ntype = "cyclic"\nn = 3\ncolour = 1\n[module]\ndiagonal = { q = [["-1"]] }\n', "unknown key"),
    ('[module]\ndiagonal = { q = [["-1"]] }\n[options]\nspeed = 2\n', "unknown key"),
    ('[group]\ntype = "symmetric"\nn = 3\n[module]\ninduced = { class_rep = "(0 1)", character = { "(0 1)" = "2" } }\n',
     "root of unity"),
    ('[module]\ndiagonal = { q = [["z(3"]] }\n', "column"),
    ('[group]\ntype = "symmetric"\n[module]\ndiagonal = { q = [["-1"]] }\n', "missing"),
    ("not toml [", "syntax"),
])
def test_spec_errors(text, match):
    with pytest.raises(InputError, match=match):
        parse_spec(text)


def test_fixture_resolution():
    assert resolve_path("d5_sigma").name == "d5_sigma.toml"
    assert resolve_path("some/dir/d5_sigma.toml").name == "d5_sigma.toml"
    assert len(read_relations("d4_relations.txt")) == 11


def test_format_tensor():
    labels = ("a", "b")
    assert format_tensor({1: 1, 2: -1}, labels, 2) == "a*b - b*a"
    assert format_tensor({0: 2}, labels, 1) == "2*a"
