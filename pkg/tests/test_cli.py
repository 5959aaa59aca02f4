import json
import math

import pytest

from cohspace import cli
from cohspace.coherent_spaces import CoherentSpace
from cohspace.errors import DuplicateLabel, ParseError

R2 = "[[0,0],[1,0]]"


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_truth_table_cnot(capsys):
    code, out = run(capsys, "truth-table", "--gate", "cnot", "--R", R2)
    assert code == 0
    lines = out.out.splitlines()
    assert lines[0] == "in_control,in_target,out_control,out_target"
    assert len(lines) == 17 and lines[7] == "1,2,1,3"


def test_truth_table_first_fastest(capsys):
    code, out = run(capsys, "truth-table", "--gate", "and", "--R", R2, "--order", "first-fastest")
    assert [int(l.split(",")[2]) for l in out.out.splitlines()[1:]] == [0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3]


def test_gram_report(capsys):
    code, out = run(capsys, "gram", "--labels", R2)
    rep = json.loads(out.out)
    assert code == 0 and rep["pass"]
    assert rep["mu"] == pytest.approx(math.exp(-0.5))
    assert rep["eigvals"] == pytest.approx([1 + math.exp(-0.5), 1 - math.exp(-0.5)])
    assert {"input_hash", "tolerances", "checks"} <= set(rep)
    assert set(rep["checks"][0]) == {"check", "residual", "tolerance", "pass"}


@pytest.mark.parametrize("command", ["projector", "chain", "contour", "qfunction", "cnot-quantum"])
def test_commands_pass(capsys, command):
    code, out = run(capsys, command, "--labels", '{"labels": [[0,0],[1,0]]}')
    assert code == 0 and json.loads(out.out)["pass"]


def test_cnot_quantum_four_point(capsys):
    sq = "[[1,0],[0,1],[-1,0],[0,-1]]"
    code, out = run(capsys, "cnot-quantum", "--labels", sq, "--target-labels", "[[0.9,0],[0,0.9],[-0.9,0],[0,-0.9]]")
    rep = json.loads(out.out)
    assert code == 0 and rep["gate"]["dims"] == [4, 4]


def test_cnot_classical(capsys):
    code, out = run(capsys, "cnot-classical", "--R", R2)
    rep = json.loads(out.out)
    assert code == 0 and rep["controls"][3]["cycles"] == [[0, 3], [1, 2]]


def test_resolution_command(capsys):
    code, out = run(capsys, "resolution", "--offsets", "[[1,0]]", "--grid", "100x128")
    assert code == 0 and json.loads(out.out)["pass"]


def test_output_file_and_spec_file(tmp_path, capsys):
    space_file = tmp_path / "space.json"
    space_file.write_text('{"labels": [[0,0],[0,1],[1,0],[-1,-1]]}')
    target = tmp_path / "report.json"
    code, _ = run(capsys, "projector", "--labels", str(space_file), "--out", str(target))
    assert code == 0 and json.loads(target.read_text())["inputs"]["n_max"] == 64
    assert isinstance(cli.parse_space(str(space_file)), CoherentSpace)


def test_failed_check_exits_one(capsys):
    code, out = run(capsys, "gram", "--labels", R2, "--tol", "0")
    assert code == 1 and not json.loads(out.out)["pass"]


def test_parse_errors_exit_two(capsys):
    assert run(capsys, "gram", "--labels", "[[0,0],[1]]")[0] == 2
    code, out = run(capsys, "gram", "--labels", "[[0,0],[1e-14,0]]")
    assert code == 2 and "closer" in out.err
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "verify", "--suite", "ring", "--tol", "bogus=1")[0] == 2
    assert run(capsys, "gram", "--labels", "{not json")[0] == 2


def test_parse_space_errors():
    with pytest.raises(ParseError, match="labels"):
        cli.parse_space('[[0,0],["a",1]]')
    with pytest.raises(DuplicateLabel):
        cli.parse_space("[[0,0],[0,0.0000000000001]]")


def test_verify_is_deterministic(capsys):
    _, a = run(capsys, "verify", "--suite", "lemma", "--seed", "3")
    _, b = run(capsys, "verify", "--suite", "lemma", "--seed", "3")
    ra, rb = json.loads(a.out), json.loads(b.out)
    for r in (ra, rb):
        for s in r["suites"].values():
            s.pop("seconds")
    assert ra == rb and ra["pass"]
