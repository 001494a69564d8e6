import json
import subprocess
import sys

import pytest

from rankhull.cli import main, run
from rankhull.codes import random_code
from rankhull.gf import standard_tower
from rankhull.serialize import code_to_json


def _json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.mark.parametrize("case", ["5.1", "5.2", "5.3", "remark-3.8"])
def test_demo_cases_pass(capsys, case):
    code, rep = _json(capsys, ["demo", "--case", case])
    assert code == 0
    assert rep["checks"] and all(c["passed"] for c in rep["checks"])


def test_demo_all_ones_checks_named(capsys):
    _, rep = _json(capsys, ["demo", "--case", "5.1"])
    names = {c["name"] for c in rep["checks"]}
    assert "GG^dagger = [[0,0],[0,1]]" in names and "h(CM) = 0" in names
    assert rep["outputs"]["h_before"] == 1 and rep["outputs"]["h_after"] == 0


def test_demo_obstruction_histogram(capsys):
    _, rep = _json(capsys, ["demo", "--case", "remark-3.8"])
    assert rep["outputs"]["histogram"] == [[1, 6]]


def test_mrd_with_hull_lcd(capsys):
    code, rep = _json(capsys, ["mrd-with-hull", "--q", "3", "--m", "1", "--k", "1", "--ell", "0", "--s", "1"])
    assert code == 0
    assert rep["outputs"]["d"] == 2
    assert rep["outputs"]["code"]["n"] == 2 and rep["outputs"]["code"]["k"] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["field-check", "--q", "3", "--m", "2"],
        ["basis", "--q", "2", "--m", "2", "--seed", "4"],
        ["gabidulin", "--q", "2", "--m", "2", "--k", "2", "--s", "3"],
        ["so-mrd", "--q", "2", "--m", "2", "--k", "2"],
        ["hull", "--q", "3", "--m", "1", "--n", "4", "--k", "2", "--min-hull", "1"],
        ["vary-hull", "--q", "4", "--m", "1", "--n", "3", "--k", "1", "--min-hull", "1", "--target", "0"],
        ["lcd", "--q", "2", "--m", "1", "--n", "2", "--k", "1", "--min-hull", "1", "--flavor", "euclidean"],
        ["spectrum", "--q", "2", "--m", "1", "--n", "3", "--k", "1"],
    ],
)
def test_subcommands_pass(capsys, argv):
    code, rep = _json(capsys, argv)
    assert code == 0, rep
    assert rep["command"] == argv[0]


def test_code_and_field_files(tmp_path, capsys):
    T = standard_tower(3, 1)
    C = random_code(T, 4, 2, seed=3, min_hull=2)
    cpath = tmp_path / "code.json"
    cpath.write_text(json.dumps(code_to_json(C)))
    fpath = tmp_path / "field.json"
    fpath.write_text(json.dumps(T.config()))
    code, rep = _json(capsys, ["vary-hull", "--code", str(cpath), "--field", str(fpath), "--target", "1"])
    assert code == 0
    assert rep["outputs"]["trace"]["final_h"] == 1


def test_deterministic_output(capsys):
    argv = ["vary-hull", "--q", "3", "--m", "2", "--n", "4", "--k", "2", "--min-hull", "2", "--target", "0", "--seed", "7"]
    main(argv)
    a = capsys.readouterr().out
    main(argv)
    b = capsys.readouterr().out
    assert a == b


def test_obstruction_exits_one(capsys):
    code, rep = _json(capsys, ["lcd", "--q", "2", "--m", "1", "--n", "2", "--k", "1", "--min-hull", "1"])
    assert code == 1
    assert "Obstructed22" in rep["error"]


def test_precondition_exits_two(capsys):
    code, rep = _json(capsys, ["so-mrd", "--q", "3", "--m", "1", "--k", "5"])
    assert code == 2
    code, rep = _json(capsys, ["hull", "--q", "3"])
    assert code == 2


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["demo", "--case", "9.9"])
    assert exc.value.code == 2


def test_failing_check_exits_one(monkeypatch, capsys):
    from rankhull import cli
    from rankhull.report import CommandReport

    def broken(args):
        rep = CommandReport("demo")
        rep.check("always fails", False)
        return rep

    monkeypatch.setitem(cli.COMMANDS, "demo", broken)
    code = cli.main(["demo", "--case", "5.1"])
    captured = capsys.readouterr()
    assert code == 1
    assert "always fails" in captured.err


def test_verbose_goes_to_stderr(capsys):
    main(["demo", "--case", "5.3", "--verbose"])
    captured = capsys.readouterr()
    json.loads(captured.out)
    assert "[PASS]" in captured.err


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "rankhull", "demo", "--case", "remark-3.8"], capture_output=True, text=True
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["command"] == "demo"
