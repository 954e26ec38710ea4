import json
from pathlib import Path

import pytest

from digifreeze.cli import main
from digifreeze.scenarios import EXPECTED, SCENARIOS, Settings, run_scenario

DATA = Path(__file__).resolve().parent.parent / "data"
NOTCHED, CORNERS = str(DATA / "notched_rectangle.txt"), str(DATA / "notched_corners.json")


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_round_trip(capsys):
    code, out, _ = _run(capsys, "parse", NOTCHED)
    assert code == 0 and "###." in out
    code, out, _ = _run(capsys, "parse", NOTCHED, "--format", "structured")
    assert json.loads(out)["adjacency"] == "c1"


def test_boundary_command(capsys):
    code, out, _ = _run(capsys, "bd", NOTCHED)
    data = json.loads(out)
    assert code == 0 and len(data["boundary"]) == 18


def test_verify_minimal(capsys):
    code, out, _ = _run(capsys, "verify", NOTCHED, "--set", CORNERS, "--adjacency", "c1", "--minimal")
    data = json.loads(out)
    assert code == 0
    assert data["status"] == "freezing" and data["minimal_status"] == "minimal"


def test_verify_not_freezing_exit_code(capsys):
    code, out, _ = _run(capsys, "verify", NOTCHED, "--set", CORNERS, "--adjacency", "c2")
    assert json.loads(out)["status"] in ("freezing", "not-freezing")
    assert code == (0 if json.loads(out)["status"] == "freezing" else 1)


def test_undecided_exit_code(tmp_path, capsys):
    img = tmp_path / "big.txt"
    img.write_text("#######\n" * 7)
    pin = tmp_path / "pin.json"
    pin.write_text('{"points": [[0, 0]]}')
    code, _, _ = _run(capsys, "verify", str(img), "--set", str(pin), "--adjacency", "c2",
                      "--no-pulling", "--node-cap", "1")
    assert code == 2


def test_input_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("x#\n")
    code, _, err = _run(capsys, "bd", str(bad))
    assert code == 3 and "line 1, column 1" in err
    code, _, _ = _run(capsys, "bd", str(tmp_path / "missing.txt"))
    assert code == 3


def test_candidate_and_convex(capsys):
    pentagon = str(DATA / "convex_pentagon.txt")
    code, out, _ = _run(capsys, "convex", pentagon)
    assert code == 0 and json.loads(out)["convex"] is True
    code, out, _ = _run(capsys, "candidate", pentagon, "--adjacency", "c2")
    data = json.loads(out)
    assert [1, 3] not in data["points"] and len(data["points"]) == 13


def test_curves_on_non_disk(capsys):
    code, out, _ = _run(capsys, "curves", str(DATA / "two_holes.txt"))
    assert json.loads(out)["disk"] is False


def test_render_ascii_and_svg(capsys):
    code, out, _ = _run(capsys, "render", NOTCHED, "--overlay", "boundary")
    assert code == 0 and out.splitlines()[3] == "+#+."
    code, out, _ = _run(capsys, "render", NOTCHED, "--format", "svg")
    assert out.startswith("<svg")


def test_scenario_command(capsys):
    code, out, err = _run(capsys, "scenario", "fig-3-not-a-disk")
    assert code == 0 and json.loads(out)["status"] == "pass"
    assert "scenario fig-3-not-a-disk" in err
    code, _, err = _run(capsys, "scenario", "no-such-thing")
    assert code == 3


def test_open_question_small(capsys):
    code, out, _ = _run(capsys, "open-question", "--max-w", "3", "--max-h", "3")
    assert code == 0 and json.loads(out)["summary"] == "no counterexample up to bounds"
    code, _, _ = _run(capsys, "open-question", "--max-w", "9", "--max-h", "3")
    assert code == 3


def test_expected_verdicts_cover_registry():
    assert set(EXPECTED) == set(SCENARIOS)


@pytest.mark.parametrize("name", sorted(n for n in SCENARIOS if n not in ("open-question-5x5", "random-properties")))
def test_quick_scenarios_pass(name):
    assert run_scenario(name).status == "pass"


def test_scenario_with_broken_expectation_fails(monkeypatch):
    monkeypatch.setitem(EXPECTED, "diamond-curve", {**EXPECTED["diamond-curve"], "curve_size": 5})
    assert run_scenario("diamond-curve").status == "fail"


def test_scenario_undecided_under_tiny_budget():
    res = run_scenario("example-4.1", Settings(node_cap=1, pulling=False))
    assert res.status in ("undecided", "pass")
