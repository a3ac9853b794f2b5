import io
import json
import shutil
import subprocess
from pathlib import Path

import pytest

from wittknots import sweep
from wittknots.cli import execute
from wittknots.knots import connected_sum, knot_from_pretzel, witt_class
from wittknots.pretzel import pretzel, witt_closed_form
from wittknots.report import witt_from_json
from wittknots.witt import equals

DATA = Path(__file__).parent / "data"
THREE_KNOTS = ["pretzel:21,13,-17,-15,12", "pretzel:-3,-3,-7,5,2", "pretzel:-3,-5,7,9,6"]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = execute(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_pretzel_json_with_alexander():
    code, out, _ = run("pretzel", "5", "-3", "8", "--json", "--alexander")
    assert code == 0
    data = json.loads(out)
    assert data["signature"] == 0 and data["determinant"] == 1
    assert data["order"] == 1 and data["residues"] == []
    assert data["alexander"] == {"3": 1, "2": -2, "1": -1, "0": 5, "-1": -1, "-2": -2, "-3": 1}
    assert data["category"] == "I" and data["matrix_size"] == 8
    assert (data["predicted_order"], data["rule"]) == (1, "odd_odd_even")


def test_pretzel_text_report():
    code, out, _ = run("pretzel", "-3", "9", "15", "-5", "-5")
    assert code == 0
    assert "Witt class: ⟨-5⟩ ⊕ ⟨6⟩ ⊕ ⟨-35⟩ ⊕ ⟨42⟩" in out
    assert "determinant: 5625" in out
    assert "3: 2 in Z4" in out


def test_sum_of_three_knots_has_order_four():
    code, out, _ = run("sum", *THREE_KNOTS, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["signature"] == 0 and data["order"] == 4
    residues = {r["p"]: r for r in data["residues"]}
    assert residues[71] == {"p": 71, "group": "Z4", "value": 3}
    assert residues[23] == {"p": 23, "group": "Z4", "value": 1}
    assert residues[2549] == {"p": 2549, "group": "Z2xZ2", "value": [1, 0]}


def test_json_round_trip_matches_in_memory_class():
    code, out, _ = run("sum", *THREE_KNOTS, "--json")
    knots = [knot_from_pretzel(s.split(":")[1].split(",")) for s in THREE_KNOTS]
    total = connected_sum(connected_sum(knots[0], knots[1]), knots[2])
    assert equals(witt_from_json(json.loads(out)), witt_class(total))
    code, out, _ = run("pretzel", "7", "3", "-5", "2", "--json")
    assert equals(witt_from_json(json.loads(out)), witt_closed_form(pretzel(7, 3, -5, 2)))


def test_seifert_file():
    code, out, _ = run("seifert", str(DATA / "trefoil.json"), "--json", "--alexander")
    assert code == 0
    data = json.loads(out)
    assert data["witt_generators"] == [2, 6] and data["signature"] == 2
    assert data["order"] == "inf" and data["alexander"] == {"1": 1, "0": -1, "-1": 1}


def test_sum_accepts_files_and_pretzels():
    code, out, _ = run("sum", f"file:{DATA / 'trefoil.json'}", "pretzel:5,-3,8", "--json")
    assert code == 0 and json.loads(out)["matrix_size"] == 10


@pytest.mark.parametrize(
    "argv, code",
    [
        (["pretzel", "3", "5", "2", "2"], 2),
        (["pretzel", "3", "5", "7", "9"], 2),
        (["pretzel", "3", "0", "5"], 2),
        (["pretzel", "3", "5"], 2),
        (["sum", "pretzel:3,5,2,2"], 2),
        (["sum", "knot:3,5,7"], 2),
        (["seifert", str(DATA / "inadmissible.json")], 3),
        (["seifert", str(DATA / "ragged.json")], 3),
        (["seifert", str(DATA / "truncated.json")], 3),
        (["seifert", str(DATA / "floats.json")], 3),
        (["seifert", str(DATA / "not_object.json")], 3),
        (["seifert", str(DATA / "missing.json")], 3),
        (["sum", f"file:{DATA / 'truncated.json'}"], 3),
        (["tlsig", f"file:{DATA / 'inadmissible.json'}"], 3),
        (["sweep", "--category", "II", "--n", "3"], 2),
        (["nonsense"], 2),
    ],
)
def test_exit_codes_for_malformed_inputs(argv, code):
    assert run(*argv)[0] == code


def test_sweep_small_grid_passes():
    code, out, _ = run("sweep", "--category", "III", "--n", "3", "--odd-range", "-5..5")
    assert code == 0
    assert "checked 216" in out and "mismatches 0" in out
    for check in ("stabilization", "predicted-order"):
        code, out, _ = run("sweep", "--category", "I", "--n", "3", "--odd-range", "-5..5", "--even-range", "-4..4", "--check", check)
        assert code == 0, out


def test_sweep_reports_mismatch(monkeypatch):
    monkeypatch.setattr(sweep, "check_closed_vs_direct", lambda K: "forced disagreement")
    code, out, _ = run("sweep", "--category", "III", "--n", "3", "--odd-range", "-1..1")
    assert code == 4
    assert out.count("MISMATCH\t") == 8
    assert "forced disagreement" in out


def test_tlsig_table_and_plot(tmp_path):
    figure = tmp_path / "tl.png"
    code, out, _ = run("tlsig", "pretzel:5,-3,8", "--samples", "16", "--plot", str(figure))
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines() if line and not line.startswith("#")]
    assert rows[0] == ["k", "angle", "signature"]
    assert [r[2] for r in rows[1:]] == ["0"] * 16
    assert figure.exists() and figure.stat().st_size > 0


def test_tlsig_marks_singular_samples():
    # the trefoil's Alexander roots are at angles pi/3 and 5pi/3: sample 5 points
    code, out, _ = run("tlsig", "pretzel:1,1,1", "--samples", "5")
    assert code == 0
    values = [line.split("\t")[2] for line in out.splitlines()[2:]]
    assert values == ["singular", "2", "2", "2", "singular"]


@pytest.mark.skipif(shutil.which("wittknots") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["wittknots", "pretzel", "1", "1", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and "signature: 2" in proc.stdout
    proc = subprocess.run(["wittknots", "pretzel", "3", "5", "2", "2"], capture_output=True, text=True)
    assert proc.returncode == 2
