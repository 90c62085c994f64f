# tests/test_cli.py
import csv
import io
import json
from fractions import Fraction
from types import SimpleNamespace

import pytest

from fcgp.cli import (FIELDS, ExperimentConfig, main, run_experiment, write_csv)
from fcgp.config import set_settings
from fcgp.core import (Solution, format_edge_list, read_edge_list)
from fcgp.generators import gen_grid
from fcgp.output import set_console_func

from conftest import star


TRIANGLE = "3 3\n0 1\n0 2\n1 2\n"
K4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


@pytest.fixture
def messages():
    captured = []
    set_console_func(captured.append)
    yield captured
    set_console_func(None)


@pytest.fixture
def triangle(tmp_path):
    path = tmp_path / "k3.el"
    path.write_text(TRIANGLE)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_solve_json(capsys, triangle):
    code, out = run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/2", "--algo", "brute", "--workers", "1")
    assert code == 0
    record = json.loads(out)
    assert list(record) == list(FIELDS)
    assert record["value"] == "3/2"
    assert record["vertices"] == [0, 1]
    assert record["alpha"] == "1/2"
    assert record["direction"] == "max"
    assert record["provenance"] == "brute-force/exhaustive"
    assert record["wall_ms"] is None
    assert record["oracle"] is None and record["accepted"] is None


def test_solve_is_reproducible(capsys, triangle):
    argv = ("solve", triangle, "--k", "2", "--alpha", "1/3", "--mode", "min", "--algo", "bnb", "--out", "csv")
    assert run(capsys, *argv) == run(capsys, *argv)


def test_solve_threshold_and_oracle(capsys, triangle):
    _, out = run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/2", "--algo", "greedy", "--p", "1", "--oracle")
    record = json.loads(out)
    assert record["accepted"] is True
    assert record["oracle"] == "3/2"
    assert record["ratio"] == "1/1"

    _, out = run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/2", "--algo", "greedy", "--p", "2")
    assert json.loads(out)["accepted"] is False


def test_solve_seed_descriptor(capsys, triangle):
    code, out = run(capsys, "solve", triangle, "--k", "1", "--alpha", "1/3", "--algo", "third", "--seed", "7")
    assert code == 0
    record = json.loads(out)
    assert record["instance"] == f"{triangle}#seed=7"
    assert record["value"] == "2/3"


def test_solve_csv(capsys, triangle):
    code, out = run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/2", "--algo", "bnb", "--out", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# fcgp-csv v1"
    assert lines[1].startswith("# ratio:")
    rows = list(csv.reader(lines[2:]))
    assert rows[0] == list(FIELDS)
    row = dict(zip(FIELDS, rows[1]))
    assert row["vertices"] == "0 1"
    assert row["value"] == "3/2"
    assert row["wall_ms"] == "" and row["accepted"] == ""


def test_solve_text(capsys, triangle):
    _, out = run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/2", "--algo", "brute", "--workers", "1",
                 "--out", "text")
    lines = out.splitlines()
    assert lines[0] == "    < fcgp solve >"
    assert "#07 [value]str: 3/2" in lines
    assert "#08 [vertices]list: [0, 1]" in lines
    assert "#11 [oracle]: -" in lines


def test_solve_greedy_on_star(capsys, tmp_path):
    path = tmp_path / "star.el"
    path.write_text(format_edge_list(star(5)))
    _, out = run(capsys, "solve", str(path), "--k", "1", "--alpha", "1/2", "--algo", "greedy")
    assert json.loads(out)["vertices"] == [0]


def test_solve_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(K4.encode())))
    code, out = run(capsys, "solve", "-", "--k", "2", "--alpha", "1/2", "--algo", "subexp", "--workers", "1")
    assert code == 0
    assert json.loads(out)["value"] == "5/2"


def test_exit_codes(capsys, tmp_path, triangle, messages):
    bad = tmp_path / "bad.el"
    bad.write_text("3 2\n0 1\n1 1\n")
    assert run(capsys, "solve", str(bad), "--k", "1", "--alpha", "1/2", "--algo", "greedy")[0] == 1
    assert any("Line 3" in message for message in messages)

    assert run(capsys, "solve", str(tmp_path / "missing.el"), "--k", "1", "--alpha", "1/2", "--algo", "greedy")[0] == 1
    assert run(capsys, "solve", triangle, "--k", "4", "--alpha", "1/2", "--algo", "greedy")[0] == 1
    assert run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/2", "--algo", "fptas")[0] == 1
    assert run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/4", "--algo", "topdeg", "--epsilon", "1/2")[0] == 2
    assert run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/2", "--algo", "third")[0] == 2

    k4 = tmp_path / "k4.el"
    k4.write_text(K4)
    code, _ = run(capsys, "solve", str(k4), "--k", "2", "--alpha", "1/2", "--algo", "subexp", "--width-budget", "0")
    assert code == 3

    set_settings(brute_force_budget=1)
    assert run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/2", "--algo", "brute", "--workers", "1")[0] == 5


def test_undecodable_input_names_the_line(capsys, tmp_path, monkeypatch, messages):
    bad = tmp_path / "latin.el"
    bad.write_bytes(b"3 1\n0 \xff\n")
    assert run(capsys, "solve", str(bad), "--k", "1", "--alpha", "1/2", "--algo", "greedy")[0] == 1
    assert any("Line 2" in message and "UTF-8" in message for message in messages)

    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"\xfe 1\n0 1\n")))
    assert run(capsys, "solve", "-", "--k", "1", "--alpha", "1/2", "--algo", "greedy")[0] == 1
    assert any("Line 1" in message for message in messages)


def test_parameter_range_checked_before_epsilon(capsys, triangle, messages):
    assert run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/4", "--algo", "topdeg")[0] == 2
    assert "alpha >= 1/3" in messages[-1]
    assert run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/2", "--mode", "min", "--algo", "topdeg")[0] == 2
    assert run(capsys, "solve", triangle, "--k", "2", "--alpha", "0", "--algo", "fptas")[0] == 2
    assert run(capsys, "solve", triangle, "--k", "2", "--alpha", "1/2", "--algo", "topdeg")[0] == 1
    assert "--epsilon" in messages[-1]


def test_usage_errors_exit_one(messages):
    with pytest.raises(SystemExit) as info:
        main(["solve", "x.el", "--alpha", "1/2", "--algo", "brute"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["solve", "x.el", "--k", "1", "--alpha", "1/2", "--algo", "simplex"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["decompose", "x.el", "--mode", "maximum"])
    assert info.value.code == 1


def test_generate(capsys, tmp_path):
    code, out = run(capsys, "generate", "--family", "grid", "--rows", "3", "--cols", "4", "--out-dir", str(tmp_path))
    assert code == 0
    graph_path, meta_path = out.split()
    assert graph_path.endswith("grid-rows3-cols4.el")
    assert read_edge_list(graph_path) == gen_grid(3, 4)
    meta = json.loads(open(meta_path, encoding="utf-8").read())
    assert meta == {"family": "grid", "params": {"rows": 3, "cols": 4}, "seed": None, "n": 12, "m": 17}

    _, out = run(capsys, "generate", "--family", "gap", "--k", "4", "--N", "3", "--mu", "1/6", "--out-dir", str(tmp_path))
    graph_path, meta_path = out.split()
    assert graph_path.endswith("gap-k4-N3-mu1_6.el")
    assert read_edge_list(graph_path).n == 19


def test_generate_is_deterministic(capsys, tmp_path):
    argv = ("generate", "--family", "gnm", "--n", "20", "--m", "35", "--seed", "9")
    run(capsys, *argv, "--out-dir", str(tmp_path / "a"))
    run(capsys, *argv, "--out-dir", str(tmp_path / "b"), "--name", "again")
    first = (tmp_path / "a" / "gnm-n20-m35-s9.el").read_bytes()
    assert first == (tmp_path / "b" / "again.el").read_bytes()


def test_generate_missing_parameter(capsys, tmp_path, messages):
    code, _ = run(capsys, "generate", "--family", "regular", "--n", "10", "--out-dir", str(tmp_path))
    assert code == 1
    code, _ = run(capsys, "generate", "--family", "regular", "--n", "5", "--d", "3", "--out-dir", str(tmp_path))
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("--suite", "approx", "--trials", "6", "--max-n", "8"),
        ("--suite", "gap"),
        ("--suite", "subexp", "--trials", "6", "--max-n", "9"),
        ("--suite", "exchange", "--trials", "10", "--max-n", "9"),
    ]
)
def test_experiment_suites(capsys, tmp_path, argv):
    code, out = run(capsys, "experiment", *argv, "--workers", "1", "--repro-dir", str(tmp_path))
    assert code == 0
    rows = list(csv.reader(out.splitlines()[2:]))
    assert rows[0] == list(FIELDS)
    summary = dict(zip(FIELDS, rows[-1]))
    assert summary["instance"] == "summary"
    assert summary["provenance"].startswith("violations=0")
    assert not list(tmp_path.iterdir())


def test_experiment_gap_records(capsys, tmp_path):
    code, out = run(capsys, "experiment", "--suite", "gap", "--mu", "1/10", "--workers", "1", "--out", "json")
    assert code == 0
    records = json.loads(out)
    top = next(record for record in records if record["algorithm"] == "topdeg-f")
    assert top["value"] == "210/1"
    assert top["ratio"] == "420/667"
    assert records[-1]["ratio"] == "420/667"


def test_experiment_approx_records():
    report = run_experiment(ExperimentConfig("approx", trials=100, seed=1, max_n=7, workers=1), show_progress=False)
    assert report.violations == 0
    trials = [record for record in report.records if record.algorithm == "bnb"]
    assert len(trials) == 100
    assert all(record.ratio == 1 for record in trials)
    assert {record.alpha for record in trials} >= {Fraction(0), Fraction(1, 3)}
    # no approximation scheme runs at alpha = 0
    assert not any(record.algorithm == "fptas" and record.alpha == 0 for record in report.records)
    assert all(record.alpha >= Fraction(1, 3) for record in report.records if record.algorithm == "topdeg")


def test_experiment_flags_branch_and_bound_mismatch(capsys, tmp_path, monkeypatch, messages):
    from fcgp.cli import _experiments

    def wrong(instance):
        chosen = tuple(range(instance.graph.n - instance.k, instance.graph.n))
        return SimpleNamespace(solution=Solution(chosen, Fraction(-1), "branch-and-bound"))

    monkeypatch.setattr(_experiments, "solve_branch_and_bound", wrong)
    code, _ = run(capsys, "experiment", "--suite", "approx", "--trials", "3", "--max-n", "6", "--workers", "1",
                  "--repro-dir", str(tmp_path))
    assert code == 4
    assert sorted(path.name for path in tmp_path.iterdir()) == ["approx-0000.el", "approx-0001.el", "approx-0002.el"]


def test_experiment_is_deterministic():
    config = ExperimentConfig("approx", trials=8, seed=3, max_n=9, workers=1)
    first = run_experiment(config, show_progress=False)
    again = run_experiment(config, show_progress=False)
    parallel = run_experiment(ExperimentConfig("approx", trials=8, seed=3, max_n=9, workers=2), show_progress=False)

    def dump(report):
        stream = io.StringIO()
        write_csv(report.records, stream)
        return stream.getvalue()

    assert dump(first) == dump(again) == dump(parallel)
    assert first.violations == 0


def test_decompose(capsys, tmp_path):
    path = tmp_path / "c6.el"
    path.write_text("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
    code, out = run(capsys, "decompose", str(path))
    assert code == 0
    assert out.splitlines()[0].startswith("# width 2 heuristic ")

    _, out = run(capsys, "decompose", str(path), "--prefix", "1")
    assert out.splitlines()[0].startswith("# width 0 ")
