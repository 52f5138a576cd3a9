import io
import json
import subprocess
import sys

import pytest

from stablemodels.cli import main, parse_model_names
from stablemodels.generators import gen_s6
from stablemodels.program import write_program


@pytest.fixture
def s6_file(tmp_path):
    path = tmp_path / "s6.lp"
    path.write_text(write_program(gen_s6()))
    return str(path)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_solve_s6(s6_file, capsys):
    assert main(["solve", s6_file]) == 10
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["{a0 a1 a3 a4}", "{a0 a2 a3 a5}", "{a1 a2 a4 a5}"]


@pytest.mark.parametrize("strategy", ["auto", "naive", "tsplit", "2prog", "suffix-scan"])
def test_solve_strategies_agree(s6_file, capsys, strategy):
    assert main(["solve", s6_file, "--strategy", strategy]) == 10
    assert len(capsys.readouterr().out.splitlines()) == 3


def test_solve_unsat_and_errors(tmp_path, capsys):
    odd = write(tmp_path, "odd.lp", "a :- not b.\nb :- not c.\nc :- not a.\n")
    assert main(["solve", odd]) == 20
    assert capsys.readouterr().out == ""
    bad = write(tmp_path, "bad.lp", "a :- b\n")
    assert main(["solve", bad]) == 1
    assert "parse error: 2:1: unterminated" in capsys.readouterr().err
    assert main(["solve", str(tmp_path / "missing.lp")]) == 1
    wide = write(tmp_path, "wide.lp", "a :- b, not c.\n")
    assert main(["solve", wide, "--strategy", "2prog"]) == 1
    assert "2prog" in capsys.readouterr().err


def test_parse_error_location(tmp_path, capsys):
    bad = write(tmp_path, "bad.lp", "a.\nb, c :- d.\n")
    assert main(["solve", bad]) == 1
    assert "2:" in capsys.readouterr().err


def test_usage_error_exit(capsys):
    with pytest.raises(SystemExit) as e:
        main(["solve"])
    assert e.value.code == 1


def test_max_models_and_count_only(s6_file, capsys):
    assert main(["solve", s6_file, "--max-models", "1"]) == 10
    assert len(capsys.readouterr().out.splitlines()) == 1
    assert main(["solve", s6_file, "--count-only"]) == 10
    assert capsys.readouterr().out == "3\n"
    assert main(["count", s6_file, "--strategy", "tsplit"]) == 10
    assert capsys.readouterr().out == "3\n"


def test_stats_report(s6_file, capsys, tmp_path):
    assert main(["solve", s6_file, "--stats"]) == 10
    report = json.loads(capsys.readouterr().err)
    assert report["strategy"] == "2prog" and report["models"] == 3
    assert report["input_digest"].startswith("sha256:")
    assert report["stats"]["calls"] >= report["stats"]["leaves"] >= 3
    assert report["bound"]["within"] and report["bound"]["n"] == 6
    out = tmp_path / "stats.jsonl"
    main(["solve", s6_file, "--stats-file", str(out)])
    main(["solve", s6_file, "--stats-file", str(out), "--strategy", "suffix-scan"])
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert [r["strategy"] for r in rows] == ["2prog", "suffix-scan"]
    assert rows[1]["bound"]["calls"] == 20


def test_output_is_byte_deterministic(tmp_path, capsys):
    main(["gen", "random", "--n", "9", "--t", "3", "--seed", "4", "--clauses", "20"])
    path = write(tmp_path, "r.lp", capsys.readouterr().out)
    outs = []
    for _ in range(3):
        main(["solve", path])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == outs[2]


def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("a :- not b.\nb :- not a.\n"))
    assert main(["solve", "-"]) == 10
    assert capsys.readouterr().out == "{a}\n{b}\n"


def test_check(tmp_path, s6_file, capsys):
    good = write(tmp_path, "good.txt", "{a0, a1, a3, a4}\n")
    bad = write(tmp_path, "bad.txt", "a0 a1\n")
    assert main(["check", s6_file, good]) == 0
    assert main(["check", s6_file, bad]) == 20
    empty = write(tmp_path, "empty.lp", "")
    none = write(tmp_path, "none.txt", "")
    assert main(["check", empty, none]) == 0
    unknown = write(tmp_path, "u.txt", "zz\n")
    assert main(["check", s6_file, unknown]) == 1
    assert "zz" in capsys.readouterr().err


def test_parse_model_names():
    assert parse_model_names("{a, b}\n% comment\nc") == ["a", "b", "c"]


def test_gen_families(capsys):
    main(["gen", "s6"])
    assert len(capsys.readouterr().out.splitlines()) == 12
    main(["gen", "pnt", "--n", "5", "--t", "2"])
    assert len(capsys.readouterr().out.splitlines()) == 30
    main(["gen", "kcopies", "--base", "s6", "--k", "2"])
    assert len(capsys.readouterr().out.splitlines()) == 24
    outs = []
    for _ in range(2):
        main(["gen", "random", "--n", "8", "--t", "3", "--seed", "7"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] and len(outs[0].splitlines()) == 16


def test_gen_then_solve_round_trip(tmp_path, capsys):
    main(["gen", "kcopies", "--n", "3", "--t", "1", "--k", "3"])
    path = write(tmp_path, "k.lp", capsys.readouterr().out)
    main(["solve", path, "--count-only"])
    assert capsys.readouterr().out == "27\n"


def test_bench_csv(capsys):
    assert main(["bench", "--family", "s6-copies", "--range", "1..4", "--strategies", "2prog,tsplit"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "instance,n,m,strategy,calls,models,millis,bound"
    rows = [line.split(",") for line in lines[1:]]
    assert [int(r[5]) for r in rows if r[3] == "2prog"] == [3, 9, 27, 81]
    assert all(int(r[4]) <= float(r[7]) for r in rows)


def test_bench_rejects_unknown_strategy(capsys):
    assert main(["bench", "--family", "pnt", "--range", "3..4", "--strategies", "magic"]) == 1


def test_calibrate_small(capsys):
    assert main(["calibrate", "--atoms", "2"]) == 0
    assert json.loads(capsys.readouterr().out) == {"atoms": 2, "max_calls": 3, "max_terminal": 2}


def test_module_entry_point(s6_file):
    proc = subprocess.run([sys.executable, "-m", "stablemodels", "solve", s6_file, "--count-only"],
                          capture_output=True, text=True)
    assert proc.returncode == 10 and proc.stdout == "3\n"
