import json
from pathlib import Path

import pytest

from app.cli import load_matrix, main
from app.core import ParseError


def write_matrix(path: Path, entries: list[list[str]]) -> str:
    rows, cols = len(entries), len(entries[0]) if entries else 0
    path.write_text(json.dumps({"rows": rows, "cols": cols, "entries": entries}), encoding="utf-8")
    return str(path)


def write_quint(tmp_path: Path, **entries: list[list[str]]) -> list[str]:
    flags = []
    for name, rows in entries.items():
        flags += [f"--{name.lower()}", write_matrix(tmp_path / f"{name}.json", rows)]
    return flags


@pytest.fixture
def ijk(tmp_path: Path) -> list[str]:
    return write_quint(tmp_path, A=[["k"]], B=[["i"]], C=[["0"]], D=[["j"]], E=[["0"]])


def test_rank_zero_matrix(tmp_path, capsys):
    path = write_matrix(tmp_path / "z.json", [["0", "0"], ["0", "0"]])
    assert main(["rank", path]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_rank_json(tmp_path, capsys):
    path = write_matrix(tmp_path / "a.json", [["1", "i"], ["j", "k"]])
    assert main(["--format", "json", "rank", path]) == 0
    assert json.loads(capsys.readouterr().out) == {"rank": 2, "oracle_rank": 2}


def test_parse_error_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"rows": 1, "cols": 1, "entries": [["1 i"]]}', encoding="utf-8")
    assert main(["rank", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file_is_parse_error(tmp_path):
    with pytest.raises(ParseError):
        load_matrix(tmp_path / "missing.json")


def test_solve_ijk_writes_outputs(tmp_path, ijk):
    out = tmp_path / "out"
    assert main(["solve", *ijk, "--out", str(out)]) == 0
    x = json.loads((out / "X.json").read_text())
    assert x["entries"] == [["1"]]
    report = json.loads((out / "report.json").read_text())
    assert report["consistent"] is True
    assert report["substitution"] == "exact"


def test_solve_min_rank_y(tmp_path, capsys):
    flags = write_quint(tmp_path, A=[["1"]], B=[["1"]], C=[["1"]], D=[["1"]], E=[["1"]])
    assert main(["--format", "json", "solve", *flags, "--min-rank-y"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rank_Y"] == data["min_rank_Y"] == 0
    assert data["X"]["entries"] == [["1"]]


def test_solve_inconsistent_exits_1(tmp_path):
    flags = write_quint(tmp_path, A=[["1"]], B=[["0"]], C=[["0"]], D=[["0"]], E=[["0"]])
    out = tmp_path / "out"
    assert main(["solve", *flags, "--out", str(out)]) == 1
    report = json.loads((out / "report.json").read_text())
    assert report["consistent"] is False
    assert report["failing"] == "r[A C B] = r[C B]"
    assert not (out / "X.json").exists()


def test_solve_missing_coefficient(tmp_path, ijk):
    assert main(["solve", *ijk[:-2]]) == 2


def test_decompose_writes_document(tmp_path, ijk):
    out = tmp_path / "dec"
    assert main(["decompose", *ijk, "--out", str(out)]) == 0
    doc = json.loads((out / "decomposition.json").read_text())
    assert doc["verification"]["passed"] is True


def test_extremal_json(tmp_path, capsys):
    flags = write_quint(tmp_path, A=[["1"]], B=[["1"]], C=[["1"]], D=[["1"]], E=[["1"]])
    assert main(["--format", "json", "extremal", "p", *flags]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["max_rank"], data["min_rank"]) == (1, 0)
    assert data["verified"] is True


def test_extremal_f1_table(tmp_path, capsys):
    flags = write_quint(tmp_path, A=[["1"]], B=[["1"]], C=[["1"]])
    assert main(["extremal", "f1", *flags]) == 0
    assert "max rank" in capsys.readouterr().out


def test_selftest_micro(capsys):
    argv = ["--format", "json", "selftest", "--cases", "2", "--seed", "3", "--suite", "micro-instances"]
    assert main(argv) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True
    assert [s["name"] for s in data["suites"]] == ["micro-instances"]


def test_selftest_small_run(capsys):
    assert main(["selftest", "--cases", "2", "--max-dim", "2", "--seed", "1", "--samples", "2"]) == 0
    assert capsys.readouterr().out.strip().endswith("PASS")


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["selftest", "--cases", "-1"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "command",
    [
        ["--format", "json", "extremal", "p"],
        ["--format", "json", "decompose"],
        ["solve", "--min-rank-x"],
    ],
)
def test_output_is_byte_identical_across_runs(tmp_path, capsys, command):
    flags = write_quint(
        tmp_path,
        A=[["1", "i"], ["j", "1/2"]],
        B=[["1"], ["k"]],
        C=[["i", "0"], ["0", "1"]],
        D=[["1", "j"]],
        E=[["0", "1"], ["i", "0"]],
    )
    outputs = []
    for _ in range(2):
        assert main([*command, *flags]) in (0, 1)
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert outputs[0]


def test_selftest_output_is_byte_identical_across_runs(capsys):
    argv = ["--format", "json", "selftest", "--cases", "1", "--max-dim", "2", "--seed", "7"]
    outputs = []
    for _ in range(2):
        main(argv)
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_suite_counts_scale_from_cases(capsys):
    argv = ["--format", "json", "selftest", "--cases", "2", "--max-dim", "1", "--suite", "rank-oracle"]
    argv += ["--suite", "coherence"]
    assert main(argv) == 0
    counts = {s["name"]: s["cases"] for s in json.loads(capsys.readouterr().out)["suites"]}
    assert counts == {"rank-oracle": 5, "coherence": 1}
