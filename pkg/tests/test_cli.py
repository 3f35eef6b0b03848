import io
import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from xorunify import cli
from xorunify.problemfile import parse_problem_file
from xorunify.term import ParseError

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"
EQ4 = "Z + a + (b + c) + a + (b + c) + Z"
EQ5 = "d + (a + e) + ((b + (d + e)) + c) + a + (b + c)"


def run(*argv):
    out = io.StringIO()
    code = cli.main([str(a) for a in argv], out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("name, code", [
    ("one_var", 0), ("ground", 1), ("two_eq", 0), ("identity", 0),
])
def test_solve_matches_golden(name, code):
    path = DATA / f"{name}.txt"
    assert run("solve", path) == (code, (GOLDEN / f"{name}.txt").read_text())
    assert run("solve", "--json", path) == (code, (GOLDEN / f"{name}.json").read_text())
    assert run("solve", "--check", "--oracle", path)[0] == code


def test_json_fields_are_fixed():
    _, text = run("solve", "--json", DATA / "two_eq.txt")
    assert set(json.loads(text)) == {"status", "substitution", "steps"}


@pytest.mark.parametrize("name", ["bad_syntax", "two_equals"])
def test_solve_parse_errors_exit_2(name, capsys):
    code, out = run("solve", DATA / f"{name}.txt")
    assert code == 2 and out == ""
    assert f"{name}.txt:1:" in capsys.readouterr().err


def test_solve_missing_file(tmp_path, capsys):
    missing = tmp_path / "nope.txt"
    assert run("solve", missing)[0] == 2
    assert str(missing) in capsys.readouterr().err


def test_check_failure_exits_3(monkeypatch):
    monkeypatch.setattr(cli, "solves_problems", lambda s, ps: False)
    assert run("solve", "--check", DATA / "one_var.txt")[0] == 3


def test_oracle_disagreement_exits_3(monkeypatch):
    monkeypatch.setattr(cli, "gf2_solve", lambda sys: None)
    assert run("solve", "--oracle", DATA / "one_var.txt")[0] == 3


@pytest.mark.parametrize("text, expected", [
    (EQ4, "0"), ("a + b + a", "b"), ("0 + X", "X"), ("Y + b + X + a", "b + a + X + Y"),
])
def test_normalize(text, expected):
    assert run("normalize", text) == (0, expected + "\n")


def test_normalize_parse_error():
    assert run("normalize", "a +")[0] == 2


@pytest.mark.parametrize("left, right, code, word", [
    (EQ4, "0", 0, "EQUIV"),
    (EQ5, "0", 0, "EQUIV"),
    ("X", "Y", 1, "NOT-EQUIV"),
    ("a + X", "X + a", 0, "EQUIV"),
    ("a", "b", 1, "NOT-EQUIV"),
])
def test_equiv(left, right, code, word):
    assert run("equiv", left, right) == (code, word + "\n")


def test_equiv_parse_error():
    assert run("equiv", "a", ")")[0] == 2


def test_usage_errors_exit_2():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("gen", "--seed", "x")[0] == 2


def test_gen_is_byte_stable(tmp_path):
    f1, f2 = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run("gen", "--seed", 1, "-o", f1) == (0, "seed 1\n")
    assert run("gen", "--seed", 1, "-o", f2)[0] == 0
    assert f1.read_bytes() == f2.read_bytes()
    assert run("gen", "--seed", 1)[1] == f1.read_text()
    assert run("gen", "--seed", 2)[1] != f1.read_text()


def test_gen_empty(tmp_path):
    code, text = run("gen", "--max-equations", 0)
    assert code == 0
    assert all(line.startswith("#") for line in text.splitlines())
    assert len(parse_problem_file(text)) == 0


def test_gen_invalid_params(tmp_path, capsys):
    assert run("gen", "--max-vars", 0)[0] == 2
    assert run("gen", "-o", tmp_path / "missing" / "x.txt")[0] == 2


@settings(max_examples=100)
@given(st.integers(0, 10**6), st.integers(0, 5), st.integers(1, 6))
def test_gen_output_always_solves(seed, max_eq, max_vars):
    code, text = run("gen", "--seed", seed, "--max-equations", max_eq, "--max-vars", max_vars)
    assert code == 0
    parse_problem_file(text)
    path = DATA.parent / ".gen_tmp.txt"
    try:
        path.write_text(text)
        assert run("solve", "--check", "--oracle", path)[0] in (0, 1)
    finally:
        path.unlink()


@settings(max_examples=200)
@given(st.text(alphabet="XYab0+()= #\n\t$", max_size=40))
def test_exit_code_contract_is_total(text):
    path = DATA.parent / ".fuzz_tmp.txt"
    try:
        path.write_text(text)
        assert run("solve", path)[0] in (0, 1, 2, 3)
        assert run("normalize", text)[0] in (0, 2)
    finally:
        path.unlink()


def test_problem_file_error_positions():
    with pytest.raises(ParseError) as info:
        parse_problem_file("X = a\n# c\nX + a = b + )\n")
    assert (info.value.line, info.value.column) == (3, 13)
    with pytest.raises(ParseError) as info:
        parse_problem_file("X + a\n")
    assert info.value.line == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "xorunify", "solve", str(DATA / "one_var.txt")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "SOLUTION\nX := a + b\n"
