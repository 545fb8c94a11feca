import json

import pytest

from specialmonoids.cli import run

BICYCLIC = "generators: a b\nrelation: ab\n"
SURFACE = "generators: a b c d\nrelation: abABcdCD\n"
Z_MONOID = "generators: a b\nrelation: ab\nrelation: ba\n"


@pytest.fixture
def bicyclic_file(tmp_path):
    path = tmp_path / "bicyclic.txt"
    path.write_text(BICYCLIC)
    return str(path)


@pytest.fixture
def surface_file(tmp_path):
    path = tmp_path / "surface.txt"
    path.write_text(SURFACE)
    return str(path)


def test_wp_equal(bicyclic_file, capsys):
    assert run(["wp", bicyclic_file, "aab", "a"]) == 0
    assert "equal" in capsys.readouterr().out


def test_wp_not_equal(bicyclic_file, capsys):
    assert run(["wp", bicyclic_file, "ab", "ba"]) == 1
    assert "not equal" in capsys.readouterr().out


def test_wp_empty_word_spelling(bicyclic_file):
    assert run(["wp", bicyclic_file, "ab", "-"]) == 0


def test_divl_divr(bicyclic_file):
    assert run(["divl", bicyclic_file, "a", "ab"]) == 0
    assert run(["divl", bicyclic_file, "a", "b"]) == 1
    assert run(["divr", bicyclic_file, "b", "ab"]) == 0


def test_inv(bicyclic_file):
    assert run(["inv", bicyclic_file, "ab"]) == 0
    assert run(["inv", bicyclic_file, "a"]) == 1


def test_maxgroup(bicyclic_file, capsys):
    assert run(["maxgroup", bicyclic_file]) == 0
    assert "g1" in capsys.readouterr().out


def test_analyze(bicyclic_file, capsys):
    assert run(["analyze", bicyclic_file]) == 0
    out = capsys.readouterr().out
    assert "B-words: ab" in out
    assert "index: (2, 1)" in out


def test_kcheck_pass_and_fail(surface_file, tmp_path, capsys):
    assert run(["kcheck", surface_file, "--alpha", "2/11"]) == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("generators: a b\nrelation: aba\nrelation: aa\n")
    assert run(["kcheck", str(bad)]) == 1


def test_dehn(surface_file, capsys):
    assert run(["dehn", surface_file, "abABcdCD"]) == 0
    assert "fixpoint: 1" in capsys.readouterr().out


def test_gwp_verdict_exit_codes(surface_file):
    assert run(["gwp", surface_file, "abABcdCD"]) == 0
    assert run(["gwp", surface_file, "a"]) == 2
    assert run(["gwp", surface_file, "a", "--greendlinger"]) == 1


def test_usage_error_on_bad_word(bicyclic_file):
    assert run(["wp", bicyclic_file, "axb", "a"]) == 64


def test_usage_error_on_bad_command(bicyclic_file):
    assert run(["frobnicate", bicyclic_file]) == 64


def test_input_error_on_bad_file(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("generators: a\nrelation: ax\n")
    assert run(["analyze", str(bad)]) == 65


def test_input_error_on_missing_file():
    assert run(["analyze", "/nonexistent/nope.txt"]) == 65


def test_json_round_trip(bicyclic_file, capsys):
    assert run(["wp", bicyclic_file, "aab", "a", "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["command"] == "wp"
    assert obj["verdict"] == "yes"
    assert obj["details"] == {"x": "aab", "y": "a"}


def test_json_kcheck_numbers(surface_file, capsys):
    assert run(["kcheck", surface_file, "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["details"]["relators"] == 16
    assert obj["details"]["max_cancelled"] == 1
    assert obj["details"]["passed"] is True


def test_json_gwp(surface_file, capsys):
    assert run(["gwp", surface_file, "a", "--json"]) == 2
    obj = json.loads(capsys.readouterr().out)
    assert obj["verdict"] == "unknown"
    assert obj["details"]["budget"] == 100000


def test_exit_code_is_function_of_verdict(bicyclic_file, capsys):
    # same decision, with and without --json: identical exit code
    plain = run(["wp", bicyclic_file, "ab", "ba"])
    capsys.readouterr()
    as_json = run(["wp", bicyclic_file, "ab", "ba", "--json"])
    assert plain == as_json == 1
