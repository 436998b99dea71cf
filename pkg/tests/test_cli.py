import json

import pytest

from rtangle.cli import EXIT_DIFFERENT, EXIT_INVALID, EXIT_OK, main, parse_coordinate
from rtangle.errors import ParseError
from rtangle.surface_model import INFINITY, DehnCoordinate


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "text",
    ['{"p": [2, 0, 2], "q": [1, 0, -1]}', "2,1,0,0,2,-1", " 2, 1,0 ,0,2 ,-1 "],
)
def test_parse_forms(text):
    assert parse_coordinate(text) == DehnCoordinate((2, 0, 2), (1, 0, -1))


def test_parse_accepts_shapes_that_do_not_realize():
    # parsing only checks shape; realize is what rejects odd p
    c = parse_coordinate('{"p":[2,1,1],"q":[0,0,0]}')
    assert c.p == (2, 1, 1)


@pytest.mark.parametrize(
    "text, pos",
    [
        ("2,x,2,0,0,0", 2),
        ("1,2,3", 5),
        ('{"p": [1], "q": ', 15),
        ('  {"p": [1.5], "q": [0]}', 3),
        ('{"p": [2]}', 0),
    ],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_coordinate(text)
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)


def test_infinity_rep(capsys):
    code, out, _ = run(capsys, "rep", "0,0,0,0,0,0")
    assert code == EXIT_OK
    assert json.loads(out)["branch"] == "INFINITY"


def test_equiv_exit_codes(capsys):
    assert run(capsys, "equiv", "2,1,0,0,2,4", "2,4,0,0,2,1")[0] == EXIT_OK
    assert run(capsys, "equiv", "0,0,0,0,0,0", "2,0,2,-2,2,-1")[0] == EXIT_DIFFERENT


def test_invalid_input_exit_code(capsys):
    code, _, err = run(capsys, "validate", "2,0,1,0,1,0")
    assert code == EXIT_INVALID
    assert json.loads(err)["error"]
    assert run(capsys, "rep", "2,,2,0,0,0")[0] == EXIT_INVALID


def test_output_is_deterministic(capsys):
    first = run(capsys, "neighbors", "2,3,2,1,2,2")[1]
    assert first == run(capsys, "neighbors", "2,3,2,1,2,2")[1]
    assert len(json.loads(first)["neighbors"]) == 6


def test_minimize_reports_regime(capsys):
    code, out, _ = run(capsys, "minimize", "4,-3,2,-3,2,-3")
    obj = json.loads(out)
    assert code == EXIT_OK and obj["descent"]
    assert obj["regime"]["regime"]


def test_explore_writes_files(capsys, tmp_path):
    dot, js = tmp_path / "b.dot", tmp_path / "b.json"
    code, out, _ = run(capsys, "explore", "2,3,2,1,2,2", "--radius", "2", "--dot", str(dot), "--json", str(js))
    assert code == EXIT_OK and json.loads(out)["is_tree"]
    assert dot.read_text().startswith("graph N {")
    assert len(json.loads(js.read_text())["vertices"]) == 19


def test_random(capsys):
    code, out, _ = run(capsys, "random", "--bound", "8", "--qbound", "3", "--count", "5", "--seed", "1")
    assert code == EXIT_OK and len(json.loads(out)) == 5


def test_parse_infinity_text():
    assert parse_coordinate("0,0,0,0,0,0") == INFINITY
