"""File format, parse diagnostics, and DOT export."""

import pytest

from tournsol import (
    InvariantError,
    ParseError,
    Tournament,
    export_dot,
    format_tournament,
    parse_tournament,
    random_tournament,
    read_tournament,
    write_tournament,
)

GOOD = "3\n010\n001\n100\n"


def test_parse_round_trip():
    for seed in range(30):
        n = 1 + seed % 12
        t = random_tournament(n, 5000 + seed)
        assert parse_tournament(format_tournament(t)) == t


def test_format_shape():
    text = format_tournament(Tournament([[0, 1, 0], [0, 0, 1], [1, 0, 0]]))
    assert text == GOOD


def test_file_round_trip(tmp_path):
    path = tmp_path / "t.txt"
    t = random_tournament(7, 99)
    write_tournament(t, path)
    assert read_tournament(path) == t
    raw = path.read_bytes()
    assert raw.endswith(b"\n") and b"\r" not in raw


def test_parse_error_positions():
    cases = [
        ("", 1, 1),                    # empty input
        ("x\n011\n001\n100\n", 1, 1),  # header not a count
        ("3\n01\n001\n100\n", 2, 3),   # short row
        ("3\n0111\n001\n100\n", 2, 4), # long row
        ("3\n011\n0x1\n100\n", 3, 2),  # bad character
        ("3\n011\n001\n", 4, 1),       # missing row
        ("3\n011\n001\n100\n1\n", 5, 1),  # trailing data
        ("3\n011\n001\n100", 4, 4),    # missing final newline
    ]
    for text, line, col in cases:
        with pytest.raises(ParseError) as err:
            parse_tournament(text)
        assert err.value.line == line, text
        assert err.value.column == col, text
        assert f"line {line}, column {col}" in str(err.value)


def test_parse_rejects_broken_relations():
    with pytest.raises(InvariantError):
        parse_tournament("2\n10\n00\n")  # self-dominance
    with pytest.raises(InvariantError):
        parse_tournament("2\n01\n10\n")  # double dominance
    with pytest.raises(InvariantError):
        parse_tournament("2\n00\n00\n")  # undecided pair


def test_parse_errors_are_value_errors():
    assert issubclass(ParseError, ValueError)
    assert issubclass(InvariantError, ValueError)


def test_order_one_file():
    assert parse_tournament("1\n0\n").order == 1


def test_export_dot_plain():
    t = Tournament([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    dot = export_dot(t)
    assert dot.startswith("digraph tournament {")
    assert dot.rstrip().endswith("}")
    assert dot.count(" -> ") == 3
    assert "0 -> 1;" in dot and "1 -> 2;" in dot and "2 -> 0;" in dot


def test_export_dot_labels_and_clusters():
    t = random_tournament(4, 1)
    dot = export_dot(
        t,
        labels={0: "a", 1: "b", 2: "c", 3: "d"},
        clusters=[("left", [("left_in", [0, 1])]), ("right", [("right_in", [2, 3])])],
    )
    assert 'label="a"' in dot
    assert "subgraph cluster_left {" in dot
    assert "subgraph cluster_right_in {" in dot
    assert dot.count(" -> ") == 6


def test_export_dot_edge_count_matches_pairs():
    for seed in range(10):
        n = 2 + seed % 7
        t = random_tournament(n, 6000 + seed)
        assert export_dot(t).count(" -> ") == n * (n - 1) // 2
