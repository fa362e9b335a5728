"""Tournament file format and DOT export.

File format: the first line holds the order n in decimal; the next n
lines hold exactly n characters each from {0, 1}, where line x+2, column
y+1 is 1 iff x dominates y.  Every line ends with a newline and the file
contains nothing else.  Syntax problems raise ParseError with a 1-based
line and column; structurally well-formed files describing a non-
tournament (self-dominance, a pair decided twice or not at all) raise
InvariantError instead.
"""

from __future__ import annotations

import os

from .core import Tournament

__all__ = [
    "InvariantError",
    "ParseError",
    "export_dot",
    "format_tournament",
    "parse_tournament",
    "read_tournament",
    "write_tournament",
]


class ParseError(ValueError):
    """Malformed tournament file; carries the offending 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InvariantError(ValueError):
    """Well-formed file whose matrix is not a tournament."""


def parse_tournament(text: str) -> Tournament:
    if not text.endswith("\n"):
        tail = text.rsplit("\n", 1)[-1]
        raise ParseError(
            "missing final newline", text.count("\n") + 1, len(tail) + 1
        )
    lines = text.split("\n")[:-1]
    header = lines[0]
    if not header.isdigit():
        raise ParseError(f"order must be a decimal integer, got {header!r}", 1, 1)
    n = int(header)
    if n < 1:
        raise ParseError("order must be at least 1", 1, 1)
    if len(lines) - 1 < n:
        raise ParseError(
            f"expected {n} matrix rows, found {len(lines) - 1}", len(lines) + 1, 1
        )
    if len(lines) - 1 > n:
        raise ParseError(
            f"expected {n} matrix rows, found {len(lines) - 1}", n + 2, 1
        )
    matrix = []
    for x, row in enumerate(lines[1:]):
        if len(row) != n:
            raise ParseError(
                f"row has {len(row)} characters, expected {n}",
                x + 2,
                min(len(row), n) + 1,
            )
        cells = []
        for y, ch in enumerate(row):
            if ch not in "01":
                raise ParseError(f"invalid character {ch!r}", x + 2, y + 1)
            cells.append(ch == "1")
        matrix.append(cells)
    try:
        return Tournament(matrix)
    except ValueError as exc:
        raise InvariantError(str(exc)) from None


def format_tournament(t: Tournament) -> str:
    lines = [str(t.order)]
    for row in t.to_rows():
        lines.append("".join("1" if cell else "0" for cell in row))
    return "\n".join(lines) + "\n"


def read_tournament(path: str | os.PathLike) -> Tournament:
    with open(path, "r", encoding="ascii", newline="") as fh:
        return parse_tournament(fh.read())


def write_tournament(t: Tournament, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(format_tournament(t))


def export_dot(
    t: Tournament,
    labels: dict[int, str] | None = None,
    clusters: list[tuple[str, list[tuple[str, list[int]]]]] | None = None,
) -> str:
    """DOT digraph with one edge per dominance pair.

    ``clusters`` optionally groups alternatives into nested subgraphs,
    as a list of (name, [(subname, members), ...]) entries.
    """
    out = ["digraph tournament {"]

    def node_line(v: int, indent: str) -> str:
        if labels and v in labels:
            return f'{indent}{v} [label="{labels[v]}"];'
        return f"{indent}{v};"

    clustered: set[int] = set()
    if clusters:
        for name, subs in clusters:
            out.append(f"  subgraph cluster_{name} {{")
            out.append(f'    label="{name}";')
            for subname, members in subs:
                out.append(f"    subgraph cluster_{subname} {{")
                out.append(f'      label="{subname}";')
                for v in members:
                    out.append(node_line(v, "      "))
                    clustered.add(v)
                out.append("    }")
            out.append("  }")
    for v in range(t.order):
        if v not in clustered:
            out.append(node_line(v, "  "))
    for x in range(t.order):
        for y in range(t.order):
            if t.dominates(x, y):
                out.append(f"  {x} -> {y};")
    out.append("}")
    return "\n".join(out) + "\n"
