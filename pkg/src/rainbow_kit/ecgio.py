"""Reading and writing the line-oriented ``.ecg`` graph format.

Layout::

    ecg 1
    <n> <m>
    <u> <v> <color>      (m lines, u < v, sorted by (u, v))

Every line ends in ``\\n``; numbers are plain ASCII decimals separated by a
single space. Anything else is rejected with the offending line number.
"""
from __future__ import annotations

import os
import re

from .graph import EdgeColoredGraph, GraphError

HEADER = "ecg 1"
_NUM = r"(0|[1-9][0-9]*)"
_SIZE_RE = re.compile(rf"{_NUM} {_NUM}")
_EDGE_RE = re.compile(rf"{_NUM} {_NUM} {_NUM}")


class EcgFormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def dumps(g: EdgeColoredGraph) -> str:
    parts = [HEADER, f"{g.n} {g.num_edges}"]
    parts.extend(f"{u} {v} {c}" for u, v, c in g.colored_edges())
    return "\n".join(parts) + "\n"


def loads(text: str) -> EdgeColoredGraph:
    if not text:
        raise EcgFormatError(1, "empty input")
    if not text.endswith("\n"):
        raise EcgFormatError(text.count("\n") + 1, "missing final newline")
    lines = text[:-1].split("\n")
    if "\r" in text:
        raise EcgFormatError(next(i for i, l in enumerate(lines, 1) if "\r" in l),
                             "carriage return in line ending")
    if lines[0] != HEADER:
        raise EcgFormatError(1, f"expected {HEADER!r}, got {lines[0]!r}")
    if len(lines) < 2:
        raise EcgFormatError(2, "missing '<n> <m>' line")
    m_size = _SIZE_RE.fullmatch(lines[1])
    if not m_size:
        raise EcgFormatError(2, f"expected '<n> <m>', got {lines[1]!r}")
    n, m = int(m_size.group(1)), int(m_size.group(2))
    body = lines[2:]
    if len(body) < m:
        raise EcgFormatError(len(lines) + 1, f"unexpected end of file: header declares {m} edges, found {len(body)}")
    if len(body) > m:
        raise EcgFormatError(3 + m, f"extra line after the {m} declared edges")
    edges = []
    prev = None
    for lineno, line in enumerate(body, start=3):
        match = _EDGE_RE.fullmatch(line)
        if not match:
            raise EcgFormatError(lineno, f"expected '<u> <v> <color>', got {line!r}")
        u, v, c = (int(x) for x in match.groups())
        if u >= v:
            raise EcgFormatError(lineno, f"edge ({u}, {v}) must satisfy u < v")
        if v >= n:
            raise EcgFormatError(lineno, f"vertex {v} out of range 0..{n - 1}")
        if prev is not None and (u, v) <= prev:
            raise EcgFormatError(lineno, f"edge ({u}, {v}) is duplicated or out of (u, v) order")
        prev = (u, v)
        edges.append((u, v, c))
    try:
        return EdgeColoredGraph(n, edges)
    except GraphError as exc:  # pragma: no cover - guarded above
        raise EcgFormatError(0, str(exc)) from exc


def read_ecg(path: str | os.PathLike) -> EdgeColoredGraph:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        raise EcgFormatError(raw[: exc.start].count(b"\n") + 1, "non-ASCII byte") from exc
    return loads(text)


def write_ecg(g: EdgeColoredGraph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(dumps(g))
