"""Text formats for graphs and colorings.

Edge list: one `u v` pair per line, `#` starts a comment line, and an optional
first significant line `p <n> <m>` pins the vertex count. Without a p line the
vertex count is the largest index plus one.

Coloring: one `u v c` triple per line with a positive color, same comment rule.
"""

from __future__ import annotations

from typing import Sequence

from .coloring import EdgeColoring
from .errors import ParseError
from .graph import Edge, Graph, build_graph, normalize_edge


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _int_fields(line: str, lineno: int, count: int) -> list[int]:
    fields = line.split()
    if len(fields) != count:
        raise ParseError(f"line {lineno}: expected {count} fields, got {len(fields)}")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer field in {line!r}") from None


def parse_edge_list(text: str) -> Graph:
    declared: tuple[int, int] | None = None
    raw_edges: list[tuple[int, int]] = []
    for lineno, line in _significant_lines(text):
        if line.startswith("p"):
            if declared is not None or raw_edges:
                raise ParseError(f"line {lineno}: p line must come first")
            fields = _int_fields(line[1:], lineno, 2)
            if fields[0] < 0 or fields[1] < 0:
                raise ParseError(f"line {lineno}: negative size in p line")
            declared = (fields[0], fields[1])
            continue
        u, v = _int_fields(line, lineno, 2)
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex index")
        raw_edges.append((u, v))
    if declared is not None:
        n, m = declared
        if m != len(raw_edges):
            raise ParseError(f"p line declares {m} edges, file has {len(raw_edges)}")
    else:
        if not raw_edges:
            raise ParseError("empty edge list and no p line")
        n = max(max(u, v) for u, v in raw_edges) + 1
    return build_graph(n, raw_edges)


def format_edge_list(g: Graph, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    mapping: dict[Edge, int] = {}
    for lineno, line in _significant_lines(text):
        u, v, c = _int_fields(line, lineno, 3)
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex index")
        if u == v:
            raise ParseError(f"line {lineno}: self loop at vertex {u}")
        if c < 1:
            raise ParseError(f"line {lineno}: color must be positive, got {c}")
        key = normalize_edge(u, v)
        if key in mapping:
            raise ParseError(f"line {lineno}: duplicate edge {key}")
        mapping[key] = c
    return EdgeColoring.from_map(mapping)


def format_coloring(coloring: EdgeColoring, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines.extend(f"{u} {v} {c}" for (u, v), c in coloring.items())
    return "\n".join(lines) + "\n"
