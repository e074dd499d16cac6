"""Text formats for tournaments: JSON edge lists, 0/1 matrix text, DOT."""

from __future__ import annotations

import json
import re

from .core import Tournament, TournamentError, build, from_matrix
from .galeryser import format_matrix, parse_matrix


def to_dict(t: Tournament) -> dict:
    return {"n": t.n, "edges": [list(e) for e in t.edges()]}


def from_dict(d: dict) -> Tournament:
    try:
        n = d["n"]
        edges = d["edges"]
    except (KeyError, TypeError) as e:
        raise TournamentError('expected an object with "n" and "edges"') from e
    if not isinstance(n, int) or isinstance(n, bool):
        raise TournamentError(f'"n" must be an integer, got {n!r}')
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise TournamentError(f"edge {e!r} is not a pair of integers")
    return build(n, edges)


def to_json(t: Tournament) -> str:
    return json.dumps(to_dict(t))


def from_json(text: str) -> Tournament:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise TournamentError(f"invalid JSON: {e}") from e
    return from_dict(d)


def to_matrix_text(t: Tournament) -> str:
    return format_matrix(t.adjacency()) if t.n else ""


def from_matrix_text(text: str) -> Tournament:
    try:
        m = parse_matrix(text)
    except ValueError as e:
        raise TournamentError(str(e)) from e
    if m.shape[0] != m.shape[1]:
        raise TournamentError(f"matrix is {m.shape[0]}x{m.shape[1]}, expected square")
    return from_matrix(m)


def to_dot(t: Tournament) -> str:
    lines = ["digraph {"]
    lines += [f"  {i};" for i in range(t.n) if t.n == 1]
    lines += [f"  {i} -> {j};" for i, j in t.edges()]
    lines.append("}")
    return "\n".join(lines)


_DOT_EDGE = re.compile(r"(\d+)\s*->\s*(\d+)")
_DOT_NODE = re.compile(r"^\s*(\d+)\s*;?\s*$")


def from_dot(text: str) -> Tournament:
    """Parse the DOT subset written by ``to_dot``."""
    body = text.strip()
    if not body.startswith("digraph"):
        raise TournamentError("DOT input must start with 'digraph'")
    edges = [(int(a), int(b)) for a, b in _DOT_EDGE.findall(body)]
    nodes = {int(m.group(1)) for ln in body.splitlines() if (m := _DOT_NODE.match(ln))}
    labels = {x for e in edges for x in e} | nodes
    n = max(labels) + 1 if labels else 0
    return build(n, edges)


def read_tournament(text: str) -> Tournament:
    """Parse any supported format, chosen by the first character."""
    s = text.lstrip()
    if s.startswith("{"):
        return from_json(s)
    if s.startswith("digraph"):
        return from_dot(s)
    return from_matrix_text(s)


WRITERS = {"json": to_json, "dot": to_dot, "matrix": to_matrix_text}
