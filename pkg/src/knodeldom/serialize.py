"""Graph serialization (edge list, DIMACS, JSON) and vertex-set text syntax.

Only Knödel graphs are representable: parsers recover (delta, n) from the
payload and reject anything whose edge set does not match the graph those
parameters generate, so write -> parse round-trips are identities.
"""

from __future__ import annotations

import json
import re
from typing import Iterable

from .errors import DomainError
from .graph import KnodelGraph, Side, Vertex

__all__ = [
    "FORMATS",
    "write_graph",
    "write_edgelist",
    "write_dimacs",
    "write_json",
    "parse_edgelist",
    "parse_dimacs",
    "parse_json",
    "parse_vertex_set",
    "format_vertex_set",
]


def write_edgelist(g: KnodelGraph) -> str:
    """One line "u <i> v <j>" per edge, sorted by (i, j)."""
    return "".join(f"u {i} v {j}\n" for i, j in g.edges())


def write_dimacs(g: KnodelGraph) -> str:
    """DIMACS edge format; U vertices are 1..n/2, V vertices n/2+1..n."""
    half = g.half
    lines = [f"c knodel graph delta={g.delta} n={g.n}", f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {i} {half + j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def write_json(g: KnodelGraph) -> str:
    payload = {
        "format": "knodel-graph",
        "delta": g.delta,
        "n": g.n,
        "half": g.half,
        "edge_count": g.edge_count,
        "edges": [[i, j] for i, j in g.edges()],
    }
    return json.dumps(payload, indent=2) + "\n"


FORMATS = {
    "edgelist": write_edgelist,
    "dimacs": write_dimacs,
    "json": write_json,
}


def write_graph(g: KnodelGraph, fmt: str) -> str:
    try:
        writer = FORMATS[fmt]
    except KeyError:
        raise DomainError(f"unknown format {fmt!r}; expected one of {sorted(FORMATS)}")
    return writer(g)


def _graph_from_edges(edges: set[tuple[int, int]]) -> KnodelGraph:
    """Reconstruct (delta, n) from a U-V edge set and validate it exactly."""
    if not edges:
        raise DomainError("no edges found")
    half = max(max(i, j) for i, j in edges)
    if len(edges) % half != 0:
        raise DomainError(f"edge count {len(edges)} is not a multiple of the side size {half}")
    delta = len(edges) // half
    g = KnodelGraph(delta, 2 * half)
    if set(g.edges()) != edges:
        raise DomainError("edge set does not match any Knödel graph")
    return g


def parse_edgelist(text: str) -> KnodelGraph:
    edges = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4 or parts[0] != "u" or parts[2] != "v":
            raise DomainError(f"line {lineno}: expected 'u <i> v <j>', got {line!r}")
        try:
            edges.add((int(parts[1]), int(parts[3])))
        except ValueError:
            raise DomainError(f"line {lineno}: bad indices in {line!r}")
    return _graph_from_edges(edges)


def parse_dimacs(text: str) -> KnodelGraph:
    n = m = None
    raw_edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise DomainError(f"line {lineno}: malformed problem line {line!r}")
            n, m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if len(parts) != 3:
                raise DomainError(f"line {lineno}: malformed edge line {line!r}")
            raw_edges.append((int(parts[1]), int(parts[2])))
        else:
            raise DomainError(f"line {lineno}: unexpected line {line!r}")
    if n is None:
        raise DomainError("missing 'p edge' line")
    if len(raw_edges) != m:
        raise DomainError(f"expected {m} edges, found {len(raw_edges)}")
    half = n // 2
    edges = set()
    for a, b in raw_edges:
        if a > half:
            a, b = b, a
        if not (1 <= a <= half < b <= n):
            raise DomainError(f"edge ({a}, {b}) does not join the two sides")
        edges.add((a, b - half))
    return _graph_from_edges(edges)


def parse_json(text: str) -> KnodelGraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {exc}")
    if not isinstance(payload, dict) or payload.get("format") != "knodel-graph":
        raise DomainError("expected a knodel-graph JSON document")
    edges = {(int(i), int(j)) for i, j in payload.get("edges", [])}
    g = _graph_from_edges(edges)
    for key in ("delta", "n"):
        if key in payload and payload[key] != getattr(g, key):
            raise DomainError(f"declared {key}={payload[key]} but edges give {getattr(g, key)}")
    return g


_VERTEX_RE = re.compile(r"^([uv])\s*(\d+)$", re.IGNORECASE)


def parse_vertex_set(text: str) -> set[Vertex]:
    """Parse "u1, v2, U3" into vertices; whitespace-tolerant, case-insensitive."""
    out = set()
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        match = _VERTEX_RE.match(token)
        if not match:
            raise DomainError(f"cannot parse vertex {token!r}; expected u<i> or v<i>")
        side = Side.U if match.group(1).lower() == "u" else Side.V
        index = int(match.group(2))
        if index < 1:
            raise DomainError(f"vertex index must be >= 1, got {token!r}")
        out.add(Vertex(side, index))
    if not out:
        raise DomainError("empty vertex set")
    return out


def format_vertex_set(vertices: Iterable[Vertex]) -> str:
    return ",".join(str(w) for w in sorted(vertices))
