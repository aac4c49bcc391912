"""Independent brute-force oracles for the test suite.

Adjacency here is rebuilt from the raw 0-based vertex-pair rule (an edge
joins (1, j) and (2, (j + 2^k - 1) mod n/2), relabeled to u_{j+1}/v_{j+1}),
deliberately not reusing the library's neighbor computation, so the two can
check each other.
"""

from __future__ import annotations

import itertools

from knodeldom import Side, Vertex


def definitional_adjacency(delta: int, n: int) -> dict[Vertex, set[Vertex]]:
    half = n // 2
    adj: dict[Vertex, set[Vertex]] = {}
    for i in range(half):
        adj[Vertex(Side.U, i + 1)] = set()
        adj[Vertex(Side.V, i + 1)] = set()
    for j in range(half):
        for k in range(delta):
            a = Vertex(Side.U, j + 1)
            b = Vertex(Side.V, (j + 2**k - 1) % half + 1)
            adj[a].add(b)
            adj[b].add(a)
    return adj


def is_total_dominating_brute(adj: dict[Vertex, set[Vertex]], dset: set[Vertex]) -> bool:
    return all(adj[w] & dset for w in adj)


def is_dominating_brute(adj: dict[Vertex, set[Vertex]], dset: set[Vertex]) -> bool:
    return all(w in dset or adj[w] & dset for w in adj)


def min_lex_witness(adj: dict[Vertex, set[Vertex]], predicate) -> tuple[int, tuple[Vertex, ...]]:
    """Smallest satisfying size and the first witness in canonical subset order."""
    vertices = sorted(adj)
    for size in range(1, len(vertices) + 1):
        for combo in itertools.combinations(vertices, size):
            if predicate(adj, set(combo)):
                return size, combo
    raise AssertionError("the full vertex set must satisfy the predicate")
