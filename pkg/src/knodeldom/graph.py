"""Knödel graph model.

A Knödel graph W_{delta,n} (n even, 1 <= delta <= floor(log2 n)) is a
delta-regular bipartite graph on parts U = {u_1..u_{n/2}} and
V = {v_1..v_{n/2}}, where u_i is adjacent to v_j exactly when

    j  ≡  i + 2^k - 1   (mod n/2)        for some k in {0, .., delta-1}.

All indices here are 1-based in [1, n/2]; modular arithmetic maps x to
((x - 1) mod n/2) + 1.  Adjacency is computed from the rule on demand, so
a graph object is just the pair (delta, n) and is cheap to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError

__all__ = [
    "Side",
    "Vertex",
    "KnodelGraph",
    "u",
    "v",
    "build_graph",
    "m_set",
    "check_power_diff_identity",
    "PowerDiffCheck",
]


class Side(str, Enum):
    """Partite side of a vertex; U-vertices sort before V-vertices."""

    U = "u"
    V = "v"

    def opposite(self) -> "Side":
        return Side.V if self is Side.U else Side.U


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex named by its side and 1-based index within that side."""

    side: Side
    index: int

    def __str__(self) -> str:
        return f"{self.side.value}{self.index}"

    def __repr__(self) -> str:
        return f"Vertex({self})"


def u(index: int) -> Vertex:
    return Vertex(Side.U, index)


def v(index: int) -> Vertex:
    return Vertex(Side.V, index)


def _wrap(x: int, half: int) -> int:
    """Reduce an index to its canonical representative in [1, half]."""
    return (x - 1) % half + 1


@dataclass(frozen=True)
class KnodelGraph:
    """Immutable descriptor of W_{delta,n}; all operations are pure."""

    delta: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 2 or self.n % 2 != 0:
            raise DomainError(f"n must be an even integer >= 2, got {self.n}")
        max_delta = self.n.bit_length() - 1  # floor(log2(n)), exact for any int
        if not 1 <= self.delta <= max_delta:
            raise DomainError(
                f"delta must satisfy 1 <= delta <= floor(log2(n)) = {max_delta}, "
                f"got delta={self.delta} for n={self.n}"
            )

    @property
    def half(self) -> int:
        """Size of each partite side, n/2."""
        return self.n // 2

    @property
    def edge_count(self) -> int:
        return self.delta * self.half

    @property
    def offsets(self) -> tuple[int, ...]:
        """Adjacency offsets 2^k - 1 for k = 0..delta-1."""
        return tuple((1 << k) - 1 for k in range(self.delta))

    def __str__(self) -> str:
        return f"W({self.delta},{self.n})"

    # -- vertices ----------------------------------------------------------

    def check_vertex(self, w: Vertex) -> None:
        if not 1 <= w.index <= self.half:
            raise DomainError(f"vertex {w} out of range for {self}: index must be in [1, {self.half}]")

    def vertices(self) -> Iterator[Vertex]:
        """All vertices in canonical order (U before V, then index)."""
        for side in (Side.U, Side.V):
            for i in range(1, self.half + 1):
                yield Vertex(side, i)

    # -- adjacency ---------------------------------------------------------

    def neighbor_indices(self, side: Side, index: int) -> tuple[int, ...]:
        """Indices (on the opposite side) adjacent to the given vertex.

        For u_i these are i + 2^k - 1; for v_j the inverted relation gives
        j - (2^k - 1), both reduced to [1, half].
        """
        half = self.half
        if side is Side.U:
            return tuple(_wrap(index + off, half) for off in self.offsets)
        return tuple(_wrap(index - off, half) for off in self.offsets)

    def neighbors(self, w: Vertex) -> frozenset[Vertex]:
        """Open neighborhood of ``w``: exactly delta vertices of the opposite side."""
        self.check_vertex(w)
        opp = w.side.opposite()
        return frozenset(Vertex(opp, j) for j in self.neighbor_indices(w.side, w.index))

    def adjacent(self, a: Vertex, b: Vertex) -> bool:
        self.check_vertex(a)
        self.check_vertex(b)
        if a.side == b.side:
            return False
        ui, vj = (a.index, b.index) if a.side is Side.U else (b.index, a.index)
        return _wrap(vj - ui + 1, self.half) in {off + 1 for off in self.offsets}

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u-index, v-index) pairs, sorted by (i, j)."""
        for i in range(1, self.half + 1):
            for j in sorted(self.neighbor_indices(Side.U, i)):
                yield (i, j)

    # -- index distance and cyclic sequences --------------------------------

    def index_distance(self, a: Vertex, b: Vertex) -> int:
        """Cyclic distance min(|i-j|, half - |i-j|) between same-side vertices."""
        self.check_vertex(a)
        self.check_vertex(b)
        if a.side != b.side:
            raise DomainError(f"index_distance requires same-side vertices, got {a} and {b}")
        d = abs(a.index - b.index)
        return min(d, self.half - d)

    def cyclic_sequence(self, subset: Iterable[Vertex]) -> tuple[int, ...]:
        """Gap sequence of a nonempty one-sided subset, in ascending index order.

        With indices i_1 < ... < i_k the gaps are i_{j+1} - i_j and the final
        wrap-around gap half + i_1 - i_k; they always sum to half.
        """
        members = sorted(set(subset))
        if not members:
            raise DomainError("cyclic_sequence requires a nonempty subset")
        sides = {w.side for w in members}
        if len(sides) != 1:
            raise DomainError("cyclic_sequence requires all vertices on one side")
        for w in members:
            self.check_vertex(w)
        idx = [w.index for w in members]
        gaps = [idx[j + 1] - idx[j] for j in range(len(idx) - 1)]
        gaps.append(self.half + idx[0] - idx[-1])
        return tuple(gaps)


def build_graph(delta: int, n: int) -> KnodelGraph:
    """Validate (delta, n) and return the graph descriptor."""
    return KnodelGraph(delta, n)


@lru_cache(maxsize=None)
def m_set(delta: int) -> frozenset[int]:
    """Differences of distinct powers of two below 2^delta: {2^a - 2^b : 0 <= b < a < delta}.

    Empty for delta = 1.  Governs whether two same-side vertices share
    neighbors (see ``knodeldom.structure``).
    """
    if delta < 1:
        raise DomainError(f"delta must be >= 1, got {delta}")
    return frozenset((1 << a) - (1 << b) for a in range(delta) for b in range(a))


@dataclass(frozen=True)
class PowerDiffCheck:
    """Outcome of the power-difference uniqueness check."""

    x: int
    max_exp: int
    quadruples_checked: int
    counterexample: tuple[int, int, int, int] | None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def check_power_diff_identity(x: int, max_exp: int) -> PowerDiffCheck:
    """Exhaustively confirm that x^a - x^b = x^c - x^d != 0 forces a = c, b = d.

    Checks every exponent quadruple in [0, max_exp]^4.  The statement is a
    theorem for x >= 2, so a counterexample would expose an implementation
    fault, not a mathematical one.
    """
    if x < 2:
        raise DomainError(f"x must be >= 2, got {x}")
    if max_exp < 1:
        raise DomainError(f"max_exp must be >= 1, got {max_exp}")
    powers = [x**e for e in range(max_exp + 1)]
    exps = range(max_exp + 1)
    checked = 0
    for a in exps:
        for b in exps:
            lhs = powers[a] - powers[b]
            for c in exps:
                for d in exps:
                    checked += 1
                    if lhs == 0:
                        continue
                    if lhs == powers[c] - powers[d] and (a, b) != (c, d):
                        return PowerDiffCheck(x, max_exp, checked, (a, b, c, d))
    return PowerDiffCheck(x, max_exp, checked, None)
