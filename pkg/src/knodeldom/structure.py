"""Neighborhood-intersection structure of Knödel graphs, and verification suites.

The size of N(u_i) ∩ N(u_j) for same-side vertices is controlled entirely by
whether the index-distance id(u_i, u_j) and its complement half - id belong to
the difference set M_delta:

    |N(u_i) ∩ N(u_j)| = [id ∈ M_delta] + [half - id ∈ M_delta]

This module exposes the predicted/actual intersection operations plus
computational checks that the prediction, the K_{2,3}-freeness consequence,
the unique-intersection regime (delta < log2(half + 2)) and the
degree-sum/gap-budget counting identities hold on concrete instances.
Every check reports the first counterexample it finds rather than a bare
boolean; a counterexample indicates an implementation fault.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, ResourceLimitError
from .graph import KnodelGraph, Side, Vertex, m_set

__all__ = [
    "IntersectionPrediction",
    "CountingReport",
    "CheckOutcome",
    "common_neighbors",
    "predict_intersection",
    "check_k23_free",
    "unique_intersection_regime",
    "counting_report",
    "check_pair_properties",
    "check_regime_property",
    "check_two_common_characterization",
    "check_counting_properties",
    "sample_subsets",
    "small_subsets",
    "run_suite",
    "PAIR_HALF_GUARD",
    "TRIPLE_HALF_GUARD",
    "DEFAULT_SEED",
    "DEFAULT_SAMPLES",
]

# Exhaustive enumeration guards (overridable per call).
PAIR_HALF_GUARD = 512
TRIPLE_HALF_GUARD = 128

DEFAULT_SEED = 1729
DEFAULT_SAMPLES = 10_000


def _require_distinct_same_side(g: KnodelGraph, a: Vertex, b: Vertex) -> None:
    g.check_vertex(a)
    g.check_vertex(b)
    if a == b:
        raise DomainError(f"vertices must be distinct, got {a} twice")
    if a.side != b.side:
        raise DomainError(f"vertices must lie on the same side, got {a} and {b}")


def common_neighbors(g: KnodelGraph, a: Vertex, b: Vertex) -> frozenset[Vertex]:
    """Exact intersection N(a) ∩ N(b) for distinct same-side vertices."""
    _require_distinct_same_side(g, a, b)
    return g.neighbors(a) & g.neighbors(b)


@dataclass(frozen=True)
class IntersectionPrediction:
    """Membership tests of id and half - id in M_delta and the count they imply."""

    id_in_m: bool
    co_id_in_m: bool

    @property
    def predicted_count(self) -> int:
        return int(self.id_in_m) + int(self.co_id_in_m)


def predict_intersection(g: KnodelGraph, a: Vertex, b: Vertex) -> IntersectionPrediction:
    """Predict |N(a) ∩ N(b)| from index-distance membership in M_delta alone."""
    _require_distinct_same_side(g, a, b)
    m = m_set(g.delta)
    d = g.index_distance(a, b)
    return IntersectionPrediction(d in m, (g.half - d) in m)


def unique_intersection_regime(g: KnodelGraph) -> bool:
    """True when delta < log2(half + 2), i.e. 2^delta < half + 2.

    In this regime every same-side pair has at most one common neighbor,
    with equality exactly when the index-distance lies in M_delta.
    """
    return (1 << g.delta) < g.half + 2


@dataclass(frozen=True)
class CountingReport:
    """Degree-sum and gap-budget statistics of a one-sided vertex subset A.

    ``degree_sum`` is sum over w in N(A) of |N(w) ∩ A| (always delta * |A|),
    ``slack`` is delta * |A| - |N(A)|, and ``m_gap_count`` counts the
    cyclic-sequence gaps of A that lie in M_delta (never more than slack).
    """

    degree_sum: int
    neighborhood_size: int
    m_gap_count: int
    slack: int


def counting_report(g: KnodelGraph, subset: Iterable[Vertex]) -> CountingReport:
    members = sorted(set(subset))
    if not members:
        raise DomainError("counting_report requires a nonempty subset")
    sides = {w.side for w in members}
    if len(sides) != 1:
        raise DomainError("counting_report requires all vertices on one side")
    side = members[0].side
    for w in members:
        g.check_vertex(w)

    a_idx = {w.index for w in members}
    neighborhood: set[int] = set()
    for w in members:
        neighborhood.update(g.neighbor_indices(side, w.index))
    opp = side.opposite()
    degree_sum = sum(
        len(set(g.neighbor_indices(opp, j)) & a_idx) for j in neighborhood
    )
    gaps = g.cyclic_sequence(members)
    m = m_set(g.delta)
    return CountingReport(
        degree_sum=degree_sum,
        neighborhood_size=len(neighborhood),
        m_gap_count=sum(1 for gap in gaps if gap in m),
        slack=g.delta * len(members) - len(neighborhood),
    )


# -- verification suites -----------------------------------------------------


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one property check: case count plus the first counterexample."""

    name: str
    cases: int
    counterexample: dict | None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def merged(self, other: "CheckOutcome") -> "CheckOutcome":
        if self.name != other.name:
            raise ValueError(f"cannot merge {self.name} with {other.name}")
        counter = self.counterexample or other.counterexample
        return CheckOutcome(self.name, self.cases + other.cases, counter)


def _neighbor_sets(g: KnodelGraph, side: Side) -> list[set[int]]:
    """Neighbor index sets for index 1..half of the given side (entry 0 unused)."""
    return [set()] + [set(g.neighbor_indices(side, i)) for i in range(1, g.half + 1)]


def _pair_counterexample(g: KnodelGraph, side: Side, i: int, j: int, actual: int) -> dict:
    m = m_set(g.delta)
    d = min(abs(i - j), g.half - abs(i - j))
    return {
        "graph": str(g),
        "pair": [str(Vertex(side, i)), str(Vertex(side, j))],
        "index_distance": d,
        "id_in_m": d in m,
        "co_id_in_m": (g.half - d) in m,
        "actual_count": actual,
    }


def _check_one_pair(g: KnodelGraph, nbr: list[set[int]], side: Side, i: int, j: int) -> dict | None:
    actual = len(nbr[i] & nbr[j])
    m = m_set(g.delta)
    d = min(abs(i - j), g.half - abs(i - j))
    predicted = int(d in m) + int((g.half - d) in m)
    # nonempty iff some membership holds; =2 iff both; =1 iff exactly one
    if actual != predicted or actual > 2:
        return _pair_counterexample(g, side, i, j, actual)
    return None


def check_pair_properties(
    g: KnodelGraph,
    *,
    sample: int | None = None,
    rng: random.Random | None = None,
    half_guard: int = PAIR_HALF_GUARD,
) -> CheckOutcome:
    """Verify the intersection-count prediction on same-side pairs of both sides.

    Covers in one pass: nonemptiness iff id or half-id lies in M_delta,
    count 2 iff both do, count 1 iff exactly one does, and agreement of
    predict_intersection with the enumerated intersection.  Exhaustive over
    all pairs unless ``sample`` is given (then uniformly sampled pairs).
    """
    if sample is None and g.half > half_guard:
        raise ResourceLimitError(
            f"exhaustive pair check refused for half={g.half} > {half_guard}; "
            f"pass a sample size or raise the guard"
        )
    cases = 0
    for side in (Side.U, Side.V):
        nbr = _neighbor_sets(g, side)
        if sample is None:
            pairs = itertools.combinations(range(1, g.half + 1), 2)
        else:
            if g.half < 2:
                continue
            if rng is None:
                rng = random.Random(DEFAULT_SEED)
            pairs = (
                tuple(sorted(rng.sample(range(1, g.half + 1), 2)))
                for _ in range(sample)
            )
        for i, j in pairs:
            cases += 1
            counter = _check_one_pair(g, nbr, side, i, j)
            if counter is not None:
                return CheckOutcome("pair-intersection-count", cases, counter)
    return CheckOutcome("pair-intersection-count", cases, None)


def check_k23_free(
    g: KnodelGraph,
    *,
    half_guard: int = TRIPLE_HALF_GUARD,
) -> CheckOutcome:
    """Verify no three same-side vertices share two or more common neighbors.

    Only same-side triples can share a neighbor at all, so this is exactly
    a K_{2,3}-freeness check.  Enumeration is cubic in half and guarded.
    """
    if g.half > half_guard:
        raise ResourceLimitError(
            f"triple enumeration refused for half={g.half} > {half_guard}"
        )
    cases = 0
    for side in (Side.U, Side.V):
        nbr = _neighbor_sets(g, side)
        for i, j, k in itertools.combinations(range(1, g.half + 1), 3):
            cases += 1
            common = nbr[i] & nbr[j] & nbr[k]
            if len(common) > 1:
                opp = side.opposite()
                return CheckOutcome(
                    "k23-freeness",
                    cases,
                    {
                        "graph": str(g),
                        "triple": [str(Vertex(side, x)) for x in (i, j, k)],
                        "common": sorted(str(Vertex(opp, c)) for c in common),
                    },
                )
    return CheckOutcome("k23-freeness", cases, None)


def check_regime_property(g: KnodelGraph, *, half_guard: int = PAIR_HALF_GUARD) -> CheckOutcome:
    """In the unique-intersection regime, confirm counts are <= 1 with equality iff id ∈ M_delta."""
    if not unique_intersection_regime(g):
        return CheckOutcome("unique-regime", 0, None)
    if g.half > half_guard:
        raise ResourceLimitError(
            f"exhaustive regime check refused for half={g.half} > {half_guard}"
        )
    m = m_set(g.delta)
    cases = 0
    for side in (Side.U, Side.V):
        nbr = _neighbor_sets(g, side)
        for i, j in itertools.combinations(range(1, g.half + 1), 2):
            cases += 1
            actual = len(nbr[i] & nbr[j])
            d = min(abs(i - j), g.half - abs(i - j))
            if actual > 1 or (actual == 1) != (d in m):
                return CheckOutcome(
                    "unique-regime", cases, _pair_counterexample(g, side, i, j, actual)
                )
    return CheckOutcome("unique-regime", cases, None)


def check_two_common_characterization(g: KnodelGraph, *, half_guard: int = PAIR_HALF_GUARD) -> CheckOutcome:
    """Pairs with two common neighbors exist iff half is a sum of two M_delta members."""
    if g.half > half_guard:
        raise ResourceLimitError(
            f"exhaustive characterization check refused for half={g.half} > {half_guard}"
        )
    m = m_set(g.delta)
    arithmetic = any(g.half - x in m for x in m)
    nbr = _neighbor_sets(g, Side.U)
    enumerated = any(
        len(nbr[i] & nbr[j]) == 2
        for i, j in itertools.combinations(range(1, g.half + 1), 2)
    )
    counter = None
    if arithmetic != enumerated:
        counter = {
            "graph": str(g),
            "sum_decomposition_exists": arithmetic,
            "two_common_pair_exists": enumerated,
        }
    return CheckOutcome("two-common-characterization", 1, counter)


def check_counting_properties(
    g: KnodelGraph, subsets: Iterable[Sequence[Vertex]]
) -> CheckOutcome:
    """Verify degree_sum = delta * |A| and m_gap_count <= slack on each subset."""
    cases = 0
    for subset in subsets:
        cases += 1
        report = counting_report(g, subset)
        if (
            report.degree_sum != g.delta * len(set(subset))
            or report.m_gap_count > report.slack
        ):
            return CheckOutcome(
                "counting-identities",
                cases,
                {
                    "graph": str(g),
                    "subset": sorted(str(w) for w in set(subset)),
                    "degree_sum": report.degree_sum,
                    "expected_degree_sum": g.delta * len(set(subset)),
                    "m_gap_count": report.m_gap_count,
                    "slack": report.slack,
                },
            )
    return CheckOutcome("counting-identities", cases, None)


def sample_subsets(
    g: KnodelGraph, count: int, rng: random.Random
) -> list[list[Vertex]]:
    """Seeded one-sided subsets for counting checks.

    Sizes are uniform in [1, min(half, 12)]; a quarter of the draws are
    consecutive index blocks, because clustered subsets are where the gap
    budget is tight.
    """
    out = []
    max_size = min(g.half, 12)
    for _ in range(count):
        side = rng.choice((Side.U, Side.V))
        size = rng.randint(1, max_size)
        if rng.random() < 0.25:
            start = rng.randint(1, g.half)
            idx = [(start - 1 + off) % g.half + 1 for off in range(size)]
        else:
            idx = rng.sample(range(1, g.half + 1), size)
        out.append([Vertex(side, i) for i in sorted(set(idx))])
    return out


def small_subsets(g: KnodelGraph, max_size: int = 3) -> Iterable[list[Vertex]]:
    """All one-sided subsets of size <= max_size, both sides."""
    for side in (Side.U, Side.V):
        for size in range(1, min(max_size, g.half) + 1):
            for combo in itertools.combinations(range(1, g.half + 1), size):
                yield [Vertex(side, i) for i in combo]


def _valid_instances(n_max: int, delta: int | None) -> list[KnodelGraph]:
    graphs = []
    for n in range(2, n_max + 1, 2):
        max_delta = n.bit_length() - 1
        deltas = range(1, max_delta + 1) if delta is None else [delta]
        for d in deltas:
            if 1 <= d <= max_delta:
                graphs.append(KnodelGraph(d, n))
    return graphs


def run_suite(
    n_max: int,
    *,
    delta: int | None = None,
    exhaustive: bool = True,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    triple_n_max: int | None = None,
    counting_n_max: int | None = None,
) -> list[CheckOutcome]:
    """Run every structural check over all valid (delta, n) with n <= n_max.

    Pair-based checks run exhaustively when ``exhaustive`` (guarded), else on
    seeded samples.  Triple checks are restricted to n <= triple_n_max
    (default n_max capped by the triple guard).  Counting checks use all
    subsets of size <= 3 for n <= counting_n_max plus ``samples`` seeded
    random subsets spread across instances.
    """
    rng = random.Random(seed)
    graphs = _valid_instances(n_max, delta)
    if triple_n_max is None:
        triple_n_max = min(n_max, 2 * TRIPLE_HALF_GUARD)
    if counting_n_max is None:
        counting_n_max = min(n_max, 40)

    outcomes: dict[str, CheckOutcome] = {}

    def fold(outcome: CheckOutcome) -> None:
        prev = outcomes.get(outcome.name)
        outcomes[outcome.name] = outcome if prev is None else prev.merged(outcome)

    pair_sample = None if exhaustive else max(1, samples // max(1, len(graphs)))
    for g in graphs:
        fold(check_pair_properties(g, sample=pair_sample, rng=rng))
        fold(check_regime_property(g))
        fold(check_two_common_characterization(g))
        if g.n <= triple_n_max:
            fold(check_k23_free(g))
        if g.n <= counting_n_max:
            fold(check_counting_properties(g, small_subsets(g)))

    # seeded random subsets, spread over the instance list, summing exactly
    if graphs and samples > 0:
        base, extra = divmod(samples, len(graphs))
        for i, g in enumerate(graphs):
            take = base + (1 if i < extra else 0)
            if take:
                fold(check_counting_properties(g, sample_subsets(g, take, rng)))

    return list(outcomes.values())
