"""Closed-form sequences behind the spectrum structure.

For graphs on n vertices: a t-edge star has star_f(t) = t(n-t-1) frustrated
triples and a t-edge matching has matching_f(t) = t(n-2).  Below the
threshold star_f(t_max+1) the attainable counts fall into the disjoint
intervals [star_f(t), matching_f(t)], and the space between consecutive
intervals is empty.  This module owns those tables, the classification of a
given f value, and the edge-count bounds derived from the distance of e to
the complete-bipartite edge counts x(n-x).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb, isqrt
from typing import NamedTuple


@dataclass(frozen=True)
class IntervalTable:
    """Interval endpoints star_f/matching_f plus t_max and the threshold.

    t_max is the last t whose interval is disjoint from the next one;
    threshold = star_f(t_max+1) is the first count the interval structure
    does not cover.
    """

    n: int
    t_max: int
    threshold: int

    def star_f(self, t: int) -> int:
        """f of the t-edge star, t(n-t-1); defined for 0 <= t <= n-1."""
        if not 0 <= t <= self.n - 1:
            raise ValueError(f"star_f defined for 0 <= t <= n-1, got t={t}")
        return t * (self.n - t - 1)

    def matching_f(self, t: int) -> int:
        """f of the t-edge matching, t(n-2); defined for 0 <= t <= n/2."""
        if not 0 <= 2 * t <= self.n:
            raise ValueError(f"matching_f defined for 0 <= t <= n/2, got t={t}")
        return t * (self.n - 2)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(t, self.star_f(t), self.matching_f(t)) for t in range(self.t_max + 1)]

    def to_csv(self) -> str:
        lines = ["t,a_t,b_t"]
        lines += [f"{t},{a},{b}" for t, a, b in self.rows()]
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "t_max": self.t_max,
            "threshold": self.threshold,
            "rows": [{"t": t, "a_t": a, "b_t": b} for t, a, b in self.rows()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def interval_table(n: int) -> IntervalTable:
    """Build the table for n >= 3, cross-validating both t_max formulas."""
    if n < 3:
        raise ValueError(f"interval table needs n >= 3, got {n}")
    t = 0
    while (t + 1) * (t + 2) < n - 2:
        t += 1
    # closed form: ceil(sqrt(n - 7/4) - 3/2), i.e. least t with (2t+3)^2 >= 4n-7
    t2 = (isqrt(max(4 * n - 8, 0)) - 1) // 2  # floor((sqrt(4n-7)-3)/2) + 1, integer-exact
    while (2 * t2 + 3) ** 2 < 4 * n - 7:
        t2 += 1
    while t2 > 0 and (2 * (t2 - 1) + 3) ** 2 >= 4 * n - 7:
        t2 -= 1
    if t != t2:
        raise AssertionError(f"t_max formulas disagree at n={n}: {t} vs {t2}")
    table = IntervalTable(n, t, (t + 1) * (n - t - 2))
    return table


KIND_INTERVAL = "interval"
KIND_GAP = "gap"
KIND_CENTRAL = "central"


@dataclass(frozen=True)
class FClass:
    """Where one f value sits: Interval(t), Gap(t), or Central."""

    kind: str
    t: int | None

    def label(self) -> str:
        if self.kind == KIND_CENTRAL:
            return "Central"
        return f"{self.kind.capitalize()}({self.t})"


@dataclass(frozen=True)
class Classification:
    n: int
    f: int
    primary: FClass
    complement_f: int
    complement: FClass


def _classify_one(table: IntervalTable, f: int) -> FClass:
    if f >= table.threshold:
        return FClass(KIND_CENTRAL, None)
    for t in range(table.t_max + 1):
        a = table.star_f(t)
        if f < a:
            return FClass(KIND_GAP, t - 1)
        if f <= table.matching_f(t):
            return FClass(KIND_INTERVAL, t)
    return FClass(KIND_GAP, table.t_max)


def classify_f(n: int, f: int) -> Classification:
    """Classify f below the threshold as Interval(t) or Gap(t), else Central.

    Gap(t) means matching_f(t) < f < star_f(t+1), a value no n-vertex graph
    attains.  The classification of comb(n,3)-f is reported alongside, since
    the attainable set is symmetric about the midpoint.
    """
    total = comb(n, 3)
    if not 0 <= f <= total:
        raise ValueError(f"f must be in [0, C(n,3)]=[0,{total}], got {f}")
    table = interval_table(n)
    return Classification(
        n=n,
        f=f,
        primary=_classify_one(table, f),
        complement_f=total - f,
        complement=_classify_one(table, total - f),
    )


@dataclass(frozen=True)
class BipartiteDistance:
    """Distance from an edge count to the complete-bipartite edge counts.

    edge_counts[x] = x(n-x) for 0 <= x <= n/2; distance(e) is the least
    |e - edge_counts[x]| and argmins(e) lists the one or two attaining x.
    """

    n: int
    edge_counts: tuple[int, ...]

    def distance(self, e: int) -> int:
        self._check(e)
        return min(abs(e - c) for c in self.edge_counts)

    def argmins(self, e: int) -> tuple[int, ...]:
        d = self.distance(e)
        return tuple(x for x, c in enumerate(self.edge_counts) if abs(e - c) == d)

    def _check(self, e: int) -> None:
        if not 0 <= e <= comb(self.n, 2):
            raise ValueError(f"e must be in [0, C(n,2)], got {e}")

    def to_csv(self) -> str:
        lines = ["e,g_e,argmin_x"]
        for e in range(comb(self.n, 2) + 1):
            xs = "|".join(map(str, self.argmins(e)))
            lines.append(f"{e},{self.distance(e)},{xs}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "edge_counts": list(self.edge_counts),
            "distance": [
                {"e": e, "g": self.distance(e), "argmins": list(self.argmins(e))}
                for e in range(comb(self.n, 2) + 1)
            ],
        }


def bipartite_distance(n: int) -> BipartiteDistance:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return BipartiteDistance(n, tuple(x * (n - x) for x in range(n // 2 + 1)))


class EdgeBound(NamedTuple):
    """Bound on f for a given edge count, plus whether it is known attained."""

    value: int
    achievable: bool


def min_achievable_edges(n: int) -> int:
    """Largest e for which the lower bound is known to be attained."""
    return n * n // 4 + (n - 1) // 2 - 1


def min_f_for_edges(n: int, e: int) -> EdgeBound:
    """Lower bound star_f(g(e)) on f over graphs with n vertices and e edges,
    attained whenever e <= floor(n^2/4) + floor((n-1)/2) - 1.

    Past that range g(e) can exceed the star domain; the t(n-t-1) formula is
    then evaluated raw and the bound is weak (possibly <= 0) but still valid.
    """
    d = bipartite_distance(n).distance(e)
    return EdgeBound(d * (n - d - 1), e <= min_achievable_edges(n))


def max_f_for_edges(n: int, e: int) -> EdgeBound:
    """Upper bound comb(n,3) - star_f(g(C(n,2)-e)), by complementation."""
    total_pairs = comb(n, 2)
    if not 0 <= e <= total_pairs:
        raise ValueError(f"e must be in [0, C(n,2)], got {e}")
    lower = min_f_for_edges(n, total_pairs - e)
    return EdgeBound(comb(n, 3) - lower.value, lower.achievable)


def interval_superset(n: int, t: int) -> tuple[int, ...]:
    """The parity progression {star_f(t), star_f(t)+2, ..., matching_f(t)}
    that contains every attainable value in interval t (t <= t_max)."""
    table = interval_table(n)
    if not 0 <= t <= table.t_max:
        raise ValueError(f"t must be in [0, t_max]=[0,{table.t_max}], got {t}")
    return tuple(range(table.star_f(t), table.matching_f(t) + 1, 2))
