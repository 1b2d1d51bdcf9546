"""Counting frustrated triangles: vertex triples inducing an odd number of edges.

Three independent computations of the count f are kept side by side so they
can cross-check each other: a direct triple scan (the trusted oracle), a
degree formula, and an edge/pair formula.  ``flip_pair_delta`` maintains f
under single-pair flips, which is what makes exhaustive Gray-code enumeration
cheap.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .graphs import Graph, structure_profile


def f_scan(g: Graph) -> int:
    """Count frustrated triples by scanning all C(n,3) of them.

    Deliberately the simplest possible implementation; this is the reference
    oracle everything else is tested against.
    """
    rows = g.rows
    n = g.n
    total = 0
    for i in range(n - 2):
        ri = rows[i]
        for j in range(i + 1, n - 1):
            rj = rows[j]
            eij = ri >> j & 1
            for k in range(j + 1, n):
                total += eij ^ (ri >> k & 1) ^ (rj >> k & 1)
    return total


def f_degree_formula(g: Graph) -> int:
    """f = e*n - sum of squared degrees + 4p."""
    prof = structure_profile(g)
    return prof.e * prof.n - sum(d * d for d in prof.degrees) + 4 * prof.p


def f_pair_formula(g: Graph) -> int:
    """f = e(n-e-1) + 4p + 2q."""
    prof = structure_profile(g)
    return prof.e * (prof.n - prof.e - 1) + 4 * prof.p + 2 * prof.q


def frustrated_on_pair(g: Graph, u: int, v: int) -> int:
    """Number of w such that the triple {u,v,w} is frustrated.

    For an edge uv the frustrated triples are those where w sees both or
    neither endpoint (row intersection); for a nonedge, those where w sees
    exactly one endpoint (row symmetric difference).  Either way it is two
    row operations and popcounts.
    """
    if u == v:
        raise ValueError("u and v must be distinct")
    ru, rv = g.rows[u], g.rows[v]
    if ru >> v & 1:
        both = (ru & rv).bit_count()
        neither = g.n - (ru | rv).bit_count()  # u,v are in the union via each other
        return both + neither
    return (ru ^ rv).bit_count()


def flip_pair_delta(g: Graph, u: int, v: int) -> int:
    """f(flip_pair(g,u,v)) - f(g), for adding or removing alike.

    Flipping uv toggles the frustration status of exactly the n-2 triples
    through the pair, so the change is (n-2) - 2*frustrated_on_pair(g,u,v).
    """
    return (g.n - 2) - 2 * frustrated_on_pair(g, u, v)


def f_k_count(g: Graph, k: int) -> int:
    """Count frustrated k-cycles: cyclic orderings of k distinct vertices,
    identified up to rotation and reflection, whose k wrap-around pairs
    contain an odd number of edges.

    With this convention each k-subset contributes (k-1)!/2 orderings and
    k=3 coincides with f_scan.  Brute force, meant for k <= 6, n <= 12.
    """
    if not 3 <= k <= g.n:
        raise ValueError(f"k must be in [3, n]={g.n}, got {k}")
    rows = g.rows
    total = 0
    for subset in combinations(range(g.n), k):
        first = subset[0]
        rest = subset[1:]
        for perm in permutations(rest):
            if perm[0] > perm[-1]:
                continue  # reflection representative
            cyc = (first,) + perm
            edges = rows[cyc[-1]] >> first & 1
            for a, b in zip(cyc, cyc[1:]):
                edges += rows[a] >> b & 1
            total += edges & 1
    return total


def parity_of_f(n: int, e: int) -> int:
    """Forced parity of f: 0 (even) when n is even, else the parity of e."""
    if n % 2 == 0:
        return 0
    return e % 2
