"""Builders for the named graph families used throughout the toolkit.

Stars and matchings realize the interval endpoints, complete bipartite
graphs realize f = 0, and ``extremal_for_edges`` builds the minimizers for a
given edge count.  ``thm2_family`` is the four-part construction whose
single steps move f in controlled decrements (clique fill-in, two star
accumulations, one path accumulation); it is what the ladder verifier in
``spectrum`` drives.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from .graphs import Graph, from_edges
from .theory import bipartite_distance, min_achievable_edges


def star(n: int, t: int) -> Graph:
    """Vertex 0 joined to 1..t; f equals t(n-t-1)."""
    if t > n - 1:
        raise ValueError(f"star needs t <= n-1, got t={t}, n={n}")
    return from_edges(n, [(0, i) for i in range(1, t + 1)])


def matching(n: int, t: int) -> Graph:
    """Edges (0,1), (2,3), ...; f equals t(n-2)."""
    if 2 * t > n:
        raise ValueError(f"matching needs 2t <= n, got t={t}, n={n}")
    return from_edges(n, [(2 * i, 2 * i + 1) for i in range(t)])


def complete_bipartite(n: int, x: int) -> Graph:
    """Parts {0..x-1} and {x..n-1}; f = 0 and e = x(n-x)."""
    if not 0 <= x <= n:
        raise ValueError(f"part size must be in [0, n], got {x}")
    return from_edges(n, [(u, v) for u in range(x) for v in range(x, n)])


def clique_plus_matching(n: int, r: int, m: int) -> Graph:
    """K_r on the first r vertices, then m matching edges, rest isolated.

    f = C(r,3) + C(r,2)(n-r) + m(n-2).
    """
    if r + 2 * m > n:
        raise ValueError(f"need r + 2m <= n, got r={r}, m={m}, n={n}")
    edges = [(u, v) for v in range(r) for u in range(v)]
    edges += [(r + 2 * i, r + 2 * i + 1) for i in range(m)]
    return from_edges(n, edges)


def counterexample_pair() -> tuple[Graph, Graph]:
    """Two 6-vertex graphs with equal f (=12) that are not switching-equivalent:
    a union of two 2-edge paths vs a union of an edge and a 3-edge path."""
    g = from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    h = from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 5)])
    return g, h


def extremal_for_edges(n: int, e: int) -> list[Graph]:
    """The one or two f-minimizing graphs with n vertices and e edges.

    For each x minimizing |e - x(n-x)|: delete a g(e)-star from K_{x,n-x}
    (center in the smaller side, leaves in the larger) when e is below
    x(n-x), or add a g(e)-star inside the larger side when e is above.
    Only valid in the range where the bound star_f(g(e)) is attained.
    """
    bd = bipartite_distance(n)
    limit = min_achievable_edges(n)
    if not 0 <= e <= comb(n, 2):
        raise ValueError(f"e must be in [0, C(n,2)], got {e}")
    if e > limit:
        raise ValueError(
            f"extremal construction is valid for e <= floor(n^2/4)+floor((n-1)/2)-1 = {limit}, got {e}"
        )
    k = bd.distance(e)
    out = []
    for x in bd.argmins(e):
        edges = complete_bipartite(n, x).edges()
        if e == x * (n - x) - k:
            # delete k star edges: center 0 in the smaller side {0..x-1}
            removed = {(0, x + i) for i in range(k)}
            edges = [p for p in edges if p not in removed]
        else:
            # add k star edges inside the larger side {x..n-1}
            edges += [(x, x + 1 + i) for i in range(k)]
        built = from_edges(n, edges)
        assert built.e == e
        out.append(built)
    return out


def _ceil_sqrt(x: int) -> int:
    if x <= 0:
        return 0
    return isqrt(x - 1) + 1


def _ceil_4th_root(x: int) -> int:
    if x <= 0:
        return 0
    r = max(1, round(x ** 0.25))
    while r**4 < x:
        r += 1
    while (r - 1) ** 4 >= x and r > 1:
        r -= 1
    return r


@dataclass(frozen=True)
class Thm2Params:
    """Four-part ladder family state.

    Parts: V1 = r clique-fill vertices, V2 = 2*s1 matching vertices under
    star accumulation, V3 = 2*s2 likewise, V4 = 2*s2 under path
    accumulation.  i counts edges placed in V1, j/k/l are the accumulation
    step indices (1 = untouched matching).
    """

    n: int
    s1: int
    s2: int
    i: int = 0
    j: int = 1
    k: int = 1
    l: int = 1

    @property
    def r(self) -> int:
        return self.n - 2 * self.s1 - 4 * self.s2

    def validate(self) -> None:
        if self.r < 0:
            raise ValueError(f"part sizes exceed n: r={self.r}")
        if self.s1 < 1 or self.s2 < 1:
            raise ValueError("need s1 >= 1 and s2 >= 1")
        if not 0 <= self.i <= comb(self.r, 2):
            raise ValueError(f"i must be in [0, C(r,2)]=[0,{comb(self.r, 2)}], got {self.i}")
        if not 1 <= self.j <= self.s1:
            raise ValueError(f"j must be in [1, s1]=[1,{self.s1}], got {self.j}")
        if not 1 <= self.k <= self.s2:
            raise ValueError(f"k must be in [1, s2]=[1,{self.s2}], got {self.k}")
        if not 1 <= self.l <= self.s2:
            raise ValueError(f"l must be in [1, s2]=[1,{self.s2}], got {self.l}")

    @classmethod
    def for_n(cls, n: int, i: int = 0, j: int = 1, k: int = 1, l: int = 1) -> "Thm2Params":
        """Default part sizes: s1 = ceil(sqrt(n)), s2 = ceil((4n)^(1/4)) for
        even n; s1 = ceil(sqrt(2n)), s2 = ceil((8n)^(1/4)) for odd n.

        For a few small odd n those ceilings overflow n (r < 0); s2 is then
        reduced just enough to fit.  The per-step deltas and ladder coverage
        do not depend on hitting the nominal sizes exactly.
        """
        if n % 2 == 0:
            s1, s2 = _ceil_sqrt(n), _ceil_4th_root(4 * n)
        else:
            s1, s2 = _ceil_sqrt(2 * n), _ceil_4th_root(8 * n)
        while n - 2 * s1 - 4 * s2 < 0 and s2 > 1:
            s2 -= 1
        while n - 2 * s1 - 4 * s2 < 0 and s1 > 1:
            s1 -= 1
        p = cls(n, s1, s2, i, j, k, l)
        p.validate()
        return p


def _star_accumulated(base: int, size: int, steps: int) -> list[tuple[int, int]]:
    """Matching of `size` edges at vertex offset `base`, with the first
    `steps` edges re-rooted onto the first top vertex (step 1 = untouched):
    x1y1, x1y2, ..., x1yj, then xmym for m > j.

    Top vertex of edge m is base+2(m-1), bottom is base+2m-1.
    """
    edges = [(base, base + 1)]
    edges += [(base, base + 2 * m - 1) for m in range(2, steps + 1)]
    edges += [(base + 2 * (m - 1), base + 2 * m - 1) for m in range(steps + 1, size + 1)]
    return edges


def _path_accumulated(base: int, size: int, steps: int) -> list[tuple[int, int]]:
    """Matching rewired into a path along bottom vertices: z1w1, w1w2, ...,
    w_{l-1}w_l, then zmwm for m > l."""
    edges = [(base, base + 1)]
    edges += [(base + 2 * (m - 1) - 1, base + 2 * m - 1) for m in range(2, steps + 1)]
    edges += [(base + 2 * (m - 1), base + 2 * m - 1) for m in range(steps + 1, size + 1)]
    return edges


def thm2_family(params: Thm2Params) -> Graph:
    """Build the four-part graph for one (i, j, k, l) ladder state.

    V1 holds the first i edges of a complete graph in lexicographic order;
    V2 and V3 are star-accumulated matchings after j and k steps; V4 is a
    path-accumulated matching after l steps.  No edges run between parts.
    """
    params.validate()
    n, s1, s2, r = params.n, params.s1, params.s2, params.r
    k_pairs = [(u, v) for u in range(r) for v in range(u + 1, r)]
    edges = k_pairs[: params.i]
    edges += _star_accumulated(r, s1, params.j)
    edges += _star_accumulated(r + 2 * s1, s2, params.k)
    edges += _path_accumulated(r + 2 * s1 + 2 * s2, s2, params.l)
    return from_edges(n, edges)
