"""Labeled simple graphs on at most 64 vertices, stored as bitmask adjacency rows.

Each vertex's neighborhood is one Python int used as a bit row, so edge tests,
row intersections and degree counts are single word operations (``&``, ``^``,
``int.bit_count``).  Graphs are immutable values: every operation returns a
new ``Graph``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

MAX_VERTICES = 64


class CapabilityError(RuntimeError):
    """Requested size/configuration is outside what this tool supports."""


class Graph6Error(ValueError):
    """Malformed graph6 input."""


@dataclass(frozen=True)
class Graph:
    """Simple graph: ``rows[v]`` has bit ``u`` set iff ``uv`` is an edge."""

    n: int
    rows: tuple[int, ...]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def e(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in range(v) if self.rows[v] >> u & 1]

    def neighborhood(self, v: int) -> frozenset[int]:
        r = self.rows[v]
        return frozenset(u for u in range(self.n) if r >> u & 1)

    def pair_bits(self) -> int:
        """Pack the upper triangle into one int, pair (u,v), u<v, at bit v(v-1)/2+u."""
        bits = 0
        i = 0
        for v in range(1, self.n):
            rv = self.rows[v]
            for u in range(v):
                bits |= (rv >> u & 1) << i
                i += 1
        return bits

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class StructureProfile:
    """Edge/degree/triangle/independent-pair summary of one graph."""

    n: int
    e: int
    degrees: tuple[int, ...]
    p: int  # number of triangles
    q: int  # number of pairs of independent (non-adjacent) edges


def all_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs (u,v), u<v, in column order: (0,1),(0,2),(1,2),(0,3),..."""
    return [(u, v) for v in range(1, n) for u in range(v)]


def pair_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise CapabilityError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")


def from_edges(n: int, edges) -> Graph:
    """Build a graph from an edge list; duplicate pairs are collapsed."""
    _check_n(n)
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_pair_bits(n: int, bits: int) -> Graph:
    """Inverse of Graph.pair_bits."""
    _check_n(n)
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return Graph(n, tuple(rows))


def flip_pair(g: Graph, u: int, v: int) -> Graph:
    """Toggle the edge/nonedge status of one pair."""
    if u == v:
        raise ValueError("cannot flip a vertex with itself")
    rows = list(g.rows)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    return Graph(g.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ r ^ (1 << v)) for v, r in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place h's vertices after g's, with no cross edges."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapabilityError(f"union has {n} vertices, cap is {MAX_VERTICES}")
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(n, tuple(rows))


def relabel(g: Graph, perm) -> Graph:
    """Apply a vertex bijection: vertex u becomes perm[u]."""
    rows = [0] * g.n
    for u in range(g.n):
        ru = g.rows[u]
        pu = perm[u]
        nr = 0
        for v in range(g.n):
            if ru >> v & 1:
                nr |= 1 << perm[v]
        rows[pu] = nr
    return Graph(g.n, tuple(rows))


def structure_profile(g: Graph) -> StructureProfile:
    """Compute (n, e, degrees, p, q).

    Triangles are counted edge-wise: each edge uv contributes the size of the
    common neighborhood, so every triangle is seen three times.  Independent
    edge pairs come from the identity C(e,2) = q + sum_v C(d_v,2).
    """
    degs = g.degrees()
    e = sum(degs) // 2
    common = 0
    for u, v in g.edges():
        common += (g.rows[u] & g.rows[v]).bit_count()
    p = common // 3
    q = e * (e - 1) // 2 - sum(d * (d - 1) // 2 for d in degs)
    return StructureProfile(g.n, e, tuple(degs), p, q)


# ---------------------------------------------------------------------------
# graph6 (short form only, n < 63)
# ---------------------------------------------------------------------------

def graph6_decode(text: str) -> Graph:
    """Decode a short-form graph6 string.

    Layout: byte0 = n + 63, then the upper-triangle bits in column order
    (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed 6 per byte, most significant
    bit first, each byte offset by 63.  Trailing pad bits must be zero.
    """
    data = text.encode("ascii", errors="strict") if isinstance(text, str) else bytes(text)
    if len(data) == 0:
        raise Graph6Error("empty graph6 string")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {i} is {b}, outside the graph6 range [63, 126]")
    if data[0] == 126:
        raise Graph6Error("long-form graph6 (n >= 63) is not supported")
    n = data[0] - 63
    if n == 0:
        raise Graph6Error("graph6 string encodes an empty vertex set; need n >= 1")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"bad length: n={n} needs {nbytes} body bytes, got {len(body)}"
        )
    rows = [0] * n
    pairs = all_pairs(n)
    i = 0
    for byte in body:
        group = byte - 63
        for k in range(5, -1, -1):
            bit = group >> k & 1
            if i >= npairs:
                if bit:
                    raise Graph6Error("nonzero padding bits")
                continue
            if bit:
                u, v = pairs[i]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return Graph(n, tuple(rows))


def graph6_encode(g: Graph) -> str:
    """Encode in short-form graph6; inverse of graph6_decode."""
    if g.n >= 63:
        raise CapabilityError(f"graph6 short form needs n < 63, got {g.n}")
    npairs = g.n * (g.n - 1) // 2
    bits = g.pair_bits()
    out = [g.n + 63]
    for start in range(0, npairs, 6):
        group = 0
        for k in range(6):
            i = start + k
            if i < npairs and bits >> i & 1:
                group |= 1 << (5 - k)
        out.append(group + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# edge-list text format: "n; u-v, u-v, ..."
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    head, sep, tail = text.partition(";")
    try:
        n = int(head.strip())
    except ValueError:
        raise ValueError(f"bad vertex count in edge list: {head!r}") from None
    edges = []
    tail = tail.strip()
    if tail:
        for item in tail.split(","):
            item = item.strip()
            if not item:
                continue
            left, dash, right = item.partition("-")
            if not dash:
                raise ValueError(f"bad edge {item!r}, expected 'u-v'")
            try:
                edges.append((int(left), int(right)))
            except ValueError:
                raise ValueError(f"bad edge {item!r}, expected 'u-v'") from None
    return from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    if g.e == 0:
        return f"{g.n};"
    return f"{g.n}; " + ", ".join(f"{u}-{v}" for u, v in g.edges())


def parse_graph(text: str) -> Graph:
    """Accept either graph6 or the 'n; u-v, ...' edge-list form."""
    if ";" in text:
        return parse_edge_list(text)
    return graph6_decode(text.strip())


# ---------------------------------------------------------------------------
# isomorphism by pruned permutation search (meant for n <= 10)
# ---------------------------------------------------------------------------

def _vertex_keys(g: Graph) -> list[tuple]:
    degs = g.degrees()
    return [
        (degs[v], tuple(sorted(degs[u] for u in range(g.n) if g.rows[v] >> u & 1)))
        for v in range(g.n)
    ]


def find_isomorphism(g: Graph, h: Graph):
    """Search for a vertex bijection mapping g onto h.

    Returns the permutation sigma (relabel(g, sigma) == h) or None.  Pruning
    is by degree and sorted neighbor-degree signatures; worst case is still
    exponential, which is fine at the n <= 10 sizes used here.
    """
    if g.n != h.n:
        return None
    n = g.n
    gk = _vertex_keys(g)
    hk = _vertex_keys(h)
    if sorted(gk) != sorted(hk):
        return None

    # candidates per g-vertex, rarest first for early failure
    cands = [[w for w in range(n) if hk[w] == gk[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: len(cands[v]))
    sigma = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        rv = g.rows[v]
        for w in cands[v]:
            if used[w]:
                continue
            ok = True
            for prev in order[:pos]:
                if (rv >> prev & 1) != (h.rows[w] >> sigma[prev] & 1):
                    ok = False
                    break
            if ok:
                sigma[v] = w
                used[w] = True
                if extend(pos + 1):
                    return True
                used[w] = False
                sigma[v] = -1
        return False

    if extend(0):
        return tuple(sigma)
    return None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def all_graphs(n: int):
    """Iterate every labeled graph on n vertices (2^C(n,2) of them)."""
    npairs = n * (n - 1) // 2
    for bits in range(1 << npairs):
        yield from_pair_bits(n, bits)


def random_graph(n: int, rng, p: float = 0.5) -> Graph:
    """Erdos-Renyi sample, used by the test suite."""
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return from_edges(n, edges)
