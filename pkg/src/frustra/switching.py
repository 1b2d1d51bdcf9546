"""Vertex flipping (switching) and switching equivalence.

Flipping a vertex toggles every pair at that vertex and preserves the
frustrated-triangle count.  Switching a subset X toggles exactly the pairs
crossing the cut X | X^c.  ``t_exact`` finds the minimum number of "odd"
pairs over all bipartitions, i.e. the flip distance from the graph to the
complete bipartite family, by exhausting the 2^(n-1) normalized subsets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import CapabilityError, Graph, find_isomorphism, relabel

T_EXACT_MAX_N = 28
EQUIV_MAX_N = 12


@dataclass(frozen=True)
class Bipartition:
    """One side X of an unordered vertex bipartition.

    Normalized so vertex 0 is never in X (X and its complement describe the
    same cut), which makes reported minimizers deterministic.
    """

    n: int
    members: tuple[int, ...]

    @classmethod
    def of(cls, n: int, vertices) -> "Bipartition":
        vs = set(vertices)
        for v in vs:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
        if 0 in vs:
            vs = set(range(n)) - vs
        return cls(n, tuple(sorted(vs)))

    @property
    def mask(self) -> int:
        m = 0
        for v in self.members:
            m |= 1 << v
        return m


@dataclass(frozen=True)
class SwitchWitness:
    """Certificate that two graphs are switching-equivalent.

    Switching the first graph by ``subset`` and then relabeling with
    ``sigma`` must reproduce the second graph exactly.
    """

    subset: tuple[int, ...]
    sigma: tuple[int, ...]

    def verify(self, g: Graph, h: Graph) -> bool:
        return relabel(switch_subset(g, self.subset), self.sigma) == h


def flip_vertex(g: Graph, v: int) -> Graph:
    """Toggle every pair uv, u != v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    full = (1 << g.n) - 1
    rows = list(g.rows)
    rows[v] ^= full ^ (1 << v)
    bit = 1 << v
    for u in range(g.n):
        if u != v:
            rows[u] ^= bit
    return Graph(g.n, tuple(rows))


def _subset_mask(g: Graph, subset) -> int:
    if isinstance(subset, Bipartition):
        return subset.mask
    m = 0
    for v in subset:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        m |= 1 << v
    return m


def switch_subset(g: Graph, subset) -> Graph:
    """Flip every vertex of the subset; a pair toggles iff it crosses the cut."""
    xm = _subset_mask(g, subset)
    full = (1 << g.n) - 1
    comp = full ^ xm
    rows = []
    for v, r in enumerate(g.rows):
        rows.append(r ^ (comp if xm >> v & 1 else xm))
    return Graph(g.n, tuple(rows))


def odd_pair_count(g: Graph, subset) -> int:
    """Pairs whose status differs from the complete bipartite graph on the cut:
    edges inside either side plus nonedges across."""
    xm = _subset_mask(g, subset)
    full = (1 << g.n) - 1
    comp = full ^ xm
    x_size = xm.bit_count()
    inside = 0
    across_edges = 0
    for v, r in enumerate(g.rows):
        if xm >> v & 1:
            inside += (r & xm).bit_count()
            across_edges += (r & comp).bit_count()
        else:
            inside += (r & comp).bit_count()
    inside //= 2
    return inside + x_size * (g.n - x_size) - across_edges


def t_exact(g: Graph) -> tuple[int, Bipartition]:
    """Minimum odd-pair count over all bipartitions, with one minimizer.

    Walks the 2^(n-1) normalized subsets in Gray-code order: moving one
    vertex across the cut flips the odd status of exactly its n-1 incident
    pairs, so each step is a single row XOR + popcount.  Ties break to the
    lexicographically smallest member tuple.
    """
    n = g.n
    if n > T_EXACT_MAX_N:
        raise CapabilityError(
            f"t_exact enumerates 2^(n-1) bipartitions; n={n} exceeds cap {T_EXACT_MAX_N}"
        )
    rows = g.rows
    full = (1 << n) - 1
    count = g.e  # X = empty: odd pairs are exactly the edges
    xm = 0
    best = count
    best_members: tuple[int, ...] = ()
    # Gray code over subsets of {1..n-1}
    for i in range(1, 1 << (n - 1)):
        v = (i & -i).bit_length()  # flipped vertex: trailing-zero index + 1
        bit = 1 << v
        cross = (full ^ xm) if xm & bit else xm  # v's other side (never contains v)
        # all n-1 pairs at v toggle odd status
        count += (n - 1) - 2 * (rows[v] ^ cross).bit_count()
        xm ^= bit
        if count < best:
            best = count
            best_members = tuple(u for u in range(1, n) if xm >> u & 1)
        elif count == best:
            members = tuple(u for u in range(1, n) if xm >> u & 1)
            if members < best_members:
                best_members = members
    return best, Bipartition(n, best_members)


def isolate_normal_form(g: Graph, v: int) -> Graph:
    """Switch by the neighborhood of v, leaving v isolated and f unchanged."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return switch_subset(g, g.neighborhood(v))


def normalized_subsets(n: int):
    """All subsets of {1..n-1}, ascending by size then lexicographically."""
    masks = []
    for m in range(1 << (n - 1)):
        members = tuple(v + 1 for v in range(n - 1) if m >> v & 1)
        masks.append(members)
    masks.sort(key=lambda t: (len(t), t))
    return masks


def switching_equivalent(g: Graph, h: Graph):
    """Search for a SwitchWitness taking g to h, or None.

    Tries every normalized subset in order of increasing size (so a returned
    witness flips as few vertices as possible) and tests isomorphism of the
    switched graph against h.  Meant for n <= 9.
    """
    if g.n != h.n:
        return None
    if g.n > EQUIV_MAX_N:
        raise CapabilityError(
            f"switching equivalence searches 2^(n-1) subsets; n={g.n} exceeds cap {EQUIV_MAX_N}"
        )
    for members in normalized_subsets(g.n):
        switched = switch_subset(g, members)
        sigma = find_isomorphism(switched, h)
        if sigma is not None:
            return SwitchWitness(members, sigma)
    return None
