"""Labeled simple graphs on vertex sets {1..n}.

Labels matter throughout this package: the same abstract graph can admit or
refuse a pattern-avoiding representant depending on how its vertices are
numbered, so graphs here are labeled values and isomorphism is handled
explicitly (canonical_form / enumerate_graphs) rather than baked in.

A Labeling is a tuple sigma of length n, sigma[v-1] = new label of old
vertex v; it must be a permutation of 1..n.

Canonical forms are computed by brute force over labelings (with a
max-degree / neighborhood prune), good enough for n <= 10. Isomorphism-free
enumeration walks permutation orbits of edge bitsets, good for n <= 7.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Optional, Sequence

Labeling = tuple[int, ...]

_MAX_CANON_N = 10
_MAX_ENUM_N = 7


class LabeledGraph:
    """Immutable simple graph with vertices exactly 1..n."""

    __slots__ = ("_n", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {{{u},{v}}} leaves 1..{n}")
            norm.add((u, v) if u < v else (v, u))
        self._n = n
        self._edges = frozenset(norm)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v."""
        return sorted(self._edges)

    def vertices(self) -> range:
        return range(1, self._n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_vertex(self, v)
        return tuple(sorted(u for u in self.vertices() if self.has_edge(u, v)))

    def adjacency_masks(self) -> tuple[int, ...]:
        """masks[v] has bit u set iff {u,v} is an edge; masks[0] unused."""
        masks = [0] * (self._n + 1)
        for u, v in self._edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def __eq__(self, other) -> bool:
        if isinstance(other, LabeledGraph):
            return self._n == other._n and self._edges == other._edges
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"LabeledGraph({self._n}, {self.edge_list()})"


def _check_vertex(g: LabeledGraph, v: int) -> None:
    if not (1 <= v <= g.n):
        raise ValueError(f"vertex {v} out of range 1..{g.n}")


def degree(g: LabeledGraph, v: int) -> int:
    """Number of edges incident with v."""
    _check_vertex(g, v)
    return sum(1 for u in g.vertices() if g.has_edge(u, v))


# ---------------------------------------------------------------------------
# family builders (default labelings are part of the contract: several
# representant constructions assume them)


def complete(n: int) -> LabeledGraph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return LabeledGraph(n, itertools.combinations(range(1, n + 1), 2))


def path(n: int) -> LabeledGraph:
    """Path 1-2-...-n."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return LabeledGraph(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> LabeledGraph:
    """Cycle 1-2-...-n-1, labeled around."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)]
    edges.append((1, n))
    return LabeledGraph(n, edges)


def wheel(n: int) -> LabeledGraph:
    """Rim cycle 1..n plus the apex n+1 adjacent to every rim vertex."""
    if n < 3:
        raise ValueError("wheel needs rim size >= 3")
    edges = list(cycle(n).edges)
    edges.extend((i, n + 1) for i in range(1, n + 1))
    return LabeledGraph(n + 1, edges)


def prism(n: int) -> LabeledGraph:
    """Cycles 1..n and n+1..2n joined by rungs i -- n+i."""
    if n < 3:
        raise ValueError("prism needs cycle length >= 3")
    edges = list(cycle(n).edges)
    edges.extend((u + n, v + n) for u, v in cycle(n).edges)
    edges.extend((i, n + i) for i in range(1, n + 1))
    return LabeledGraph(2 * n, edges)


def star(k: int) -> LabeledGraph:
    """k leaves 1..k attached to the center k+1 (same hub convention as wheel)."""
    if k < 1:
        raise ValueError("star needs at least one leaf")
    return LabeledGraph(k + 1, ((i, k + 1) for i in range(1, k + 1)))


# ---------------------------------------------------------------------------
# relabeling and isomorphism


def identity_labeling(n: int) -> Labeling:
    return tuple(range(1, n + 1))


def inverse_labeling(sigma: Labeling) -> Labeling:
    inv = [0] * len(sigma)
    for old, new in enumerate(sigma, start=1):
        inv[new - 1] = old
    return tuple(inv)


def _check_labeling(sigma: Sequence[int], n: int) -> None:
    if len(sigma) != n or sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(sigma)} is not a permutation of 1..{n}")


def relabel(g: LabeledGraph, sigma: Sequence[int]) -> LabeledGraph:
    """Map every edge {u,v} to {sigma[u-1], sigma[v-1]}."""
    _check_labeling(sigma, g.n)
    return LabeledGraph(g.n, ((sigma[u - 1], sigma[v - 1]) for u, v in g.edges))


def _pair_rank(a: int, b: int, n: int) -> int:
    # rank of (a, b), a < b, in lexicographic pair order
    return (a - 1) * (2 * n - a) // 2 + (b - a - 1)


def edge_bitset(g: LabeledGraph) -> int:
    """Edge set as an integer; pair (1,2) is the most significant bit.

    With this encoding, among graphs with equal edge counts, a larger
    integer means a lexicographically smaller sorted edge list — so the
    canonical form below is the bitset maximum.
    """
    n = g.n
    top = n * (n - 1) // 2 - 1
    bits = 0
    for u, v in g.edges:
        bits |= 1 << (top - _pair_rank(u, v, n))
    return bits


def graph_from_bitset(n: int, bits: int) -> LabeledGraph:
    top = n * (n - 1) // 2 - 1
    edges = [
        (a, b)
        for a, b in itertools.combinations(range(1, n + 1), 2)
        if bits >> (top - _pair_rank(a, b, n)) & 1
    ]
    return LabeledGraph(n, edges)


def canonical_form(g: LabeledGraph) -> LabeledGraph:
    """The relabeling of g whose sorted edge list is lexicographically least.

    Two graphs are isomorphic iff their canonical forms are equal. Brute
    force over labelings, pruned: label 1 must go to a max-degree vertex and
    labels 2..d+1 to its neighborhood (the optimal first row is 1^d 0^...),
    and branches that cannot beat the incumbent even with every undecided
    pair present are cut.
    """
    n = g.n
    if n > _MAX_CANON_N:
        raise ValueError(f"canonical_form supports n <= {_MAX_CANON_N}, got {n}")
    if not g.edges:
        return LabeledGraph(n)

    npairs = n * (n - 1) // 2
    top = npairs - 1
    full = (1 << npairs) - 1
    degs = [0] + [degree(g, v) for v in g.vertices()]
    maxdeg = max(degs)
    nbr = [frozenset()] + [frozenset(g.neighbors(v)) for v in g.vertices()]

    # decided[d] = pairs with both endpoints among new labels 1..d
    decided = [0] * (n + 1)
    for d in range(2, n + 1):
        decided[d] = decided[d - 1]
        for i in range(1, d):
            decided[d] |= 1 << (top - _pair_rank(i, d, n))

    best = -1

    def extend(assigned: list[int], bits: int) -> None:
        nonlocal best
        d = len(assigned)
        if d == n:
            if bits > best:
                best = bits
            return
        if best >= 0 and (bits | (full ^ decided[d])) <= best:
            return
        if d == 0:
            cands = [v for v in g.vertices() if degs[v] == maxdeg]
        else:
            unused = [v for v in g.vertices() if v not in assigned]
            if d <= maxdeg:
                cands = [v for v in unused if v in nbr[assigned[0]]]
            else:
                cands = unused
        for v in cands:
            nb = bits
            for j, u in enumerate(assigned, start=1):
                if v in nbr[u]:
                    nb |= 1 << (top - _pair_rank(j, d + 1, n))
            assigned.append(v)
            extend(assigned, nb)
            assigned.pop()

    extend([], 0)
    return graph_from_bitset(n, best)


def automorphisms(g: LabeledGraph) -> list[Labeling]:
    """All labelings sigma with relabel(g, sigma) == g, by backtracking."""
    n = g.n
    if n > _MAX_CANON_N:
        raise ValueError(f"automorphisms supports n <= {_MAX_CANON_N}, got {n}")
    degs = [0] + [degree(g, v) for v in g.vertices()]
    found: list[Labeling] = []
    sigma: list[int] = []
    used = [False] * (n + 1)

    def extend() -> None:
        v = len(sigma) + 1
        if v > n:
            found.append(tuple(sigma))
            return
        for image in range(1, n + 1):
            if used[image] or degs[image] != degs[v]:
                continue
            if any(g.has_edge(u, v) != g.has_edge(sigma[u - 1], image) for u in range(1, v)):
                continue
            used[image] = True
            sigma.append(image)
            extend()
            sigma.pop()
            used[image] = False

    extend()
    return found


def enumerate_graphs(n: int, isolate_free: bool = False) -> Iterator[LabeledGraph]:
    """One canonically labeled graph per isomorphism class on n vertices.

    Walks all 2^(n choose 2) edge bitsets; when an unseen one is met, its
    whole permutation orbit is marked and the orbit's canonical member is
    yielded. Memory is one byte per bitset, so n is capped at 7.
    """
    if not (1 <= n <= _MAX_ENUM_N):
        raise ValueError(f"enumerate_graphs supports 1 <= n <= {_MAX_ENUM_N}, got {n}")
    return _enumerate_graphs(n, isolate_free)


def _enumerate_graphs(n: int, isolate_free: bool) -> Iterator[LabeledGraph]:
    npairs = n * (n - 1) // 2
    top = npairs - 1
    pairs = list(itertools.combinations(range(1, n + 1), 2))

    # bit-position remap for every permutation of the labels
    bitmaps: list[tuple[int, ...]] = []
    for sigma in itertools.permutations(range(1, n + 1)):
        m = [0] * npairs
        for a, b in pairs:
            u, v = sigma[a - 1], sigma[b - 1]
            if u > v:
                u, v = v, u
            m[top - _pair_rank(a, b, n)] = top - _pair_rank(u, v, n)
        bitmaps.append(tuple(m))

    seen = bytearray(1 << npairs) if npairs else bytearray(1)
    for bits in range(1 << npairs):
        if seen[bits]:
            continue
        canon = -1
        for m in bitmaps:
            img = 0
            t = bits
            while t:
                low = t & -t
                t ^= low
                img |= 1 << m[low.bit_length() - 1]
            seen[img] = 1
            if img > canon:
                canon = img
        rep = graph_from_bitset(n, canon)
        if isolate_free and any(degree(rep, v) == 0 for v in rep.vertices()):
            continue
        yield rep


def components(g: LabeledGraph) -> list[tuple[int, ...]]:
    """Vertex sets of connected components, each sorted, ordered by minimum."""
    remaining = set(g.vertices())
    out = []
    while remaining:
        root = min(remaining)
        comp = {root}
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for u in g.neighbors(v):
                if u in remaining and u not in comp:
                    comp.add(u)
                    frontier.append(u)
        remaining -= comp
        out.append(tuple(sorted(comp)))
    return out
