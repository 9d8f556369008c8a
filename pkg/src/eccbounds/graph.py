"""Immutable simple graphs stored as adjacency bit rows.

Row ``v`` of a :class:`Graph` is a Python int whose bit ``u`` is set exactly
when ``uv`` is an edge.  Breadth-first search works on whole rows: a frontier
is expanded by OR-ing the rows of its members, so no per-edge loop is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_N = 64
INF = math.inf


class GraphError(ValueError):
    """Invalid graph construction or an operation on an unsuitable graph."""


class DisconnectedGraphError(GraphError):
    pass


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise GraphError(f"vertex count must lie in [1, {MAX_N}], got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        """Build without validation; callers guarantee symmetry and no loops."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            image = 0
            for u in iter_bits(row):
                image |= 1 << perm[u]
            rows[perm[v]] = image
        return Graph.trusted(self.n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.trusted(self.n, rows)

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError("loop edge")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.trusted(self.n, rows)

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph.trusted(self.n, [(~row & full) & ~(1 << v) for v, row in enumerate(self.adj)])

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and is_connected(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise GraphError(f"vertex count must lie in [1, {MAX_N}], got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph.trusted(n, rows)


def bfs_distances(g: Graph, src: int) -> list[float]:
    """Distances from ``src``; unreachable vertices get :data:`INF`."""
    if not 0 <= src < g.n:
        raise GraphError(f"source {src} out of range")
    adj = g.adj
    dist: list[float] = [INF] * g.n
    dist[src] = 0
    seen = frontier = 1 << src
    level = 0
    while frontier:
        level += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        seen |= nxt
        for v in iter_bits(nxt):
            dist[v] = level
        frontier = nxt
    return dist


def _reach(adj: Sequence[int], src: int) -> int:
    seen = frontier = 1 << src
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _eccentricity(adj: Sequence[int], full: int, src: int) -> int:
    # caller guarantees connectivity
    seen = frontier = 1 << src
    e = 0
    while seen != full:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
        e += 1
    return e


def is_connected(g: Graph) -> bool:
    return _reach(g.adj, 0) == g.full_mask


def eccentricities(g: Graph) -> tuple[int, ...]:
    if not is_connected(g):
        raise DisconnectedGraphError("eccentricity is undefined on a disconnected graph")
    full = g.full_mask
    return tuple(_eccentricity(g.adj, full, v) for v in range(g.n))


@dataclass(frozen=True, slots=True)
class EccProfile:
    connected: bool
    ecc: tuple[int, ...] | None = None
    radius: int | None = None
    diameter: int | None = None


def ecc_profile(g: Graph) -> EccProfile:
    if not is_connected(g):
        return EccProfile(connected=False)
    full = g.full_mask
    ecc = tuple(_eccentricity(g.adj, full, v) for v in range(g.n))
    return EccProfile(connected=True, ecc=ecc, radius=min(ecc), diameter=max(ecc))


def diametric_path(g: Graph) -> list[int]:
    """One shortest path realizing the diameter.

    The source is the smallest vertex of maximum eccentricity, the target the
    smallest vertex at that distance, and each step takes the smallest
    neighbor that stays on a shortest path.
    """
    prof = ecc_profile(g)
    if not prof.connected:
        raise DisconnectedGraphError("diametric path needs a connected graph")
    assert prof.ecc is not None and prof.diameter is not None
    diam = prof.diameter
    src = prof.ecc.index(diam)
    dist_src = bfs_distances(g, src)
    dst = dist_src.index(diam)
    to_dst = bfs_distances(g, dst)
    path = [src]
    v = src
    while v != dst:
        v = next(u for u in iter_bits(g.adj[v]) if to_dst[u] == to_dst[v] - 1)
        path.append(v)
    return path
