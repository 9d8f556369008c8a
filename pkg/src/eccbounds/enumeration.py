"""Enumeration of small connected graphs and labeled trees.

Two modes are offered for connected graphs:

* labeled: a sweep over all edge masks of ``K_n`` with a connectivity test.
  The mask space splits into ``2**p`` prefix classes so that the sweep can be
  sharded across processes.
* isomorphism-reduced: one canonical representative per class, grown from
  the classes on ``n-1`` vertices by adding a vertex with every nonempty
  neighborhood (every connected graph has a vertex whose removal leaves it
  connected, so nothing is missed).

Canonical forms come from individualization-refinement: an isomorphism
invariant ordered partition is refined, non-singleton cells are split by
individualizing each of their vertices in turn, and the largest graph6 bit
string over all discrete leaves is kept.  Swapping two twins is an
automorphism fixing everything already individualized, so only one vertex
per twin class is tried at each node.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import permutations
from typing import Callable, Iterator, Sequence

from . import graph6
from .graph import Graph, GraphError, ecc_profile, iter_bits
from .invariants import chromatic_number, clique_number, dominating_count, matching_number
from .metrics import IndexReport, indices_from_ecc

LABELED_MAX_N = 8
ISO_MAX_N = 8
TREE_MAX_N = 10


class GraphInfo:
    """Lazily computed facts about one connected graph."""

    def __init__(self, graph: Graph, canonical: str | None = None):
        self.graph = graph
        self._canonical = canonical
        prof = ecc_profile(graph)
        if not prof.connected:
            raise GraphError("GraphInfo needs a connected graph")
        self.ecc: tuple[int, ...] = prof.ecc  # type: ignore[assignment]
        self.radius: int = prof.radius  # type: ignore[assignment]
        self.diameter: int = prof.diameter  # type: ignore[assignment]

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def m(self) -> int:
        return self.graph.m

    @cached_property
    def report(self) -> IndexReport:
        return indices_from_ecc(self.graph, self.ecc)

    @cached_property
    def chromatic(self) -> int:
        return chromatic_number(self.graph)

    @cached_property
    def clique(self) -> int:
        return clique_number(self.graph)

    @cached_property
    def matching(self) -> int:
        return matching_number(self.graph)

    @cached_property
    def dominating(self) -> int:
        return dominating_count(self.graph)

    @cached_property
    def is_tree(self) -> bool:
        return self.m == self.n - 1

    @cached_property
    def graph6(self) -> str:
        return graph6.encode(self.graph)

    @property
    def canonical(self) -> str:
        if self._canonical is None:
            self._canonical = canonical_graph6(self.graph)
        return self._canonical

    def value(self, quantity: str):
        if quantity in ("sigma0", "sigma1", "sigma2"):
            return getattr(self.report, quantity)
        if quantity in ("m", "dominating", "chromatic", "clique", "matching", "diameter", "radius"):
            return getattr(self, quantity)
        raise ValueError(f"unknown quantity {quantity!r}")


# -- canonical forms ---------------------------------------------------------


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            mk = 0
            for v in cell:
                mk |= 1 << v
            masks.append(mk)
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                groups.setdefault(tuple((row & mk).bit_count() for mk in masks), []).append(v)
            if len(groups) > 1:
                split = True
                for key in sorted(groups):
                    out.append(groups[key])
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def _code(adj: Sequence[int], order: Sequence[int]) -> int:
    # graph6 bit stream of the relabeled graph, read as one integer
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose relabeling is the canonical representative."""
    adj = g.adj
    n = g.n
    best_code = -1
    best_order: list[int] = []

    def twins(u: int, v: int) -> bool:
        return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        pos = next((i for i, c in enumerate(cells) if len(c) > 1), -1)
        if pos < 0:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        cell = cells[pos]
        tried: list[int] = []
        for v in cell:
            if any(twins(u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:pos] + [[v], rest] + cells[pos + 1 :])

    search([list(range(n))])
    return best_order


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


def canonical_graph6(g: Graph) -> str:
    return graph6.encode(canonical_form(g))


def brute_force_canonical_code(g: Graph) -> int:
    """Largest graph6 code over all vertex orders; an oracle for small n."""
    return max(_code(g.adj, order) for order in permutations(range(g.n)))


# -- labeled sweeps -----------------------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _is_connected_rows(rows: Sequence[int], full: int) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def labeled_connected(n: int, shard: tuple[int, int] = (0, 1)) -> Iterator[Graph]:
    """All connected labeled graphs on ``n`` vertices.

    ``shard=(i, P)`` restricts to masks whose top ``log2 P`` bits equal ``i``;
    the union over ``i`` is the full sweep.
    """
    if not 1 <= n <= LABELED_MAX_N:
        raise GraphError(f"labeled enumeration is limited to n <= {LABELED_MAX_N}")
    index, parts = shard
    if parts < 1 or parts & (parts - 1) or not 0 <= index < parts:
        raise ValueError("shard must be (i, P) with P a power of two and 0 <= i < P")
    pairs = _pairs(n)
    nbits = len(pairs)
    pbits = parts.bit_length() - 1
    if pbits > nbits:
        if index == 0 and n == 1:
            yield Graph.trusted(1, (0,))
        return
    low_bits = nbits - pbits
    full = (1 << n) - 1
    start = index << low_bits
    for mask in range(start, start + (1 << low_bits)):
        rows = [0] * n
        mk = mask
        while mk:
            low = mk & -mk
            i, j = pairs[low.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            mk ^= low
        if _is_connected_rows(rows, full):
            yield Graph.trusted(n, rows)


# -- isomorphism classes -----------------------------------------------------


@lru_cache(maxsize=None)
def connected_classes(n: int) -> tuple[str, ...]:
    """Canonical graph6 strings of connected graphs on ``n`` vertices, sorted."""
    if not 1 <= n <= ISO_MAX_N:
        raise GraphError(f"isomorphism-reduced enumeration is limited to n <= {ISO_MAX_N}")
    if n == 1:
        return (graph6.encode(Graph.trusted(1, (0,))),)
    seen: set[str] = set()
    bit = 1 << (n - 1)
    for text in connected_classes(n - 1):
        h = graph6.decode(text)
        for nb in range(1, bit):
            rows = list(h.adj) + [nb]
            for v in iter_bits(nb):
                rows[v] |= bit
            seen.add(canonical_graph6(Graph.trusted(n, rows)))
    return tuple(sorted(seen))


# -- trees --------------------------------------------------------------------


def prufer_decode(n: int, seq: Sequence[int]) -> Graph:
    if n == 1:
        return Graph.trusted(1, (0,))
    if len(seq) != n - 2:
        raise ValueError("sequence must have length n-2")
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    rows = [0] * n
    for v in seq:
        leaf = next(u for u in range(n) if degree[u] == 1)
        rows[leaf] |= 1 << v
        rows[v] |= 1 << leaf
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    rows[u] |= 1 << w
    rows[w] |= 1 << u
    return Graph.trusted(n, rows)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All ``n**(n-2)`` labeled trees, in lexicographic sequence order."""
    if not 1 <= n <= TREE_MAX_N:
        raise GraphError(f"tree enumeration is limited to n <= {TREE_MAX_N}")
    if n <= 2:
        yield Graph.trusted(n, (0,) if n == 1 else (2, 1))
        return
    seq = [0] * (n - 2)
    while True:
        yield prufer_decode(n, seq)
        k = n - 3
        while k >= 0 and seq[k] == n - 1:
            seq[k] = 0
            k -= 1
        if k < 0:
            return
        seq[k] += 1


# -- public entry point ------------------------------------------------------


def enumerate_connected(
    n: int,
    filter: Callable[[GraphInfo], bool] | None = None,
    iso_reduce: bool = False,
    shard: tuple[int, int] = (0, 1),
) -> Iterator[Graph]:
    for info in iter_infos(n, iso_reduce=iso_reduce, shard=shard):
        if filter is None or filter(info):
            yield info.graph


def iter_infos(n: int, iso_reduce: bool = False, shard: tuple[int, int] = (0, 1)) -> Iterator[GraphInfo]:
    if iso_reduce:
        index, parts = shard
        for k, text in enumerate(connected_classes(n)):
            if k % parts == index:
                yield GraphInfo(graph6.decode(text), canonical=text)
    else:
        for g in labeled_connected(n, shard):
            yield GraphInfo(g)
