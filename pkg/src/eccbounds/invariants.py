"""Exact structural invariants: chromatic, clique and matching numbers.

All routines are exact; the size budgets keep exhaustive searches cheap at the
orders the verifier enumerates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, iter_bits

CHROMATIC_MAX_N = 16
CLIQUE_MAX_N = 32
MATCHING_MAX_N = 32


@dataclass(frozen=True, slots=True)
class InvariantSet:
    chromatic: int
    clique: int
    matching: int
    dominating: int


def _budget(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise GraphError(f"{what} is limited to n <= {limit}, got n={g.n}")


def clique_number(g: Graph) -> int:
    """Bron-Kerbosch with pivoting over bit rows."""
    _budget(g, CLIQUE_MAX_N, "clique number")
    adj = g.adj
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand:
            if not excl and size > best:
                best = size
            return
        if size + cand.bit_count() <= best:
            return
        pivot = max(iter_bits(cand | excl), key=lambda u: (adj[u] & cand).bit_count())
        for v in iter_bits(cand & ~adj[pivot]):
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, g.full_mask, 0)
    return best


def _colorable(g: Graph, k: int) -> bool:
    adj = g.adj
    order = sorted(range(g.n), key=lambda v: -adj[v].bit_count())
    classes = [0] * k

    def place(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        # a fresh color is interchangeable with any other fresh color
        for c in range(min(used + 1, k)):
            if not classes[c] & adj[v]:
                classes[c] |= 1 << v
                if place(idx + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    _budget(g, CHROMATIC_MAX_N, "chromatic number")
    k = max(clique_number(g), 1)
    while not _colorable(g, k):
        k += 1
    return k


def matching_number(g: Graph) -> int:
    """Maximum matching size via Edmonds' blossom algorithm."""
    _budget(g, MATCHING_MAX_N, "matching number")
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break

    def find_path(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = find_path(root)
        while end != -1:
            pv = parent[end]
            nxt = match[pv]
            match[end], match[pv] = pv, end
            end = nxt
    return sum(1 for v in match if v != -1) // 2


def dominating_count(g: Graph) -> int:
    return sum(1 for row in g.adj if row.bit_count() == g.n - 1)


def invariants(g: Graph) -> InvariantSet:
    return InvariantSet(
        chromatic=chromatic_number(g),
        clique=clique_number(g),
        matching=matching_number(g),
        dominating=dominating_count(g),
    )
