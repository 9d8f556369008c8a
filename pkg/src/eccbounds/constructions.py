"""Generators for the extremal graph families.

Every generator is deterministic and documents its vertex numbering, so the
graph6 output for a parameter tuple never changes.  Family generators return a
:class:`Construction`: the graph plus whatever index values are predicted by a
closed formula for that family (``predicted`` is empty when no formula
applies to the given parameters).

Families are addressable by strings such as ``"kite:n=7,d=4"``; see
:func:`parse_family` and :data:`FAMILIES`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .graph import Graph, GraphError, iter_bits
from .metrics import binom2, path_contribution


class Family(enum.Enum):
    DOUBLE_BROOM = "DOUBLE_BROOM"
    KITE = "KITE"
    KITE_PRIME = "KITE_PRIME"
    KITE_T = "KITE_T"
    CYCLE_TAIL = "CYCLE_TAIL"
    STRAT_BLOCK = "STRAT_BLOCK"
    STRAT_CYCLE = "STRAT_CYCLE"
    TURAN = "TURAN"
    TURAN_TAIL = "TURAN_TAIL"
    MATCH_CLIQUE_TAIL = "MATCH_CLIQUE_TAIL"
    JOIN_FAMILY = "JOIN_FAMILY"
    ORE_EXTREMAL = "ORE_EXTREMAL"
    DIAM_LOWER = "DIAM_LOWER"
    BASIC = "BASIC"


@dataclass(frozen=True)
class Construction:
    graph: Graph
    family: Family
    params: tuple[tuple[str, int], ...]
    predicted: dict[str, Fraction | int] = field(default_factory=dict, compare=False)

    @property
    def spec(self) -> "FamilySpec":
        return FamilySpec(_NAME_OF[self.family] if self.family in _NAME_OF else "", self.params)


class _Builder:
    """Mutable edge accumulator used while assembling a construction."""

    def __init__(self, n: int):
        self.n = n
        self.rows = [0] * n

    def edge(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError("loop edge")
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u

    def path(self, vertices) -> None:
        vs = list(vertices)
        for a, b in zip(vs, vs[1:]):
            self.edge(a, b)

    def clique(self, vertices) -> None:
        vs = list(vertices)
        for i, a in enumerate(vs):
            for b in vs[i + 1 :]:
                self.edge(a, b)

    def graph(self) -> Graph:
        return Graph(self.n, tuple(self.rows))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


# -- basic graphs and combinators -------------------------------------------


def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    b = _Builder(n)
    b.path(range(n))
    return b.graph()


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    b = _Builder(n)
    b.path(range(n))
    b.edge(n - 1, 0)
    return b.graph()


def star(n: int) -> Graph:
    """Center 0, leaves 1..n-1."""
    _require(n >= 1, "star needs n >= 1")
    b = _Builder(n)
    for v in range(1, n):
        b.edge(0, v)
    return b.graph()


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    b = _Builder(n)
    b.clique(range(n))
    return b.graph()


def empty(n: int) -> Graph:
    _require(n >= 1, "edgeless graph needs n >= 1")
    return Graph.trusted(n, [0] * n)


def turan_parts(n: int, r: int) -> list[list[int]]:
    """Part membership of T(n, r); larger parts first, consecutive labels."""
    _require(1 <= r <= n, "Turan graph needs 1 <= r <= n")
    q, extra = divmod(n, r)
    parts, start = [], 0
    for i in range(r):
        size = q + (1 if i < extra else 0)
        parts.append(list(range(start, start + size)))
        start += size
    return parts


def turan(n: int, r: int) -> Graph:
    parts = turan_parts(n, r)
    b = _Builder(n)
    for i, p in enumerate(parts):
        for q in parts[i + 1 :]:
            for u in p:
                for v in q:
                    b.edge(u, v)
    return b.graph()


def turan_edges(n: int, r: int) -> int:
    sizes = [len(p) for p in turan_parts(n, r)]
    return (n * n - sum(s * s for s in sizes)) // 2


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` keeps labels 0..g.n-1, ``h`` is shifted by g.n."""
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    gmask = g.full_mask
    hmask = h.full_mask << g.n
    rows = [row | (hmask if v < g.n else gmask) for v, row in enumerate(u.adj)]
    return Graph(u.n, tuple(rows))


def copies(k: int, g: Graph) -> Graph:
    _require(k >= 1, "need at least one copy")
    out = g
    for _ in range(k - 1):
        out = disjoint_union(out, g)
    return out


def basic(kind: str, *params) -> Graph:
    """Dispatch for the standard graphs and combinators by name."""
    table: dict[str, Callable[..., Graph]] = {
        "path": path,
        "cycle": cycle,
        "star": star,
        "complete": complete,
        "empty": empty,
        "turan": turan,
        "join": join,
        "disjoint_union": disjoint_union,
        "copies": copies,
    }
    if kind not in table:
        raise GraphError(f"unknown basic graph {kind!r}")
    return table[kind](*params)


# -- trees ------------------------------------------------------------------


def double_broom(n: int, d: int, a: int) -> Construction:
    """Diametric path 0..d; a-1 extra leaves on vertex 1, the rest on vertex d-1.

    Vertex 0 is one of the ``a`` leaves at the first end and vertex ``d`` one
    of the ``b = n-(d-1)-a`` leaves at the other; extra leaves are numbered
    from ``d+1`` on, first-end leaves first.
    """
    b_leaves = n - (d - 1) - a
    _require(2 <= d <= n - 1, "double broom needs 2 <= d <= n-1")
    _require(a >= 1 and b_leaves >= 1, f"infeasible leaf split a={a}, b={b_leaves}")
    b = _Builder(n)
    b.path(range(d + 1))
    nxt = d + 1
    for _ in range(a - 1):
        b.edge(1, nxt)
        nxt += 1
    for _ in range(b_leaves - 1):
        b.edge(d - 1, nxt)
        nxt += 1
    extra = n - d - 1
    pred: dict[str, Fraction | int] = {
        "diameter": d,
        "m": n - 1,
        "ecc_sum": extra * d + path_contribution(0, d),
        "sigma0": Fraction(extra * d + path_contribution(0, d), n),
        "sigma1": extra * d * d + path_contribution(1, d),
        "sigma2": extra * d * (d - 1) + path_contribution(2, d),
    }
    return Construction(b.graph(), Family.DOUBLE_BROOM, (("n", n), ("d", d), ("a", a)), pred)


def is_double_broom(g: Graph, diameter: int) -> bool:
    """True iff ``g`` is a tree whose non-leaves form a path of ``diameter-1``
    vertices with leaves hanging only from the two ends of that path."""
    if g.m != g.n - 1:
        return False
    if g.n <= 2:
        return diameter == g.n - 1
    inner = [v for v in range(g.n) if g.degree(v) > 1]
    if len(inner) != diameter - 1:
        return False
    if len(inner) == 1:
        return True
    inner_mask = sum(1 << v for v in inner)
    inner_deg = {v: (g.adj[v] & inner_mask).bit_count() for v in inner}
    ends = [v for v in inner if inner_deg[v] == 1]
    if len(ends) != 2 or any(inner_deg[v] > 2 for v in inner):
        return False
    return all(g.degree(v) == 2 for v in inner if v not in ends)


# -- kites ----------------------------------------------------------------------


def _kite_graph(n: int, d: int, t: int) -> Graph:
    # path 0..d, clique d+1..n-1 on vertices 0 and 1; the first t also on 2
    b = _Builder(n)
    b.path(range(d + 1))
    clique = list(range(d + 1, n))
    b.clique(clique)
    for x in clique:
        b.edge(x, 0)
        b.edge(x, 1)
    for x in clique[:t]:
        b.edge(x, 2)
    return b.graph()


def kite_sigma2(n: int, d: int) -> int:
    return path_contribution(2, d) + (n - d - 1) * d * (d - 1) + binom2(n - d) * d * d


def kite_prime_sigma2(n: int, d: int) -> int:
    extra = n - d - 1
    if d >= 4:
        last = extra * (d - 1) * (d - 2)
    elif d == 3:
        last = extra * (d - 1) ** 2
    else:
        last = extra * (d - 1) * d
    return path_contribution(2, d) + extra * d * (d - 1) + binom2(n - d) * (d - 1) ** 2 + last


def kite_step(n: int, d: int, t: int) -> int:
    """Change in sigma2 when one more clique vertex is joined to vertex 2."""
    v2 = max(2, d - 2)
    return (d - 1) * v2 - (t + 1) * (d - 1) - (n - d - 1 - t) * d


def kite(n: int, d: int) -> Construction:
    _require(2 <= d <= n - 1, "kite needs 2 <= d <= n-1")
    pred = {"diameter": d, "m": d + binom2(n - d) + (n - d - 1), "sigma2": kite_sigma2(n, d)}
    return Construction(_kite_graph(n, d, 0), Family.KITE, (("n", n), ("d", d)), pred)


def kite_prime(n: int, d: int) -> Construction:
    _require(2 <= d <= n - 1, "kite_prime needs 2 <= d <= n-1")
    pred = {"diameter": d, "m": d + binom2(n - d) + 2 * (n - d - 1), "sigma2": kite_prime_sigma2(n, d)}
    return Construction(_kite_graph(n, d, n - d - 1), Family.KITE_PRIME, (("n", n), ("d", d)), pred)


def kite_t(n: int, d: int, t: int) -> Construction:
    _require(2 <= d <= n - 1, "kite_t needs 2 <= d <= n-1")
    _require(0 <= t <= n - d - 1, "kite_t needs 0 <= t <= n-d-1")
    pred: dict[str, Fraction | int] = {"diameter": d, "m": d + binom2(n - d) + (n - d - 1) + t}
    if d >= 3:
        pred["sigma2"] = kite_sigma2(n, d) + sum(kite_step(n, d, j) for j in range(t))
    elif t in (0, n - d - 1):
        pred["sigma2"] = kite_sigma2(n, d) if t == 0 else kite_prime_sigma2(n, d)
    return Construction(_kite_graph(n, d, t), Family.KITE_T, (("n", n), ("d", d), ("t", t)), pred)


def near_perfect_matching_complement(n: int) -> Construction:
    """K_n minus a maximum matching; for odd n the unmatched vertex 0 also
    loses its edge to vertex 1.  Diameter 2 for n >= 4."""
    _require(n >= 4, "needs n >= 4")
    b = _Builder(n)
    b.clique(range(n))
    start = n % 2
    for v in range(start, n - 1, 2):
        b.rows[v] &= ~(1 << (v + 1))
        b.rows[v + 1] &= ~(1 << v)
    if n % 2:
        b.rows[0] &= ~(1 << 1)
        b.rows[1] &= ~1
    g = b.graph()
    return Construction(g, Family.BASIC, (("n", n),), {"diameter": 2, "sigma2": 4 * g.m})


# -- cycle with a tail ---------------------------------------------------------


def cycle_tail(n: int, k: int) -> Construction:
    """C_{2k} on 0..2k-1 with a path 2k, 2k+1, ..., n-1 grown from vertex 0."""
    _require(3 <= 2 * k <= n, "cycle_tail needs 3 <= 2k <= n")
    b = _Builder(n)
    b.path(range(2 * k))
    b.edge(2 * k - 1, 0)
    if n > 2 * k:
        b.edge(0, 2 * k)
        b.path(range(2 * k, n))
    r = n - 2 * k
    pred: dict[str, Fraction | int] = {"diameter": n - k}
    if 3 * r <= n:
        total = n * k + 3 * comb(r + 1, 2) - r
        pred["ecc_sum"] = total
        pred["sigma0"] = Fraction(total, n)
    return Construction(b.graph(), Family.CYCLE_TAIL, (("n", n), ("k", k)), pred)


# -- stratified graphs -------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    graph: Graph
    x: int
    y: int


def stratified_block(p: int, q: int) -> Block:
    """Path 0..p plus q-p vertices p+1..q, extra j adjacent to path vertices
    i and i+2 with i = j mod (p-1), so placements fill the path from the left."""
    _require(q >= p >= 2, "stratified block needs q >= p >= 2")
    b = _Builder(q + 1)
    b.path(range(p + 1))
    for j in range(q - p):
        i = j % (p - 1)
        b.edge(p + 1 + j, i)
        b.edge(p + 1 + j, i + 2)
    return Block(b.graph(), 0, p)


def stratified_cycle(block: Block, k: int) -> Construction:
    """2k copies of ``block`` in a ring, the y terminal of copy i merged with
    the x terminal of copy i+1.  Copy i has x at label i*(|F|-1) and its other
    non-y vertices right after, in block order."""
    _require(k >= 1, "stratified cycle needs k >= 1")
    f = block.graph
    per = f.n - 1
    copies_ = 2 * k
    n = copies_ * per
    inner = [v for v in range(f.n) if v not in (block.x, block.y)]
    b = _Builder(n)
    for c in range(copies_):
        label = {block.x: c * per, block.y: ((c + 1) % copies_) * per}
        for off, v in enumerate(inner, start=1):
            label[v] = c * per + off
        for u, v in f.edges():
            b.edge(label[u], label[v])
    g = b.graph()
    from .graph import bfs_distances

    dx = bfs_distances(f, block.x)
    dy = bfs_distances(f, block.y)
    sums = {dx[v] + dy[v] for v in range(f.n)}
    pred: dict[str, Fraction | int] = {}
    if len(sums) == 1:
        rho = int(sums.pop())
        e = rho * k
        pred = {"diameter": e, "sigma0": Fraction(e), "sigma1": n * e * e, "sigma2": g.m * e * e}
    params = (("block_n", f.n), ("k", k))
    return Construction(g, Family.STRAT_CYCLE, params, pred)


def stratified(p: int, q: int, k: int) -> Construction:
    c = stratified_cycle(stratified_block(p, q), k)
    return Construction(c.graph, Family.STRAT_CYCLE, (("p", p), ("q", q), ("k", k)), c.predicted)


# -- Turan graph with a tail -------------------------------------------------------


def turan_tail(n: int, k: int, d: int) -> Construction:
    """T(n-d+1, k) on 0..n-d (largest part first) and a path n-d+1..n-1 whose
    first vertex z = n-d+1 sees the whole first part."""
    _require(d >= 2, "turan_tail needs d >= 2")
    np_ = n - d + 1
    _require(2 <= k <= np_, "turan_tail needs 2 <= k <= n-d+1")
    parts = turan_parts(np_, k)
    b = _Builder(n)
    t = turan(np_, k)
    for u, v in t.edges():
        b.edge(u, v)
    z = np_
    b.path(range(z, n))
    for u in parts[0]:
        b.edge(z, u)
    c = len(parts[0])
    pred: dict[str, Fraction | int] = {"diameter": d, "chromatic": k, "clique": k}
    if d >= 4:
        pred["sigma2"] = (
            path_contribution(2, d)
            + turan_edges(np_, k) * d * d
            - 2 * (d - 1) ** 2
            - d * c * (np_ - c)
            + c * (d - 1) * (d - 2)
        )
    return Construction(b.graph(), Family.TURAN_TAIL, (("n", n), ("k", k), ("d", d)), pred)


# -- matching-number construction --------------------------------------------------


def match_clique_tail(n: int, k: int, d: int) -> Construction:
    """Core path 0..d-2; n-2k+1 leaves on vertex 0; a clique of 2k-d
    vertices all adjacent to vertex d-2.  Leaves are numbered before the
    clique."""
    _require(d >= 2 and d < 2 * k <= n, "match_clique_tail needs 2 <= d < 2k <= n")
    b = _Builder(n)
    b.path(range(d - 1))
    nxt = d - 1
    for _ in range(n - 2 * k + 1):
        b.edge(0, nxt)
        nxt += 1
    clique = list(range(nxt, n))
    b.clique(clique)
    for x in clique:
        b.edge(d - 2, x)
    pred: dict[str, Fraction | int] = {
        "diameter": d,
        "sigma2": path_contribution(2, d) + (n - d - 1) * d * (d - 1) + binom2(2 * k - d) * d * d,
    }
    if n % 2 == 0:
        pred["matching"] = k
    return Construction(b.graph(), Family.MATCH_CLIQUE_TAIL, (("n", n), ("k", k), ("d", d)), pred)


# -- joins ---------------------------------------------------------------------------


def join_family(n: int, k: int, s: int) -> Construction:
    """K_s on 0..s-1 joined to K_{k-s} (s..k-1) plus isolated k..n-1.

    For s < k the chromatic and clique numbers are k.  With s = k the graph
    is K_k joined to an independent set, whose chromatic number is k+1.
    """
    _require(1 <= s <= k <= n - 1, "join_family needs 1 <= s <= k <= n-1")
    inner = disjoint_union(complete(k - s), empty(n - k)) if k > s else empty(n - k)
    g = join(complete(s), inner)
    dom = n if s == n - 1 else s
    pred: dict[str, Fraction | int] = {
        "dominating": dom,
        "chromatic": k if s < k else k + 1,
        "clique": k if s < k else k + 1,
        "sigma0": Fraction(dom + 2 * (n - dom), n),
        "sigma1": dom + 4 * (n - dom),
        "sigma2": binom2(dom) + 2 * dom * (n - dom) + 4 * binom2(k - s),
    }
    return Construction(g, Family.JOIN_FAMILY, (("n", n), ("k", k), ("s", s)), pred)


def join_matching(n: int, k: int) -> Construction:
    """K_1 joined to (k-1) disjoint edges plus n+1-2k isolated vertices; the
    hub is vertex 0."""
    _require(n >= 3 and 1 <= k <= n // 2, "join_matching needs n >= 3 and 1 <= k <= n/2")
    parts = []
    if k > 1:
        parts.append(copies(k - 1, complete(2)))
    if n + 1 - 2 * k > 0:
        parts.append(empty(n + 1 - 2 * k))
    inner = parts[0]
    for p in parts[1:]:
        inner = disjoint_union(inner, p)
    g = join(complete(1), inner)
    pred: dict[str, Fraction | int] = {"matching": k, "dominating": 1, "sigma2": 2 * n + 4 * k - 6}
    return Construction(g, Family.JOIN_FAMILY, (("n", n), ("k", k)), pred)


# -- Ore's edge-maximal graphs ---------------------------------------------------


def ore_extremal(n: int, d: int, start: int = 0, split: int | None = None) -> Construction:
    """Path 0..d plus a clique on d+1..n-1.

    With ``split=None`` every clique vertex sees path vertices start..start+2.
    Otherwise the first ``split`` clique vertices see start..start+2 and the
    rest see start+1..start+3.
    """
    _require(2 <= d <= n - 1, "ore_extremal needs 2 <= d <= n-1")
    _require(0 <= start <= d - 2, "window must fit on the path")
    extra = n - d - 1
    if split is not None:
        _require(0 <= split <= extra, "split must lie in [0, n-d-1]")
        _require(split == extra or start + 3 <= d, "four-vertex window must fit on the path")
    b = _Builder(n)
    b.path(range(d + 1))
    clique = list(range(d + 1, n))
    b.clique(clique)
    for idx, x in enumerate(clique):
        lo = start if split is None or idx < split else start + 1
        for v in range(lo, lo + 3):
            b.edge(x, v)
    params = (("n", n), ("d", d), ("start", start)) + ((("split", split),) if split is not None else ())
    pred = {"diameter": d, "m": d + (n - d - 1) * (n - d + 4) // 2}
    return Construction(b.graph(), Family.ORE_EXTREMAL, params, pred)


# -- lower-bound constructions for fixed diameter -----------------------------------


def diam_lower_01(n: int, d: int) -> Construction:
    """Path 0..d plus n-d-1 copies (d+1..n-1) of a central vertex.

    Even d: copies see the two path neighbors of vertex d/2.  Odd d: copies
    see both central vertices.  For d=2 the copies and vertex 1 also form a
    clique, since only dominating vertices have eccentricity 1.  d=1 is K_n.
    """
    _require(1 <= d <= n - 1, "needs 1 <= d <= n-1")
    if d == 1:
        g = complete(n)
    else:
        b = _Builder(n)
        b.path(range(d + 1))
        copies_ = list(range(d + 1, n))
        if d % 2 == 0:
            nb = (d // 2 - 1, d // 2 + 1)
        else:
            nb = ((d - 1) // 2, (d + 1) // 2)
        for x in copies_:
            for v in nb:
                b.edge(x, v)
        if d == 2:
            b.clique([1] + copies_)
        g = b.graph()
    c = -(-d // 2)
    extra = n - d - 1
    pred: dict[str, Fraction | int] = {
        "diameter": d,
        "sigma0": Fraction(path_contribution(0, d) + extra * c, n),
        "sigma1": path_contribution(1, d) + extra * c * c,
    }
    return Construction(g, Family.DIAM_LOWER, (("i", 1), ("n", n), ("d", d)), pred)


def _ore_max(n: int, d: int) -> int:
    return binom2(n - d) + 2 * n - d - 2


def diam_lower_2(n: int, d: int, m: int | None = None) -> Construction:
    """A graph minimizing sigma2 among n-vertex graphs with m edges and diameter d.

    Path vertices are 0..d, outside vertices d+1..n-1.  ``m=None`` means the
    tree case m = n-1.  The sigma2 prediction is the matching lower-bound
    value, including the +3 exception at d=4, m=n >= 7.
    """
    from .bounds import sigma2_nmd_lower

    if m is None:
        m = n - 1
    _require(1 <= d <= n - 1, "needs 1 <= d <= n-1")
    report = sigma2_nmd_lower(n, m, d)
    _require(report.applicable, f"infeasible (n, m, d) = ({n}, {m}, {d}): {report.reason}")
    if d == 1:
        g = complete(n)
    elif d == 2:
        g = _dl2_diam2(n, m)
    elif d % 2 == 1:
        g = _dl2_odd(n, m, d)
    else:
        g = _dl2_even(n, m, d)
    _require(g.m == m, "internal: edge count mismatch")
    pred: dict[str, Fraction | int] = {"diameter": d, "m": m, "sigma2": int(report.value)}
    return Construction(g, Family.DIAM_LOWER, (("i", 2), ("n", n), ("d", d), ("m", m)), pred)


def _dl2_diam2(n: int, m: int) -> Graph:
    # k dominating vertices 0..k-1; leftover edges form a path among the rest
    k = 1
    while binom2(k + 1) + (k + 1) * (n - k - 1) <= m:
        k += 1
    b = _Builder(n)
    for u in range(k):
        for v in range(u + 1, n):
            b.edge(u, v)
    extra = m - (binom2(k) + k * (n - k))
    for j in range(extra):
        b.edge(k + j, k + j + 1)
    return b.graph()


def _dl2_odd(n: int, m: int, d: int) -> Graph:
    a, c = (d - 1) // 2, (d + 1) // 2
    outside = list(range(d + 1, n))
    p = len(outside)
    b = _Builder(n)
    b.path(range(d + 1))
    lo, hi = 2 * n - 2 - d, binom2(n - d) + n - 1
    singles = max(0, lo - m)
    for idx, x in enumerate(outside):
        b.edge(x, a)
        if idx >= singles:
            b.edge(x, c)
    if m > lo:
        pairs = [(outside[i], outside[j]) for j in range(p) for i in range(j)]
        for u, v in pairs[: min(m, hi) - lo]:
            b.edge(u, v)
    for x in outside[: max(0, m - hi)]:
        b.edge(x, a - 1)
    return b.graph()


def _dl2_even(n: int, m: int, d: int) -> Graph:
    c = d // 2
    z = c
    outside = list(range(d + 1, n))
    p = len(outside)
    b = _Builder(n)
    b.path(range(d + 1))
    if d == 4 and m == n and p >= 2:
        # exceptional case: all outside vertices hang from z, plus one edge
        for x in outside:
            b.edge(z, x)
        b.edge(outside[0], outside[1])
        return b.graph()
    if d == 4 and m == n + 2 and p >= 3:
        # u sees the three central path vertices, w sees u and z
        u, w, leaves = outside[0], outside[1], outside[2:]
        for v in (1, 2, 3):
            b.edge(u, v)
        b.edge(w, u)
        b.edge(w, z)
        for x in leaves:
            b.edge(z, x)
        return b.graph()
    k = 0
    while m > p + d + binom2(k) + 2 * k and k < p:
        k += 1
    good, leaves = outside[:k], outside[k:]
    for g_ in good:
        b.edge(g_, c - 1)
        b.edge(g_, c + 1)
    for x in leaves:
        b.edge(z, x)
    budget = m - (n - 1 + k)
    ecc_c = [z] + good
    pairs: list[tuple[int, int]] = []
    if d == 4 and leaves:
        pairs = [(z, g_) for g_ in good]
    pairs += [(u, v) for j, v in enumerate(ecc_c) for u in ecc_c[:j] if (u, v) not in pairs and u != z]
    if not (d == 4 and leaves):
        pairs = [(z, g_) for g_ in good] + pairs
    _require(budget <= len(pairs), "internal: not enough cheap edges")
    for u, v in pairs[:budget]:
        b.edge(u, v)
    return b.graph()


# -- string addressing -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class FamilySpec:
    name: str
    params: tuple[tuple[str, int], ...]

    @property
    def family(self) -> Family:
        return FAMILIES[self.name][1]

    def instantiate(self) -> Construction:
        builder = FAMILIES[self.name][0]
        return builder(**dict(self.params))

    def __str__(self) -> str:
        return self.name + ":" + ",".join(f"{k}={v}" for k, v in self.params)


def _wrap(fn: Callable[..., Graph], family: Family = Family.BASIC) -> Callable[..., Construction]:
    def build(**kw) -> Construction:
        return Construction(fn(**kw), family, tuple(kw.items()))

    return build


def _block(p: int, q: int) -> Construction:
    blk = stratified_block(p, q)
    return Construction(blk.graph, Family.STRAT_BLOCK, (("p", p), ("q", q)), {})


def _diam_lower(i: int, n: int, d: int, m: int | None = None) -> Construction:
    if i in (0, 1):
        return diam_lower_01(n, d)
    if i == 2:
        return diam_lower_2(n, d, m)
    raise GraphError("diam_lower needs i in {0, 1, 2}")


FAMILIES: dict[str, tuple[Callable[..., Construction], Family, tuple[str, ...]]] = {
    "path": (_wrap(lambda n: path(n)), Family.BASIC, ("n",)),
    "cycle": (_wrap(lambda n: cycle(n)), Family.BASIC, ("n",)),
    "star": (_wrap(lambda n: star(n)), Family.BASIC, ("n",)),
    "complete": (_wrap(lambda n: complete(n)), Family.BASIC, ("n",)),
    "empty": (_wrap(lambda n: empty(n)), Family.BASIC, ("n",)),
    "turan": (_wrap(lambda n, r: turan(n, r), Family.TURAN), Family.TURAN, ("n", "r")),
    "double_broom": (double_broom, Family.DOUBLE_BROOM, ("n", "d", "a")),
    "kite": (kite, Family.KITE, ("n", "d")),
    "kite_prime": (kite_prime, Family.KITE_PRIME, ("n", "d")),
    "kite_t": (kite_t, Family.KITE_T, ("n", "d", "t")),
    "npm_complement": (near_perfect_matching_complement, Family.BASIC, ("n",)),
    "cycle_tail": (cycle_tail, Family.CYCLE_TAIL, ("n", "k")),
    "stratified_block": (_block, Family.STRAT_BLOCK, ("p", "q")),
    "stratified_cycle": (stratified, Family.STRAT_CYCLE, ("p", "q", "k")),
    "turan_tail": (turan_tail, Family.TURAN_TAIL, ("n", "k", "d")),
    "match_clique_tail": (match_clique_tail, Family.MATCH_CLIQUE_TAIL, ("n", "k", "d")),
    "join_family": (join_family, Family.JOIN_FAMILY, ("n", "k", "s")),
    "join_matching": (join_matching, Family.JOIN_FAMILY, ("n", "k")),
    "ore_extremal": (ore_extremal, Family.ORE_EXTREMAL, ("n", "d", "start", "split")),
    "diam_lower": (_diam_lower, Family.DIAM_LOWER, ("i", "n", "d", "m")),
}

_NAME_OF = {
    Family.DOUBLE_BROOM: "double_broom",
    Family.KITE: "kite",
    Family.KITE_PRIME: "kite_prime",
    Family.KITE_T: "kite_t",
    Family.CYCLE_TAIL: "cycle_tail",
    Family.TURAN_TAIL: "turan_tail",
    Family.MATCH_CLIQUE_TAIL: "match_clique_tail",
    Family.ORE_EXTREMAL: "ore_extremal",
}


def spec(name: str, **params: int) -> FamilySpec:
    if name not in FAMILIES:
        raise GraphError(f"unknown family {name!r}")
    allowed = FAMILIES[name][2]
    bad = set(params) - set(allowed)
    if bad:
        raise GraphError(f"family {name!r} has no parameter(s) {sorted(bad)}")
    return FamilySpec(name, tuple((k, params[k]) for k in allowed if k in params))


def parse_family(text: str) -> FamilySpec:
    """Parse ``"name:k=v,k=v"`` into a :class:`FamilySpec`."""
    name, _, rest = text.strip().partition(":")
    params: dict[str, int] = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, sep, val = item.partition("=")
        if not sep:
            raise GraphError(f"malformed parameter {item!r} in {text!r}")
        try:
            params[key.strip()] = int(val)
        except ValueError:
            raise GraphError(f"parameter {key!r} must be an integer") from None
    return spec(name, **params)


def build(text_or_spec: str | FamilySpec) -> Construction:
    fs = parse_family(text_or_spec) if isinstance(text_or_spec, str) else text_or_spec
    try:
        return fs.instantiate()
    except TypeError as exc:
        raise GraphError(f"bad parameters for {fs.name}: {exc}") from None
