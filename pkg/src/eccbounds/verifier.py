"""Exhaustive verification of the bound oracles on small graphs.

A *check* maps every enumerated graph to zero or more evaluations.  Each
evaluation lands in a *cell* (a parameter point such as ``(n, d)``) and is
compared against the oracle's value for that cell.  Per-cell statistics form
a commutative monoid under :func:`merge_cells`, so a sweep split into shards
and merged gives exactly the single-shard result.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from . import bounds as B
from .bounds import LOWER, UPPER, BoundReport
from .constructions import FamilySpec, is_double_broom
from .enumeration import (
    ISO_MAX_N,
    LABELED_MAX_N,
    TREE_MAX_N,
    GraphInfo,
    canonical_graph6,
    connected_classes,
    enumerate_trees,
    iter_infos,
)
from .graph import GraphError

KEEP = 20  # violations / mismatches stored per cell (counts are always exact)

Cell = tuple


@dataclass(frozen=True)
class Evaluation:
    cell: Cell
    observed: Fraction | int
    report: BoundReport
    expect_equal: bool | None = None


@dataclass(frozen=True)
class Check:
    bound_id: str
    summary: str
    evaluate: Callable[[GraphInfo], list[Evaluation]]
    trees_only: bool = False
    n_min: int = 2
    n_default: int = 6
    # bound value is a function of the cell alone (enables extreme tracking)
    constant: bool = True
    # per-cell uniqueness policy: "assert", "report" or None
    uniqueness: Callable[[Cell], str | None] = lambda cell: None


@dataclass
class CellStats:
    count: int = 0
    bound: Fraction | None = None
    direction: str = ""
    sharp: bool = False
    exceptional: bool = False
    extremal: tuple[str, ...] = ()
    extreme: Fraction | int | None = None
    extreme_witnesses: frozenset = frozenset()
    achievers: frozenset = frozenset()
    violations: tuple = ()
    violation_count: int = 0
    iff_mismatches: tuple = ()
    iff_count: int = 0


def _better(direction: str, a, b) -> bool:
    return a > b if direction == UPPER else a < b


def merge_cells(a: CellStats, b: CellStats) -> CellStats:
    """Combine two partial statistics for the same cell (associative, commutative)."""
    if a.count == 0:
        return b
    if b.count == 0:
        return a
    if a.extreme is None or b.extreme is None:
        ext, wit = (a.extreme, a.extreme_witnesses) if b.extreme is None else (b.extreme, b.extreme_witnesses)
    elif a.extreme == b.extreme:
        ext, wit = a.extreme, a.extreme_witnesses | b.extreme_witnesses
    elif _better(a.direction, a.extreme, b.extreme):
        ext, wit = a.extreme, a.extreme_witnesses
    else:
        ext, wit = b.extreme, b.extreme_witnesses
    return CellStats(
        count=a.count + b.count,
        bound=a.bound,
        direction=a.direction,
        sharp=a.sharp,
        exceptional=a.exceptional,
        extremal=a.extremal,
        extreme=ext,
        extreme_witnesses=wit,
        achievers=a.achievers | b.achievers,
        violations=tuple(sorted(set(a.violations) | set(b.violations)))[:KEEP],
        violation_count=a.violation_count + b.violation_count,
        iff_mismatches=tuple(sorted(set(a.iff_mismatches) | set(b.iff_mismatches)))[:KEEP],
        iff_count=a.iff_count + b.iff_count,
    )


def merge_tables(tables: Iterable[dict[Cell, CellStats]]) -> dict[Cell, CellStats]:
    out: dict[Cell, CellStats] = {}
    for table in tables:
        for cell, stats in table.items():
            out[cell] = merge_cells(out[cell], stats) if cell in out else stats
    return out


def _record(table: dict[Cell, CellStats], info: GraphInfo, ev: Evaluation, constant: bool) -> None:
    rep = ev.report
    st = table.get(ev.cell)
    if st is None:
        st = CellStats(
            bound=rep.value if constant else None,
            direction=rep.direction,
            sharp=rep.sharp,
            exceptional=rep.exceptional,
            extremal=tuple(str(s) for s in rep.extremal) if constant else (),
        )
        table[ev.cell] = st
    st.count += 1
    obs = ev.observed
    equal = rep.attained(obs)
    canon = None
    if not rep.holds(obs):
        canon = info.canonical
        st.violation_count += 1
        st.violations = tuple(sorted(set(st.violations) | {(canon, obs, rep.value)}))[:KEEP]
    if equal:
        canon = canon or info.canonical
        st.achievers = st.achievers | {canon}
    if ev.expect_equal is not None and ev.expect_equal != equal:
        canon = canon or info.canonical
        st.iff_count += 1
        st.iff_mismatches = tuple(sorted(set(st.iff_mismatches) | {(canon, obs, ev.expect_equal)}))[:KEEP]
    if constant:
        if st.extreme is None or _better(st.direction, obs, st.extreme):
            st.extreme = obs
            st.extreme_witnesses = frozenset({canon or info.canonical})
        elif obs == st.extreme:
            st.extreme_witnesses = st.extreme_witnesses | {canon or info.canonical}


# -- checks ------------------------------------------------------------------


_cached = lru_cache(maxsize=None)


@_cached
def _oracle(bound_id: str, params: tuple) -> BoundReport:
    fn, _ = B.BOUNDS[bound_id]
    return fn(**dict(params))


def _call(bound_id: str, **params) -> BoundReport:
    return _oracle(bound_id, tuple(sorted(params.items())))


def _ev_sandwich(info: GraphInfo) -> list[Evaluation]:
    n, r, d = info.n, info.radius, info.diameter
    same = r == d
    out = []
    for i in (0, 1, 2):
        lo, hi = B.obs_sandwich(i, n, info.m, r, d)
        obs = info.report.value(i)
        out.append(Evaluation((n, i, LOWER), obs, lo, same))
        out.append(Evaluation((n, i, UPPER), obs, hi, same))
    return out


def _ev_tree_max(info: GraphInfo) -> list[Evaluation]:
    n, d = info.n, info.diameter
    broom = is_double_broom(info.graph, d)
    return [Evaluation((n, d, i), info.report.value(i), _call("lemma_tree_max", i=i, n=n, d=d), broom) for i in (0, 1, 2)]


def _ev_diam_gt_half(info: GraphInfo) -> list[Evaluation]:
    n, d = info.n, info.diameter
    if 2 * d <= n:
        return []
    return [Evaluation((n, d, i), info.report.value(i), _call("lemma_diam_gt_half", i=i, n=n, d=d)) for i in (0, 1)]


def _ev_ore(info: GraphInfo) -> list[Evaluation]:
    n, d = info.n, info.diameter
    if d < 2:
        return []
    return [Evaluation((n, d), info.m, _call("lemma_ore_max_edges", n=n, d=d))]


def _ev_coarse(info: GraphInfo) -> list[Evaluation]:
    n, d = info.n, info.diameter
    if d < 2:
        return []
    return [Evaluation((n, d), info.report.sigma2, _call("thm_sigma2_diam_upper_coarse", n=n, d=d))]


def _ev_diam_max(info: GraphInfo) -> list[Evaluation]:
    n, d = info.n, info.diameter
    if d < 3:
        return []
    return [Evaluation((n, d), info.report.sigma2, _call("thm_sigma2_diam_max", n=n, d=d))]


def _ev_sigma01_lower(info: GraphInfo) -> list[Evaluation]:
    n, d = info.n, info.diameter
    return [Evaluation((n, d, i), info.report.value(i), _call("prop_sigma01_diam_lower", i=i, n=n, d=d)) for i in (0, 1)]


def _ev_nmd(info: GraphInfo) -> list[Evaluation]:
    n, m, d = info.n, info.m, info.diameter
    return [Evaluation((n, m, d), info.report.sigma2, _call("thm_sigma2_nmd_lower", n=n, m=m, d=d))]


def _ev_diam_lower(info: GraphInfo) -> list[Evaluation]:
    n, d = info.n, info.diameter
    return [Evaluation((n, d), info.report.sigma2, _call("cor_sigma2_diam_lower", n=n, d=d))]


def _ev_dominating(info: GraphInfo) -> list[Evaluation]:
    n, s = info.n, info.dominating
    small = info.diameter <= 2
    return [
        Evaluation((n, s, i), info.report.value(i), _call("obs_dominating_lower", i=i, n=n, s=s), small) for i in (0, 1)
    ]


def _ev_chi01(bound_id: str, param: str) -> Callable[[GraphInfo], list[Evaluation]]:
    def ev(info: GraphInfo) -> list[Evaluation]:
        n, k = info.n, getattr(info, param)
        if not 2 <= k <= n - 1:
            return []
        return [Evaluation((n, k, i), info.report.value(i), _call(bound_id, i=i, n=n, k=k)) for i in (0, 1)]

    return ev


def _ev_min_edges(info: GraphInfo) -> list[Evaluation]:
    n = info.n
    return [
        Evaluation((param, n, getattr(info, param)), info.m, _call("lemma_min_edges_chi", n=n, k=getattr(info, param)))
        for param in ("chromatic", "clique")
    ]


def _ev_chi2(bound_id: str, param: str) -> Callable[[GraphInfo], list[Evaluation]]:
    def ev(info: GraphInfo) -> list[Evaluation]:
        n, k = info.n, getattr(info, param)
        if not 2 <= k <= n - 1:
            return []
        return [Evaluation((n, k), info.report.sigma2, _call(bound_id, n=n, k=k))]

    return ev


def _ev_dom_matching(info: GraphInfo) -> list[Evaluation]:
    n, k = info.n, info.matching
    if not 2 <= k < n // 2:
        return []
    return [Evaluation((n, k), info.dominating, _call("lemma_dominating_le_matching", n=n, k=k))]


def _ev_matching01(bound_id: str) -> Callable[[GraphInfo], list[Evaluation]]:
    def ev(info: GraphInfo) -> list[Evaluation]:
        n, k = info.n, info.matching
        rep = _call(bound_id, i=0, n=n, k=k)
        if not rep.applicable:
            return []
        return [Evaluation((n, k, i), info.report.value(i), _call(bound_id, i=i, n=n, k=k)) for i in (0, 1)]

    return ev


def _ev_tree_matching(info: GraphInfo) -> list[Evaluation]:
    n, k = info.n, info.matching
    if not 2 <= k <= n // 2:
        return []
    target = n - 1 if k == n // 2 else 2 * k
    expect = info.diameter == target and is_double_broom(info.graph, target)
    return [
        Evaluation((n, k, i), info.report.value(i), _call("thm_matching_upper", i=i, n=n, k=k), expect) for i in (0, 1)
    ]


def _ev_matching2(info: GraphInfo) -> list[Evaluation]:
    n, k = info.n, info.matching
    if not 2 <= k <= n // 2:
        return []
    return [Evaluation((n, k), info.report.sigma2, _call("thm_sigma2_matching_lower", n=n, k=k))]


def _always(cell: Cell) -> str:
    return "assert"


CHECKS: dict[str, Check] = {
    c.bound_id: c
    for c in [
        Check("obs_sandwich", "n r^p <= sigma_i <= n d^p style bounds; tight iff self-centered", _ev_sandwich,
              n_min=1, constant=False),
        Check("lemma_tree_max", "tree maximum f_i(n,d); tight exactly on double-brooms", _ev_tree_max,
              trees_only=True, n_default=8),
        Check("lemma_diam_gt_half", "d > n/2 forces sigma0 < d and sigma1 < n d^2", _ev_diam_gt_half, n_default=7),
        Check("lemma_ore_max_edges", "edge maximum at diameter d and its extremal graphs", _ev_ore,
              uniqueness=_always),
        Check("thm_sigma2_diam_upper_coarse", "sigma2 <= edge maximum times d^2", _ev_coarse),
        Check("thm_sigma2_diam_max", "largest sigma2 at diameter d >= 3 is a kite", _ev_diam_max,
              n_default=7, uniqueness=lambda cell: "report"),
        Check("prop_sigma01_diam_lower", "sigma0 / sigma1 lower bounds at diameter d", _ev_sigma01_lower),
        Check("thm_sigma2_nmd_lower", "sigma2 lower bound at n, m, d", _ev_nmd, n_default=7),
        Check("cor_sigma2_diam_lower", "sigma2 lower bound at n, d", _ev_diam_lower, n_default=7),
        Check("obs_dominating_lower", "dominating-vertex lower bounds; tight iff diameter <= 2", _ev_dominating),
        Check("thm_chromatic_lower", "sigma0 / sigma1 lower bounds at chromatic number k",
              _ev_chi01("thm_chromatic_lower", "chromatic"), uniqueness=_always),
        Check("thm_clique_lower", "sigma0 / sigma1 lower bounds at clique number k",
              _ev_chi01("thm_clique_lower", "clique"), uniqueness=_always),
        Check("thm_chromatic_upper", "sigma0 / sigma1 upper bounds at chromatic number k",
              _ev_chi01("thm_chromatic_upper", "chromatic")),
        Check("thm_clique_upper", "sigma0 / sigma1 upper bounds at clique number k",
              _ev_chi01("thm_clique_upper", "clique")),
        Check("lemma_min_edges_chi", "edge minimum at chromatic / clique number k", _ev_min_edges),
        Check("thm_sigma2_chromatic_lower", "three-regime sigma2 lower bound at chromatic number k",
              _ev_chi2("thm_sigma2_chromatic_lower", "chromatic"), n_default=7, uniqueness=_always),
        Check("thm_sigma2_clique_lower", "three-regime sigma2 lower bound at clique number k",
              _ev_chi2("thm_sigma2_clique_lower", "clique"), n_default=7, uniqueness=_always),
        Check("lemma_dominating_le_matching", "at most k dominating vertices when k < n/2", _ev_dom_matching,
              n_default=7),
        Check("prop_matching_lower", "sigma0 / sigma1 lower bounds at matching number k",
              _ev_matching01("prop_matching_lower"), n_default=7, uniqueness=_always),
        Check("thm_matching_upper", "sigma0 / sigma1 upper bounds at matching number k",
              _ev_matching01("thm_matching_upper"), n_default=7,
              uniqueness=lambda cell: "assert" if cell[1] == cell[0] // 2 else None),
        Check("lemma_tree_matching_upper", "tree version of the matching upper bound; tight exactly on brooms",
              _ev_tree_matching, trees_only=True, n_default=8),
        Check("thm_sigma2_matching_lower", "sigma2 lower bound at matching number k", _ev_matching2,
              n_default=7, uniqueness=_always),
    ]
}


# -- runs ---------------------------------------------------------------------


@dataclass
class VerificationRun:
    bound_id: str
    n_range: tuple[int, int]
    mode: str
    jobs: int
    graphs_checked: int
    evaluations: int
    violations: list[dict]
    violation_count: int
    sharp_witnesses: list[str]
    sharpness_failures: list[dict]
    uniqueness_ok: bool
    uniqueness_mismatches: list[dict]
    uniqueness_notes: list[dict]
    iff_ok: bool
    iff_mismatches: list[dict]
    cells: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    @property
    def fully_verified(self) -> bool:
        return self.ok and not self.sharpness_failures and self.uniqueness_ok and self.iff_ok


def _labeled_parts(n: int, jobs: int) -> int:
    nbits = n * (n - 1) // 2
    parts = 1
    while parts < 4 * jobs and (parts << 1).bit_length() - 1 <= nbits:
        parts <<= 1
    return parts


def _run_shard(args) -> tuple[int, dict[Cell, CellStats]]:
    bound_id, n, mode, shard, texts = args
    check = CHECKS[bound_id]
    table: dict[Cell, CellStats] = {}
    graphs = 0
    if mode == "trees":
        index, parts = shard
        source = (GraphInfo(g) for j, g in enumerate(enumerate_trees(n)) if j % parts == index)
    elif mode == "iso":
        from . import graph6

        source = (GraphInfo(graph6.decode(t), canonical=t) for t in texts)
    else:
        source = iter_infos(n, iso_reduce=False, shard=shard)
    for info in source:
        graphs += 1
        for ev in check.evaluate(info):
            if ev.report.applicable:
                _record(table, info, ev, check.constant)
    return graphs, table


def sweep(
    bound_id: str,
    n: int,
    iso_reduce: bool = False,
    parts: int = 1,
    jobs: int = 1,
) -> tuple[int, dict[Cell, CellStats]]:
    """Run one check over all graphs of order ``n`` split into ``parts`` shards."""
    check = CHECKS[bound_id]
    if check.trees_only:
        if n > TREE_MAX_N:
            raise GraphError(f"tree enumeration is limited to n <= {TREE_MAX_N}")
        tasks = [(bound_id, n, "trees", (i, parts), None) for i in range(parts)]
    elif iso_reduce:
        texts = connected_classes(n)
        tasks = [(bound_id, n, "iso", (i, parts), texts[i::parts]) for i in range(parts)]
    else:
        if n > LABELED_MAX_N:
            raise GraphError(f"labeled enumeration is limited to n <= {LABELED_MAX_N}")
        if parts & (parts - 1):
            raise ValueError("labeled sweeps need a power-of-two shard count")
        tasks = [(bound_id, n, "labeled", (i, parts), None) for i in range(parts)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_shard, tasks))
    else:
        results = [_run_shard(t) for t in tasks]
    return sum(r[0] for r in results), merge_tables(r[1] for r in results)


@lru_cache(maxsize=None)
def _spec_canonical(text: str) -> str:
    from .constructions import build

    return canonical_graph6(build(text).graph)


def _fmt_cell(cell: Cell) -> list:
    return list(cell)


def summarize(
    bound_id: str,
    table: dict[Cell, CellStats],
    graphs: int,
    n_range: tuple[int, int],
    mode: str,
    jobs: int,
    wall: float,
) -> VerificationRun:
    check = CHECKS[bound_id]
    violations, sharp_failures, witnesses = [], [], []
    uniq_bad, uniq_notes, iff_bad, rows = [], [], [], []
    evaluations = 0
    for cell in sorted(table):
        st = table[cell]
        evaluations += st.count
        for canon, obs, bound in st.violations:
            violations.append({"cell": _fmt_cell(cell), "graph6": canon, "observed": obs, "bound": bound})
        for canon, obs, expected in st.iff_mismatches:
            iff_bad.append({"cell": _fmt_cell(cell), "graph6": canon, "observed": obs, "expected_equal": expected})
        if st.achievers:
            witnesses.append(min(st.achievers))
        elif check.constant and st.sharp:
            sharp_failures.append({"cell": _fmt_cell(cell), "bound": st.bound, "extreme": st.extreme})
        policy = check.uniqueness(cell) if check.constant else None
        if policy and st.extremal:
            expected = {_spec_canonical(s) for s in st.extremal}
            if expected != set(st.achievers):
                entry = {
                    "cell": _fmt_cell(cell),
                    "missing": sorted(expected - st.achievers),
                    "unexpected": sorted(st.achievers - expected),
                }
                (uniq_bad if policy == "assert" else uniq_notes).append(entry)
        rows.append(
            {
                "cell": _fmt_cell(cell),
                "count": st.count,
                "direction": st.direction,
                "bound": st.bound,
                "extreme": st.extreme,
                "witness": min(st.extreme_witnesses) if st.extreme_witnesses else None,
                "achievers": len(st.achievers),
                "exceptional": st.exceptional,
                "violations": st.violation_count,
            }
        )
    violation_count = sum(st.violation_count for st in table.values())
    return VerificationRun(
        bound_id=bound_id,
        n_range=n_range,
        mode=mode,
        jobs=jobs,
        graphs_checked=graphs,
        evaluations=evaluations,
        violations=violations,
        violation_count=violation_count,
        sharp_witnesses=witnesses,
        sharpness_failures=sharp_failures,
        uniqueness_ok=not uniq_bad,
        uniqueness_mismatches=uniq_bad,
        uniqueness_notes=uniq_notes,
        iff_ok=not iff_bad,
        iff_mismatches=iff_bad,
        cells=rows,
        wall_time=wall,
    )


def verify_bound(
    bound_id: str,
    n_max: int | None = None,
    n_min: int | None = None,
    iso_reduce: bool = False,
    jobs: int = 1,
    parts: int | None = None,
) -> VerificationRun:
    """Check ``bound_id`` on every connected graph (or tree) with n_min <= n <= n_max."""
    if bound_id not in CHECKS:
        raise KeyError(f"unknown bound id {bound_id!r}; known: {', '.join(sorted(CHECKS))}")
    check = CHECKS[bound_id]
    lo = check.n_min if n_min is None else max(n_min, check.n_min)
    hi = check.n_default if n_max is None else n_max
    cap = TREE_MAX_N if check.trees_only else (ISO_MAX_N if iso_reduce else LABELED_MAX_N)
    if hi > cap:
        raise GraphError(f"{bound_id}: n_max={hi} exceeds the enumeration budget {cap}")
    start = time.perf_counter()
    total = 0
    table: dict[Cell, CellStats] = {}
    for n in range(lo, hi + 1):
        if parts is not None:
            p = parts
        elif check.trees_only or iso_reduce:
            p = max(1, 4 * jobs) if jobs > 1 else 1
        else:
            p = _labeled_parts(n, jobs) if jobs > 1 else 1
        count, t = sweep(bound_id, n, iso_reduce=iso_reduce, parts=p, jobs=jobs)
        total += count
        table = merge_tables([table, t])
    mode = "trees" if check.trees_only else ("iso" if iso_reduce else "labeled")
    return summarize(bound_id, table, total, (lo, hi), mode, jobs, time.perf_counter() - start)
