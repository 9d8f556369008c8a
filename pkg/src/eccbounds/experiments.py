"""Exploratory scans: diameter threshold for tree maxima, cycle-with-tail vs
trees, and the largest sigma2 over all diameters."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .constructions import cycle_tail, kite, kite_prime, kite_prime_sigma2, kite_sigma2, near_perfect_matching_complement
from .enumeration import ISO_MAX_N, LABELED_MAX_N, GraphInfo, canonical_graph6, iter_infos
from .graph import GraphError
from .metrics import indices, tree_max_bound

TREE = "TREE"
KITE = "KITE"
KITE_PRIME = "KITE_PRIME"
CYCLE_LIKE = "CYCLE_LIKE"
OTHER = "OTHER"

ALPHA_LIMIT = (7 - 2 * math.sqrt(6)) / 25


@dataclass(frozen=True)
class ScanRow:
    point: tuple[tuple[str, int], ...]
    best_value: Fraction | int
    argmax_class: str
    witness: str
    extra: dict = field(default_factory=dict, compare=False)


def _collect(n: int, iso_reduce: bool) -> list[GraphInfo]:
    cap = ISO_MAX_N if iso_reduce else LABELED_MAX_N
    if n > cap:
        raise GraphError(f"exhaustive scans are limited to n <= {cap}")
    return list(iter_infos(n, iso_reduce=iso_reduce))


def _classify(info: GraphInfo, n: int, d: int) -> str:
    # kites first: the path is also kite(n, n-1)
    canon = info.canonical
    if 2 <= d <= n - 1:
        if canon == canonical_graph6(kite(n, d).graph):
            return KITE
        if canon == canonical_graph6(kite_prime(n, d).graph):
            return KITE_PRIME
    if info.is_tree:
        return TREE
    if info.radius == info.diameter or info.m == info.n:
        return CYCLE_LIKE
    return OTHER


# -- least diameter above which trees are optimal ----------------------------------


def scan_threshold_dn(n: int, iso_reduce: bool = True) -> tuple[list[ScanRow], dict[str, int]]:
    """For each diameter, the largest sigma0 and sigma1 and whether trees attain it.

    A row is tree-optimal when the maximum equals the tree maximum f_i(n, d).
    Non-trees can tie with trees (kites do), so ties count as tree-optimal.
    Returns the rows and, per index, the least d0 such that every d > d0 is
    tree-optimal.
    """
    infos = _collect(n, iso_reduce)
    rows: list[ScanRow] = []
    threshold: dict[str, int] = {}
    for i in (0, 1):
        name = f"sigma{i}"
        optimal: dict[int, bool] = {}
        for d in range(2, n):
            group = [x for x in infos if x.diameter == d]
            best = max(x.report.value(i) for x in group)
            tops = sorted((x for x in group if x.report.value(i) == best), key=lambda x: x.canonical)
            tree_val = tree_max_bound(i, n, d)
            tree_opt = best == tree_val
            optimal[d] = tree_opt
            if tree_opt:
                wit = next(x for x in tops if x.is_tree)
                cls = TREE
            else:
                wit = tops[0]
                cls = _classify(wit, n, d)
            rows.append(
                ScanRow(
                    (("n", n), ("d", d), ("i", i)),
                    best,
                    cls,
                    wit.canonical,
                    {"tree_max": tree_val, "tree_optimal": tree_opt, "maximizers": len(tops),
                     "tree_maximizers": sum(1 for x in tops if x.is_tree)},
                )
            )
        # every d above the last non-optimal diameter is tree-optimal
        threshold[name] = max((d for d, ok in optimal.items() if not ok), default=1)
    threshold["combined"] = max(threshold["sigma0"], threshold["sigma1"])
    return rows, threshold


# -- cycle with a tail versus the best tree ----------------------------------------


@dataclass(frozen=True)
class CycleTailRow:
    n: int
    r: int
    k: int
    h_bfs: int | None
    h_formula: int
    tree_value: int

    @property
    def diff(self) -> int:
        return self.h_formula - self.tree_value


def compare_tree_vs_cycletail(n_list, mode: str = "bfs") -> tuple[list[CycleTailRow], dict[int, float | None]]:
    """Rows (n, r, k, n*sigma0 by BFS, by formula, n*f_0(n, n-k)).

    ``mode="bfs"`` builds each graph (n <= 64); ``mode="formula"`` only
    evaluates the closed forms.  Rows with r > n/3 are outside the formula's
    range and are skipped.  Also returns, per n, the crossover ratio r/n for
    the largest r at which the cycle-with-tail still beats the tree.
    """
    if mode not in ("bfs", "formula"):
        raise ValueError("mode must be 'bfs' or 'formula'")
    rows: list[CycleTailRow] = []
    alpha: dict[int, float | None] = {}
    for n in n_list:
        last = None
        for r in range(n % 2, n // 3 + 1, 2):
            k = (n - r) // 2
            if k < 2 or 3 * r > n:
                continue
            h_formula = n * k + 3 * (r + 1) * r // 2 - r
            d = n - k
            tree_value = n * d - d * d // 4
            assert tree_max_bound(0, n, d) * n == tree_value
            h_bfs = None
            if mode == "bfs":
                h_bfs = indices(cycle_tail(n, k).graph).ecc_sum
            rows.append(CycleTailRow(n, r, k, h_bfs, h_formula, tree_value))
            if h_formula > tree_value:
                last = r
        alpha[n] = None if last is None else last / n
    return rows, alpha


# -- largest sigma2 ------------------------------------------------------------------


def _npm_complement_sigma2(n: int) -> int:
    # K_n loses ceil(n/2) edges; every eccentricity is 2
    return 4 * (n * (n - 1) // 2 - (n + 1) // 2)


def sigma2_max_construction(n: int) -> tuple[int, int, str]:
    """(value, d*, family) maximizing sigma2 over the kite constructions and
    the diameter-2 matching complement.  Closed forms only, so any n works."""
    best = (0, 0, "")
    if n >= 4:
        best = (_npm_complement_sigma2(n), 2, "npm_complement")
    for d in range(3, n):
        a, b = kite_sigma2(n, d), kite_prime_sigma2(n, d)
        cand = (a, d, "kite") if a >= b else (b, d, "kite_prime")
        if cand[0] > best[0]:
            best = cand
    return best


def scan_sigma2_max(n: int, mode: str = "exhaustive", iso_reduce: bool = True) -> ScanRow:
    if mode == "construction":
        value, d, fam = sigma2_max_construction(n)
        ratio = value / (n**4 / 32)
        witness = ""
        if n <= 16:
            builder = {"kite": kite, "kite_prime": kite_prime}.get(fam)
            g = builder(n, d).graph if builder else near_perfect_matching_complement(n).graph
            witness = canonical_graph6(g)
        cls = {"kite": KITE, "kite_prime": KITE_PRIME}.get(fam, OTHER)
        target = -(-n // 2) + 2
        return ScanRow((("n", n),), value, cls, witness,
                       {"d_star": d, "family": fam, "ratio": ratio, "d_target": target})
    if mode != "exhaustive":
        raise ValueError("mode must be 'exhaustive' or 'construction'")
    infos = _collect(n, iso_reduce)
    best = max(x.report.sigma2 for x in infos)
    tops = sorted((x for x in infos if x.report.sigma2 == best), key=lambda x: x.canonical)
    wit = tops[0]
    per_d: dict[int, int] = {}
    for x in infos:
        per_d[x.diameter] = max(per_d.get(x.diameter, 0), x.report.sigma2)
    extra = {
        "d_star": wit.diameter,
        "maximizers": len(tops),
        "per_diameter": [[d, per_d[d]] for d in sorted(per_d)],
    }
    if n >= 4 and 2 in per_d:
        extra["d2_matching_complement"] = _npm_complement_sigma2(n)
    return ScanRow((("n", n),), best, _classify(wit, n, wit.diameter), wit.canonical, extra)
