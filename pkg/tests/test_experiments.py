import math

import pytest

import oracles
from eccbounds.constructions import near_perfect_matching_complement, path
from eccbounds.enumeration import canonical_graph6, connected_classes
from eccbounds.experiments import (
    ALPHA_LIMIT,
    CYCLE_LIKE,
    KITE,
    TREE,
    compare_tree_vs_cycletail,
    scan_sigma2_max,
    scan_threshold_dn,
    sigma2_max_construction,
)
from eccbounds.graph import GraphError
from eccbounds.metrics import tree_max_bound


def _row(rows, **point):
    return next(r for r in rows if all(dict(r.point)[k] == v for k, v in point.items()))


def test_dn_rows_n6():
    rows, threshold = scan_threshold_dn(6)
    r = _row(rows, d=3, i=1)
    assert r.best_value == 54 == 6 * 9
    assert r.best_value > tree_max_bound(1, 6, 3) == 44
    assert r.argmax_class == CYCLE_LIKE and not r.extra["tree_optimal"]
    assert threshold["sigma1"] == 3 and threshold["combined"] >= threshold["sigma0"]


def test_dn_path_row():
    rows, _ = scan_threshold_dn(7)
    r = _row(rows, d=6, i=0)
    assert r.argmax_class == TREE and r.extra["maximizers"] == 1
    assert r.witness == canonical_graph6(path(7))
    assert _row(rows, d=4, i=1).witness


def test_dn_against_independent_scan():
    # networkx recomputation of the per-diameter maxima
    n = 6
    best = {}
    for text in connected_classes(n):
        _, _, d, s0, s1, _ = oracles.nx_indices(oracles.nx_from_graph6(text))
        b0, b1 = best.get(d, (0, 0))
        best[d] = (max(b0, s0), max(b1, s1))
    rows, _ = scan_threshold_dn(n)
    for d in range(2, n):
        assert _row(rows, d=d, i=0).best_value == best[d][0]
        assert _row(rows, d=d, i=1).best_value == best[d][1]


def test_dn_budget():
    with pytest.raises(GraphError):
        scan_threshold_dn(9)


def test_cycletail_rows():
    rows, alpha = compare_tree_vs_cycletail([8])
    r2 = next(r for r in rows if r.r == 2)
    assert (r2.h_bfs, r2.h_formula, r2.tree_value) == (31, 31, 34)
    assert r2.diff < 0
    r0 = next(r for r in rows if r.r == 0)
    assert r0.h_bfs == 8 * 4 and r0.k == 4
    assert all(3 * r.r <= r.n for r in rows)


def test_cycletail_bfs_equals_formula():
    rows, _ = compare_tree_vs_cycletail(range(6, 65))
    assert rows and all(r.h_bfs == r.h_formula for r in rows)


def test_cycletail_formula_mode_skips_bfs():
    rows, alpha = compare_tree_vs_cycletail([1000], mode="formula")
    assert all(r.h_bfs is None for r in rows)
    assert abs(alpha[1000] - ALPHA_LIMIT) < 0.02
    with pytest.raises(ValueError):
        compare_tree_vs_cycletail([8], mode="fast")


def test_alpha_limit_value():
    assert math.isclose(ALPHA_LIMIT, (7 - 2 * math.sqrt(6)) / 25) and 0.084 < ALPHA_LIMIT < 0.0841


def test_sigma2max_exhaustive_vs_construction():
    for n in range(4, 8):
        ex = scan_sigma2_max(n)
        co = scan_sigma2_max(n, mode="construction")
        assert ex.best_value == co.best_value, n


def test_sigma2max_exhaustive_n4_independent():
    best = max(oracles.nx_indices(oracles.nx_from_graph6(t))[5] for t in connected_classes(4))
    row = scan_sigma2_max(4)
    assert row.best_value == best and row.witness


def test_sigma2max_construction_large_n():
    row = scan_sigma2_max(40, mode="construction")
    assert row.extra["d_star"] >= 3 and row.witness == ""
    for n in (60, 100, 200):
        value, d, fam = sigma2_max_construction(n)
        assert 0.85 <= value / (n**4 / 32) <= 1.15
        assert abs(d - (-(-n // 2) + 2)) <= 3


def test_npm_complement_value_in_scan():
    row = scan_sigma2_max(6)
    assert row.extra["d2_matching_complement"] == 4 * near_perfect_matching_complement(6).graph.m
    assert dict(map(tuple, row.extra["per_diameter"]))[2] == row.extra["d2_matching_complement"]


def test_sigma2max_mode_errors():
    with pytest.raises(ValueError):
        scan_sigma2_max(5, mode="fast")
    with pytest.raises(GraphError):
        scan_sigma2_max(9)


def test_classification_of_kites():
    row = scan_sigma2_max(7)
    assert row.argmax_class in (KITE, TREE)
