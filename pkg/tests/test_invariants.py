import pytest
from hypothesis import given

import oracles
from strategies import connected_graphs
from eccbounds.constructions import (
    complete,
    copies,
    cycle,
    disjoint_union,
    empty,
    join,
    match_clique_tail,
    path,
    star,
    turan,
)
from eccbounds.enumeration import iter_infos, labeled_connected
from eccbounds.graph import GraphError, from_edge_list
from eccbounds.invariants import (
    CHROMATIC_MAX_N,
    InvariantSet,
    chromatic_number,
    clique_number,
    dominating_count,
    invariants,
    matching_number,
)


def test_chromatic_examples():
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(complete(4)) == 4
    assert chromatic_number(path(4)) == 2
    assert chromatic_number(from_edge_list(1, [])) == 1
    assert chromatic_number(empty(3)) == 1


def test_clique_examples():
    assert clique_number(turan(6, 3)) == 3
    assert clique_number(star(6)) == 2
    assert clique_number(complete(5)) == 5


def test_matching_examples():
    assert matching_number(cycle(5)) == 2
    assert matching_number(path(6)) == 3
    assert matching_number(match_clique_tail(8, 3, 4).graph) == 3


def test_dominating_examples():
    assert dominating_count(join(complete(1), empty(4))) == 1
    assert dominating_count(complete(5)) == 5
    assert dominating_count(path(4)) == 0


NON_BIPARTITE = [
    ("triangle", complete(3), 1),
    ("C5", cycle(5), 2),
    ("C7", cycle(7), 3),
    ("two triangles joined by an edge", from_edge_list(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]), 3),
    ("bowtie", from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]), 2),
    ("petersen", from_edge_list(10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                                 + [(i, i + 5) for i in range(5)]), 5),
    ("K7", complete(7), 3),
    ("triangle with a pendant path", from_edge_list(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]), 3),
    ("blossom needing contraction", from_edge_list(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 6), (6, 7)]), 4),
    ("3 disjoint C5", copies(3, cycle(5)), 6),
    ("C9 plus chord", from_edge_list(9, [(i, (i + 1) % 9) for i in range(9)] + [(0, 4)]), 4),
]


@pytest.mark.parametrize("name, g, expected", NON_BIPARTITE, ids=[x[0] for x in NON_BIPARTITE])
def test_matching_non_bipartite_battery(name, g, expected):
    assert matching_number(g) == expected
    assert oracles.matching_nx(g.n, g.edges()) == expected


def test_budgets():
    with pytest.raises(GraphError):
        chromatic_number(path(CHROMATIC_MAX_N + 1))
    with pytest.raises(GraphError):
        clique_number(path(33))
    with pytest.raises(GraphError):
        matching_number(path(33))
    assert dominating_count(path(64)) == 0


def test_invariant_set_fields():
    inv = invariants(cycle(5))
    assert inv == InvariantSet(chromatic=3, clique=2, matching=2, dominating=0)


def test_against_brute_force_up_to_six():
    for n in range(1, 7):
        for g in labeled_connected(n):
            e = g.edges()
            assert chromatic_number(g) == oracles.chromatic(n, e)
            assert clique_number(g) == oracles.clique(n, e)
            assert matching_number(g) == oracles.matching_exhaustive(e)
            assert dominating_count(g) == oracles.dominating(n, e)


def test_class_level_relations_up_to_seven():
    for n in range(2, 8):
        for info in iter_infos(n, iso_reduce=True):
            k, w, a, s = info.chromatic, info.clique, info.matching, info.dominating
            assert w <= k <= n
            assert 1 <= a <= n // 2
            assert (s == n) == (info.m == n * (n - 1) // 2)
            for param in (k, w):
                assert info.m >= param * (param - 1) // 2 + n - param
            if a < n // 2:
                assert s <= a


@given(connected_graphs(max_n=12))
def test_matching_matches_networkx(g):
    assert matching_number(g) == oracles.matching_nx(g.n, g.edges())


@given(connected_graphs(max_n=9))
def test_chromatic_and_clique_match_oracles(g):
    e = g.edges()
    assert chromatic_number(g) == oracles.chromatic(g.n, e)
    assert clique_number(g) == oracles.clique(g.n, e)


def test_disconnected_inputs_are_fine():
    g = disjoint_union(complete(3), cycle(5))
    assert (chromatic_number(g), clique_number(g), matching_number(g)) == (3, 3, 3)
