import itertools
import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from strategies import connected_graphs
from eccbounds import graph6
from eccbounds.enumeration import (
    LABELED_MAX_N,
    TREE_MAX_N,
    GraphInfo,
    brute_force_canonical_code,
    canonical_form,
    canonical_graph6,
    connected_classes,
    enumerate_connected,
    enumerate_trees,
    iter_infos,
    labeled_connected,
    prufer_decode,
)
from eccbounds.graph import GraphError, ecc_profile

# connected graphs on n unlabeled vertices, n = 1..8
CONNECTED_CLASSES = [1, 1, 2, 6, 21, 112, 853, 11117]
# connected labeled graphs, n = 1..6
CONNECTED_LABELED = [1, 1, 4, 38, 728, 26704]


def _nx_connected_classes_by_n():
    counts = Counter()
    for h in nx.graph_atlas_g()[1:]:
        if nx.is_connected(h):
            counts[h.number_of_nodes()] += 1
    return counts


@pytest.mark.parametrize("n", range(1, 7))
def test_labeled_counts(n):
    assert sum(1 for _ in labeled_connected(n)) == CONNECTED_LABELED[n - 1]


def test_labeled_counts_match_naive_enumerator():
    for n in range(1, 5):
        ours = sorted(tuple(g.edges()) for g in labeled_connected(n))
        ref = sorted(tuple(e) for e in oracles.all_labeled_connected(n))
        assert ours == ref


def test_n3_example():
    graphs = list(labeled_connected(3))
    assert len(graphs) == 4
    assert sorted(g.m for g in graphs) == [2, 2, 2, 3]
    assert len(connected_classes(3)) == 2


def test_class_counts_match_atlas():
    atlas = _nx_connected_classes_by_n()
    for n in range(1, 8):
        assert len(connected_classes(n)) == atlas[n] == CONNECTED_CLASSES[n - 1]


def test_class_count_n8():
    assert len(connected_classes(8)) == CONNECTED_CLASSES[7]


def test_classes_are_pairwise_non_isomorphic_up_to_six():
    for n in range(2, 7):
        graphs = [oracles.nx_from_graph6(t) for t in connected_classes(n)]
        for a, b in itertools.combinations(graphs, 2):
            if a.number_of_edges() == b.number_of_edges():
                assert not nx.is_isomorphic(a, b)


def test_classes_are_canonical_and_sorted():
    for n in range(1, 8):
        texts = connected_classes(n)
        assert list(texts) == sorted(set(texts))
        assert all(canonical_graph6(graph6.decode(t)) == t for t in texts)


def test_labeled_graphs_collapse_to_classes():
    for n in range(1, 6):
        seen = {canonical_graph6(g) for g in labeled_connected(n)}
        assert seen == set(connected_classes(n))


def test_canonical_vs_brute_force_up_to_five():
    # both are complete invariants, so they must induce the same partition
    for n in range(1, 6):
        by_canon, by_brute = {}, {}
        for g in labeled_connected(n):
            by_canon.setdefault(canonical_graph6(g), set()).add(g.adj)
            by_brute.setdefault(brute_force_canonical_code(g), set()).add(g.adj)
            assert graph6.decode(canonical_graph6(g)) == canonical_form(g)
        parts = lambda d: sorted(sorted(v) for v in d.values())
        assert parts(by_canon) == parts(by_brute)
        assert len(by_canon) == CONNECTED_CLASSES[n - 1]


@given(connected_graphs(max_n=10), st.randoms(use_true_random=False))
def test_canonical_form_is_relabel_invariant(g, rnd: random.Random):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_graph6(g.relabel(perm)) == canonical_graph6(g)
    assert nx.is_isomorphic(oracles.to_nx(canonical_form(g)), oracles.to_nx(g))


def test_canonical_separates_cospectral_like_pairs():
    # same degree sequence, different graphs
    from eccbounds.graph import from_edge_list

    c6 = from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])
    two_triangles = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_graph6(c6) != canonical_graph6(two_triangles)


@pytest.mark.parametrize("n, count", [(2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)])
def test_tree_counts(n, count):
    trees = list(enumerate_trees(n))
    assert len(trees) == count
    assert all(t.is_tree() for t in trees)
    assert len({t.adj for t in trees}) == count


def test_five_vertex_stars():
    assert sum(1 for t in enumerate_trees(5) if ecc_profile(t).diameter == 2) == 5


def test_prufer_decode_example():
    t = prufer_decode(6, [3, 3, 3, 4])
    assert t.edges() == [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]


def test_budgets():
    with pytest.raises(GraphError):
        list(enumerate_trees(TREE_MAX_N + 1))
    with pytest.raises(GraphError):
        list(labeled_connected(LABELED_MAX_N + 1))


def test_filter_contract():
    out = list(enumerate_connected(5, filter=lambda info: info.diameter == 2))
    assert out and all(ecc_profile(g).diameter == 2 for g in out)
    iso = list(enumerate_connected(5, filter=lambda info: info.diameter == 2, iso_reduce=True))
    assert len(iso) == len({canonical_graph6(g) for g in out})


@pytest.mark.parametrize("parts", [2, 4, 8])
def test_labeled_shards_partition(parts):
    whole = sorted(g.adj for g in labeled_connected(5))
    pieces = [g.adj for i in range(parts) for g in labeled_connected(5, (i, parts))]
    assert sorted(pieces) == whole


def test_graph_info_fields():
    info = GraphInfo(graph6.decode("Bw"))
    assert (info.n, info.m, info.diameter, info.radius) == (3, 3, 1, 1)
    assert (info.chromatic, info.clique, info.matching, info.dominating) == (3, 3, 1, 3)
    assert info.value("sigma2") == 3 and info.value("m") == 3
    with pytest.raises(ValueError):
        info.value("girth")


def test_iter_infos_iso_has_canonical_labels():
    for info in iter_infos(5, iso_reduce=True):
        assert info.canonical == canonical_graph6(info.graph)
