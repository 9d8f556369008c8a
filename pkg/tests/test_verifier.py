from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eccbounds.graph import GraphError
from eccbounds.verifier import CHECKS, CellStats, _run_shard, merge_cells, merge_tables, sweep, verify_bound


def _comparable(table):
    return {cell: vars(st) for cell, st in table.items()}


def _run_signature(run):
    return (run.graphs_checked, run.evaluations, run.violation_count, run.cells, run.sharp_witnesses,
            run.sharpness_failures, run.uniqueness_mismatches, run.iff_mismatches)


@pytest.mark.parametrize("bound_id", ["thm_sigma2_nmd_lower", "obs_sandwich", "thm_sigma2_chromatic_lower"])
@pytest.mark.parametrize("parts", [2, 4, 16])
def test_labeled_partition_merge_equals_single_run(bound_id, parts):
    count1, whole = sweep(bound_id, 5, parts=1)
    count2, merged = sweep(bound_id, 5, parts=parts)
    assert count1 == count2 == 728
    assert _comparable(whole) == _comparable(merged)


@pytest.mark.parametrize("parts", [3, 7])
def test_iso_and_tree_partitions(parts):
    assert _comparable(sweep("thm_sigma2_diam_max", 6, iso_reduce=True, parts=1)[1]) == _comparable(
        sweep("thm_sigma2_diam_max", 6, iso_reduce=True, parts=parts)[1]
    )
    assert _comparable(sweep("lemma_tree_max", 6, parts=1)[1]) == _comparable(sweep("lemma_tree_max", 6, parts=parts)[1])


def test_merge_order_independent():
    shards = [_run_shard(("thm_sigma2_nmd_lower", 5, "labeled", (i, 8), None))[1] for i in range(8)]
    whole = sweep("thm_sigma2_nmd_lower", 5, parts=1)[1]
    assert _comparable(merge_tables(shards)) == _comparable(merge_tables(reversed(shards))) == _comparable(whole)


@pytest.mark.parametrize("bound_id", ["thm_sigma2_nmd_lower", "thm_sigma2_matching_lower", "obs_dominating_lower",
                                      "thm_clique_lower", "lemma_diam_gt_half"])
def test_labeled_and_iso_runs_agree(bound_id):
    a = verify_bound(bound_id, n_max=5)
    b = verify_bound(bound_id, n_max=5, iso_reduce=True)
    assert a.violation_count == b.violation_count == 0
    strip = lambda run: [{k: v for k, v in c.items() if k not in ("count", "achievers")} for c in run.cells]
    # labeled multiplicities differ; extremes, witnesses (canonical) and bounds agree
    assert strip(a) == strip(b)
    assert a.sharp_witnesses == b.sharp_witnesses
    assert a.uniqueness_ok and b.uniqueness_ok


def test_parallel_equals_serial():
    a = verify_bound("thm_sigma2_chromatic_lower", n_max=6, iso_reduce=True, jobs=1)
    b = verify_bound("thm_sigma2_chromatic_lower", n_max=6, iso_reduce=True, jobs=2)
    assert _run_signature(a) == _run_signature(b)
    c = verify_bound("obs_sandwich", n_max=5, jobs=2)
    d = verify_bound("obs_sandwich", n_max=5, jobs=1)
    assert _run_signature(c) == _run_signature(d)


def test_reproducible():
    a = verify_bound("cor_sigma2_diam_lower", n_max=6)
    b = verify_bound("cor_sigma2_diam_lower", n_max=6)
    assert _run_signature(a) == _run_signature(b)


def test_matching_lower_example():
    run = verify_bound("thm_sigma2_matching_lower", n_max=6)
    assert run.ok and run.fully_verified
    cell = next(c for c in run.cells if c["cell"] == [6, 3])
    assert cell["extreme"] == 15 and cell["achievers"] == 1 and cell["exceptional"]
    assert cell["witness"] == "E~~w"  # K_6


def test_nmd_exception_cell():
    run = verify_bound("thm_sigma2_nmd_lower", n_min=7, n_max=7, iso_reduce=True)
    assert run.ok
    cell = next(c for c in run.cells if c["cell"] == [7, 7, 4])
    assert cell["extreme"] == cell["bound"] == 57 and cell["exceptional"]


def test_tree_max_iff_small():
    run = verify_bound("lemma_tree_max", n_max=7)
    assert run.fully_verified and run.mode == "trees"
    assert run.graphs_checked == sum(n ** (n - 2) for n in range(2, 8))


def test_every_check_clean_at_small_n():
    for bid, check in CHECKS.items():
        run = verify_bound(bid, n_max=5, iso_reduce=not check.trees_only)
        assert run.fully_verified, (bid, run.violations[:2], run.sharpness_failures[:2], run.uniqueness_mismatches[:2])


def test_diam_gt_half_has_no_equality():
    run = verify_bound("lemma_diam_gt_half", n_max=7, iso_reduce=True)
    assert run.ok and not run.sharp_witnesses


def test_errors():
    with pytest.raises(KeyError):
        verify_bound("no_such_bound")
    with pytest.raises(GraphError):
        verify_bound("obs_sandwich", n_max=9)
    with pytest.raises(GraphError):
        verify_bound("lemma_tree_max", n_max=11)
    with pytest.raises(ValueError):
        sweep("obs_sandwich", 5, parts=3)


cell_stats = st.builds(
    lambda count, extreme, wits, ach, vc: CellStats(
        count=count, bound=Fraction(10), direction="LOWER", sharp=True, extreme=extreme,
        extreme_witnesses=frozenset(wits), achievers=frozenset(ach), violation_count=vc,
    ),
    st.integers(1, 50),
    st.integers(5, 15),
    st.sets(st.sampled_from("abcdef"), min_size=1, max_size=3),
    st.sets(st.sampled_from("abcdef"), max_size=3),
    st.integers(0, 3),
)


@given(cell_stats, cell_stats, cell_stats)
def test_merge_cells_is_a_commutative_monoid(a, b, c):
    assert merge_cells(a, b) == merge_cells(b, a)
    assert merge_cells(merge_cells(a, b), c) == merge_cells(a, merge_cells(b, c))
    assert merge_cells(CellStats(), a) == a == merge_cells(a, CellStats())
    m = merge_cells(a, b)
    assert m.count == a.count + b.count and m.extreme == min(a.extreme, b.extreme)
