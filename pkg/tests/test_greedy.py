import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tdf.decomposition import Ordering, build_from_ordering, verify_decomposition
from tdf.graph import Graph, complete_graph, grid_graph, path_graph, random_graph, star_graph
from tdf.greedy import (
    DEFAULT_PARAMS,
    ScoreParams,
    greedy_build,
    greedy_build_lookahead,
    greedy_eliminate,
    greedy_superfast,
)

from .helpers import graphs, graphs_with_ordering

HEAP_VARIANTS = [
    greedy_eliminate,
    greedy_build,
    lambda g, params=DEFAULT_PARAMS, init=None, bad_cutoff=None: greedy_build_lookahead(g, params, init, 1024, bad_cutoff),
]


def test_score_params():
    assert str(ScoreParams()) == "<1,9,0>"
    assert tuple(ScoreParams(1, 4, 2)) == (1, 4, 2)
    with pytest.raises(ValueError):
        ScoreParams(-1, 0, 0)


@pytest.mark.parametrize("variant", HEAP_VARIANTS)
def test_star_puts_center_on_top(variant):
    res = variant(star_graph(3), ScoreParams(1, 9, 0))
    assert res.depth == 2
    assert res.decomposition.roots == [0]


@pytest.mark.parametrize("variant", HEAP_VARIANTS)
def test_clique_is_a_chain(variant):
    assert variant(complete_graph(4), ScoreParams(0, 1, 3)).depth == 4


def test_path_values():
    # frozen regression values; both equal the exact treedepth
    assert greedy_eliminate(path_graph(7)).depth == 3
    assert greedy_build_lookahead(path_graph(15), ell=1024).depth == 4


def test_edgeless_build():
    res = greedy_build(Graph.from_edges(5, []))
    assert res.depth == 1
    assert len(res.decomposition.roots) == 5


def test_superfast_examples():
    d = greedy_superfast(path_graph(3), 2, Ordering.from_seq([1, 0, 2])).decomposition
    assert d.depth == 2
    for ell in (1, 2, 64):
        assert greedy_superfast(complete_graph(4), ell).depth == 4


@settings(max_examples=100)
@given(graphs_with_ordering(max_n=14))
def test_superfast_window_one_is_plain_building(case):
    g, order = case
    assert greedy_superfast(g, 1, order).decomposition == build_from_ordering(g, order)


@settings(max_examples=100)
@given(graphs(max_n=14), st.integers(1, 20))
def test_superfast_ordering_builds_same_tree(g, ell):
    res = greedy_superfast(g, ell)
    assert build_from_ordering(g, res.ordering) == res.decomposition
    assert verify_decomposition(g, res.decomposition) is None


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=14), st.sampled_from([ScoreParams(1, 9, 0), ScoreParams(0, 1, 0), ScoreParams(1, 1, 2)]))
def test_heap_variants_valid(g, params):
    init = [v % 3 for v in range(g.n)]
    for variant in HEAP_VARIANTS:
        res = variant(g, params, init)
        assert verify_decomposition(g, res.decomposition) is None
        assert build_from_ordering(g, res.ordering) == res.decomposition


def test_validity_on_larger_random_graphs():
    rng = random.Random(7)
    for n in (200, 1000):
        g = random_graph(n, rng.randint(n, 4 * n), rng.randrange(2**32))
        for res in (greedy_eliminate(g), greedy_build(g), greedy_build_lookahead(g), greedy_superfast(g)):
            assert verify_decomposition(g, res.decomposition) is None


@settings(max_examples=100)
@given(graphs(max_n=14))
def test_build_and_lookahead_never_grow_retained_sets(g):
    for res in (greedy_build(g), greedy_build_lookahead(g, ell=4)):
        assert res.stats["peak_retained"] <= res.stats["initial_retained"]


@settings(max_examples=100)
@given(graphs(max_n=14))
def test_eliminate_pop_stats_bound_depth(g):
    res = greedy_eliminate(g)
    depths = res.decomposition.depths()
    heights = res.decomposition.heights()
    for v in range(g.n):
        # the popped neighbourhood becomes ancestors, the height is a lower bound
        assert res.stats["pop_height"][v] <= heights[v]
        assert res.stats["pop_degree"][v] <= depths[v] - 1


@settings(max_examples=100)
@given(graphs(min_n=1, max_n=12))
def test_bad_cutoff_semantics(g):
    for variant in HEAP_VARIANTS:
        full = variant(g)
        assert variant(g, bad_cutoff=full.depth + 1).depth == full.depth
        # abandoned runs are allowed only when the cutoff is not beaten
        res = variant(g, bad_cutoff=full.depth)
        assert res is None or res.depth < full.depth


def test_cutoff_abandons_clique():
    assert greedy_eliminate(complete_graph(6), bad_cutoff=6) is None
    assert greedy_build(complete_graph(6), bad_cutoff=5) is None
    assert greedy_build_lookahead(complete_graph(6), bad_cutoff=3) is None


def test_lookahead_counts_reevaluations():
    res = greedy_build_lookahead(grid_graph(4, 4), ell=3)
    assert res.stats["reevaluations"] >= 16


def test_invalid_window():
    with pytest.raises(ValueError):
        greedy_superfast(path_graph(3), 0)
    with pytest.raises(ValueError):
        greedy_build_lookahead(path_graph(3), ell=0)
    with pytest.raises(ValueError):
        greedy_eliminate(path_graph(3), init_score=[0])
