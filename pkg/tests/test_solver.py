import random

import pytest
from hypothesis import given, settings

from tdf.decomposition import verify_decomposition
from tdf.flowcutter import CutResult
from tdf.graph import Graph, complete_graph, cycle_graph, grid_graph, path_graph, random_graph, star_graph
from tdf.greedy import ScoreParams
from tdf.solver import (
    Budget,
    Cutoffs,
    Incumbent,
    Solver,
    SolverConfig,
    parameter_sweep,
    solve,
    trivial_decomposition,
)

from .helpers import graphs, two_triangles


def test_parameter_sweep_rounds():
    assert parameter_sweep(0) == [ScoreParams(1, 9, 0)]
    assert parameter_sweep(1) == parameter_sweep(0) + [ScoreParams(1, 4, 0), ScoreParams(1, 1, 0), ScoreParams(0, 1, 0)]
    assert parameter_sweep(2) == parameter_sweep(1) + [ScoreParams(1, 9, 1), ScoreParams(1, 4, 2)]
    later = parameter_sweep(8)
    assert later[:len(parameter_sweep(7))] == parameter_sweep(7)
    assert len(set(later)) == len(later)
    with pytest.raises(ValueError):
        parameter_sweep(-1)


def test_cutoffs():
    with pytest.raises(ValueError):
        Cutoffs(bad=3, good=3)
    c = Cutoffs(bad=10, good=6).shifted(4)
    assert (c.bad, c.good) == (6, 2)
    c = Cutoffs(bad=5, good=4).shifted(2)
    assert c.good < c.bad
    assert Cutoffs().shifted(3) == Cutoffs()


def test_incumbent_keeps_shallowest():
    inc = Incumbent()
    assert inc.decomposition is None and inc.depth is None
    deep = trivial_decomposition(path_graph(7))
    assert inc.offer(deep)
    shallow = solve(path_graph(7))
    assert inc.offer(shallow)
    assert not inc.offer(deep)
    assert inc.depth == 3


def cut_of(cut, small, large):
    return CutResult(tuple(cut), tuple(small), tuple(large))


@pytest.mark.parametrize("g, cut, depth", [
    (path_graph(5), cut_of([2], [0, 1], [3, 4]), 3),
    (star_graph(3), cut_of([0], [1], [2, 3]), 2),
    (cycle_graph(6), cut_of([0, 3], [1, 2], [4, 5]), 4),
])
def test_split_on_cut_examples(g, cut, depth):
    d = Solver(g).split_on_cut(g, cut)
    assert d.depth == depth
    assert verify_decomposition(g, d) is None
    # cut vertices form a line above everything else
    line = [v for v in range(g.n) if v in cut.cut]
    assert all(len(d.ancestors(v)) < len(cut.cut) for v in line)


def test_split_on_cut_respects_bad_cutoff():
    g = path_graph(5)
    s = Solver(g)
    assert s.split_on_cut(g, cut_of([2], [0, 1], [3, 4]), Cutoffs(bad=3)) is None
    assert s.split_on_cut(g, cut_of([2], [0, 1], [3, 4]), Cutoffs(bad=4)).depth == 3


def test_decompose_prunes_by_lower_bound():
    g = complete_graph(6)
    s = Solver(g)
    assert s.decompose(g, Cutoffs(bad=6), 0) is None
    assert s.decompose(g, Cutoffs(bad=7), 0).depth == 6


@pytest.mark.parametrize("g, depth", [
    (complete_graph(10), 10),
    (path_graph(63), 6),
    (two_triangles(), 4),
    (cycle_graph(6), 4),
    (star_graph(5), 2),
])
def test_solve_pinned(g, depth):
    d = solve(g, Budget(10, seed=0))
    assert d.depth == depth
    assert verify_decomposition(g, d) is None


def test_solve_disconnected_and_empty():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (4, 5)])
    d = solve(g, Budget(5))
    assert verify_decomposition(g, d) is None
    assert d.depth == 2
    assert solve(Graph.from_edges(0, [])).depth == 0


def test_solve_improves_on_superfast_for_grid():
    g = grid_graph(6, 6)
    cfg = SolverConfig(max_rounds=2)
    d = solve(g, Budget(20, seed=1), cfg)
    assert verify_decomposition(g, d) is None
    assert d.depth <= 12
    assert cfg.stats["lower_bounds"]


def test_incumbent_tracks_result():
    g = random_graph(60, 150, seed=4)
    inc = Incumbent()
    d = solve(g, Budget(3, seed=2), incumbent=inc)
    assert inc.decomposition is d
    assert verify_decomposition(g, d) is None


def test_seed_makes_runs_repeatable():
    g = random_graph(40, 90, seed=11)
    cfg = dict(max_rounds=2)
    a = solve(g, Budget(None, seed=3), SolverConfig(**cfg))
    b = solve(g, Budget(None, seed=3), SolverConfig(**cfg))
    assert a == b


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=11))
def test_solve_always_valid(g):
    d = solve(g, Budget(2, seed=0), SolverConfig(max_rounds=2))
    assert verify_decomposition(g, d) is None


def test_split_depth_arithmetic_on_random_cuts():
    rng = random.Random(5)
    for _ in range(20):
        g = random_graph(30, rng.randint(30, 60), rng.randrange(2**32))
        s = Solver(g, Budget(None, seed=1))
        s.pairs = 5
        cut = s.find_cut(g, 0.2)
        if cut is None:
            continue
        d = s.split_on_cut(g, cut)
        assert verify_decomposition(g, d) is None
        below = [v for v in range(g.n) if v not in cut.cut]
        depths = d.depths()
        assert d.depth == max([len(cut.cut)] + [depths[v] for v in below])
