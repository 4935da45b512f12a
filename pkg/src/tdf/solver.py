"""Divide and conquer over balanced vertex cuts, driven by greedy estimates.

The top level handles each connected component separately: a super-fast
pass gives a first decomposition, the heap-based greedy heuristics improve
it over a sweep of score weights, and then rounds of increasing cost look
for balanced cuts, place the cut vertices on a line and recurse into what
remains.  Depth thresholds travel down the recursion:

* ``bad``: give up unless the result will be strictly shallower than this;
* ``good``: stop as soon as the result is at most this deep.

The best complete decomposition of the input is kept in an
:class:`Incumbent`, which may be read at any time (for example from a
signal handler).
"""

import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .decomposition import ROOT, Decomposition, Ordering, build_from_ordering
from .flowcutter import flowcutter_run
from .graph import components, induced_subgraph, td_lower_bound
from .greedy import (
    DEFAULT_PARAMS,
    ScoreParams,
    greedy_build_lookahead,
    greedy_eliminate,
    greedy_superfast,
)

log = logging.getLogger(__name__)

_SWEEP = [
    [ScoreParams(1, 9, 0)],
    [ScoreParams(1, 4, 0), ScoreParams(1, 1, 0), ScoreParams(0, 1, 0)],
    [ScoreParams(1, 9, 1), ScoreParams(1, 4, 2)],
]


def parameter_sweep(round):
    """All score weights tried up to and including ``round``."""
    if round < 0:
        raise ValueError("round must be non-negative")
    out = []
    for r in range(round + 1):
        out.extend(_sweep_additions(r))
    return out


def _sweep_additions(r):
    if r < len(_SWEEP):
        return list(_SWEEP[r])
    # fresh weights each round: heavier height terms, with and without the prior score
    return [ScoreParams(1, 3 * r + 1, 1), ScoreParams(1, 2 * r, 0)]


@dataclass(frozen=True)
class Cutoffs:
    bad: int = None
    good: int = None

    def __post_init__(self):
        if self.bad is not None and self.good is not None and self.good >= self.bad:
            raise ValueError("good cutoff must be below the bad cutoff")

    def shifted(self, by):
        """Thresholds for a subproblem hanging ``by`` levels lower."""
        bad = None if self.bad is None else self.bad - by
        good = None if self.good is None else max(self.good - by, 0)
        if bad is not None and good is not None and good >= bad:
            good = bad - 1
        return Cutoffs(bad, good)


class Budget:
    """Wall-clock deadline, escalation round and seed."""

    def __init__(self, time_limit=None, seed=0):
        self.deadline = None if not time_limit else time.monotonic() + time_limit
        self.seed = seed
        self.round = 0

    def expired(self):
        return self.deadline is not None and time.monotonic() >= self.deadline

    def remaining(self):
        return None if self.deadline is None else self.deadline - time.monotonic()


class Incumbent:
    """Best decomposition of the whole input so far.

    Holds one immutable :class:`Decomposition`; replacing it is a single
    reference assignment, so a concurrent reader sees either the old or the
    new decomposition, never a mix.
    """

    def __init__(self):
        self._best = None

    @property
    def decomposition(self):
        return self._best

    @property
    def depth(self):
        best = self._best
        return None if best is None else best.depth

    def offer(self, d):
        best = self._best
        if best is None or d.depth < best.depth:
            self._best = d
            return True
        return False


@dataclass
class SolverConfig:
    superfast_ell: int = 64
    lookahead_ell: int = 1024
    balance_goals: tuple = (Fraction(1, 5), Fraction(1, 4), Fraction(1, 3))
    base_pairs: int = 5
    max_rounds: int = 8
    # run elimination instead of building-with-lookahead when n * depth is at most this
    eliminate_limit: int = 10**7
    # skip a subproblem whose super-fast estimate exceeds its budget by this factor
    prune_ratio: float = 1.5
    stats: dict = field(default_factory=dict)


def _chain(n):
    return Decomposition(tuple([ROOT] + list(range(n - 1))), n)


def _is_clique(g):
    return g.m == g.n * (g.n - 1) // 2


def _degree_order(g):
    """Static ordering by decreasing degree (ties by id): hubs high in the tree."""
    return Ordering.from_seq(sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v)))


class Solver:
    def __init__(self, g, budget=None, config=None, incumbent=None):
        self.g = g
        self.budget = budget or Budget()
        self.config = config or SolverConfig()
        self.incumbent = incumbent if incumbent is not None else Incumbent()
        self.rng = random.Random(self.budget.seed)
        self.level_limit = 0
        self.pairs = self.config.base_pairs

    def run(self):
        """Best decomposition of the whole graph found within the budget."""
        g = self.g
        n = g.n
        if n == 0:
            d = Decomposition((), 0)
            self.incumbent.offer(d)
            return d
        comps = components(g)
        subs = [induced_subgraph(g, c) for c in comps]
        pieces = []
        for sub, _ in subs:
            pieces.append(greedy_superfast(sub, self.config.superfast_ell, _degree_order(sub)).decomposition)
        self._publish(subs, pieces)
        log.info("super-fast: depth %d over %d component(s)", self.incumbent.depth, len(comps))

        # deepest first: the others only need to reach the sibling maximum
        order = sorted(range(len(subs)), key=lambda i: -pieces[i].depth)
        for i in order:
            if self.budget.expired():
                break
            sub, _ = subs[i]
            others = max((pieces[j].depth for j in range(len(subs)) if j != i), default=0)
            pieces[i] = self._improve_component(sub, pieces[i], others, lambda d, i=i: self._swap(subs, pieces, i, d))
        return self.incumbent.decomposition

    def _swap(self, subs, pieces, i, d):
        pieces[i] = d
        self._publish(subs, pieces)

    def _publish(self, subs, pieces):
        parent = [ROOT] * self.g.n
        for (sub, smap), piece in zip(subs, pieces):
            oo = smap.original_of
            for v, p in enumerate(piece.parent):
                parent[oo[v]] = ROOT if p == ROOT else oo[p]
        depth = max(p.depth for p in pieces)
        if self.incumbent.offer(Decomposition(tuple(parent), depth)):
            log.info("incumbent depth %d", depth)

    def _improve_component(self, g, best, good, publish):
        """Escalation loop on one connected component of the input."""
        cfg = self.config
        lb = td_lower_bound(g, self.rng.randrange(2**32))
        self.config.stats.setdefault("lower_bounds", []).append(lb)
        if best.depth <= max(lb, good):
            return best
        for rnd in range(cfg.max_rounds):
            if self.budget.expired():
                break
            self.budget.round = rnd
            for params in _sweep_additions(rnd):
                if self.budget.expired():
                    break
                cand = self._greedy(g, params, best)
                if cand is not None and cand.depth < best.depth:
                    best = cand
                    publish(best)
            if best.depth <= max(lb, good):
                return best
            self.level_limit = rnd + 1
            self.pairs = cfg.base_pairs * 2**rnd
            for goal in cfg.balance_goals:
                if self.budget.expired():
                    break
                cand = self._divide(g, Cutoffs(best.depth, good if good < best.depth else None), 0, goal)
                if cand is not None and cand.depth < best.depth:
                    best = cand
                    publish(best)
                    log.info("round %d goal %s: depth %d", rnd, goal, best.depth)
                if best.depth <= max(lb, good):
                    return best
        return best

    def _greedy(self, g, params, best):
        """One heap-greedy run seeded with the heights of ``best``; ``None`` if not better."""
        init = best.heights()
        if g.n * best.depth <= self.config.eliminate_limit:
            res = greedy_eliminate(g, params, init, bad_cutoff=best.depth)
        else:
            res = greedy_build_lookahead(g, params, init, self.config.lookahead_ell, bad_cutoff=best.depth)
        return None if res is None else res.decomposition

    def decompose(self, g, cutoffs, level):
        """Decomposition of connected ``g`` strictly below ``cutoffs.bad``, or ``None``."""
        n = g.n
        bad, good = cutoffs.bad, cutoffs.good
        if n == 1 or _is_clique(g):
            d = _chain(n)
            return d if bad is None or d.depth < bad else None
        lb = td_lower_bound(g, self.rng.randrange(2**32))
        if bad is not None and lb >= bad:
            return None
        best = greedy_superfast(g, self.config.superfast_ell, _degree_order(g)).decomposition
        if best.depth <= max(lb, good or 0):
            return best if bad is None or best.depth < bad else None
        if bad is not None and best.depth > self.config.prune_ratio * bad:
            return None
        if not self.budget.expired():
            cand = self._greedy(g, DEFAULT_PARAMS, best)
            if cand is not None and cand.depth < best.depth:
                best = cand
        if best.depth > max(lb, good or 0) and level < self.level_limit and not self.budget.expired():
            goal = self.config.balance_goals[min(level, len(self.config.balance_goals) - 1)]
            limit = best.depth if bad is None else min(bad, best.depth)
            cand = self._divide(g, Cutoffs(limit, good if good is not None and good < limit else None), level, goal)
            if cand is not None and cand.depth < best.depth:
                best = cand
        return best if bad is None or best.depth < bad else None

    def _divide(self, g, cutoffs, level, goal):
        cut = self.find_cut(g, goal, cutoffs.bad)
        if cut is None:
            return None
        return self.split_on_cut(g, cut, cutoffs, level)

    def find_cut(self, g, goal, bad=None):
        """Smallest cut reaching balance ``goal`` over ``self.pairs`` random terminal pairs."""
        if g.n < 3:
            return None
        # a cut of size c leaves at least one level below it
        size_limit = None if bad is None else bad - 1
        best = None
        for _ in range(self.pairs):
            if self.budget.expired():
                break
            s, t = self.rng.sample(range(g.n), 2)
            for cut, _ in flowcutter_run(g, s, t, size_limit):
                if best is not None and cut.size >= best.size:
                    break
                if cut.balance >= goal:
                    if best is None or (cut.size, -cut.balance) < (best.size, -best.balance):
                        best = cut
                    break
        return best

    def split_on_cut(self, g, cut, cutoffs=Cutoffs(), level=0):
        """Cut vertices on a line, recursive decompositions of the rest hung below it."""
        k = len(cut.cut)
        line = sorted(cut.cut, key=lambda v: (-len(g.adj[v]), v))
        parent = [ROOT] * g.n
        for a, b in zip(line, line[1:]):
            parent[b] = a
        removed = set(line)
        rest = [v for v in range(g.n) if v not in removed]
        sub, smap = induced_subgraph(g, rest)
        inner = cutoffs.shifted(k)
        if inner.bad is not None and inner.bad <= 0:
            return None
        comps = sorted(components(sub), key=len, reverse=True)
        deepest = 0
        for comp in comps:
            cg, cmap = induced_subgraph(sub, comp)
            good = max(deepest, inner.good or 0) or None
            if good is not None and inner.bad is not None and good >= inner.bad:
                good = inner.bad - 1
            d = self.decompose(cg, Cutoffs(inner.bad, good), level + 1)
            if d is None:
                return None
            deepest = max(deepest, d.depth)
            to_g = cmap.compose(smap).original_of
            for v, p in enumerate(d.parent):
                parent[to_g[v]] = line[-1] if p == ROOT else to_g[p]
        return Decomposition(tuple(parent), k + deepest)


def solve(g, budget=None, config=None, incumbent=None):
    """Best treedepth decomposition of ``g`` found within ``budget``."""
    return Solver(g, budget, config, incumbent).run()


def trivial_decomposition(g):
    """Identity ordering through the building process; always valid."""
    return build_from_ordering(g, Ordering.identity(g.n))
