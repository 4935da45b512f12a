"""Incremental vertex-capacitated max-flow producing balanced vertex cuts.

Every vertex ``v`` is split implicitly into an entry node ``2v`` and an exit
node ``2v + 1`` joined by a unit-capacity arc; graph edges carry unbounded
capacity, so minimum cuts consist of vertices only.  Source and target
vertices are uncapacitated; an edge joining a source directly to a target
carries at most one unit, and while one exists there is no vertex cut.  Flow is stored as a net value per directed arc
of the graph plus a per-vertex "carries flow" counter.

Residual moves, for a non-terminal vertex ``v``:

* ``v.in  -> v.out`` if ``v`` carries no flow
* ``v.out -> v.in``  if ``v`` carries flow (undoing it)
* ``u.out -> w.in``  for every edge (unbounded capacity)
* ``v.in  -> u.out`` if one unit flows ``u -> v`` (cancelling it)

A residual path can therefore pass through a vertex twice: once on each
split node.

The cutter grows source and target sets from a random pair.  After each max
flow it emits the cut on the side with fewer reachable vertices, moves that
whole side into its terminal set and pierces one cut vertex, so later cuts
are larger but more balanced.  Flow is kept across piercings.
"""

import random
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import components

SOURCE = "source"
TARGET = "target"


class CutError(RuntimeError):
    """Cut requested while an augmenting path still exists."""


class NotSeparable(CutError):
    """Adjacent terminals: no vertex set separates them."""


@dataclass(frozen=True)
class CutResult:
    cut: tuple
    side_small: tuple
    side_large: tuple
    side: str = SOURCE

    @property
    def size(self):
        return len(self.cut)

    @property
    def balance(self):
        total = len(self.cut) + len(self.side_small) + len(self.side_large)
        return Fraction(len(self.side_small), total)


def path_vertices(path):
    """Vertex sequence of a split-node path, merging each ``v.in, v.out`` hop."""
    out = []
    for node in path:
        v = node >> 1
        if not out or out[-1] != v:
            out.append(v)
    return out


class VertexFlowState:
    """Unit vertex-capacity flow between growing terminal sets."""

    def __init__(self, g, sources, targets):
        self.g = g
        n = g.n
        self.n = n
        xadj = [0] * (n + 1)
        for v in range(n):
            xadj[v + 1] = xadj[v] + len(g.adj[v])
        self.xadj = xadj
        self.adjncy = [w for a in g.adj for w in a]
        rev = [0] * len(self.adjncy)
        for u in range(n):
            for k in range(xadj[u], xadj[u + 1]):
                w = self.adjncy[k]
                rev[k] = xadj[w] + bisect_left(g.adj[w], u)
        self.rev = rev
        self.flow = [0] * len(self.adjncy)
        self.carries = [0] * n
        self.is_source = [False] * n
        self.is_target = [False] * n
        self.value = 0
        self.add_sources(sources)
        self.add_targets(targets)

    @property
    def sources(self):
        return [v for v in range(self.n) if self.is_source[v]]

    @property
    def targets(self):
        return [v for v in range(self.n) if self.is_target[v]]

    def add_sources(self, vs):
        for v in vs:
            if self.is_target[v]:
                raise ValueError(f"vertex {v} is already a target")
            self.is_source[v] = True

    def add_targets(self, vs):
        for v in vs:
            if self.is_source[v]:
                raise ValueError(f"vertex {v} is already a source")
            self.is_target[v] = True

    def terminals_adjacent(self):
        is_t = self.is_target
        adj = self.g.adj
        return any(is_t[w] for v in range(self.n) if self.is_source[v] for w in adj[v])

    def _reach(self, backward=False, stop_early=False):
        """Residual search from the sources (or, backward, towards the targets).

        Returns ``(seen, pred, hit)`` over split nodes; ``pred`` holds
        ``(previous node, arc)`` with arc ``-1`` for the internal hop, and
        ``hit`` is the first opposite-terminal node found (``-1`` if none).
        """
        n = self.n
        xadj, adjncy, flow = self.xadj, self.adjncy, self.flow
        carries = self.carries
        start_flags = self.is_target if backward else self.is_source
        goal_flags = self.is_source if backward else self.is_target
        seen = [False] * (2 * n)
        pred = [None] * (2 * n) if stop_early else None
        queue = deque()
        for v in range(n):
            if start_flags[v]:
                seen[2 * v] = seen[2 * v + 1] = True
                queue.append(2 * v)
                queue.append(2 * v + 1)
        hit = -1
        while queue:
            node = queue.popleft()
            v = node >> 1
            is_out = node & 1
            term = start_flags[v] or goal_flags[v]
            nexts = []
            # moves are mirrored when searching backward: out/in swap roles
            if is_out != backward:
                # at v.out going forward, or v.in going backward
                other = node ^ 1
                if not seen[other] and (term or carries[v] > 0):
                    nexts.append((other, -1))
                side = 0 if not backward else 1
                direct = start_flags[v]
                for k in range(xadj[v], xadj[v + 1]):
                    w = adjncy[k]
                    nw = 2 * w + side
                    if seen[nw]:
                        continue
                    # a direct source-target edge is the only arc with unit capacity
                    if direct and goal_flags[w] and (-flow[k] if backward else flow[k]) >= 1:
                        continue
                    nexts.append((nw, k))
            else:
                # at v.in going forward, or v.out going backward
                other = node ^ 1
                if not seen[other] and (term or carries[v] == 0):
                    nexts.append((other, -1))
                side = 1 if not backward else 0
                for k in range(xadj[v], xadj[v + 1]):
                    # forward: cancel flow u -> v; backward: follow flow v -> u
                    if (flow[k] < 0) != backward and flow[k] != 0:
                        nw = 2 * adjncy[k] + side
                        if not seen[nw]:
                            nexts.append((nw, k))
            for nw, k in nexts:
                if seen[nw]:
                    continue
                seen[nw] = True
                if pred is not None:
                    pred[nw] = (node, k)
                if goal_flags[nw >> 1]:
                    hit = nw
                    if stop_early:
                        return seen, pred, hit
                queue.append(nw)
        return seen, pred, hit

    def find_augmenting_path(self):
        """Shortest residual source-to-target path as split nodes, or ``None``."""
        _, pred, hit = self._reach(stop_early=True)
        if hit < 0:
            return None
        path = [hit]
        node = hit
        while pred[node] is not None:
            node = pred[node][0]
            path.append(node)
        path.reverse()
        return path

    def augment(self, path):
        """Push one unit along ``path`` (as returned by :meth:`find_augmenting_path`)."""
        xadj, adjncy, flow, rev = self.xadj, self.adjncy, self.flow, self.rev
        is_s, is_t = self.is_source, self.is_target
        for a, b in zip(path, path[1:]):
            u, w = a >> 1, b >> 1
            if u == w:
                if not (is_s[u] or is_t[u]):
                    self.carries[u] += 1 if (a & 1) == 0 else -1
                continue
            k = bisect_left(adjncy, w, xadj[u], xadj[u + 1])
            flow[k] += 1
            flow[rev[k]] -= 1
        self.value += 1

    def max_flow(self, limit=None):
        """Augment until no path remains or the value reaches ``limit``; returns the value."""
        while limit is None or self.value < limit:
            path = self.find_augmenting_path()
            if path is None:
                break
            self.augment(path)
        return self.value

    def reachable_sets(self):
        """``(source side, target side)`` vertex sets as seen from each terminal set."""
        if self.terminals_adjacent():
            raise NotSeparable("a source is adjacent to a target")
        fwd, _, hit = self._reach()
        if hit >= 0:
            raise CutError("augmenting path exists; compute the max flow first")
        bwd, _, _ = self._reach(backward=True)
        n = self.n
        src = [v for v in range(n) if fwd[2 * v + 1]]
        tgt = [v for v in range(n) if bwd[2 * v]]
        return src, tgt, fwd, bwd

    def extract_cut(self, side=SOURCE):
        """Minimum cut nearest to the sources (or targets) for the current flow."""
        src, tgt, fwd, bwd = self.reachable_sets()
        return self._cut_from(side, src, tgt, fwd, bwd)

    def _cut_from(self, side, src, tgt, fwd, bwd):
        n = self.n
        if side == SOURCE:
            cut = [v for v in range(n) if fwd[2 * v] and not fwd[2 * v + 1]]
            near = src
        else:
            cut = [v for v in range(n) if bwd[2 * v + 1] and not bwd[2 * v]]
            near = tgt
        in_near = set(near)
        in_near.update(cut)
        far = [v for v in range(n) if v not in in_near]
        small, large = (near, far) if len(near) <= len(far) else (far, near)
        return CutResult(tuple(cut), tuple(small), tuple(large), side)

    def check(self):
        """Assert flow conservation and unit vertex capacities."""
        xadj, flow = self.xadj, self.flow
        for v in range(self.n):
            out = sum(f for f in flow[xadj[v]:xadj[v + 1]] if f > 0)
            inn = -sum(f for f in flow[xadj[v]:xadj[v + 1]] if f < 0)
            if self.is_source[v] or self.is_target[v]:
                continue
            assert out == inn, f"conservation broken at {v}"
            assert out <= 1, f"vertex {v} carries {out} units"
            assert self.carries[v] == out, f"carry counter off at {v}"
        for k, f in enumerate(flow):
            assert flow[self.rev[k]] == -f


def _bfs_distance(g, starts):
    dist = [-1] * g.n
    queue = deque(starts)
    for s in starts:
        dist[s] = 0
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def select_piercing_vertex(state, cut, rng=None, coreach=None):
    """Cut vertex to move into the terminal set on ``cut.side``.

    Prefers vertices whose absorption opens no augmenting path, then the one
    farthest (BFS) from the opposite terminal set, then the lowest id.
    ``coreach`` is the residual search from the opposite side, if already
    computed.  ``rng`` is accepted for interface symmetry; the choice is
    deterministic.
    """
    if not cut.cut:
        raise ValueError("empty cut has no piercing candidate")
    if len(cut.cut) == 1:
        return cut.cut[0]
    if cut.side == SOURCE:
        opposite = state.targets
        if coreach is None:
            coreach = state._reach(backward=True)[0]
        # absorbing v makes v.out reachable; harmless unless v.out leads to a target
        safe = {v: not coreach[2 * v + 1] for v in cut.cut}
    else:
        opposite = state.sources
        if coreach is None:
            coreach = state._reach()[0]
        safe = {v: not coreach[2 * v] for v in cut.cut}
    dist = _bfs_distance(state.g, opposite)
    return min(cut.cut, key=lambda v: (not safe[v], -dist[v], v))


def flowcutter_run(g, s, t, size_limit=None, pierce=None):
    """Yield the cut sequence for one terminal pair ``(s, t)``.

    Cut sizes are non-decreasing.  Stops when the terminals become adjacent,
    when the flow reaches ``size_limit`` (such cuts are not yielded), or when
    every vertex is a terminal.  ``pierce(state, cut, coreach)`` picks the
    vertex to absorb next; :func:`select_piercing_vertex` by default.
    """
    if pierce is None:
        pierce = select_piercing_vertex
    if s == t or g.has_edge(s, t):
        return
    state = VertexFlowState(g, [s], [t])
    while True:
        state.max_flow(size_limit)
        if size_limit is not None and state.value >= size_limit:
            return
        src, tgt, fwd, bwd = state.reachable_sets()
        if len(src) <= len(tgt):
            side, near, coreach = SOURCE, src, bwd
        else:
            side, near, coreach = TARGET, tgt, fwd
        cut = state._cut_from(side, src, tgt, fwd, bwd)
        yield cut, state
        if not cut.cut:
            # s and t lie in different components
            return
        x = pierce(state, cut, coreach=coreach)
        if side == SOURCE:
            state.add_sources(v for v in near if not state.is_source[v])
            state.add_sources([x])
            opposite = state.is_target
        else:
            state.add_targets(v for v in near if not state.is_target[v])
            state.add_targets([x])
            opposite = state.is_source
        if any(opposite[w] for w in g.adj[x]):
            return


def enumerate_cuts(g, terminal_pairs=20, balance_goal=Fraction(1, 5), size_limit=None, seed=0, emit=None,
                   pierce=None):
    """Run the cutter from ``terminal_pairs`` random pairs, passing each cut to ``emit``.

    ``emit(cut)`` returning ``False`` stops the whole enumeration.  A pair's
    run ends once a cut reaches ``balance_goal``.  Returns the list of
    emitted cuts when ``emit`` is ``None``.
    """
    if g.n < 2:
        raise ValueError("need at least two vertices")
    if len(components(g)) != 1:
        raise ValueError("graph must be connected")
    collected = []
    if emit is None:
        def emit(cut):
            collected.append(cut)
            return True
    rng = random.Random(seed)
    balance_goal = Fraction(balance_goal)
    for _ in range(terminal_pairs):
        s, t = rng.sample(range(g.n), 2)
        for cut, _state in flowcutter_run(g, s, t, size_limit, pierce):
            if emit(cut) is False:
                return collected
            if cut.balance >= balance_goal:
                break
    return collected
