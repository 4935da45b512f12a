"""Greedy elimination-ordering heuristics.

All four variants pop vertices from a min-heap (or, for the super-fast
variant, a short window) and prepend them to the ordering, so the vertex
popped first ends up deepest in the tree.  The score of a vertex is

    alpha * degree + beta * height + gamma * init_score

with integer weights.  Ties are broken by vertex id, which makes every run
deterministic.

Working neighbourhoods are Python sets.  A merge always folds the smaller
set into the larger one and drops the absorbed set, so the total retained
size never grows.
"""

from dataclasses import dataclass, field

from .decomposition import ROOT, Decomposition, Ordering, build_from_ordering
from .heap import ScoredHeap


@dataclass(frozen=True)
class ScoreParams:
    alpha: int = 1
    beta: int = 9
    gamma: int = 0

    def __post_init__(self):
        if min(self.alpha, self.beta, self.gamma) < 0:
            raise ValueError("score weights must be non-negative")

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))

    def __str__(self):
        return f"<{self.alpha},{self.beta},{self.gamma}>"


DEFAULT_PARAMS = ScoreParams(1, 9, 0)


@dataclass
class GreedyResult:
    decomposition: Decomposition
    ordering: Ordering
    stats: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def depth(self):
        return self.decomposition.depth


def _scores(init_score, n):
    if init_score is None:
        return [0] * n
    if len(init_score) != n:
        raise ValueError("init_score needs one entry per vertex")
    return list(init_score)


def greedy_eliminate(g, params=DEFAULT_PARAMS, init_score=None, bad_cutoff=None):
    """Greedy by elimination.

    Simulates the elimination game: the popped vertex's neighbourhood is
    turned into a clique and every neighbour's height and score are
    refreshed.  Parents come from a second, building pass over the final
    ordering.  Returns ``None`` if ``bad_cutoff`` is set and the run can no
    longer end below it.

    ``stats`` records, per vertex, the neighbourhood size and height at the
    moment it was popped.
    """
    n = g.n
    alpha, beta, gamma = params
    score = _scores(init_score, n)
    nb = [set(a) for a in g.adj]
    height = [1] * n
    heap = ScoredHeap(n, [alpha * len(nb[v]) + beta + gamma * score[v] for v in range(n)])
    popped = []
    pop_degree = [0] * n
    pop_height = [0] * n
    while heap:
        v = heap.pop()
        popped.append(v)
        nv = nb[v]
        nb[v] = None
        hv = height[v]
        pop_degree[v] = len(nv)
        pop_height[v] = hv
        # every vertex of nv becomes an ancestor of v
        if bad_cutoff is not None and len(nv) + hv >= bad_cutoff:
            return None
        h1 = hv + 1
        for x in nv:
            nx = nb[x]
            nx.discard(v)
            nx.update(nv)
            nx.discard(x)
            if height[x] < h1:
                height[x] = h1
            heap.update(x, alpha * len(nx) + beta * height[x] + gamma * score[x])
    popped.reverse()
    order = Ordering.from_seq(popped)
    d = build_from_ordering(g, order)
    return GreedyResult(d, order, {"pop_degree": pop_degree, "pop_height": pop_height})


class _Builder:
    """Shared state of the building variants: contracted neighbourhoods and union-find."""

    def __init__(self, g, params, init_score):
        self.g = g
        self.n = n = g.n
        self.params = params
        self.score = _scores(init_score, n)
        self.nb = [set(a) for a in g.adj]
        self.anc = [-1] * n
        self.parent = [ROOT] * n
        self.height = [1] * n
        alpha, beta, gamma = params
        score = self.score
        self.heap = ScoredHeap(n, [alpha * len(self.nb[v]) + beta + gamma * score[v] for v in range(n)])
        self.popped = []
        self.retained = 2 * g.m
        self.peak_retained = self.retained

    def find(self, y):
        anc = self.anc
        while anc[y] != y:
            anc[y] = anc[anc[y]]
            y = anc[y]
        return y

    def process(self, v, bad_cutoff):
        """Absorb the components adjacent to ``v`` and refresh the scores of its boundary.

        Returns ``False`` when ``bad_cutoff`` can no longer be beaten.
        """
        self.popped.append(v)
        anc, nb, parent, height = self.anc, self.nb, self.parent, self.height
        anc[v] = v
        nv = nb[v]
        before = len(nv)
        for y in self.g.adj[v]:
            if anc[y] == -1:
                continue
            r = y
            while anc[r] != r:
                anc[r] = anc[anc[r]]
                r = anc[r]
            nv.discard(y)
            if r == v:
                continue
            parent[r] = v
            anc[r] = v
            nr = nb[r]
            nb[r] = None
            before += len(nr)
            nr.discard(v)
            if len(nr) > len(nv):
                nr.update(nv)
                nv = nr
            else:
                nv.update(nr)
        nb[v] = nv
        self.retained += len(nv) - before
        if self.retained > self.peak_retained:
            self.peak_retained = self.retained

        hv = height[v]
        size = len(nv)
        # every vertex of nv will absorb v's component, so it becomes an ancestor of v
        if bad_cutoff is not None and size + hv >= bad_cutoff:
            return False
        alpha, beta, gamma = self.params
        score = self.score
        heap = self.heap
        h1 = hv + 1
        for x in nv:
            if height[x] < h1:
                height[x] = h1
            dx = len(nb[x])
            heap.update(x, alpha * (dx if dx > size else size) + beta * height[x] + gamma * score[x])
        return True

    def exact_degree(self, x):
        """Neighbourhood size ``x`` would have if it were processed now."""
        anc, nb = self.anc, self.nb
        union = set()
        roots = set()
        for y in self.g.adj[x]:
            if anc[y] == -1:
                union.add(y)
                continue
            r = self.find(y)
            if r not in roots:
                roots.add(r)
                union.update(nb[r])
        union.discard(x)
        return len(union)

    def result(self):
        self.popped.reverse()
        order = Ordering.from_seq(self.popped)
        depth = [0] * self.n
        parent = self.parent
        for v in order.seq:
            p = parent[v]
            depth[v] = 1 if p == ROOT else depth[p] + 1
        d = Decomposition(tuple(parent), max(depth, default=0))
        stats = {"initial_retained": 2 * self.g.m, "peak_retained": self.peak_retained}
        return GreedyResult(d, order, stats)


def greedy_build(g, params=DEFAULT_PARAMS, init_score=None, bad_cutoff=None):
    """Greedy by building.

    Keeps, for each component root of the processed subgraph, the set of
    unprocessed vertices adjacent to the component, and assigns parents on
    the fly.  The degree term uses ``max(|nb[x]|, |nb[v]|)`` since ``nb[x]``
    of an unprocessed vertex is just its original neighbourhood.
    """
    b = _Builder(g, params, init_score)
    heap = b.heap
    while heap:
        if not b.process(heap.pop(), bad_cutoff):
            return None
    return b.result()


def greedy_build_lookahead(g, params=DEFAULT_PARAMS, init_score=None, ell=1024, bad_cutoff=None):
    """Greedy by building, re-scoring the heap top with its exact degree.

    Before each pop, up to ``ell`` times: recompute the top vertex's degree
    as the union of its adjacent component boundaries and raise its key if
    that is larger.  Stops as soon as the top stays on top.  The unions are
    discarded after use.
    """
    if ell < 1:
        raise ValueError("ell must be at least 1")
    b = _Builder(g, params, init_score)
    alpha, beta, gamma = params
    heap, height, score = b.heap, b.height, b.score
    reevaluations = 0
    while heap:
        for _ in range(ell):
            top = heap.peek()
            reevaluations += 1
            key = alpha * b.exact_degree(top) + beta * height[top] + gamma * score[top]
            if key <= heap.score(top):
                break
            heap.update(top, key)
            if heap.peek() == top:
                break
        if not b.process(heap.pop(), bad_cutoff):
            return None
    res = b.result()
    res.stats["reevaluations"] = reevaluations
    return res


def greedy_superfast(g, ell=64, init_order=None):
    """Building process along ``init_order`` with a window of ``ell`` candidates.

    At each step the last ``ell`` unprocessed vertices of ``init_order`` are
    scored by the height they would get if processed now, and the lowest is
    taken (ties go to the later position).  ``ell=1`` is plain building on
    ``init_order``.  No heap and no neighbourhood sets are kept.
    """
    if ell < 1:
        raise ValueError("ell must be at least 1")
    n = g.n
    adj = g.adj
    if init_order is None:
        init_order = Ordering.identity(n)
    remaining = list(init_order.seq if isinstance(init_order, Ordering) else init_order)
    if len(remaining) != n:
        raise ValueError("init_order length does not match the graph")
    anc = [-1] * n
    parent = [ROOT] * n
    comp_height = [0] * n
    cached = [0] * n
    dirty = [True] * n
    # candidates whose cached height was read off a given component root
    watchers = [[] for _ in range(n)]
    popped = []
    while remaining:
        best_i = -1
        best_h = 0
        for i in range(len(remaining) - 1, max(len(remaining) - ell, 0) - 1, -1):
            u = remaining[i]
            if dirty[u]:
                h = 1
                for y in adj[u]:
                    if anc[y] == -1:
                        continue
                    r = y
                    while anc[r] != r:
                        anc[r] = anc[anc[r]]
                        r = anc[r]
                    if comp_height[r] >= h:
                        h = comp_height[r] + 1
                    watchers[r].append(u)
                cached[u] = h
                dirty[u] = False
            if best_i < 0 or cached[u] < best_h:
                best_i = i
                best_h = cached[u]
        v = remaining.pop(best_i)
        popped.append(v)
        anc[v] = v
        comp_height[v] = best_h
        for y in adj[v]:
            if anc[y] == -1:
                dirty[y] = True
                continue
            r = y
            while anc[r] != r:
                anc[r] = anc[anc[r]]
                r = anc[r]
            if r != v:
                parent[r] = v
                anc[r] = v
                for u in watchers[r]:
                    dirty[u] = True
                watchers[r] = []
    popped.reverse()
    order = Ordering.from_seq(popped)
    depth = [0] * n
    for v in popped:
        p = parent[v]
        depth[v] = 1 if p == ROOT else depth[p] + 1
    return GreedyResult(Decomposition(tuple(parent), max(depth, default=0)), order)
