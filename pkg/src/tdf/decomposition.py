"""Treedepth decompositions, orderings, the building process and verification.

A decomposition is a parent vector over vertices ``0..n-1`` with ``-1``
marking roots.  An ordering lists vertices so that earlier means higher in
the tree.  The building process turns an ordering into a decomposition by
sweeping from the last vertex to the first and merging connected components
of the processed subgraph with a union-find whose pointers always point at
tree ancestors.
"""

from dataclasses import dataclass, field

ROOT = -1


class StructureError(ValueError):
    """Parent vector is not a forest (cycle or out-of-range entry)."""


@dataclass(frozen=True)
class Ordering:
    seq: tuple
    position: tuple = field(repr=False)

    @classmethod
    def from_seq(cls, seq):
        seq = tuple(seq)
        n = len(seq)
        position = [-1] * n
        for i, v in enumerate(seq):
            if not 0 <= v < n or position[v] != -1:
                raise ValueError("ordering is not a permutation")
            position[v] = i
        return cls(seq, tuple(position))

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), tuple(range(n)))

    def __len__(self):
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)


@dataclass(frozen=True)
class Decomposition:
    """Rooted forest given by ``parent``; ``depth`` counts vertices on the longest chain.

    Build through :meth:`from_parents` to get a computed depth.  Constructing
    directly lets a caller carry a *claimed* depth (as read from a ``.tree``
    file); :func:`verify_decomposition` recomputes it.
    """

    parent: tuple
    depth: int

    @classmethod
    def from_parents(cls, parent):
        parent = tuple(parent)
        return cls(parent, _depth_of(parent))

    @property
    def n(self):
        return len(self.parent)

    @property
    def roots(self):
        return [v for v, p in enumerate(self.parent) if p == ROOT]

    def depths(self):
        """Per-vertex depth, roots at 1."""
        return _vertex_depths(self.parent)

    def heights(self):
        """Per-vertex subtree height, leaves at 1."""
        parent = self.parent
        height = [1] * len(parent)
        for v in reversed(_topological(parent)):
            p = parent[v]
            if p != ROOT and height[p] < height[v] + 1:
                height[p] = height[v] + 1
        return height

    def ancestors(self, v):
        out = []
        p = self.parent[v]
        while p != ROOT:
            out.append(p)
            p = self.parent[p]
        return out

    def children(self):
        kids = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if p != ROOT:
                kids[p].append(v)
        return kids


def _topological(parent):
    """Parents-first order of a parent vector; raises on cycles."""
    n = len(parent)
    kids = [[] for _ in range(n)]
    order = []
    for v, p in enumerate(parent):
        if p == ROOT:
            order.append(v)
        elif 0 <= p < n and p != v:
            kids[p].append(v)
        else:
            raise StructureError(f"vertex {v} has invalid parent {p}")
    for v in order:
        order.extend(kids[v])
    if len(order) != n:
        raise StructureError("parent links contain a cycle")
    return order


def _vertex_depths(parent):
    depth = [0] * len(parent)
    for v in _topological(parent):
        p = parent[v]
        depth[v] = 1 if p == ROOT else depth[p] + 1
    return depth


def _depth_of(parent):
    return max(_vertex_depths(parent), default=0)


def ordering_from_parents(d):
    """Any ordering with parents before children (BFS from the roots)."""
    return Ordering.from_seq(_topological(d.parent))


def build_from_ordering(g, order):
    """Decomposition produced by the building process on ``order``.

    Each vertex's parent ends up being the latest vertex it weakly reaches.
    """
    seq = order.seq if isinstance(order, Ordering) else order
    n = g.n
    if len(seq) != n:
        raise ValueError("ordering length does not match the graph")
    adj = g.adj
    anc = [-1] * n
    parent = [ROOT] * n
    for v in reversed(seq):
        anc[v] = v
        for y in adj[v]:
            if anc[y] == -1:
                continue
            r = y
            while anc[r] != r:
                # path halving; grandparents are still tree ancestors
                anc[r] = anc[anc[r]]
                r = anc[r]
            if r != v:
                parent[r] = v
                anc[r] = v
    depth = [0] * n
    for v in seq:
        p = parent[v]
        depth[v] = 1 if p == ROOT else depth[p] + 1
    return Decomposition(tuple(parent), max(depth, default=0))


@dataclass(frozen=True)
class Violation:
    """Why a decomposition was rejected; ``u``/``v`` are 0-based vertices."""

    kind: str
    u: int
    v: int
    detail: str = ""

    def __str__(self):
        if self.kind == "edge":
            return f"edge {{{self.u + 1}, {self.v + 1}}} is not an ancestor-descendant pair"
        if self.kind == "depth":
            return f"claimed depth {self.u} but actual depth is {self.v}"
        return f"{self.kind}: {self.detail}"


def verify_decomposition(g, d):
    """Return ``None`` if ``d`` is a valid decomposition of ``g``, else a :class:`Violation`.

    Runs the building process over a parents-first ordering of ``d``.  At
    every merge the root ``r`` of the absorbed component must be a descendant
    of the vertex ``v`` being processed; descendant tests use DFS entry/exit
    times of ``d``, so the whole check is near-linear rather than O(m * depth).
    """
    n = g.n
    parent = d.parent
    if len(parent) != n:
        return Violation("structure", -1, -1, f"{len(parent)} parent entries for {n} vertices")
    try:
        order = _topological(parent)
    except StructureError as e:
        return Violation("structure", -1, -1, str(e))

    kids = [[] for _ in range(n)]
    for v in order:
        p = parent[v]
        if p != ROOT:
            kids[p].append(v)
    tin = [0] * n
    tout = [0] * n
    clock = 0
    for root in order:
        if parent[root] != ROOT:
            continue
        stack = [(root, 0)]
        tin[root] = clock
        clock += 1
        while stack:
            v, i = stack[-1]
            if i < len(kids[v]):
                stack[-1] = (v, i + 1)
                c = kids[v][i]
                tin[c] = clock
                clock += 1
                stack.append((c, 0))
            else:
                tout[v] = clock
                stack.pop()

    adj = g.adj
    anc = [-1] * n
    for v in reversed(order):
        anc[v] = v
        lo, hi = tin[v], tout[v]
        for y in adj[v]:
            if anc[y] == -1:
                continue
            r = y
            while anc[r] != r:
                anc[r] = anc[anc[r]]
                r = anc[r]
            if r == v:
                continue
            if not lo <= tin[r] < hi:
                return Violation("edge", min(v, y), max(v, y))
            anc[r] = v

    actual = _depth_of(parent)
    if actual != d.depth:
        return Violation("depth", d.depth, actual)
    return None


def naive_verify(g, d):
    """O(m * depth) reference check: every edge must join ancestor and descendant."""
    if len(d.parent) != g.n:
        return False
    try:
        depth = _vertex_depths(d.parent)
    except StructureError:
        return False
    for u, v in g.edges():
        a, b = (u, v) if depth[u] <= depth[v] else (v, u)
        x = b
        while x != ROOT and x != a:
            x = d.parent[x]
        if x != a:
            return False
    return max(depth, default=0) == d.depth
