"""Immutable undirected graphs, PACE ``.gr`` parsing and cheap lower bounds.

Vertices are dense 0-based integers internally.  The PACE formats are
1-indexed; conversion happens only at the I/O boundary.
"""

import random
from bisect import bisect_left
from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed ``.gr`` input; ``line`` is the 1-based offending line."""

    def __init__(self, message, line):
        super().__init__(f"{message}, line {line}")
        self.line = line


class Graph:
    """Simple undirected graph with sorted adjacency tuples."""

    __slots__ = ("n", "m", "adj")

    def __init__(self, n, adj):
        self.n = n
        self.adj = tuple(adj)
        self.m = sum(len(a) for a in self.adj) // 2

    @classmethod
    def from_edges(cls, n, edges):
        """Build from 0-based ``(u, v)`` pairs; duplicates are merged.

        Raises ``ValueError`` on self-loops or out-of-range endpoints.
        """
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, [tuple(sorted(s)) for s in nbrs])

    def edges(self):
        """Yield each edge once as ``(u, v)`` with ``u < v``."""
        for u, a in enumerate(self.adj):
            for v in a:
                if u < v:
                    yield u, v

    def degree(self, v):
        return len(self.adj[v])

    def has_edge(self, u, v):
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class SubgraphMap:
    """Maps vertices of an induced subgraph back to the graph it was cut from."""

    original_of: tuple
    parent: Graph

    def __len__(self):
        return len(self.original_of)

    def to_parent(self, v):
        return self.original_of[v]

    def compose(self, outer):
        """Resolve through ``outer`` (the map of ``self.parent``) to its parent's ids."""
        oo = outer.original_of
        return SubgraphMap(tuple(oo[v] for v in self.original_of), outer.parent)


def parse_gr(data):
    """Parse a PACE ``.gr`` graph from ``str``, ``bytes`` or an iterable of lines."""
    if isinstance(data, bytes):
        data = data.decode()
    if isinstance(data, str):
        data = data.splitlines()

    n = None
    edges = []
    for lineno, raw in enumerate(data, 1):
        if isinstance(raw, bytes):
            raw = raw.decode()
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4:
                raise ParseError("malformed header", lineno)
            try:
                n, m_declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("malformed header", lineno) from None
            if n < 0 or m_declared < 0:
                raise ParseError("malformed header", lineno)
            continue
        if n is None:
            raise ParseError("edge before header", lineno)
        if len(parts) != 2:
            raise ParseError("malformed edge line", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("malformed edge line", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError("vertex out of range", lineno)
        if u == v:
            raise ParseError("self-loop", lineno)
        edges.append((u - 1, v - 1))
    if n is None:
        raise ParseError("missing header", 1 if not data else lineno)
    return Graph.from_edges(n, edges)


def read_gr(source):
    """Read a ``.gr`` graph from a path or a binary/text stream."""
    if hasattr(source, "read"):
        return parse_gr(source.read())
    with open(source, "rb") as f:
        return parse_gr(f.read())


def format_gr(g, descriptor="tdp"):
    lines = [f"p {descriptor} {g.n} {g.m}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def components(g):
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    adj = g.adj
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        for u in comp:
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
        comp.sort()
        out.append(comp)
    return out


def induced_subgraph(g, vs):
    """Subgraph induced by ``vs``, densely re-indexed in ascending id order."""
    original_of = tuple(sorted(vs))
    index = {v: i for i, v in enumerate(original_of)}
    adj = []
    for v in original_of:
        # mapping is monotone, so filtered neighbours stay sorted
        adj.append(tuple(index[w] for w in g.adj[v] if w in index))
    return Graph(len(original_of), adj), SubgraphMap(original_of, g)


def degeneracy(g):
    """Degeneracy by bucket-queue peeling (Batagelj-Zaversnik), O(n + m)."""
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    deg = [len(a) for a in adj]
    maxdeg = max(deg)
    bin_start = [0] * (maxdeg + 2)
    for d in deg:
        bin_start[d + 1] += 1
    for d in range(1, maxdeg + 2):
        bin_start[d] += bin_start[d - 1]
    # vertices sorted by (degree, id): lowest id peels first among ties
    vert = [0] * n
    pos = [0] * n
    fill = bin_start[:]
    for v in range(n):
        pos[v] = fill[deg[v]]
        vert[pos[v]] = v
        fill[deg[v]] += 1
    best = 0
    for i in range(n):
        v = vert[i]
        dv = deg[v]
        if dv > best:
            best = dv
        for w in adj[v]:
            dw = deg[w]
            if dw > dv:
                # swap w with the first vertex of its bucket, then shrink the bucket
                pw = pos[w]
                ps = bin_start[dw]
                u = vert[ps]
                if u != w:
                    vert[ps], vert[pw] = w, u
                    pos[w], pos[u] = ps, pw
                bin_start[dw] += 1
                deg[w] = dw - 1
    return best


def dfs_longest_path(g, seed=0):
    """Vertex count of the deepest root-to-node path seen by a randomized DFS.

    One pass per component from a random start with shuffled neighbour
    order.  This is a cheap witness, not the true longest path.
    """
    rng = random.Random(seed)
    n = g.n
    adj = g.adj
    seen = [False] * n
    best = 0
    starts = list(range(n))
    rng.shuffle(starts)
    for s in starts:
        if seen[s]:
            continue
        seen[s] = True
        nbrs = list(adj[s])
        rng.shuffle(nbrs)
        stack = [(s, iter(nbrs))]
        best = max(best, 1)
        while stack:
            _, it = stack[-1]
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    nw = list(adj[w])
                    rng.shuffle(nw)
                    stack.append((w, iter(nw)))
                    if len(stack) > best:
                        best = len(stack)
                    break
            else:
                stack.pop()
    return best


def td_lower_bound(g, seed=0):
    """``max(degeneracy + 1, ceil(log2(p + 1)))`` for a DFS path of ``p`` vertices."""
    if g.n == 0:
        raise ValueError("lower bound of the empty graph is undefined")
    p = dfs_longest_path(g, seed)
    # ceil(log2(p + 1)) == p.bit_length() for p >= 1
    return max(degeneracy(g) + 1, p.bit_length())


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid_graph(rows, cols):
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def random_graph(n, m, seed=0):
    """Uniform random simple graph with ``min(m, n(n-1)/2)`` edges."""
    rng = random.Random(seed)
    m = min(m, n * (n - 1) // 2)
    if m > n * (n - 1) // 4:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        return Graph.from_edges(n, rng.sample(pairs, m))
    edges = set()
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)
