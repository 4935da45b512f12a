"""Graph generators and strategies shared by the test modules."""

from hypothesis import strategies as st

from tdf.decomposition import Ordering
from tdf.graph import Graph, components, random_graph


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def graphs_with_ordering(draw, min_n=1, max_n=10):
    g = draw(graphs(min_n, max_n))
    seq = draw(st.permutations(range(g.n)))
    return g, Ordering.from_seq(seq)


def random_connected(rng, n, extra):
    """Random spanning tree plus ``extra`` random edges."""
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    pairs = n * (n - 1) // 2
    extra = min(extra, pairs - len(edges))
    while extra > 0:
        u, v = rng.sample(range(n), 2)
        e = (min(u, v), max(u, v))
        if e not in edges:
            edges.add(e)
            extra -= 1
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def random_any(rng, max_n):
    n = rng.randint(1, max_n)
    m = rng.randint(0, n * (n - 1) // 2)
    return random_graph(n, m, rng.randrange(2**32))


def random_ordering(rng, n):
    seq = list(range(n))
    rng.shuffle(seq)
    return Ordering.from_seq(seq)


def is_connected(g):
    return g.n > 0 and len(components(g)) == 1


def two_triangles():
    """Triangles {0,1,2} and {4,5,6} joined through vertex 3."""
    return Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
