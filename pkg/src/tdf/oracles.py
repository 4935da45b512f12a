"""Slow, obviously-correct reference computations used as test ground truth."""

from functools import lru_cache
from itertools import combinations

from .decomposition import Ordering

EXACT_TD_LIMIT = 14


def _position(order):
    if isinstance(order, Ordering):
        return order.position
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    return pos


def sreach_oracle(g, order, v):
    """Vertices earlier than ``v`` reachable through vertices later than ``v``."""
    pos = _position(order)
    pv = pos[v]
    seen = {v}
    stack = [v]
    out = set()
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if pos[w] < pv:
                out.add(w)
            else:
                stack.append(w)
    return out


def wreach_oracle(g, order, v):
    """Transitive closure of strong reachability from ``v``."""
    out = set()
    frontier = [v]
    while frontier:
        u = frontier.pop()
        for x in sreach_oracle(g, order, u):
            if x not in out:
                out.add(x)
                frontier.append(x)
    return out


def wreach_by_definition(g, order, v):
    """Earlier ``x`` reachable from ``v`` via a path whose inner vertices are later than ``x``."""
    pos = _position(order)
    out = set()
    for x in range(g.n):
        if pos[x] >= pos[v]:
            continue
        px = pos[x]
        seen = {v}
        stack = [v]
        found = False
        while stack and not found:
            u = stack.pop()
            for w in g.adj[u]:
                if w == x:
                    found = True
                    break
                if w not in seen and pos[w] > px:
                    seen.add(w)
                    stack.append(w)
        if found:
            out.add(x)
    return out


def exact_td_oracle(g, limit=EXACT_TD_LIMIT):
    """Exact treedepth by memoized recursion over vertex subsets.

    ``td`` of a disconnected set is the max over its components; of a
    connected set, one plus the minimum over removing a single vertex.
    """
    if g.n > limit:
        raise ValueError(f"exact treedepth oracle is capped at {limit} vertices, got {g.n}")
    nbr = [0] * g.n
    for v, a in enumerate(g.adj):
        for w in a:
            nbr[v] |= 1 << w

    def split(mask):
        comps = []
        rest = mask
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                new = nbr[b.bit_length() - 1] & mask & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            rest &= ~comp
        return comps

    @lru_cache(maxsize=None)
    def td(mask):
        if mask == 0:
            return 0
        comps = split(mask)
        if len(comps) > 1:
            return max(td(c) for c in comps)
        if mask & (mask - 1) == 0:
            return 1
        best = None
        rest = mask
        while rest:
            b = rest & -rest
            rest ^= b
            t = td(mask ^ b)
            if best is None or t < best:
                best = t
        return 1 + best

    return td((1 << g.n) - 1)


def vertex_connectivity_oracle(g, s, t):
    """Minimum number of vertices separating non-adjacent ``s`` and ``t``, by subset search."""
    if g.has_edge(s, t) or s == t:
        raise ValueError("terminals must be distinct and non-adjacent")
    others = [v for v in range(g.n) if v != s and v != t]

    def separated(removed):
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w == t:
                    return False
                if w not in seen and w not in removed:
                    seen.add(w)
                    stack.append(w)
        return True

    for k in range(len(others) + 1):
        for removed in combinations(others, k):
            if separated(set(removed)):
                return k
    raise AssertionError("unreachable: removing all other vertices separates s and t")
