"""Addressable binary min-heap over vertices ``0..n-1``.

Keys are compared as ``(score, vertex)``; the pair is packed into one
integer ``score * n + vertex`` so comparisons stay cheap.
"""


class ScoredHeap:
    """Min-heap of vertices with in-place key increase and decrease."""

    __slots__ = ("_n", "_heap", "_pos", "_key")

    def __init__(self, n, scores=None):
        self._n = max(n, 1)
        self._pos = [-1] * n
        self._key = [0] * n
        self._heap = []
        if scores is not None:
            if len(scores) != n:
                raise ValueError("need one score per vertex")
            nn = self._n
            self._key = [s * nn + v for v, s in enumerate(scores)]
            self._heap = list(range(n))
            self._pos = list(range(n))
            for i in reversed(range(n // 2)):
                self._sift_down(i)

    def __len__(self):
        return len(self._heap)

    def __bool__(self):
        return bool(self._heap)

    def __contains__(self, v):
        return self._pos[v] >= 0

    def score(self, v):
        return self._key[v] // self._n

    def push(self, v, score):
        if self._pos[v] >= 0:
            raise KeyError(f"vertex {v} already in heap")
        self._key[v] = score * self._n + v
        self._pos[v] = len(self._heap)
        self._heap.append(v)
        self._sift_up(len(self._heap) - 1)

    def peek(self):
        return self._heap[0]

    def pop(self):
        heap = self._heap
        top = heap[0]
        last = heap.pop()
        self._pos[top] = -1
        if heap:
            heap[0] = last
            self._pos[last] = 0
            self._sift_down(0)
        return top

    def update(self, v, score):
        """Set the score of ``v`` (must be in the heap), in either direction."""
        i = self._pos[v]
        if i < 0:
            raise KeyError(f"vertex {v} not in heap")
        key = score * self._n + v
        old = self._key[v]
        if key == old:
            return
        self._key[v] = key
        if key < old:
            self._sift_up(i)
        else:
            self._sift_down(i)

    def _sift_up(self, i):
        heap, pos, keys = self._heap, self._pos, self._key
        v = heap[i]
        kv = keys[v]
        while i > 0:
            p = (i - 1) >> 1
            u = heap[p]
            if keys[u] <= kv:
                break
            heap[i] = u
            pos[u] = i
            i = p
        heap[i] = v
        pos[v] = i

    def _sift_down(self, i):
        heap, pos, keys = self._heap, self._pos, self._key
        size = len(heap)
        v = heap[i]
        kv = keys[v]
        while True:
            c = 2 * i + 1
            if c >= size:
                break
            kc = keys[heap[c]]
            if c + 1 < size:
                kr = keys[heap[c + 1]]
                if kr < kc:
                    c += 1
                    kc = kr
            if kc >= kv:
                break
            u = heap[c]
            heap[i] = u
            pos[u] = i
            i = c
        heap[i] = v
        pos[v] = i
