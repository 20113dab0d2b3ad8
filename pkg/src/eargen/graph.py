"""Small simple graphs as adjacency bitmasks, with ear operations.

Vertices are dense indices 0..n-1 and adjacency is stored as one int
bitmask per vertex, which keeps copies cheap and set operations fast for
the backtracking search. Capacity is fixed at CAP vertices so every row
fits in one machine word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

CAP = 16


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor bitmask of v; ``m`` caches the edge count.
    All operations return new values rather than mutating shared state.
    """

    n: int
    adj: tuple[int, ...]
    m: int

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= CAP:
            raise ValueError(f"vertex count {n} outside 0..{CAP}")
        rows = [0] * n
        m = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            if not rows[u] >> v & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                m += 1
        return cls(n, tuple(rows), m)

    @classmethod
    def from_adj(cls, rows: list[int]) -> "Graph":
        m = sum(r.bit_count() for r in rows) // 2
        return cls(len(rows), tuple(rows), m)

    @classmethod
    def cycle(cls, k: int) -> "Graph":
        if k < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls.from_edges(k, [(i, (i + 1) % k) for i in range(k)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        rows = tuple(full ^ (1 << v) for v in range(n))
        return cls(n, rows, n * (n - 1) // 2)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bit_indices(row):
                yield (u, v)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = ~self.adj[u] & ((1 << self.n) - 1)
            row = row >> (u + 1) << (u + 1)
            for v in bit_indices(row):
                yield (u, v)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = tuple((full ^ self.adj[v]) & ~(1 << v) & full for v in range(self.n))
        return Graph.from_adj(list(rows))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            av = self.adj[v]
            for w in bit_indices(av):
                row |= 1 << perm[w]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows), self.m)


@dataclass(frozen=True, slots=True)
class Ear:
    """A path between two branch vertices whose interior has degree 2.

    ``endpoints`` is the unordered pair (stored sorted); ``internal`` lists
    the interior vertices in path order from endpoints[0] to endpoints[1].
    An ear of order 0 is a single edge (trivial ear).
    """

    endpoints: tuple[int, int]
    internal: tuple[int, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.internal)

    def normalized(self) -> "Ear":
        a, b = self.endpoints
        if a <= b:
            return self
        return Ear((b, a), tuple(reversed(self.internal)))


def degree_sequence(g: Graph) -> list[int]:
    """Non-increasing list of vertex degrees."""
    return sorted((r.bit_count() for r in g.adj), reverse=True)


def _two_connected_masked(adj, vmask: int) -> bool:
    """Lowpoint DFS over the vertices in ``vmask``: connected, >=3 vertices,
    no cut vertex."""
    nv = vmask.bit_count()
    if nv < 3:
        return False
    root = (vmask & -vmask).bit_length() - 1
    size = vmask.bit_length()
    disc = [0] * size
    low = [0] * size
    parent = [-1] * size
    disc[root] = low[root] = 1
    time = 1
    vstack = [root]
    mstack = [adj[root] & vmask]
    root_children = 0
    while vstack:
        rem = mstack[-1]
        if rem:
            b = rem & -rem
            mstack[-1] = rem ^ b
            w = b.bit_length() - 1
            v = vstack[-1]
            dw = disc[w]
            if dw == 0:
                time += 1
                disc[w] = low[w] = time
                parent[w] = v
                if v == root:
                    root_children += 1
                vstack.append(w)
                mstack.append(adj[w] & vmask)
            elif w != parent[v] and dw < low[v]:
                low[v] = dw
        else:
            v = vstack.pop()
            mstack.pop()
            if vstack:
                u = vstack[-1]
                lv = low[v]
                if lv < low[u]:
                    low[u] = lv
                if u != root and lv >= disc[u]:
                    return False
    if root_children > 1:
        return False
    return time == nv


def is_two_connected(g: Graph) -> bool:
    """True iff g has >=3 vertices, is connected, and has no cut vertex."""
    if g.n < 3:
        return False
    return _two_connected_masked(g.adj, (1 << g.n) - 1)


def _ear_deletion_two_connected(g: Graph, ear: Ear) -> bool:
    """Whether deleting ``ear`` from g leaves a 2-connected graph,
    without building the deleted graph."""
    x, y = ear.endpoints
    if ear.internal:
        drop = 0
        for w in ear.internal:
            drop |= 1 << w
        return _two_connected_masked(g.adj, ((1 << g.n) - 1) & ~drop)
    rows = list(g.adj)
    rows[x] ^= 1 << y
    rows[y] ^= 1 << x
    return _two_connected_masked(rows, (1 << g.n) - 1)


def enumerate_ears(g: Graph) -> list[Ear]:
    """All ears of a 2-connected graph: maximal degree-2 chains between
    branch vertices plus single edges between branch vertices.

    A cycle has no branch vertex and yields the empty list. The returned
    ears partition E(g).
    """
    adj = g.adj
    n = g.n
    deg = [adj[v].bit_count() for v in range(n)]
    branch_mask = 0
    for v in range(n):
        if deg[v] >= 3:
            branch_mask |= 1 << v
    if branch_mask == 0:
        return []
    ears: list[Ear] = []
    seen_internal = 0
    bmask = branch_mask
    while bmask:
        xb = bmask & -bmask
        bmask ^= xb
        x = xb.bit_length() - 1
        row = adj[x]
        while row:
            wb = row & -row
            row ^= wb
            w = wb.bit_length() - 1
            if deg[w] >= 3:
                if x < w:
                    ears.append(Ear((x, w)))
                continue
            if seen_internal >> w & 1:
                continue
            internal = [w]
            prev, cur = x, w
            while True:
                nxt_mask = adj[cur] & ~(1 << prev)
                nxt = (nxt_mask & -nxt_mask).bit_length() - 1
                if deg[nxt] >= 3:
                    break
                internal.append(nxt)
                prev, cur = cur, nxt
            for u in internal:
                seen_internal |= 1 << u
            ears.append(Ear((x, nxt), tuple(internal)).normalized())
    return ears


def _validate_ear(g: Graph, ear: Ear) -> None:
    x, y = ear.endpoints
    n = g.n
    if not (0 <= x < n and 0 <= y < n) or x == y:
        raise ValueError(f"{ear} endpoints invalid for graph on {n} vertices")
    if g.degree(x) < 3 or g.degree(y) < 3:
        raise ValueError(f"{ear} endpoints must be branch vertices")
    path = [x, *ear.internal, y]
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            raise ValueError(f"{ear} is not a path in the graph: missing {u}-{v}")
    for w in ear.internal:
        if g.degree(w) != 2:
            raise ValueError(f"{ear} internal vertex {w} has degree != 2")


def ear_delete(g: Graph, ear: Ear) -> Graph:
    """Remove an ear: all internal vertices go (indices of survivors are
    compacted downward, order preserved), and a trivial ear removes its
    edge. The result may be separable."""
    _validate_ear(g, ear)
    if not ear.internal:
        x, y = ear.endpoints
        rows = list(g.adj)
        rows[x] ^= 1 << y
        rows[y] ^= 1 << x
        return Graph(g.n, tuple(rows), g.m - 1)
    drop = 0
    for w in ear.internal:
        drop |= 1 << w
    keep = [v for v in range(g.n) if not drop >> v & 1]
    newindex = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        row = 0
        for w in bit_indices(g.adj[v] & ~drop):
            row |= 1 << newindex[w]
        rows[newindex[v]] = row
    return Graph.from_adj(rows)


def ear_augment(g: Graph, x: int, y: int, r: int) -> Graph:
    """Add a path of order r (r internal vertices) between existing
    vertices x and y. New vertices take indices n..n+r-1 along the path."""
    n = g.n
    if x == y or not (0 <= x < n and 0 <= y < n):
        raise ValueError(f"augmentation endpoints {x},{y} invalid")
    if r < 0:
        raise ValueError("ear order must be non-negative")
    if r == 0 and g.has_edge(x, y):
        raise ValueError(f"edge {x}-{y} already present; order-0 ear would double it")
    if n + r > CAP:
        raise ValueError(f"augmentation exceeds capacity {CAP}")
    rows = list(g.adj) + [0] * r
    path = [x] + list(range(n, n + r)) + [y]
    for u, v in zip(path, path[1:]):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n + r, tuple(rows), g.m + r + 1)
