"""Brute-force reference implementations used to cross-check the package.

Everything here is deliberately independent of the module logic it
verifies: connectivity by plain BFS, isomorphism by permutation
backtracking, automorphisms and orbits by exhaustive group closure.
"""

from __future__ import annotations

from itertools import combinations, permutations

from eargen.graph import Graph


def pair_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    edges = [p for i, p in enumerate(pair_list(n)) if mask >> i & 1]
    return Graph.from_edges(n, edges)


def all_graphs(n: int):
    npairs = n * (n - 1) // 2
    for mask in range(1 << npairs):
        yield graph_from_mask(n, mask)


def bfs_connected(g: Graph, skip: int = -1) -> bool:
    verts = [v for v in range(g.n) if v != skip]
    if not verts:
        return True
    seen = {verts[0]}
    queue = [verts[0]]
    while queue:
        v = queue.pop()
        for w in range(g.n):
            if w != skip and g.has_edge(v, w) and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(verts)


def bf_two_connected(g: Graph) -> bool:
    """Try all single-vertex deletions plus connectivity."""
    if g.n < 3:
        return False
    if not bfs_connected(g):
        return False
    return all(bfs_connected(g, skip=v) for v in range(g.n))


def bf_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    n = g.n
    gdeg = sorted(g.degree(v) for v in range(n))
    hdeg = sorted(h.degree(v) for v in range(n))
    if gdeg != hdeg:
        return False
    gd = [g.degree(v) for v in range(n)]
    hd = [h.degree(v) for v in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or hd[w] != gd[v]:
                continue
            if all(g.has_edge(u, v) == h.has_edge(mapping[u], w) for u in range(v)):
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        return False

    return extend(0)


def bf_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    n = g.n
    out = []
    for perm in permutations(range(n)):
        if all(g.has_edge(perm[u], perm[v]) for u in range(n) for v in range(u + 1, n) if g.has_edge(u, v)):
            if sum(1 for u in range(n) for v in range(u + 1, n) if g.has_edge(u, v)) == g.m:
                out.append(perm)
    return out


def group_closure(gens, n: int) -> set[tuple[int, ...]]:
    identity = tuple(range(n))
    group = {identity}
    frontier = [identity]
    gens = [tuple(p) for p in gens]
    while frontier:
        nxt = []
        for p in frontier:
            for q in gens:
                r = tuple(q[p[v]] for v in range(n))
                if r not in group:
                    group.add(r)
                    nxt.append(r)
        frontier = nxt
    return group


def bf_pair_orbits(g: Graph) -> set[frozenset[frozenset[int]]]:
    """Orbits of unordered pairs under the full automorphism group."""
    auts = bf_automorphisms(g)
    orbits = []
    seen = set()
    for pair in pair_list(g.n):
        fp = frozenset(pair)
        if fp in seen:
            continue
        orbit = {frozenset((p[a], p[b])) for p in auts for a, b in [pair]}
        seen |= orbit
        orbits.append(frozenset(orbit))
    return set(orbits)


# small named graphs

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def theta_graph() -> Graph:
    """Two degree-3 vertices joined by three internally disjoint paths of
    one internal vertex each (isomorphic to K_{2,3})."""
    return Graph.from_edges(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])


def diamond_graph() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def bowtie_graph() -> Graph:
    """Two triangles sharing exactly one vertex."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


def book_graph(spine: int, pages: int) -> Graph:
    """Complete graph on ``spine`` vertices joined to an independent set."""
    n = spine + pages
    edges = [(i, j) for i in range(spine) for j in range(i + 1, spine)]
    edges += [(i, p) for i in range(spine) for p in range(spine, n)]
    return Graph.from_edges(n, edges)


def cycle_complement(k: int) -> Graph:
    return Graph.cycle(k).complement()
